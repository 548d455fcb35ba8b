"""
ArtinBD Utilities
Input validation and logging setup.
"""
