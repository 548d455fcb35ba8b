"""
ArtinBD Toolkit Tests

Test suite for the group engine, the verification suites and the command line.
"""

__version__ = "1.0.0"
