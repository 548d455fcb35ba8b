"""
ArtinBD Toolkit - Verification suites

Each module defines one suite class, discovered by core.modules.SuiteManager.
"""
