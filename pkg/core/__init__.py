"""
ArtinBD Core Module
Command implementations, suite registry, reports and configuration.
"""

from .cli import ArtinCLI
from .config import Settings, load_settings
from .modules import SuiteManager, SuiteNotFoundError, VerificationSuite
from .report import VerifyReport, render_report

__all__ = [
    'ArtinCLI',
    'Settings',
    'load_settings',
    'SuiteManager',
    'SuiteNotFoundError',
    'VerificationSuite',
    'VerifyReport',
    'render_report',
]
