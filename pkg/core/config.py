"""
ArtinBD Toolkit - Configuration
License: MIT

Loads config.ini into a frozen Settings value. Environment variables (read
from a .env file when present) override the file; command line flags
override both.
"""

import configparser
import os
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

DEFAULT_CONFIG = Path(__file__).resolve().parent.parent / 'config.ini'


@dataclass(frozen=True)
class Settings:
    debug: bool = False
    log_level: str = 'WARNING'
    log_file: Optional[str] = None

    k_words_max_length: int = 10
    braid_words_max_length: int = 6
    f_words_max_length: int = 6
    random_samples: int = 500
    random_seed: int = 20240101
    max_enumeration: int = 2000000
    jobs: int = 1

    syllable_budget: int = 12
    closure_length: int = 6
    closure_cap: int = 128

    use_colors: bool = True
    json_indent: int = 2

    def with_overrides(self, **changes) -> 'Settings':
        """Copy with the non-None changes applied."""
        return replace(self, **{key: value for key, value in changes.items() if value is not None})


def load_settings(path: Optional[str] = None) -> Settings:
    """
    Read settings from config.ini.

    Args:
        path: Config file; defaults to ARTINBD_CONFIG or the project config.ini

    Returns:
        Settings with built-in defaults for anything missing
    """
    load_dotenv()
    path = path or os.environ.get('ARTINBD_CONFIG') or str(DEFAULT_CONFIG)

    parser = configparser.ConfigParser()
    parser.read(path, encoding='utf-8')
    defaults = Settings()

    def get_int(section: str, key: str, default: int) -> int:
        return parser.getint(section, key, fallback=default)

    log_file = parser.get('general', 'log_file', fallback='') or None
    settings = Settings(
        debug=parser.getboolean('general', 'debug', fallback=defaults.debug),
        log_level=parser.get('general', 'log_level', fallback=defaults.log_level),
        log_file=log_file,
        k_words_max_length=get_int('budgets', 'k_words_max_length', defaults.k_words_max_length),
        braid_words_max_length=get_int('budgets', 'braid_words_max_length', defaults.braid_words_max_length),
        f_words_max_length=get_int('budgets', 'f_words_max_length', defaults.f_words_max_length),
        random_samples=get_int('budgets', 'random_samples', defaults.random_samples),
        random_seed=get_int('budgets', 'random_seed', defaults.random_seed),
        max_enumeration=get_int('budgets', 'max_enumeration', defaults.max_enumeration),
        jobs=get_int('budgets', 'jobs', defaults.jobs),
        syllable_budget=get_int('rank2', 'syllable_budget', defaults.syllable_budget),
        closure_length=get_int('rank2', 'closure_length', defaults.closure_length),
        closure_cap=get_int('rank2', 'closure_cap', defaults.closure_cap),
        use_colors=parser.getboolean('output', 'use_colors', fallback=defaults.use_colors),
        json_indent=get_int('output', 'json_indent', defaults.json_indent),
    )

    env_jobs = os.environ.get('ARTINBD_JOBS')
    return settings.with_overrides(
        log_level=os.environ.get('ARTINBD_LOG_LEVEL'),
        jobs=int(env_jobs) if env_jobs else None,
    )
