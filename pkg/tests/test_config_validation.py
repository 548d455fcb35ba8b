#!/usr/bin/env python3
"""
ArtinBD Toolkit - Configuration, validation and report tests
License: MIT
"""

import json
import logging
import os
import sys

import pytest

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from core.config import DEFAULT_CONFIG, Settings, load_settings
from core.report import VerifyReport, render_report
from utils.validation import InputValidator


@pytest.fixture
def clean_env(monkeypatch):
    for name in ('ARTINBD_CONFIG', 'ARTINBD_LOG_LEVEL', 'ARTINBD_JOBS'):
        monkeypatch.delenv(name, raising=False)
    return monkeypatch


class TestSettings:

    def test_project_config_matches_defaults(self, clean_env):
        assert DEFAULT_CONFIG.exists()
        assert load_settings() == Settings()

    def test_file_values(self, clean_env, tmp_path):
        config = tmp_path / "config.ini"
        config.write_text("[budgets]\nk_words_max_length = 4\njobs = 3\n\n[rank2]\nsyllable_budget = 5\n")
        settings = load_settings(str(config))
        assert settings.k_words_max_length == 4
        assert settings.jobs == 3
        assert settings.syllable_budget == 5
        assert settings.random_samples == Settings().random_samples

    def test_missing_file_gives_defaults(self, clean_env, tmp_path):
        assert load_settings(str(tmp_path / "absent.ini")) == Settings()

    def test_config_from_environment(self, clean_env, tmp_path):
        config = tmp_path / "other.ini"
        config.write_text("[general]\ndebug = true\nlog_file = run.log\n")
        clean_env.setenv('ARTINBD_CONFIG', str(config))
        settings = load_settings()
        assert settings.debug is True
        assert settings.log_file == "run.log"

    def test_environment_overrides_file(self, clean_env, tmp_path):
        config = tmp_path / "config.ini"
        config.write_text("[general]\nlog_level = ERROR\n\n[budgets]\njobs = 2\n")
        clean_env.setenv('ARTINBD_LOG_LEVEL', 'DEBUG')
        clean_env.setenv('ARTINBD_JOBS', '6')
        settings = load_settings(str(config))
        assert settings.log_level == 'DEBUG'
        assert settings.jobs == 6

    def test_with_overrides_skips_none(self):
        settings = Settings().with_overrides(jobs=4, random_seed=None)
        assert settings.jobs == 4
        assert settings.random_seed == Settings().random_seed

    def test_settings_are_frozen(self):
        with pytest.raises(Exception):
            Settings().jobs = 2


class TestInputValidator:

    def test_sanitize_input(self):
        assert InputValidator.sanitize_input("u1\x00u2\n") == "u1 u2"
        assert InputValidator.sanitize_input("") == ""
        assert InputValidator.sanitize_input("a" * 50, 10) == "a" * 10

    @pytest.mark.parametrize("text,valid", [
        ("u1 u2^-1", True),
        ("(g1 g2 | a1^-2)", True),
        ("e", True),
        ("u1; rm -rf /", False),
        ("x1 $x2", False),
        ("u1" * 6000, False),
    ])
    def test_validate_word_text(self, text, valid):
        assert InputValidator.validate_word_text(text) is valid

    @pytest.mark.parametrize("suite_id,valid", [
        ("deltakey", True),
        ("rank2-out", True),
        ("Rank2", False),
        ("bad_suite", False),
        ("-lead", False),
        ("", False),
    ])
    def test_validate_suite_id(self, suite_id, valid):
        assert InputValidator.validate_suite_id(suite_id) is valid

    @pytest.mark.parametrize("value,valid", [(1, True), (64, True), (0, False), (65, False), ("3", True), ("x", False)])
    def test_validate_rank(self, value, valid):
        assert InputValidator.validate_rank(value) is valid

    def test_setup_logging_configures_once(self, tmp_path):
        logger = InputValidator.setup_logging(str(tmp_path / "artinbd.log"), 'INFO')
        handlers = list(logger.handlers)
        again = InputValidator.setup_logging(None, 'ERROR')
        assert again is logger
        assert again.handlers == handlers
        assert again.level == logging.ERROR
        assert not again.propagate

    def test_log_event_truncates_details(self, caplog):
        logger = logging.getLogger('artinbd_test.events')
        with caplog.at_level(logging.INFO, logger='artinbd_test.events'):
            InputValidator.log_event("suite_run", {"word": "u1 " * 100, "count": 3}, logger)
        message = caplog.records[-1].getMessage()
        assert message.startswith("Event: suite_run")
        assert "'count': '3'" in message
        assert ("u1 " * 40) not in message


class TestReports:

    def test_passed_and_stable_dict(self):
        report = VerifyReport('deltakey', {'n': 3}, checked=10, wall_time=1.23456)
        assert report.passed
        assert report.to_dict()['wall_time'] == 1.235
        assert 'wall_time' not in report.to_dict(stable=True)

    def test_error_fails_report(self):
        report = VerifyReport('center', error='unknown flavor')
        assert not report.passed
        assert json.loads(report.to_json(stable=True))['error'] == 'unknown flavor'

    def test_plain_rendering(self, capsys):
        report = VerifyReport('phi-psi', {'n': 3}, checked=2, failures=['1: (u1 | e)'])
        render_report(report, None, stable=True)
        lines = capsys.readouterr().out.splitlines()
        assert "suite: phi-psi" in lines
        assert "result: FAIL" in lines
        assert "  counterexample: 1: (u1 | e)" in lines
        assert not any(line.startswith("wall time") for line in lines)
