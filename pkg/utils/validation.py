#!/usr/bin/env python3
"""
ArtinBD Toolkit - Input Validation and Logging
License: MIT

Centralized input validation and logging setup for the command line and the
verification suites.
"""

import logging
import re
import sys
from typing import Dict, Optional

ROOT_LOGGER = 'artinbd'
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


class InputValidator:
    """Validation of user-supplied text and logging configuration"""

    MAX_INPUT_LENGTH = 10000
    MAX_DETAIL_LENGTH = 100

    SAFE_WORD_PATTERN = re.compile(r'^[A-Za-z0-9\s^\-()|]*$')
    SUITE_ID_PATTERN = re.compile(r'^[a-z0-9]+(-[a-z0-9]+)*$')

    @staticmethod
    def sanitize_input(input_str: str, max_length: Optional[int] = None) -> str:
        """Strip control characters and limit length"""
        if not input_str:
            return ""
        input_str = input_str[:max_length or InputValidator.MAX_INPUT_LENGTH]
        input_str = re.sub(r'[\x00-\x1f\x7f-\x9f]', ' ', input_str)
        return input_str.strip()

    @staticmethod
    def validate_word_text(text: str) -> bool:
        """Word text may only contain letters, digits, blanks, '^', '-', '|' and parentheses"""
        if text is None or len(text) > InputValidator.MAX_INPUT_LENGTH:
            return False
        return bool(InputValidator.SAFE_WORD_PATTERN.match(text))

    @staticmethod
    def validate_suite_id(suite_id: str) -> bool:
        return bool(suite_id) and bool(InputValidator.SUITE_ID_PATTERN.match(suite_id))

    @staticmethod
    def validate_rank(value, minimum: int = 1, maximum: int = 64) -> bool:
        try:
            return minimum <= int(value) <= maximum
        except (ValueError, TypeError):
            return False

    @staticmethod
    def setup_logging(log_file: Optional[str] = None, level: str = 'WARNING') -> logging.Logger:
        """
        Configure the root toolkit logger once.

        Records go to stderr (stdout stays reserved for command output) and,
        optionally, to a log file. Repeated calls only adjust the level.
        """
        logger = logging.getLogger(ROOT_LOGGER)
        logger.setLevel(getattr(logging, str(level).upper(), logging.WARNING))

        if not getattr(logger, '_artinbd_configured', False):
            formatter = logging.Formatter(LOG_FORMAT)
            stream = logging.StreamHandler(sys.stderr)
            stream.setFormatter(formatter)
            logger.addHandler(stream)
            if log_file:
                handler = logging.FileHandler(log_file)
                handler.setFormatter(formatter)
                logger.addHandler(handler)
            logger.propagate = False
            logger._artinbd_configured = True

        return logger

    @staticmethod
    def log_event(event_type: str, details: Dict, logger: Optional[logging.Logger] = None):
        """Log a one-line event with sanitized details"""
        if logger is None:
            logger = logging.getLogger(ROOT_LOGGER)

        safe_details = {}
        for key, value in details.items():
            if isinstance(value, str):
                safe_details[key] = InputValidator.sanitize_input(value, InputValidator.MAX_DETAIL_LENGTH)
            else:
                safe_details[key] = str(value)[:InputValidator.MAX_DETAIL_LENGTH]

        logger.info(f"Event: {event_type} - {safe_details}")
