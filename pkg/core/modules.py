"""
ArtinBD Toolkit - Verification suite management
License: MIT

Handles loading, registration, and execution of verification suites.
"""

import importlib.util
import logging
import os
import time
from abc import ABC, abstractmethod
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple, Type

from .config import Settings
from .report import VerifyReport

logger = logging.getLogger('artinbd.core.modules')


class SuiteNotFoundError(ValueError):
    """No suite is registered under the requested id."""


CaseResult = Tuple[int, List[str]]
Case = Tuple[Any, Callable[[], CaseResult]]


class VerificationSuite(ABC):
    """
    Base class for all verification suites.

    A suite runs exact checks over a bounded parameter range and reports how
    many objects it checked and every counterexample it found.
    """

    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or Settings()
        self.info = {
            'name': 'Base Suite',
            'description': 'Base verification suite',
            'version': '1.0',
            'category': 'base',
            'reference': '',
        }
        self.options = {
            'JOBS': {
                'description': 'Worker threads for independent cases',
                'required': False,
                'default': str(self.settings.jobs),
            },
            'SEED': {
                'description': 'Seed for random samples',
                'required': False,
                'default': str(self.settings.random_seed),
            },
            'SAMPLES': {
                'description': 'Number of random samples',
                'required': False,
                'default': str(self.settings.random_samples),
            },
        }
        self.jobs = str(self.settings.jobs)
        self.seed = str(self.settings.random_seed)
        self.samples = str(self.settings.random_samples)

    @property
    def suite_id(self) -> str:
        return self.info['name']

    @property
    def logger(self) -> logging.Logger:
        return logging.getLogger(f"artinbd.suites.{self.suite_id.replace('-', '_')}")

    def add_option(self, name: str, description: str, default: str = '', required: bool = False):
        self.options[name] = {'description': description, 'required': required, 'default': default}
        setattr(self, name.lower(), default)

    @abstractmethod
    def run(self) -> Dict[str, Any]:
        """
        Execute the suite.

        Returns:
            Dict with at least 'success'; on completion also 'params',
            'checked' and 'failures'
        """

    def check_requirements(self) -> bool:
        for option, config in self.options.items():
            if config.get('required', False):
                value = getattr(self, option.lower(), None)
                if not value:
                    return False
        return True

    def set_option(self, option: str, value: str) -> bool:
        option = option.upper()
        if option in self.options:
            setattr(self, option.lower(), value)
            return True
        return False

    def get_option(self, option: str) -> Optional[str]:
        option = option.upper()
        if option in self.options:
            return getattr(self, option.lower(), None)
        return None

    def int_option(self, option: str) -> Optional[int]:
        """Integer value of an option, None when unset."""
        value = self.get_option(option)
        if value in (None, ''):
            return None
        return int(value)

    def ints_or(self, option: str, defaults: Sequence[int]) -> List[int]:
        """[value] when the option is set, otherwise the default range."""
        value = self.int_option(option)
        return [value] if value is not None else list(defaults)

    def run_cases(self, cases: Sequence[Case]) -> CaseResult:
        """
        Run independent cases, possibly in parallel.

        Each case is (key, callable returning (checked, failures)). Results are
        aggregated in key order, so the outcome does not depend on scheduling.
        """
        jobs = max(1, self.int_option('JOBS') or 1)
        results: Dict[Any, CaseResult] = {}
        if jobs == 1 or len(cases) < 2:
            for key, case in cases:
                results[key] = case()
        else:
            with ThreadPoolExecutor(max_workers=jobs) as executor:
                future_to_key = {executor.submit(case): key for key, case in cases}
                for future in as_completed(future_to_key):
                    results[future_to_key[future]] = future.result()

        checked, failures = 0, []
        for key in sorted(results, key=str):
            case_checked, case_failures = results[key]
            checked += case_checked
            for failure in case_failures:
                self.logger.warning("counterexample in %s: %s", key, failure)
            failures.extend(f"{key}: {failure}" for failure in case_failures)
        return checked, failures

    def result(self, params: Dict[str, Any], checked: int, failures: List[str]) -> Dict[str, Any]:
        return {'success': not failures, 'params': params, 'checked': checked, 'failures': failures}

    def execute(self) -> VerifyReport:
        """Run the suite and wrap the outcome in a report; never raises."""
        start = time.perf_counter()
        self.logger.info("suite %s started", self.suite_id)
        if not self.check_requirements():
            return VerifyReport(self.suite_id, error='required options are not set')
        try:
            outcome = self.run()
        except Exception as e:
            self.logger.error("suite %s aborted: %s", self.suite_id, e)
            outcome = {'success': False, 'error': str(e)}
        elapsed = time.perf_counter() - start
        report = VerifyReport(
            suite=self.suite_id,
            params=outcome.get('params', {}),
            checked=outcome.get('checked', 0),
            failures=outcome.get('failures', []),
            wall_time=elapsed,
            error=outcome.get('error'),
        )
        self.logger.info("suite %s finished: checked=%d failures=%d", self.suite_id,
                         report.checked, len(report.failures))
        return report


def suite_id_of(module_name: str) -> str:
    return module_name.replace('_', '-')


def class_name_of(module_name: str) -> str:
    """braid_relations -> BraidRelationsSuite."""
    return ''.join(word.capitalize() for word in module_name.split('_')) + 'Suite'


class SuiteManager:
    """
    Manages loading and registration of verification suites.
    """

    def __init__(self, suite_dir: Optional[str] = None):
        self.suites: Dict[str, Type[VerificationSuite]] = {}
        base_path = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
        self.suite_dir = suite_dir or os.path.join(base_path, 'suites')

    def load_all_suites(self):
        """Load every suite module from the suites directory."""
        if not os.path.isdir(self.suite_dir):
            logger.warning("suite directory %s not found", self.suite_dir)
            return
        for filename in sorted(os.listdir(self.suite_dir)):
            if filename.endswith('.py') and not filename.startswith('__'):
                self._load_suite(filename[:-3], os.path.join(self.suite_dir, filename))

    def _load_suite(self, module_name: str, module_path: str):
        try:
            spec = importlib.util.spec_from_file_location(f"suites.{module_name}", module_path)
            module = importlib.util.module_from_spec(spec)
            spec.loader.exec_module(module)

            suite_class = getattr(module, class_name_of(module_name), None)
            if suite_class is not None and issubclass(suite_class, VerificationSuite):
                self.suites[suite_id_of(module_name)] = suite_class
        except Exception as e:
            logger.error("error loading suite %s: %s", module_name, e)

    def get_suite(self, suite_id: str) -> Optional[Type[VerificationSuite]]:
        return self.suites.get(suite_id)

    def register_suite(self, suite_id: str, suite_class: Type[VerificationSuite]):
        self.suites[suite_id] = suite_class

    def list_suites(self) -> List[str]:
        return sorted(self.suites)
