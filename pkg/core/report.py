"""
ArtinBD Toolkit - Verification reports
License: MIT

The outcome of one verification suite run, with JSON and table rendering.
"""

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

try:
    from rich.console import Console
    from rich.table import Table
    RICH_AVAILABLE = True
except ImportError:
    RICH_AVAILABLE = False

MAX_SHOWN_FAILURES = 20


@dataclass
class VerifyReport:
    """
    Result of a suite run.

    passed is True exactly when there are no failures and no error.
    """

    suite: str
    params: Dict[str, Any] = field(default_factory=dict)
    checked: int = 0
    failures: List[str] = field(default_factory=list)
    wall_time: float = 0.0
    error: Optional[str] = None

    @property
    def passed(self) -> bool:
        return not self.failures and self.error is None

    def to_dict(self, stable: bool = False) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            'suite': self.suite,
            'params': self.params,
            'checked': self.checked,
            'failures': list(self.failures),
            'pass': self.passed,
        }
        if self.error is not None:
            data['error'] = self.error
        if not stable:
            data['wall_time'] = round(self.wall_time, 3)
        return data

    def to_json(self, stable: bool = False, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_dict(stable), indent=indent, sort_keys=True)


def render_report(report: VerifyReport, console=None, stable: bool = False):
    """Print a report as a table (rich) or as plain lines."""
    params = ', '.join(f"{key}={value}" for key, value in sorted(report.params.items()))
    status = 'PASS' if report.passed else ('ERROR' if report.error else 'FAIL')

    if RICH_AVAILABLE and console is not None and not getattr(console, 'plain', False):
        table = Table(title=f"Verification: {report.suite}", show_header=True)
        table.add_column("Field", style="cyan", no_wrap=True)
        table.add_column("Value", style="white")
        table.add_row("params", params or '-')
        table.add_row("checked", str(report.checked))
        table.add_row("failures", str(len(report.failures)))
        if report.error:
            table.add_row("error", report.error)
        if not stable:
            table.add_row("wall time", f"{report.wall_time:.3f}s")
        table.add_row("result", status)
        console.print(table)
        for failure in report.failures[:MAX_SHOWN_FAILURES]:
            console.print(f"  counterexample: {failure}")
        return

    lines = [
        f"suite: {report.suite}",
        f"params: {params or '-'}",
        f"checked: {report.checked}",
        f"failures: {len(report.failures)}",
    ]
    if report.error:
        lines.append(f"error: {report.error}")
    if not stable:
        lines.append(f"wall time: {report.wall_time:.3f}s")
    lines.append(f"result: {status}")
    lines.extend(f"  counterexample: {failure}" for failure in report.failures[:MAX_SHOWN_FAILURES])
    for line in lines:
        if console is not None:
            console.print(line)
        else:
            print(line)
