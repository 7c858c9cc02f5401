"""
Verification Report Writer
==========================

Renders a VerificationReport as a plain-text table or as JSON. Output carries
no colour and no timing unless asked, so equal inputs give equal bytes.
"""

import io
import json
from typing import Dict, List, Tuple

from rich import box
from rich.console import Console
from rich.table import Table

from verification.orchestrator import SuiteStatus, VerificationReport


def identity_rows(report: VerificationReport) -> List[Tuple[str, str, int, int, str]]:
    """(suite, identity, instances, failures, status) in run order."""
    rows: List[Tuple[str, str, int, int, str]] = []
    for result in report.results:
        if result.status is SuiteStatus.SKIPPED:
            rows.append((result.suite, "-", 0, 0, SuiteStatus.SKIPPED.value))
            continue
        tally: Dict[str, List[int]] = {}
        for check in result.report.checks:
            counts = tally.setdefault(check.name, [0, 0])
            counts[0] += 1
            counts[1] += 0 if check.passed else 1
        for name, (total, failed) in tally.items():
            rows.append((result.suite, name, total, failed, "FAIL" if failed else "PASS"))
    return rows


def render_table(report: VerificationReport, timing: bool = False) -> str:
    """Plain table, one row per identity, followed by the first failure of each failing identity."""
    table = Table(box=box.SIMPLE, show_edge=False, pad_edge=False)
    table.add_column("suite")
    table.add_column("identity")
    table.add_column("checks", justify="right")
    table.add_column("failed", justify="right")
    table.add_column("status")
    for suite, name, total, failed, status in identity_rows(report):
        table.add_row(suite, name, str(total), str(failed), status)

    buffer = io.StringIO()
    console = Console(file=buffer, color_system=None, width=110, force_terminal=False, legacy_windows=False)
    console.print(table)

    lines = [line.rstrip() for line in buffer.getvalue().splitlines()]
    reported = set()
    for result in report.results:
        for check in result.report.failures:
            if (result.suite, check.name) in reported:
                continue
            reported.add((result.suite, check.name))
            lines.append(f"FAIL {result.suite}/{check.name}: {check.detail}")
        if result.status is SuiteStatus.SKIPPED:
            lines.append(f"SKIPPED {result.suite}: {result.reason}")
    verdict = "PASS" if report.passed else "FAIL"
    lines.append(f"{verdict}: {report.total_checks} checks, {report.total_failures} failed")
    if timing:
        lines.append(f"time: {report.total_execution_time_ms:.0f}ms")
    return "\n".join(lines) + "\n"


def render_json(report: VerificationReport, timing: bool = False) -> str:
    return json.dumps(report.to_dict(timing), indent=2, sort_keys=True, default=str) + "\n"
