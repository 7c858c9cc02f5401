"""
Verification Package
====================

Back end of `ppart verify`: runs the closed forms of one poset against their
oracles and renders the verdict.
"""

from verification.orchestrator import SuiteResult, SuiteStatus, VerificationOrchestrator, VerificationReport
from verification.report_writer import identity_rows, render_json, render_table

__all__ = [
    "SuiteResult",
    "SuiteStatus",
    "VerificationOrchestrator",
    "VerificationReport",
    "identity_rows",
    "render_json",
    "render_table",
]
