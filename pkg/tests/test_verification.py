#!/usr/bin/env python3
"""
Verification Orchestrator Tests
===============================

Tests for the oracle suite runner and its table/JSON report writers.

Run with: pytest tests/test_verification.py -v
"""

import json

import pytest

from checks import CheckReport, IdentityCheck
from config import OracleBudget, PpartConfig, VerifySettings, get_config
from errors import PPartitionError
from poset.core import labeled_chain
from posets import SMALL_POSETS
from verification import SuiteStatus, VerificationOrchestrator, identity_rows, render_json, render_table


def quick_config(**verify) -> PpartConfig:
    settings = {'m_max': 2, 'n_vars': 2}
    settings.update(verify)
    return PpartConfig(verify=VerifySettings(**settings))


class BrokenOrchestrator(VerificationOrchestrator):
    """One suite that raises and one that reports a failed identity."""

    def suites(self):
        def raises():
            raise PPartitionError("boom")

        def fails():
            report = CheckReport("fails")
            report.add(IdentityCheck.of("always_false", False, "0 != 1", 0))
            report.add(IdentityCheck.of("always_false", False, "0 != 2", 1))
            return report

        return [("raises", raises), ("fails", fails)]


# =============================================================================
# Orchestrator
# =============================================================================

class TestOrchestrator:
    """Suite selection, skipping and aggregation."""

    def test_three_element_example_passes(self, fig1):
        report = VerificationOrchestrator(fig1, quick_config()).run()
        assert report.passed
        assert report.total_failures == 0
        assert report.get("fundamental_theorem").status is SuiteStatus.PASS
        assert report.get("natural_ideal_chains").status is SuiteStatus.SKIPPED

    def test_natural_poset_runs_ideal_chains(self, v_poset):
        report = VerificationOrchestrator(v_poset, quick_config()).run()
        assert report.get("natural_ideal_chains").status is SuiteStatus.PASS

    def test_improper_labeling_skips_complement_suites(self):
        report = VerificationOrchestrator(labeled_chain(3, "constant"), quick_config()).run()
        assert report.passed
        for suite in ("reciprocity", "enriched_sign_split", "delta_decomposition"):
            assert report.get(suite).status is SuiteStatus.SKIPPED

    def test_enabled_checks_filter(self, fig1):
        config = quick_config(enabled_checks=["reciprocity", "alpha_beta"])
        report = VerificationOrchestrator(fig1, config).run()
        assert [r.suite for r in report.results] == ["reciprocity", "alpha_beta"]

    def test_budget_exceeded_is_skipped(self, fig1):
        config = quick_config()
        config.budget = OracleBudget(max_candidate_maps=5)
        report = VerificationOrchestrator(fig1, config).run()
        assert report.get("fundamental_theorem").status is SuiteStatus.SKIPPED
        assert report.passed
        assert get_config().budget == OracleBudget()

    def test_own_extension_budget_applies(self, fig1):
        config = quick_config(enabled_checks=["gamma_decomposition", "alpha_beta"])
        config.budget = OracleBudget(max_linear_extensions=1)
        report = VerificationOrchestrator(fig1, config).run()
        assert report.get("gamma_decomposition").status is SuiteStatus.SKIPPED
        assert "linear extensions" in report.get("gamma_decomposition").reason

    def test_global_config_restored_after_run(self, fig1):
        config = quick_config(enabled_checks=["alpha_beta"])
        VerificationOrchestrator(fig1, config).run()
        assert get_config() == PpartConfig()

    def test_order_polynomial_rebuilt_from_brute_values(self, fig1):
        report = VerificationOrchestrator(fig1, quick_config(m_max=3, enabled_checks=["order_polynomial"])).run()
        names = [c.name for c in report.get("order_polynomial").report.checks]
        assert "order_polynomial_interpolated" in names
        assert report.passed

    def test_too_few_values_skip_interpolation(self, fig1):
        report = VerificationOrchestrator(fig1, quick_config(enabled_checks=["order_polynomial"])).run()
        names = [c.name for c in report.get("order_polynomial").report.checks]
        assert "order_polynomial_interpolated" not in names

    def test_raising_suite_fails(self, fig1):
        report = BrokenOrchestrator(fig1, quick_config()).run()
        assert not report.passed
        raised = report.get("raises")
        assert raised.status is SuiteStatus.FAIL
        assert raised.report.checks[0].name == "raises_execution"
        assert "boom" in raised.reason

    @pytest.mark.parametrize("P", [P for P in SMALL_POSETS if P.p])
    def test_small_posets(self, P):
        report = VerificationOrchestrator(P, quick_config()).run()
        failures = [c.detail for r in report.results for c in r.report.failures]
        assert report.passed, failures


# =============================================================================
# Report writers
# =============================================================================

class TestReportWriter:
    """Table and JSON renderings."""

    def test_table_verdict_line(self, fig1):
        report = VerificationOrchestrator(fig1, quick_config()).run()
        text = render_table(report)
        assert text.endswith(f"PASS: {report.total_checks} checks, 0 failed\n")
        assert "SKIPPED natural_ideal_chains" in text
        assert "time:" not in text

    def test_table_is_deterministic(self, fig1):
        first = render_table(VerificationOrchestrator(fig1, quick_config()).run())
        second = render_table(VerificationOrchestrator(fig1, quick_config()).run())
        assert first == second

    def test_timing_line(self, fig1):
        report = VerificationOrchestrator(fig1, quick_config(enabled_checks=["alpha_beta"])).run()
        assert "time:" in render_table(report, timing=True)
        assert 'total_execution_time_ms' in json.loads(render_json(report, timing=True))

    def test_failures_listed_once_per_identity(self, fig1):
        text = render_table(BrokenOrchestrator(fig1, quick_config()).run())
        assert text.count("FAIL fails/always_false") == 1
        assert "FAIL raises/raises_execution: PPartitionError: boom" in text
        assert text.rstrip().endswith("FAIL: 3 checks, 3 failed")

    def test_identity_rows(self, fig1):
        rows = identity_rows(BrokenOrchestrator(fig1, quick_config()).run())
        assert ("fails", "always_false", 2, 2, "FAIL") in rows

    def test_json(self, fig1):
        data = json.loads(render_json(VerificationOrchestrator(fig1, quick_config()).run()))
        assert data['passed'] is True
        assert data['poset'] == fig1.to_dict()
        assert 'total_execution_time_ms' not in data
        suites = {r['suite']: r for r in data['results']}
        assert suites['natural_ideal_chains']['status'] == "SKIPPED"
