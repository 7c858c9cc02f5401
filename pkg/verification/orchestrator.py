"""
Verification Orchestration
==========================

Runs every closed form on one labeled poset against its brute-force oracle and
aggregates the per-suite reports into a single pass/fail verdict.
"""

import logging
import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, List, Optional, Tuple

from algebra.interpolation import interpolate
from algebra.polynomials import IntPolynomial
from applications.neggers import neggers_test
from checks import CheckReport, IdentityCheck
from config import PpartConfig, get_config, use_config
from errors import BudgetExceeded, PPartitionError
from gf.descents import alpha_beta_check, descent_gf, order_polynomial, u_m
from gf.reciprocity import reciprocity_check
from oracle.bijections import extension_fibers, knuth_conditions_hold, knuth_pair, knuth_unpair
from oracle.enumeration import Assignment, chain_solutions, enumerate_enriched, enumerate_ppartitions
from poset.core import (
    LabeledPoset,
    LabelingKind,
    classify_labeling,
    complement_labeling,
    count_linear_extensions,
    ideal_multichain_count,
)
from qsym.generating import delta, delta_from_extensions, gamma, gamma_brute

logger = logging.getLogger(__name__)


class SuiteStatus(Enum):
    """Outcome of one verification suite."""

    PASS = "PASS"
    FAIL = "FAIL"
    SKIPPED = "SKIPPED"  # precondition not met or oracle over budget


@dataclass
class SuiteResult:
    """Result of a single verification suite."""

    suite: str
    status: SuiteStatus
    report: CheckReport
    execution_time_ms: float = 0.0
    reason: str = ""

    def to_dict(self, timing: bool = False) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            'suite': self.suite,
            'status': self.status.value,
            'checks': len(self.report.checks),
            'failures': [c.to_dict() for c in self.report.failures],
            'metadata': self.report.metadata,
        }
        if self.reason:
            data['reason'] = self.reason
        if timing:
            data['execution_time_ms'] = round(self.execution_time_ms, 3)
        return data


@dataclass
class VerificationReport:
    """Aggregated results from all suites run on one poset."""

    poset: Dict[str, Any]
    results: List[SuiteResult] = field(default_factory=list)
    total_execution_time_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return all(r.status is not SuiteStatus.FAIL for r in self.results)

    @property
    def total_checks(self) -> int:
        return sum(len(r.report.checks) for r in self.results)

    @property
    def total_failures(self) -> int:
        return sum(len(r.report.failures) for r in self.results)

    def get(self, suite: str) -> Optional[SuiteResult]:
        for result in self.results:
            if result.suite == suite:
                return result
        return None

    def to_dict(self, timing: bool = False) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            'poset': self.poset,
            'passed': self.passed,
            'total_checks': self.total_checks,
            'total_failures': self.total_failures,
            'results': [r.to_dict(timing) for r in self.results],
        }
        if timing:
            data['total_execution_time_ms'] = round(self.total_execution_time_ms, 3)
        return data


class _Skip(Exception):
    pass


class VerificationOrchestrator:
    """Runs the enabled verification suites on one labeled poset."""

    def __init__(self, P: LabeledPoset, config: Optional[PpartConfig] = None):
        """
        Args:
            P: Poset under verification
            config: Settings (discovered from the environment when None)
        """
        self.P = P
        self.config = config or get_config()
        self.settings = self.config.verify

    def suites(self) -> List[Tuple[str, Callable[[], CheckReport]]]:
        return [
            ("fundamental_theorem", self._fundamental_theorem),
            ("u_m_closed_form", self._u_m_closed_form),
            ("order_polynomial", self._order_polynomial),
            ("descent_gf_count", self._descent_gf_count),
            ("reciprocity", self._reciprocity),
            ("alpha_beta", self._alpha_beta),
            ("natural_ideal_chains", self._natural_ideal_chains),
            ("knuth_round_trip", self._knuth_round_trip),
            ("enriched_sign_split", self._enriched_sign_split),
            ("gamma_decomposition", self._gamma_decomposition),
            ("delta_decomposition", self._delta_decomposition),
            ("neggers", self._neggers),
        ]

    def run(self) -> VerificationReport:
        """Run every enabled suite; a suite that raises is reported as failed."""
        report = VerificationReport(poset=self.P.to_dict())
        start = time.perf_counter()
        with use_config(self.config):
            for name, suite in self.suites():
                if not self.settings.is_enabled(name):
                    logger.debug("suite %s disabled", name)
                    continue
                report.results.append(self._run_suite(name, suite))
        report.total_execution_time_ms = (time.perf_counter() - start) * 1000
        logger.info(
            "verify p=%d: %d checks, %d failures, passed=%s",
            self.P.p, report.total_checks, report.total_failures, report.passed,
        )
        return report

    def _run_suite(self, name: str, suite: Callable[[], CheckReport]) -> SuiteResult:
        start = time.perf_counter()
        try:
            checks = suite()
            status = SuiteStatus.PASS if checks.passed else SuiteStatus.FAIL
            result = SuiteResult(name, status, checks)
        except (_Skip, BudgetExceeded) as e:
            logger.info("suite %s skipped: %s", name, e)
            result = SuiteResult(name, SuiteStatus.SKIPPED, CheckReport(name), reason=str(e))
        except PPartitionError as e:
            logger.error("suite %s raised %s: %s", name, type(e).__name__, e)
            failed = CheckReport(name)
            failed.add(IdentityCheck.of(f"{name}_execution", False, f"{type(e).__name__}: {e}"))
            result = SuiteResult(name, SuiteStatus.FAIL, failed, reason=str(e))
        result.execution_time_ms = (time.perf_counter() - start) * 1000
        return result

    def _require_proper(self) -> None:
        if not self.P.is_proper:
            raise _Skip(f"labels {list(self.P.omega)} are not a bijection onto 1..{self.P.p}")

    # =========================================================================
    # Suites
    # =========================================================================

    def _fundamental_theorem(self) -> CheckReport:
        P, report = self.P, CheckReport("fundamental_theorem")
        for m in range(self.settings.m_max + 1):
            fibers = extension_fibers(P, m)
            everything = enumerate_ppartitions(P, m)
            union = sorted(sigma for fiber in fibers.values() for sigma in fiber)
            report.add(IdentityCheck.of(
                "fibers_partition", union == everything,
                f"m={m}: {len(everything)} partitions in {len(fibers)} fibers", m,
            ))
            for extension, fiber in fibers.items():
                solutions = chain_solutions(extension, P, m)
                report.add(IdentityCheck.of(
                    "fiber_is_chain_solution_set", sorted(fiber) == solutions,
                    f"m={m}, pi={extension.render()}: fiber {len(fiber)}, chain {len(solutions)}", m,
                ))
        return report

    def _u_m_closed_form(self) -> CheckReport:
        P, report = self.P, CheckReport("u_m_closed_form")
        for m in range(self.settings.m_max + 1):
            brute: Dict[int, int] = {}
            for sigma in enumerate_ppartitions(P, m):
                brute[sigma.total] = brute.get(sigma.total, 0) + 1
            expected, closed = IntPolynomial.from_terms(brute), u_m(P, m)
            report.add(IdentityCheck.of(
                "u_m_closed_form", closed == expected,
                f"m={m}: closed {closed.render()}; brute {expected.render()}", m,
            ))
        return report

    def _order_polynomial(self) -> CheckReport:
        P, report = self.P, CheckReport("order_polynomial")
        omega = order_polynomial(P)
        report.metadata['omega'] = omega.render()
        points = []
        for m in range(1, self.settings.m_max + 2):
            brute = len(enumerate_ppartitions(P, m - 1))
            points.append((m, brute))
            report.add(IdentityCheck.of(
                "order_polynomial_brute", omega(m) == brute, f"m={m}: Omega={omega(m)}, brute={brute}", m,
            ))
        # degree p needs p + 1 values
        if len(points) > P.p:
            rebuilt = interpolate(points)
            report.add(IdentityCheck.of(
                "order_polynomial_interpolated", rebuilt == omega,
                f"from {len(points)} brute values: {rebuilt.render('m')}",
            ))
        return report

    def _descent_gf_count(self) -> CheckReport:
        report = CheckReport("descent_gf_count")
        gf_count, dp_count = descent_gf(self.P).count, count_linear_extensions(self.P)
        report.add(IdentityCheck.of(
            "descent_gf_count", gf_count == dp_count, f"descent gf {gf_count}, ideal DP {dp_count}",
        ))
        return report

    def _reciprocity(self) -> CheckReport:
        self._require_proper()
        return reciprocity_check(self.P, self.settings.m_max)

    def _alpha_beta(self) -> CheckReport:
        return alpha_beta_check(self.P)

    def _natural_ideal_chains(self) -> CheckReport:
        if classify_labeling(self.P) is not LabelingKind.NATURAL:
            raise _Skip("labeling is not natural")
        P, report = self.P, CheckReport("natural_ideal_chains")
        omega = order_polynomial(P)
        for m in range(self.settings.m_max + 1):
            chains = ideal_multichain_count(P, m)
            report.add(IdentityCheck.of(
                "ideal_multichains", chains == omega(m), f"m={m}: chains {chains}, Omega {omega(m)}", m,
            ))
        return report

    def _knuth_round_trip(self) -> CheckReport:
        P, report = self.P, CheckReport("knuth_round_trip")
        m = self.settings.m_max
        seen: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], Assignment] = {}
        bad: List[str] = []
        for sigma in enumerate_ppartitions(P, m):
            pair = knuth_pair(sigma, P)
            if not knuth_conditions_hold(*pair, P):
                bad.append(f"{list(sigma.values)} pairs to an invalid pair")
            elif knuth_unpair(*pair, P) != sigma:
                bad.append(f"{list(sigma.values)} does not round trip")
            elif pair in seen:
                bad.append(f"{list(sigma.values)} collides with {list(seen[pair].values)}")
            seen[pair] = sigma
        report.add(IdentityCheck.of(
            "knuth_round_trip", not bad, bad[0] if bad else f"m={m}: {len(seen)} pairs", m,
        ))
        return report

    def _enriched_sign_split(self) -> CheckReport:
        self._require_proper()
        P, report = self.P, CheckReport("enriched_sign_split")
        n = self.settings.n_vars
        enriched = enumerate_enriched(P, n)
        positive = sorted(s.values for s in enriched if all(v > 0 for v in s.values))
        negative = sorted(tuple(-v for v in s.values) for s in enriched if all(v < 0 for v in s.values))
        shifted = sorted(tuple(v + 1 for v in s.values) for s in enumerate_ppartitions(P, n - 1))
        shifted_bar = sorted(
            tuple(v + 1 for v in s.values) for s in enumerate_ppartitions(complement_labeling(P), n - 1)
        )
        report.add(IdentityCheck.of(
            "enriched_positive", positive == shifted, f"n={n}: {len(positive)} all-positive maps", n,
        ))
        report.add(IdentityCheck.of(
            "enriched_negative", negative == shifted_bar, f"n={n}: {len(negative)} all-negative maps", n,
        ))
        return report

    def _gamma_decomposition(self) -> CheckReport:
        P, report = self.P, CheckReport("gamma_decomposition")
        n = self.settings.n_vars
        element = gamma(P)
        report.metadata['gamma'] = element.render()
        report.add(IdentityCheck.of(
            "gamma_decomposition", element.expand(n) == gamma_brute(P, n), f"n={n}: {element.render()}", n,
        ))
        return report

    def _delta_decomposition(self) -> CheckReport:
        self._require_proper()
        P, report = self.P, CheckReport("delta_decomposition")
        n = self.settings.n_vars
        direct = delta(P, n)
        report.add(IdentityCheck.of(
            "delta_decomposition", direct == delta_from_extensions(P, n),
            f"n={n}: {len(direct.terms)} monomials", n,
        ))
        return report

    def _neggers(self) -> CheckReport:
        # informational: real-rootedness can legitimately fail
        result = neggers_test(self.P)
        report = CheckReport("neggers", metadata=result.to_dict())
        report.add(IdentityCheck.of(
            "neggers_recorded", True, f"W = {result.w.render('t')}, real-rooted: {result.real_rooted}",
        ))
        return report
