"""
Stirling Numerators
===================

For fixed k, sum_n S(k + n, n) t^n = B_k(t) / (1 - t)^(2k + 1) with B_k a
polynomial of degree at most 2k and, conjecturally, nonnegative coefficients.
"""

import logging
from math import comb
from typing import List, Optional

from sympy.functions.combinatorial.numbers import stirling

from algebra.polynomials import IntPolynomial
from checks import CheckReport, IdentityCheck
from config import get_config
from errors import InvalidArgument, SizeLimit

logger = logging.getLogger(__name__)


def _numerator_coefficients(k: int, degree: int) -> List[int]:
    """Coefficients of (1 - t)^(2k+1) * sum_n S(k+n, n) t^n up to t^degree."""
    series = [int(stirling(k + n, n)) for n in range(degree + 1)]
    width = 2 * k + 1
    return [
        sum((-1) ** i * comb(width, i) * series[n - i] for i in range(min(n, width) + 1))
        for n in range(degree + 1)
    ]


def stirling_numerator(k: int, limit: Optional[int] = None) -> IntPolynomial:
    """
    B_k(t).

    Raises:
        SizeLimit: If k exceeds the configured limit
    """
    if k < 0:
        raise InvalidArgument(f"k must be nonnegative, got {k}")
    limit = limit if limit is not None else get_config().limits.stirling_k
    if k > limit:
        raise SizeLimit(f"stirling numerator k={k} exceeds the limit of {limit}")
    return IntPolynomial(tuple(_numerator_coefficients(k, 2 * k)))


def stirling_check(k: int, extra: int = 3) -> CheckReport:
    """
    Nonnegative coefficients of B_k, and vanishing of the series product past t^2k.

    Raises:
        SizeLimit: If k exceeds the configured limit
    """
    b = stirling_numerator(k)
    tail = _numerator_coefficients(k, 2 * k + extra)[2 * k + 1:]
    report = CheckReport("stirling", metadata={'k': k, 'polynomial': b.render("t")})
    report.add(IdentityCheck.of(
        "stirling_nonnegative", all(c >= 0 for c in b.coeffs), f"B_{k} = {b.render('t')}",
    ))
    report.add(IdentityCheck.of(
        "stirling_terminates", not any(tail), f"coefficients past t^{2 * k}: {tail}",
    ))
    logger.info("stirling k=%d: %s", k, b.render("t"))
    return report
