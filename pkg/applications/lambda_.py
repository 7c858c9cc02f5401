"""
Multipartite Partitions
=======================

phi_p(q_1, ..., q_s) counts multisets of p tuples of nonnegative integers by
coordinate sums, and phi_p = Lambda_p / ((q_1; q_1)_p ... (q_s; q_s)_p). The
coefficient of q_1^i_1 ... q_s^i_s in Lambda_p counts s-tuples of permutations
with product the identity and maj(pi_j) = i_j.
"""

import logging
from itertools import product
from math import comb
from typing import Dict, List, Optional, Tuple

from algebra.polynomials import MultiPolynomial
from checks import CheckReport, IdentityCheck
from config import get_config
from errors import InvalidArgument, SizeLimit
from stats.permutations import all_permutations, compose, inverse, major_index

logger = logging.getLogger(__name__)


def _check_size(p: int, s: int, limit_p: Optional[int], limit_s: Optional[int]) -> None:
    limits = get_config().limits
    limit_p = limit_p if limit_p is not None else limits.lambda_p
    limit_s = limit_s if limit_s is not None else limits.lambda_s
    if p < 0 or s < 1:
        raise InvalidArgument(f"need p >= 0 and s >= 1, got p={p}, s={s}")
    if p > limit_p or s > limit_s:
        raise SizeLimit(f"lambda with p={p}, s={s} exceeds the limits p<={limit_p}, s<={limit_s}")


def multipartite_lambda(
    p: int, s: int, limit_p: Optional[int] = None, limit_s: Optional[int] = None
) -> MultiPolynomial:
    """
    Lambda_p(q_1, ..., q_s) from permutation tuples whose composition is the identity.

    Raises:
        SizeLimit: If p or s exceeds the configured limits
    """
    _check_size(p, s, limit_p, limit_s)
    perms = list(all_permutations(p))
    identity = tuple(range(1, p + 1))
    terms: Dict[Tuple[int, ...], int] = {}
    for head in product(perms, repeat=s - 1):
        composite = identity
        for pi in head:
            composite = compose(composite, pi)
        last = inverse(composite)
        key = tuple(major_index(pi) for pi in head) + (major_index(last),)
        terms[key] = terms.get(key, 0) + 1
    logger.debug("lambda p=%d s=%d: %d tuples", p, s, len(perms) ** (s - 1))
    return MultiPolynomial(s, terms)


def multipartite_lambda_series(p: int, degree: Optional[int] = None) -> MultiPolynomial:
    """
    Lambda_p(q_1, q_2) from the series phi_p times (q_1; q_1)_p (q_2; q_2)_p,
    truncated to exponents <= degree (default C(p, 2), the largest major index).
    """
    degree = degree if degree is not None else comb(p, 2)
    # grid[k][i][j]: multisets of k pairs with coordinate sums (i, j)
    grid: List[List[List[int]]] = [[[0] * (degree + 1) for _ in range(degree + 1)] for _ in range(p + 1)]
    grid[0][0][0] = 1
    for a, b in product(range(degree + 1), repeat=2):
        for k in range(1, p + 1):
            for i in range(a, degree + 1):
                for j in range(b, degree + 1):
                    grid[k][i][j] += grid[k - 1][i - a][j - b]
    phi = MultiPolynomial(2, {
        (i, j): grid[p][i][j] for i in range(degree + 1) for j in range(degree + 1) if grid[p][i][j]
    })
    for r in range(1, p + 1):
        phi = phi * MultiPolynomial(2, {(0, 0): 1, (r, 0): -1})
        phi = phi * MultiPolynomial(2, {(0, 0): 1, (0, r): -1})
        phi = phi.truncate(degree)
    return phi


def roselle_check(p: int) -> CheckReport:
    """
    Coefficients of Lambda_p(q_1, q_2) against the joint distribution of
    (maj(pi), maj(pi^-1)), and against the series definition.

    Raises:
        SizeLimit: If p exceeds the configured limit
    """
    lam = multipartite_lambda(p, 2)
    joint: Dict[Tuple[int, int], int] = {}
    for pi in all_permutations(p):
        key = (major_index(pi), major_index(inverse(pi)))
        joint[key] = joint.get(key, 0) + 1
    report = CheckReport("lambda", metadata={'p': p, 'lambda': lam.render()})
    report.add(IdentityCheck.of("lambda_roselle", lam == MultiPolynomial(2, joint), f"Lambda_{p} = {lam.render()}"))
    series = multipartite_lambda_series(p)
    report.add(IdentityCheck.of(
        "lambda_series", lam == series, f"series side {series.render()}",
    ))
    return report
