"""
Shuffles
========

Descent polynomials of a disjoint union from those of its parts: with
a = |P|, b = |Q|,

    W_s(P + Q) = sum_{i,j} q^((s-i)(s-j)) [a+j-i choose s-i]_q [b+i-j choose s-j]_q W_i(P) W_j(Q)
"""

import logging
from typing import Tuple

from algebra.polynomials import LaurentPolynomial
from algebra.qseries import q_binomial_poly
from checks import CheckReport, IdentityCheck
from gf.descents import descent_gf
from poset.core import LabeledPoset, disjoint_union, labeled_chain

logger = logging.getLogger(__name__)


def shuffle_w(P: LabeledPoset, Q: LabeledPoset, s: int) -> LaurentPolynomial:
    """W_s of the disjoint union, computed from the parts."""
    a, b = P.p, Q.p
    gf_p, gf_q = descent_gf(P), descent_gf(Q)
    total = LaurentPolynomial.zero()
    for i in range(max(a, 1)):
        w_i = gf_p.w(i)
        if w_i.is_zero:
            continue
        for j in range(max(b, 1)):
            w_j = gf_q.w(j)
            if w_j.is_zero or s < i or s < j:
                continue
            term = q_binomial_poly(a + j - i, s - i) * q_binomial_poly(b + i - j, s - j)
            term = term * LaurentPolynomial.from_polynomial(w_i * w_j)
            total = total + term.shift((s - i) * (s - j))
    return total


def shuffle_identity(P: LabeledPoset, Q: LabeledPoset) -> CheckReport:
    """
    Compare the shuffle formula with the descent polynomial of the union for every s.

    Raises:
        LabelClash: If the label images intersect
    """
    union = descent_gf(disjoint_union(P, Q))
    report = CheckReport("shuffle", metadata={'p': P.p, 'q': Q.p})
    for s in range(max(P.p + Q.p, 1)):
        expected = LaurentPolynomial.from_polynomial(union.w(s))
        computed = shuffle_w(P, Q, s)
        report.add(IdentityCheck.of(
            "shuffle_formula", expected == computed,
            f"s={s}: union {expected.render()}; formula {computed.render()}", s,
        ))
    logger.info("shuffle: %d checks, passed=%s", len(report.checks), report.passed)
    return report


def chain_pair(size_a: int, kind_a: str, size_b: int, kind_b: str) -> Tuple[LabeledPoset, LabeledPoset]:
    """Two labeled chains with disjoint labels: 1..size_a and size_a+1..size_a+size_b."""
    return labeled_chain(size_a, kind_a), labeled_chain(size_b, kind_b, offset=size_a)
