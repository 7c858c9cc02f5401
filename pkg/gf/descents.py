"""
Descent Generating Functions
============================

The closed forms driven by linear extensions: the joint descent/major-index
polynomial, U_m and U, the order polynomial, and the alpha/beta descent-set
counts.

For a labeled poset with p elements:

    sum over m of U_m t^m = sum_pi t^des(pi) q^maj(pi) / (t; q)_{p+1}
    U_m = sum_pi q^maj(pi) [p + m - des(pi) choose p]_q
    U   = sum_pi q^maj(pi) / (q; q)_p
    Omega(m) = sum_pi C(m - 1 - des(pi) + p, p)
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, List, Tuple

from algebra.polynomials import BiPolynomial, IntPolynomial, LaurentPolynomial, RationalPolynomial
from algebra.qseries import QRational, q_binomial_poly, q_pochhammer
from checks import CheckReport, IdentityCheck
from poset.core import LabeledPoset, LinearExtension, linear_extensions, order_ideals
from stats.permutations import descent_statistics

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DescentGF:
    """sum over linear extensions of t^des q^maj."""

    poly: BiPolynomial
    p: int

    @property
    def count(self) -> int:
        """Number of linear extensions."""
        return self.poly.total()

    def w(self, s: int) -> IntPolynomial:
        """W_s: sum of q^maj over extensions with exactly s descents."""
        return self.poly.t_slice(s)

    def w_polynomial(self) -> IntPolynomial:
        """sum of t^des (q = 1)."""
        return self.poly.at_q_one()

    def maj_polynomial(self) -> IntPolynomial:
        """sum of q^maj (t = 1)."""
        return self.poly.at_t_one()


def _statistics(P: LabeledPoset) -> List[Tuple[LinearExtension, int, int]]:
    rows = []
    for ext in linear_extensions(P):
        stats = descent_statistics(ext.word)
        rows.append((ext, stats.des, stats.maj))
    return rows


def descent_gf(P: LabeledPoset) -> DescentGF:
    terms: Dict[Tuple[int, int], int] = {}
    for _, des, maj in _statistics(P):
        terms[(des, maj)] = terms.get((des, maj), 0) + 1
    return DescentGF(BiPolynomial(terms), P.p)


def u_m_laurent(P: LabeledPoset, m: int) -> LaurentPolynomial:
    """U_m for any integer m; negative m uses the negative-argument q-binomials."""
    total = LaurentPolynomial.zero()
    for (des, maj), count in descent_gf(P).poly.terms.items():
        total = total + q_binomial_poly(P.p + m - des, P.p).shift(maj) * count
    return total


def u_m(P: LabeledPoset, m: int) -> IntPolynomial:
    """Generating function by sum of the partitions with parts in 0..m."""
    if m < 0:
        return IntPolynomial()
    return u_m_laurent(P, m).to_polynomial()


def u_gf(P: LabeledPoset) -> QRational:
    """U(P, omega; q) = sum_pi q^maj(pi) / ((1-q)...(1-q^p))."""
    numerator = BiPolynomial.from_q_polynomial(descent_gf(P).maj_polynomial())
    return QRational.build(numerator, q_pochhammer((0, 1), P.p))


def order_polynomial(P: LabeledPoset) -> RationalPolynomial:
    """Omega(P, omega; m), the number of partitions with parts below m."""
    total = RationalPolynomial()
    for des, count in enumerate(descent_gf(P).w_polynomial().coeffs):
        if count:
            total = total + RationalPolynomial.binomial(P.p - 1 - des, P.p) * count
    return total


# =============================================================================
# Descent-set counts
# =============================================================================

def _subsets(p: int) -> List[FrozenSet[int]]:
    positions = range(1, p)
    return [frozenset(c) for k in range(p) for c in combinations(positions, k)] if p else [frozenset()]


def beta_table(P: LabeledPoset) -> Dict[FrozenSet[int], int]:
    """beta(S): extensions with descent set exactly S, for every S in [p-1]."""
    table = {s: 0 for s in _subsets(P.p)}
    for ext, _, _ in _statistics(P):
        table[descent_statistics(ext.word).descent_set] += 1
    return table


def alpha_beta(P: LabeledPoset) -> Dict[FrozenSet[int], Tuple[int, int]]:
    """(alpha(S), beta(S)) with alpha(S) counting extensions whose descent set lies in S."""
    beta = beta_table(P)
    return {s: (sum(b for t, b in beta.items() if t <= s), beta[s]) for s in beta}


def compatible_chain_count(P: LabeledPoset, sizes: FrozenSet[int]) -> int:
    """
    Ideal chains empty < I_1 < ... < P with |I_i| running through sizes whose
    blocks carry an order-preserving restriction of omega.
    """
    by_size: Dict[int, List[FrozenSet[int]]] = {}
    for ideal in order_ideals(P):
        by_size.setdefault(len(ideal.members), []).append(ideal.members)

    def compatible(block: FrozenSet[int]) -> bool:
        return all(P.label(x) <= P.label(y) for x, y in P.relation if x in block and y in block)

    levels = [0] + sorted(sizes) + [P.p]
    counts = {frozenset(): 1}
    for size in levels[1:]:
        counts = {
            upper: sum(c for lower, c in counts.items() if lower <= upper and compatible(upper - lower))
            for upper in by_size.get(size, [])
        }
    return counts.get(frozenset(P.elements), 0)


def alpha_beta_check(P: LabeledPoset) -> CheckReport:
    """Inclusion-exclusion and the ideal-chain reading of alpha, for every S."""
    report = CheckReport("alpha_beta", metadata={'p': P.p})
    table = alpha_beta(P)
    for s, (alpha, beta) in sorted(table.items(), key=lambda item: (len(item[0]), sorted(item[0]))):
        inverted = sum((-1) ** len(s - t) * table[t][0] for t in table if t <= s)
        report.add(IdentityCheck.of("beta_inclusion_exclusion", inverted == beta, f"S={sorted(s)}", sorted(s)))
        chains = compatible_chain_count(P, s)
        report.add(IdentityCheck.of(
            "alpha_ideal_chains", chains == alpha,
            f"S={sorted(s)}: alpha={alpha}, chains={chains}", sorted(s),
        ))
    logger.info("alpha_beta: %d checks, passed=%s", len(report.checks), report.passed)
    return report
