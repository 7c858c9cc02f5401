"""
Order and Chain Polytopes
=========================

Lattice points of the m-th dilates of the order polytope (0 <= x <= m,
x_i >= x_j whenever i is below j) and of the chain polytope (x >= 0, sum over
every maximal chain <= m). Both counts equal Omega(P, omega; m + 1) for a
natural labeling.
"""

import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, Optional

from checks import CheckReport, IdentityCheck
from config import get_config
from errors import InvalidArgument, NotNatural, SizeLimit
from gf.descents import order_polynomial
from poset.core import LabeledPoset, LabelingKind, classify_labeling, maximal_chains

logger = logging.getLogger(__name__)


@dataclass
class PolytopeCounts:
    m: int
    order_count: int
    chain_count: int
    omega_value: int
    report: CheckReport = field(repr=False, default_factory=lambda: CheckReport("polytopes"))

    def to_dict(self) -> Dict[str, object]:
        return {
            'm': self.m,
            'order_count': self.order_count,
            'chain_count': self.chain_count,
            'omega': self.omega_value,
            'report': self.report.to_dict(),
        }


def order_polytope_points(P: LabeledPoset, m: int) -> int:
    count = 0
    for x in product(range(m + 1), repeat=P.p):
        if all(x[i - 1] >= x[j - 1] for i, j in P.relation):
            count += 1
    return count


def chain_polytope_points(P: LabeledPoset, m: int) -> int:
    chains = maximal_chains(P)
    count = 0
    for x in product(range(m + 1), repeat=P.p):
        if all(sum(x[i - 1] for i in chain) <= m for chain in chains):
            count += 1
    return count


def polytope_counts(
    P: LabeledPoset, m: int, limit_p: Optional[int] = None, limit_m: Optional[int] = None
) -> PolytopeCounts:
    """
    Lattice-point counts of both m-dilates, checked against Omega(m + 1) and each other.

    Raises:
        NotNatural: If omega is not a natural labeling
        SizeLimit: If p or m exceeds the configured limits
    """
    if classify_labeling(P) is not LabelingKind.NATURAL:
        raise NotNatural(f"polytope counts need a natural labeling, got {list(P.omega)}")
    limits = get_config().limits
    limit_p = limit_p if limit_p is not None else limits.polytope_p
    limit_m = limit_m if limit_m is not None else limits.polytope_m
    if m < 0:
        raise InvalidArgument(f"dilation must be nonnegative, got {m}")
    if P.p > limit_p or m > limit_m:
        raise SizeLimit(f"polytope count with p={P.p}, m={m} exceeds p<={limit_p}, m<={limit_m}")

    order = order_polytope_points(P, m)
    chain = chain_polytope_points(P, m)
    omega = order_polynomial(P)(m + 1)
    report = CheckReport("polytopes", metadata={'p': P.p, 'm': m})
    report.add(IdentityCheck.of("order_polytope_omega", order == omega, f"order {order}, Omega({m + 1}) = {omega}", m))
    report.add(IdentityCheck.of("order_equals_chain", order == chain, f"order {order}, chain {chain}", m))
    logger.info("polytopes p=%d m=%d: order=%d chain=%d", P.p, m, order, chain)
    return PolytopeCounts(m, order, chain, int(omega), report)
