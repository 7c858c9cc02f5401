"""
Young Chains and Kreweras Counts
================================

A Young chain from Y' to Y adds one cell at a time and stays a partition; it
is a standard tableau of the skew shape Y/Y'. A return is a step whose row
index is strictly smaller than the row of the step before it. With theta_r
the number of chains with r returns and w_r the number of multichains
Y' <= Z_1 <= ... <= Z_r <= Y,

    sum_r theta_r t^r / (1 - t)^(eta - eta' + 1) = sum_r w_r t^r

and w_r = det( C(y_i - y'_j + r, i - j + r) ).
"""

import logging
from dataclasses import dataclass
from itertools import product
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

import sympy as sp

from checks import CheckReport, IdentityCheck
from config import get_config
from errors import SizeLimit
from gf.macmahon import newcomb_polynomial
from poset.shapes import Shape

logger = logging.getLogger(__name__)

Partition = Tuple[int, ...]


@dataclass(frozen=True)
class KrewerasResult:
    """theta_0.., w_0..w_t_max and the identity report."""

    shape: Shape
    theta: Tuple[int, ...]
    w: Tuple[int, ...]
    report: CheckReport

    def to_dict(self) -> Dict[str, object]:
        return {
            'shape': self.shape.to_dict(),
            'theta': list(self.theta),
            'w': list(self.w),
            'report': self.report.to_dict(),
        }


def _checked_shape(Y: Sequence[int], Yp: Sequence[int], limit: Optional[int]) -> Shape:
    shape = Shape.of(Y, Yp)
    limit = limit if limit is not None else get_config().limits.kreweras_cells
    if shape.size > limit:
        raise SizeLimit(f"shape with {shape.size} cells exceeds the limit of {limit}")
    return shape


def young_chains(Y: Sequence[int], Yp: Sequence[int] = ()) -> List[Tuple[int, ...]]:
    """
    Every Young chain from Y' to Y as its sequence of augmented rows (1-based).

    Raises:
        ShapeError: If Y' is not contained in Y
    """
    shape = Shape.of(Y, Yp)
    target = shape.outer
    current = list(shape.inner)
    rows: List[int] = []
    chains: List[Tuple[int, ...]] = []

    def extend() -> None:
        if len(rows) == shape.size:
            chains.append(tuple(rows))
            return
        for i in range(shape.height):
            if current[i] < target[i] and (i == 0 or current[i - 1] > current[i]):
                current[i] += 1
                rows.append(i + 1)
                extend()
                rows.pop()
                current[i] -= 1

    extend()
    return chains


def count_returns(rows: Sequence[int]) -> int:
    return sum(1 for a, b in zip(rows, rows[1:]) if b < a)


def theta(Y: Sequence[int], Yp: Sequence[int] = ()) -> Tuple[int, ...]:
    """theta_r for r = 0 .. the largest return count."""
    counts: Dict[int, int] = {}
    for chain in young_chains(Y, Yp):
        r = count_returns(chain)
        counts[r] = counts.get(r, 0) + 1
    top = max(counts, default=0)
    return tuple(counts.get(r, 0) for r in range(top + 1))


def _path_binomial(n: int, k: int) -> int:
    """Lattice-path count: zero unless 0 <= k <= n."""
    return comb(n, k) if n >= 0 and k >= 0 else 0


def determinant_w(shape: Shape, r: int) -> int:
    """w_r as an exact integer determinant."""
    h = shape.height
    if h == 0:
        return 1
    y, yp = shape.outer, shape.inner
    matrix = sp.Matrix(h, h, lambda i, j: _path_binomial(y[i] - yp[j] + r, i - j + r))
    return int(matrix.det(method="bareiss"))


def _partitions_between(shape: Shape) -> List[Partition]:
    ranges = [range(low, high + 1) for low, high in zip(shape.inner, shape.outer)]
    return [z for z in product(*ranges) if all(a >= b for a, b in zip(z, z[1:]))]


def multichain_count(Y: Sequence[int], Yp: Sequence[int], r: int) -> int:
    """Brute count of multichains Y' <= Z_1 <= ... <= Z_r <= Y."""
    if r == 0:
        return 1
    between = _partitions_between(Shape.of(Y, Yp))
    counts = {z: 1 for z in between}
    for _ in range(r - 1):
        counts = {
            z: sum(c for u, c in counts.items() if all(a <= b for a, b in zip(u, z)))
            for z in between
        }
    return sum(counts.values())


def kreweras(
    Y: Sequence[int],
    Yp: Sequence[int] = (),
    t_max: int = 10,
    brute_max: int = 5,
    limit: Optional[int] = None,
) -> KrewerasResult:
    """
    theta and w for Y/Y', with the series identity checked to t^t_max and the
    determinant checked against multichain counts for r <= brute_max.

    Raises:
        ShapeError: If Y' is not contained in Y
        SizeLimit: If the shape has more cells than the configured limit
    """
    shape = _checked_shape(Y, Yp, limit)
    thetas = theta(shape.outer, shape.inner)
    ws = tuple(determinant_w(shape, r) for r in range(t_max + 1))
    report = CheckReport("kreweras", metadata={'shape': shape.to_dict(), 't_max': t_max})
    m = shape.size
    for r in range(t_max + 1):
        series = sum(th * comb(r - k + m, m) for k, th in enumerate(thetas) if k <= r)
        report.add(IdentityCheck.of(
            "kreweras_series", series == ws[r], f"t^{r}: theta side {series}, det {ws[r]}", r,
        ))
    for r in range(min(brute_max, t_max) + 1):
        brute = multichain_count(shape.outer, shape.inner, r)
        report.add(IdentityCheck.of(
            "kreweras_multichains", brute == ws[r], f"r={r}: det {ws[r]}, multichains {brute}", r,
        ))
    logger.info(
        "kreweras %s/%s: theta=%s passed=%s", list(shape.outer), list(shape.inner), list(thetas), report.passed
    )
    return KrewerasResult(shape, thetas, ws, report)


# =============================================================================
# Simon Newcomb's problem
# =============================================================================

def newcomb_shape(parts: Sequence[int]) -> Shape:
    """
    Skew shape whose rows hold parts[0], parts[1], ... cells with no two rows
    sharing a column; its Young chains are the words of the multiset.
    """
    outer: List[int] = []
    inner: List[int] = []
    below = 0
    for part in reversed(parts):
        inner.append(below)
        below += part
        outer.append(below)
    return Shape.of(list(reversed(outer)), list(reversed(inner)))


def newcomb_correspondence(parts: Sequence[int]) -> CheckReport:
    """theta of the multiset shape against the descent counts of the multiset."""
    shape = newcomb_shape(parts)
    thetas = theta(shape.outer, shape.inner)
    descents = newcomb_polynomial(parts).coeffs
    report = CheckReport("newcomb_shape", metadata={'parts': list(parts), 'shape': shape.to_dict()})
    report.add(IdentityCheck.of(
        "newcomb_returns", tuple(thetas) == tuple(descents),
        f"theta {list(thetas)}, descents {list(descents)}",
    ))
    return report
