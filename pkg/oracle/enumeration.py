"""
Brute-Force Enumeration
=======================

Independent enumeration of (P, omega)-partitions, chain solution sets and
enriched (P, omega)-partitions. These are the ground truth the closed forms
are checked against.

A (P, omega)-partition is a map sigma from elements to nonnegative integers with,
for every x below y:
  (i)  sigma(x) >= sigma(y)
  (ii) sigma(x) > sigma(y) whenever omega(x) > omega(y)
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import networkx as nx

from config import get_config
from errors import BudgetExceeded
from poset.core import LabeledPoset, LinearExtension

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Assignment:
    """Map element -> value; values[x - 1] is the value at element x."""

    values: Tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.values[x - 1]

    @property
    def total(self) -> int:
        return sum(self.values)

    @property
    def largest(self) -> int:
        return max(self.values, default=0)


def topological_order(P: LabeledPoset) -> List[int]:
    """Elements in a deterministic order with every element after those below it."""
    return list(nx.lexicographical_topological_sort(P.hasse))


def is_ppartition(values: Sequence[int], P: LabeledPoset) -> bool:
    """Check conditions (i) and (ii) on every relation pair."""
    if len(values) != P.p or any(v < 0 for v in values):
        return False
    for x, y in P.relation:
        a, b = values[x - 1], values[y - 1]
        if a < b or (a == b and P.label(x) > P.label(y)):
            return False
    return True


def _check_budget(candidates: int, budget: Optional[int], what: str) -> None:
    limit = budget if budget is not None else get_config().budget.max_candidate_maps
    if candidates > limit:
        raise BudgetExceeded(f"{what}: {candidates} candidate maps exceed the budget of {limit}")
    logger.debug("%s: %d candidate maps (budget %d)", what, candidates, limit)


def _backtrack(
    P: LabeledPoset,
    choices: Callable[[int, Dict[int, int]], Sequence[int]],
) -> List[Tuple[int, ...]]:
    order = topological_order(P)
    results: List[Tuple[int, ...]] = []
    assigned: Dict[int, int] = {}

    def extend(k: int) -> None:
        if k == len(order):
            results.append(tuple(assigned[x] for x in P.elements))
            return
        x = order[k]
        for value in choices(x, assigned):
            assigned[x] = value
            extend(k + 1)
        assigned.pop(x, None)

    extend(0)
    return results


def enumerate_ppartitions(P: LabeledPoset, m: int, budget: Optional[int] = None) -> List[Assignment]:
    """
    All (P, omega)-partitions with parts in 0..m, in lexicographic value order.

    Raises:
        BudgetExceeded: If p * (m+1)^p exceeds the candidate budget
    """
    if m < 0:
        return []
    _check_budget(P.p * (m + 1) ** P.p, budget, "enumerate_ppartitions")

    def choices(x: int, assigned: Dict[int, int]) -> range:
        upper = m
        for y in P.down_sets[x]:
            upper = min(upper, assigned[y] - (1 if P.label(y) > P.label(x) else 0))
        return range(upper + 1)

    return sorted(Assignment(v) for v in _backtrack(P, choices))


def chain_solutions(extension: LinearExtension, P: LabeledPoset, m: int) -> List[Assignment]:
    """
    Solutions in 0..m of the chain inequalities of one extension.

    sigma weakly decreases along the extension and strictly at its descents.
    """
    elements = extension.elements
    word = extension.word
    results: List[Assignment] = []
    values = [0] * P.p

    def extend(k: int, upper: int) -> None:
        if k == len(elements):
            results.append(Assignment(tuple(values)))
            return
        if k > 0 and word[k - 1] > word[k]:
            upper -= 1
        for v in range(upper + 1):
            values[elements[k] - 1] = v
            extend(k + 1, v)

    extend(0, m)
    return sorted(results)


# =============================================================================
# Enriched partitions
# =============================================================================

def enriched_rank(v: int) -> int:
    """Position of v in -1 < +1 < -2 < +2 < ..."""
    return 2 * abs(v) - (1 if v < 0 else 0)


def is_enriched(values: Sequence[int], P: LabeledPoset) -> bool:
    """Check the enriched conditions on every relation pair."""
    if len(values) != P.p or 0 in values:
        return False
    for x, y in P.relation:
        if not _enriched_pair_ok(values[x - 1], values[y - 1], P.label(x), P.label(y)):
            return False
    return True


def _enriched_pair_ok(low: int, high: int, low_label: int, high_label: int) -> bool:
    # low is the value below, high the value above
    if enriched_rank(low) < enriched_rank(high):
        return False
    if low == high:
        return low_label <= high_label if low > 0 else low_label > high_label
    return True


def enumerate_enriched(P: LabeledPoset, n: int, budget: Optional[int] = None) -> List[Assignment]:
    """
    All enriched (P, omega)-partitions with values in -n..-1, 1..n.

    Raises:
        BudgetExceeded: If (2n)^p exceeds the candidate budget
    """
    if n < 1:
        return [Assignment(())] if P.p == 0 else []
    _check_budget((2 * n) ** P.p, budget, "enumerate_enriched")
    values = sorted((v for k in range(1, n + 1) for v in (-k, k)), key=enriched_rank)

    def choices(x: int, assigned: Dict[int, int]) -> List[int]:
        return [
            v for v in values
            if all(_enriched_pair_ok(assigned[y], v, P.label(y), P.label(x)) for y in P.down_sets[x])
        ]

    return sorted(Assignment(v) for v in _backtrack(P, choices))
