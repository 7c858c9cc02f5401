"""
Bijections
==========

The sorting map sending a (P, omega)-partition to the unique linear extension
whose chain solution set contains it, and the pairing of a partition with its
sequence of nonzero parts and their elements.
"""

import logging
from typing import Dict, List, Sequence, Tuple

from errors import InvalidAssignment
from oracle.enumeration import Assignment, enumerate_ppartitions, is_ppartition, topological_order
from poset.core import LabeledPoset, LinearExtension

logger = logging.getLogger(__name__)


def _sorted_elements(sigma: Assignment, P: LabeledPoset, elements: Sequence[int]) -> List[int]:
    rank = {x: i for i, x in enumerate(topological_order(P))}
    return sorted(elements, key=lambda x: (-sigma(x), P.label(x), rank[x]))


def _require_valid(sigma: Assignment, P: LabeledPoset) -> None:
    if not is_ppartition(sigma.values, P):
        raise InvalidAssignment(f"{list(sigma.values)} is not a (P, omega)-partition")


def canonical_extension(sigma: Assignment, P: LabeledPoset) -> LinearExtension:
    """
    Sort elements by decreasing value, ties by increasing label.

    Raises:
        InvalidAssignment: If sigma is not a (P, omega)-partition
    """
    _require_valid(sigma, P)
    order = _sorted_elements(sigma, P, list(P.elements))
    return LinearExtension(tuple(P.label(x) for x in order), tuple(order))


def extension_fibers(P: LabeledPoset, m: int) -> Dict[LinearExtension, List[Assignment]]:
    """Partitions with parts in 0..m grouped by their canonical extension."""
    fibers: Dict[LinearExtension, List[Assignment]] = {}
    for sigma in enumerate_ppartitions(P, m):
        fibers.setdefault(canonical_extension(sigma, P), []).append(sigma)
    logger.debug("%d fibers for m=%d", len(fibers), m)
    return fibers


def knuth_pair(sigma: Assignment, P: LabeledPoset) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """
    Nonzero parts in weakly decreasing order, with their elements.

    Raises:
        InvalidAssignment: If sigma is not a (P, omega)-partition
    """
    _require_valid(sigma, P)
    support = [x for x in P.elements if sigma(x) > 0]
    order = _sorted_elements(sigma, P, support)
    return tuple(sigma(x) for x in order), tuple(order)


def knuth_conditions_hold(n_seq: Sequence[int], x_seq: Sequence[int], P: LabeledPoset) -> bool:
    """
    Check a pair: parts positive and weakly decreasing, elements distinct, every
    element below x_j listed before it, and a label descent between neighbours
    forcing a strict decrease of parts.
    """
    if len(n_seq) != len(x_seq) or len(set(x_seq)) != len(x_seq):
        return False
    if any(n <= 0 for n in n_seq) or any(a < b for a, b in zip(n_seq, n_seq[1:])):
        return False
    if any(not 1 <= x <= P.p for x in x_seq):
        return False
    for j, x in enumerate(x_seq):
        if not P.down_sets[x] <= set(x_seq[:j]):
            return False
    for i in range(len(x_seq) - 1):
        if P.label(x_seq[i]) > P.label(x_seq[i + 1]) and not n_seq[i] > n_seq[i + 1]:
            return False
    return True


def knuth_unpair(n_seq: Sequence[int], x_seq: Sequence[int], P: LabeledPoset) -> Assignment:
    """
    Rebuild the partition of a pair; elements not listed get 0.

    Raises:
        InvalidAssignment: If the pair violates the pairing conditions
    """
    if not knuth_conditions_hold(n_seq, x_seq, P):
        raise InvalidAssignment(f"({list(n_seq)}, {list(x_seq)}) is not a valid pair")
    values = [0] * P.p
    for n, x in zip(n_seq, x_seq):
        values[x - 1] = n
    return Assignment(tuple(values))
