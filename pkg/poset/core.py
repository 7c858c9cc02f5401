"""
Labeled Posets
==============

Finite strict partial orders on elements 1..p with an integer labeling omega.
Incomparable elements must carry distinct labels; equal labels on comparable
elements behave as ascents. Every value is immutable after construction.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from functools import cached_property, lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

import networkx as nx

from config import get_config
from errors import BudgetExceeded, CycleError, ImproperLabeling, LabelClash, LabelError, PosetError

logger = logging.getLogger(__name__)


class LabelingKind(Enum):
    """How a labeling behaves along the cover relations."""

    NATURAL = "natural"
    STRICT = "strict"
    MIXED = "mixed"


@dataclass(frozen=True)
class LinearExtension:
    """A total order refining the poset, read as its word of labels."""

    word: Tuple[int, ...]
    elements: Tuple[int, ...]

    def render(self) -> str:
        return format_word(self.word)


@dataclass(frozen=True)
class OrderIdeal:
    """A downward-closed set of elements."""

    members: FrozenSet[int]

    def sorted_members(self) -> Tuple[int, ...]:
        return tuple(sorted(self.members))


def format_word(word: Sequence[int]) -> str:
    """Labels joined directly when all are single digits, else space-separated."""
    if all(0 <= w < 10 for w in word):
        return "".join(str(w) for w in word)
    return " ".join(str(w) for w in word)


@dataclass(frozen=True)
class LabeledPoset:
    """
    Poset on 1..p with labeling omega; omega[i - 1] is the label of element i.

    relation holds every pair (x, y) with x strictly below y and must be
    transitively closed.
    """

    p: int
    relation: FrozenSet[Tuple[int, int]]
    omega: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.p < 0:
            raise PosetError(f"element count must be nonnegative, got {self.p}")
        if len(self.omega) != self.p:
            raise LabelError(f"expected {self.p} labels, got {len(self.omega)}")
        if any(not isinstance(w, int) or w < 1 for w in self.omega):
            raise LabelError(f"labels must be positive integers: {list(self.omega)}")
        for x, y in self.relation:
            if not (1 <= x <= self.p and 1 <= y <= self.p):
                raise PosetError(f"relation pair ({x}, {y}) outside 1..{self.p}")
            if x == y or (y, x) in self.relation:
                raise CycleError(f"relation is not antisymmetric at ({x}, {y})")
        for x, y in self.relation:
            for y2, z in self.relation:
                if y == y2 and (x, z) not in self.relation:
                    raise PosetError(f"relation is not transitively closed: missing ({x}, {z})")
        for x in range(1, self.p + 1):
            for y in range(x + 1, self.p + 1):
                if self.label(x) == self.label(y) and not self.comparable(x, y):
                    raise LabelError(f"incomparable elements {x} and {y} share label {self.label(x)}")

    @property
    def elements(self) -> range:
        return range(1, self.p + 1)

    def label(self, x: int) -> int:
        return self.omega[x - 1]

    def precedes(self, x: int, y: int) -> bool:
        return (x, y) in self.relation

    def comparable(self, x: int, y: int) -> bool:
        return (x, y) in self.relation or (y, x) in self.relation

    @property
    def is_proper(self) -> bool:
        """True when omega is a bijection onto 1..p."""
        return sorted(self.omega) == list(range(1, self.p + 1))

    @cached_property
    def graph(self) -> nx.DiGraph:
        """Comparability digraph (edge x -> y for every x below y)."""
        g = nx.DiGraph()
        g.add_nodes_from(self.elements)
        g.add_edges_from(self.relation)
        return g

    @cached_property
    def hasse(self) -> nx.DiGraph:
        """Cover digraph."""
        reduced = nx.transitive_reduction(self.graph)
        reduced.add_nodes_from(self.elements)
        return reduced

    @cached_property
    def covers(self) -> Tuple[Tuple[int, int], ...]:
        return tuple(sorted(self.hasse.edges()))

    @cached_property
    def down_sets(self) -> Dict[int, FrozenSet[int]]:
        """Strict down-set of every element."""
        below: Dict[int, Set[int]] = {x: set() for x in self.elements}
        for x, y in self.relation:
            below[y].add(x)
        return {x: frozenset(s) for x, s in below.items()}

    def with_labels(self, omega: Sequence[int]) -> LabeledPoset:
        return LabeledPoset(self.p, self.relation, tuple(omega))

    def to_dict(self) -> Dict[str, object]:
        """Poset file form: p, covers and labels."""
        return {
            'p': self.p,
            'covers': [list(c) for c in self.covers],
            'labels': list(self.omega),
        }


# =============================================================================
# Construction
# =============================================================================

def poset_from_covers(p: int, covers: Iterable[Sequence[int]], labels: Optional[Sequence[int]] = None) -> LabeledPoset:
    """
    Build a labeled poset from cover pairs; the relation is their transitive closure.

    Args:
        p: Element count
        covers: Pairs (x, y) with x below y
        labels: Labels of elements 1..p (natural 1..p when omitted)

    Raises:
        CycleError: If the covers induce a directed cycle
        LabelError: If incomparable elements share a label
        PosetError: If a pair references an element outside 1..p
    """
    if p < 0:
        raise PosetError(f"element count must be nonnegative, got {p}")
    raw = [tuple(c) for c in covers]
    malformed = [c for c in raw if len(c) != 2]
    if malformed:
        raise PosetError(f"covers must be pairs: {malformed}")
    pairs = [(int(x), int(y)) for x, y in raw]
    out_of_range = [(x, y) for x, y in pairs if not (1 <= x <= p and 1 <= y <= p)]
    if out_of_range:
        raise PosetError(f"covers reference elements outside 1..{p}: {out_of_range}")

    g = nx.DiGraph()
    g.add_nodes_from(range(1, p + 1))
    g.add_edges_from(pairs)
    try:
        witness = nx.find_cycle(g)
    except nx.NetworkXNoCycle:
        witness = []
    if witness:
        raise CycleError(f"covers induce a cycle through {[x for x, _ in witness]}")
    try:
        closure = nx.transitive_closure_dag(g)
    except nx.NetworkXUnfeasible as e:
        raise CycleError(str(e)) from e
    omega = tuple(labels) if labels is not None else tuple(range(1, p + 1))
    return LabeledPoset(p, frozenset(closure.edges()), omega)


def empty_poset() -> LabeledPoset:
    return LabeledPoset(0, frozenset(), ())


def antichain(p: int, labels: Optional[Sequence[int]] = None) -> LabeledPoset:
    return poset_from_covers(p, [], labels)


def labeled_chain(size: int, kind: str = "natural", offset: int = 0) -> LabeledPoset:
    """
    Chain 1 < 2 < ... < size.

    kind "natural" labels offset+1..offset+size upward, "strict" downward,
    "constant" puts offset+1 on every element.
    """
    if kind == "natural":
        labels = [offset + i for i in range(1, size + 1)]
    elif kind == "strict":
        labels = [offset + size + 1 - i for i in range(1, size + 1)]
    elif kind == "constant":
        labels = [offset + 1] * size
    else:
        raise LabelError(f"unknown chain labeling kind: {kind}")
    return poset_from_covers(size, [(i, i + 1) for i in range(1, size)], labels)


def chain_poset(word: Sequence[int]) -> LabeledPoset:
    """The chain whose only linear extension reads `word`."""
    return poset_from_covers(len(word), [(i, i + 1) for i in range(1, len(word))], list(word))


# =============================================================================
# Linear extensions and ideals
# =============================================================================

def count_linear_extensions(P: LabeledPoset) -> int:
    """Number of linear extensions, by dynamic programming over order ideals."""
    above = {x: sum(1 << (y - 1) for y in P.elements if P.precedes(x, y)) for x in P.elements}

    @lru_cache(maxsize=None)
    def count(mask: int) -> int:
        if mask == 0:
            return 1
        total = 0
        for x in P.elements:
            bit = 1 << (x - 1)
            # x can come last when it lies in mask and nothing above it does
            if mask & bit and not (above[x] & mask):
                total += count(mask ^ bit)
        return total

    return count((1 << P.p) - 1)


def linear_extensions(P: LabeledPoset, limit: Optional[int] = None) -> List[LinearExtension]:
    """
    All linear extensions as label words, sorted lexicographically.

    Args:
        P: Labeled poset
        limit: Maximum extension count (configured budget when omitted)

    Raises:
        BudgetExceeded: If the poset has more extensions than allowed
    """
    if P.p == 0:
        return [LinearExtension((), ())]
    if limit is None:
        limit = get_config().budget.max_linear_extensions
    total = count_linear_extensions(P)
    if total > limit:
        raise BudgetExceeded(f"{total} linear extensions exceed the budget of {limit}")
    logger.debug("Enumerating %d linear extensions of a %d-element poset", total, P.p)

    extensions = [
        LinearExtension(tuple(P.label(x) for x in order), tuple(order))
        for order in nx.all_topological_sorts(P.hasse)
    ]
    return sorted(extensions, key=lambda e: (e.word, e.elements))


def order_ideals(P: LabeledPoset) -> List[OrderIdeal]:
    """All order ideals, sorted by size then lexicographically."""
    ideals = []
    for chain in nx.antichains(P.graph):
        members = set(chain)
        for y in chain:
            members |= P.down_sets[y]
        ideals.append(OrderIdeal(frozenset(members)))
    return sorted(ideals, key=lambda i: (len(i.members), i.sorted_members()))


def maximal_chains(P: LabeledPoset) -> List[Tuple[int, ...]]:
    """Every maximal chain, as elements from bottom to top."""
    chains: List[Tuple[int, ...]] = []
    hasse = P.hasse

    def extend(path: List[int]) -> None:
        successors = sorted(hasse.successors(path[-1]))
        if not successors:
            chains.append(tuple(path))
            return
        for y in successors:
            extend(path + [y])

    for x in sorted(P.elements):
        if hasse.in_degree(x) == 0:
            extend([x])
    return chains


def graded_chain_length(P: LabeledPoset) -> Optional[int]:
    """Common edge count of all maximal chains, or None if they differ."""
    if P.p == 0:
        return 0
    lengths = {len(chain) - 1 for chain in maximal_chains(P)}
    return lengths.pop() if len(lengths) == 1 else None


def ideal_multichain_count(P: LabeledPoset, m: int) -> int:
    """Number of multichains of order ideals, empty = I_0 <= I_1 <= ... <= I_m = P."""
    ideals = [i.members for i in order_ideals(P)]
    full = frozenset(P.elements)
    counts = {ideal: int(not ideal) for ideal in ideals}
    for _ in range(m):
        counts = {upper: sum(c for lower, c in counts.items() if lower <= upper) for upper in ideals}
    return counts.get(full, 0)


# =============================================================================
# Labelings
# =============================================================================

def complement_labeling(P: LabeledPoset) -> LabeledPoset:
    """
    Same relation with labels p + 1 - omega(i).

    Raises:
        ImproperLabeling: If omega is not a bijection onto 1..p
    """
    if not P.is_proper:
        raise ImproperLabeling(f"complement needs labels 1..{P.p}, got {list(P.omega)}")
    return P.with_labels([P.p + 1 - w for w in P.omega])


def classify_labeling(P: LabeledPoset) -> LabelingKind:
    """Natural when labels weakly increase along every cover, strict when they decrease."""
    ascents = [P.label(x) <= P.label(y) for x, y in P.covers]
    if all(ascents):
        return LabelingKind.NATURAL
    if not any(ascents):
        return LabelingKind.STRICT
    return LabelingKind.MIXED


def labelings_equivalent(P: LabeledPoset, omega1: Sequence[int], omega2: Sequence[int]) -> bool:
    """True when both labelings descend on exactly the same covers."""
    first, second = P.with_labels(omega1), P.with_labels(omega2)
    return all(
        (first.label(x) > first.label(y)) == (second.label(x) > second.label(y))
        for x, y in P.covers
    )


def disjoint_union(A: LabeledPoset, B: LabeledPoset) -> LabeledPoset:
    """
    Side-by-side union; B's elements are renumbered after A's.

    Raises:
        LabelClash: If the label images intersect
    """
    shared = set(A.omega) & set(B.omega)
    if shared:
        raise LabelClash(f"labels {sorted(shared)} appear in both posets")
    shift = A.p
    relation = A.relation | {(x + shift, y + shift) for x, y in B.relation}
    return LabeledPoset(A.p + B.p, frozenset(relation), A.omega + B.omega)
