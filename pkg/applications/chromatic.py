"""
Chromatic Polynomials
=====================

A proper colouring with lambda colours orients every edge from the larger
colour to the smaller one, producing an acyclic orientation O. Colourings
inducing O are exactly the strict P_O-partitions with parts below lambda, so

    chi(lambda) = sum over acyclic O of Omega(P_O, strict; lambda)

and (-1)^n chi(-1) counts the acyclic orientations.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import product
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from algebra.polynomials import RationalPolynomial
from checks import CheckReport, IdentityCheck
from config import get_config
from errors import GraphError, SizeLimit
from gf.descents import order_polynomial
from poset.core import LabeledPoset, poset_from_covers

logger = logging.getLogger(__name__)

Orientation = Tuple[Tuple[int, int], ...]


@dataclass(frozen=True)
class SimpleGraph:
    """Vertices 1..n; edges stored as (u, v) with u < v."""

    n: int
    edges: FrozenSet[Tuple[int, int]]

    @classmethod
    def of(cls, n: int, edges: Iterable[Sequence[int]]) -> SimpleGraph:
        """
        Raises:
            GraphError: On loops, repeated edges or vertices outside 1..n
        """
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        seen = set()
        for edge in edges:
            u, v = int(edge[0]), int(edge[1])
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphError(f"edge ({u}, {v}) outside 1..{n}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphError(f"repeated edge {key}")
            seen.add(key)
        return cls(n, frozenset(seen))

    @classmethod
    def complete(cls, n: int) -> SimpleGraph:
        return cls.of(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)])

    @classmethod
    def path(cls, n: int) -> SimpleGraph:
        return cls.of(n, [(i, i + 1) for i in range(1, n)])

    def sorted_edges(self) -> List[Tuple[int, int]]:
        return sorted(self.edges)

    def to_dict(self) -> dict:
        return {'n': self.n, 'edges': [list(e) for e in self.sorted_edges()]}


def _check_size(G: SimpleGraph, limit: Optional[int]) -> None:
    limit = limit if limit is not None else get_config().limits.chromatic_vertices
    if G.n > limit:
        raise SizeLimit(f"graph with {G.n} vertices exceeds the limit of {limit}")


def acyclic_orientations(G: SimpleGraph) -> List[Orientation]:
    """Every acyclic choice of edge directions, each edge written (tail, head)."""
    edges = G.sorted_edges()
    found: List[Orientation] = []
    for flips in product((False, True), repeat=len(edges)):
        oriented = tuple((v, u) if flip else (u, v) for (u, v), flip in zip(edges, flips))
        g = nx.DiGraph()
        g.add_nodes_from(range(1, G.n + 1))
        g.add_edges_from(oriented)
        if nx.is_directed_acyclic_graph(g):
            found.append(oriented)
    return found


def orientation_poset(G: SimpleGraph, orientation: Orientation) -> LabeledPoset:
    """P_O with a strict labeling: labels decrease along a topological order."""
    g = nx.DiGraph()
    g.add_nodes_from(range(1, G.n + 1))
    g.add_edges_from(orientation)
    order = list(nx.lexicographical_topological_sort(g))
    labels = [0] * G.n
    for index, vertex in enumerate(order):
        labels[vertex - 1] = G.n - index
    return poset_from_covers(G.n, orientation, labels)


def chromatic_polynomial(G: SimpleGraph, limit: Optional[int] = None) -> RationalPolynomial:
    """
    chi(lambda) as the orientation sum of strict order polynomials.

    Raises:
        SizeLimit: If the graph has more vertices than the configured limit
    """
    _check_size(G, limit)
    total = RationalPolynomial()
    orientations = acyclic_orientations(G)
    for orientation in orientations:
        total = total + order_polynomial(orientation_poset(G, orientation))
    logger.info("chromatic: %d vertices, %d acyclic orientations", G.n, len(orientations))
    return total


def proper_coloring_count(G: SimpleGraph, colors: int) -> int:
    """Brute count of proper colourings with the given number of colours."""
    if colors <= 0:
        return 1 if G.n == 0 else 0
    count = 0
    for coloring in product(range(colors), repeat=G.n):
        if all(coloring[u - 1] != coloring[v - 1] for u, v in G.edges):
            count += 1
    return count


def chromatic_check(G: SimpleGraph, max_colors: int = 4) -> Tuple[RationalPolynomial, CheckReport]:
    """
    chi against the colouring oracle for 0..max_colors, and the acyclic-orientation reciprocity.

    Raises:
        SizeLimit: If the graph has more vertices than the configured limit
    """
    chi = chromatic_polynomial(G)
    report = CheckReport("chromatic", metadata={'n': G.n, 'edges': len(G.edges)})
    for colors in range(max_colors + 1):
        brute = proper_coloring_count(G, colors)
        report.add(IdentityCheck.of(
            "chromatic_coloring_count", chi(colors) == brute,
            f"lambda={colors}: chi={chi(colors)}, colourings={brute}", colors,
        ))
    orientations = len(acyclic_orientations(G))
    signed = (-1) ** G.n * chi(-1)
    report.add(IdentityCheck.of(
        "chromatic_reciprocity", signed == orientations,
        f"(-1)^{G.n} chi(-1) = {signed}, acyclic orientations = {orientations}",
    ))
    return chi, report
