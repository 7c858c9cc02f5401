"""
Oracle Package
==============

Brute-force enumeration of (P, omega)-partitions and the classical bijections,
used as ground truth for every closed form.
"""

from oracle.bijections import (
    canonical_extension,
    extension_fibers,
    knuth_conditions_hold,
    knuth_pair,
    knuth_unpair,
)
from oracle.enumeration import (
    Assignment,
    chain_solutions,
    enriched_rank,
    enumerate_enriched,
    enumerate_ppartitions,
    is_enriched,
    is_ppartition,
    topological_order,
)

__all__ = [
    "Assignment",
    "canonical_extension",
    "chain_solutions",
    "enriched_rank",
    "enumerate_enriched",
    "enumerate_ppartitions",
    "extension_fibers",
    "is_enriched",
    "is_ppartition",
    "knuth_conditions_hold",
    "knuth_pair",
    "knuth_unpair",
    "topological_order",
]
