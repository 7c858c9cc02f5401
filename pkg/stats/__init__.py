"""
Statistics Package
==================

Descent and peak statistics on words and signed permutations.
"""

from stats.permutations import (
    DescentStatistics,
    SignedPermutation,
    all_permutations,
    complement_word,
    compose,
    descent_set,
    descent_statistics,
    inverse,
    is_lattice_permutation,
    major_index,
    peak_set,
    signed_descent_set,
    signed_permutations,
    type_b_descent_polynomial,
)

__all__ = [
    "DescentStatistics",
    "SignedPermutation",
    "all_permutations",
    "complement_word",
    "compose",
    "descent_set",
    "descent_statistics",
    "inverse",
    "is_lattice_permutation",
    "major_index",
    "peak_set",
    "signed_descent_set",
    "signed_permutations",
    "type_b_descent_polynomial",
]
