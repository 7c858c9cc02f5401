"""
Poset Package
=============

Finite labeled posets, their linear extensions and order ideals, and the
cell posets of skew shapes.
"""

from poset.core import (
    LabeledPoset,
    LabelingKind,
    LinearExtension,
    OrderIdeal,
    antichain,
    chain_poset,
    classify_labeling,
    complement_labeling,
    count_linear_extensions,
    disjoint_union,
    empty_poset,
    format_word,
    graded_chain_length,
    ideal_multichain_count,
    labeled_chain,
    labelings_equivalent,
    linear_extensions,
    maximal_chains,
    order_ideals,
    poset_from_covers,
)
from poset.shapes import Shape, cell_poset, shape_to_poset

__all__ = [
    "LabeledPoset",
    "LabelingKind",
    "LinearExtension",
    "OrderIdeal",
    "Shape",
    "antichain",
    "cell_poset",
    "chain_poset",
    "classify_labeling",
    "complement_labeling",
    "count_linear_extensions",
    "disjoint_union",
    "empty_poset",
    "format_word",
    "graded_chain_length",
    "ideal_multichain_count",
    "labeled_chain",
    "labelings_equivalent",
    "linear_extensions",
    "maximal_chains",
    "order_ideals",
    "poset_from_covers",
    "shape_to_poset",
]
