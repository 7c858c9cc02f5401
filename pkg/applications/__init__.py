"""
Applications Package
====================

Classical consequences of the P-partition theory: chromatic polynomials,
Kreweras chain counts, Stirling numerators, real-rootedness of descent
polynomials, multipartite partitions and polytope lattice points.
"""

from applications.chromatic import (
    SimpleGraph,
    acyclic_orientations,
    chromatic_check,
    chromatic_polynomial,
    orientation_poset,
    proper_coloring_count,
)
from applications.kreweras import (
    KrewerasResult,
    count_returns,
    determinant_w,
    kreweras,
    multichain_count,
    newcomb_correspondence,
    newcomb_shape,
    theta,
    young_chains,
)
from applications.lambda_ import multipartite_lambda, multipartite_lambda_series, roselle_check
from applications.neggers import NeggersResult, neggers_test
from applications.polytopes import PolytopeCounts, chain_polytope_points, order_polytope_points, polytope_counts
from applications.stirling import stirling_check, stirling_numerator

__all__ = [
    "KrewerasResult",
    "NeggersResult",
    "PolytopeCounts",
    "SimpleGraph",
    "acyclic_orientations",
    "chain_polytope_points",
    "chromatic_check",
    "chromatic_polynomial",
    "count_returns",
    "determinant_w",
    "kreweras",
    "multichain_count",
    "multipartite_lambda",
    "multipartite_lambda_series",
    "neggers_test",
    "newcomb_correspondence",
    "newcomb_shape",
    "order_polytope_points",
    "orientation_poset",
    "polytope_counts",
    "proper_coloring_count",
    "roselle_check",
    "stirling_check",
    "stirling_numerator",
    "theta",
    "young_chains",
]
