"""
Generating Functions Package
============================

Closed forms for (P, omega)-partitions: descent generating functions, U_m, U,
order polynomials, alpha/beta tables, reciprocity, shuffles and MacMahon's
multiset identities.
"""

from gf.descents import (
    DescentGF,
    alpha_beta,
    alpha_beta_check,
    compatible_chain_count,
    descent_gf,
    order_polynomial,
    u_gf,
    u_m,
    u_m_laurent,
)
from gf.macmahon import (
    carlitz_check,
    eulerian_check,
    lattice_numerator,
    lattice_words,
    macmahon_multiset,
    multiset_poset,
    newcomb_polynomial,
    plane_partition_gf,
)
from gf.reciprocity import reciprocity_check
from gf.shuffles import chain_pair, shuffle_identity, shuffle_w

__all__ = [
    "DescentGF",
    "alpha_beta",
    "alpha_beta_check",
    "carlitz_check",
    "chain_pair",
    "compatible_chain_count",
    "descent_gf",
    "eulerian_check",
    "lattice_numerator",
    "lattice_words",
    "macmahon_multiset",
    "multiset_poset",
    "newcomb_polynomial",
    "order_polynomial",
    "plane_partition_gf",
    "reciprocity_check",
    "shuffle_identity",
    "shuffle_w",
    "u_gf",
    "u_m",
    "u_m_laurent",
]
