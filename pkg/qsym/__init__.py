"""
Quasi-Symmetric Functions Package
=================================

Fundamental quasi-symmetric functions, the Gamma and enriched Delta generating
functions of a labeled poset, and Baxter operator words.
"""

from qsym.baxter import THETA, apply_operator, baxter_apply, baxter_identity_holds, parse_word
from qsym.compositions import Composition, MonomialExpansion, QsymElement, compositions, fundamental_expand
from qsym.generating import delta, delta_from_extensions, gamma, gamma_brute

__all__ = [
    "THETA",
    "Composition",
    "MonomialExpansion",
    "QsymElement",
    "apply_operator",
    "baxter_apply",
    "baxter_identity_holds",
    "compositions",
    "delta",
    "delta_from_extensions",
    "fundamental_expand",
    "gamma",
    "gamma_brute",
    "parse_word",
]
