"""
Quasi-Symmetric Generating Functions
====================================

Gamma(P) expands in the fundamental basis over the descent sets of the
linear extensions. Delta(P) is the enriched analogue, summed over enriched
(P, omega)-partitions with x_|v| per element.
"""

import logging
from typing import Dict, Iterable, Sequence, Tuple

from algebra.polynomials import MultiPolynomial
from oracle.enumeration import enumerate_enriched, enumerate_ppartitions
from poset.core import LabeledPoset, chain_poset, linear_extensions
from qsym.compositions import Composition, MonomialExpansion, QsymElement
from stats.permutations import descent_set

logger = logging.getLogger(__name__)


def gamma(P: LabeledPoset) -> QsymElement:
    """sum over linear extensions of F_{comp(S(pi))}."""
    element = QsymElement(P.p)
    for extension in linear_extensions(P):
        element.add(Composition.from_descent_set(descent_set(extension.word), P.p))
    logger.debug("gamma: %d compositions from %d elements", len(element.coeffs), P.p)
    return element


def _monomial_sum(n_vars: int, indices_per_map: Iterable[Sequence[int]]) -> MultiPolynomial:
    terms: Dict[Tuple[int, ...], int] = {}
    for indices in indices_per_map:
        exponents = [0] * n_vars
        for i in indices:
            exponents[i - 1] += 1
        key = tuple(exponents)
        terms[key] = terms.get(key, 0) + 1
    return MultiPolynomial(n_vars, terms)


def gamma_brute(P: LabeledPoset, n_vars: int) -> MonomialExpansion:
    """
    Brute Gamma: sum over (P, omega)-partitions with largest part below n_vars
    of prod x_{n_vars - sigma(X)}.

    Raises:
        BudgetExceeded: If the candidate count exceeds the configured budget
    """
    maps = enumerate_ppartitions(P, n_vars - 1)
    return _monomial_sum(n_vars, ([n_vars - v for v in sigma.values] for sigma in maps))


def delta(P: LabeledPoset, n_vars: int) -> MonomialExpansion:
    """
    sum over enriched (P, omega)-partitions with |values| <= n_vars of prod x_|sigma(X)|.

    Raises:
        BudgetExceeded: If the candidate count exceeds the configured budget
    """
    maps = enumerate_enriched(P, n_vars)
    return _monomial_sum(n_vars, ([abs(v) for v in sigma.values] for sigma in maps))


def delta_from_extensions(P: LabeledPoset, n_vars: int) -> MonomialExpansion:
    """Delta(P) as the sum of Delta over the chains of its linear extensions."""
    total = MultiPolynomial(n_vars, {})
    for extension in linear_extensions(P):
        total = total + delta(chain_poset(extension.word), n_vars)
    return total
