"""
Multiset Permutations
=====================

Descent statistics of permutations of a multiset {1^p1, 2^p2, ...}, realised as
the disjoint union of constant-labeled chains, and MacMahon's identity

    sum_n t^n prod_i [n + p_i choose p_i]_q = A(t, q) / (t; q)_{p+1}

with its Eulerian (all p_i = 1, q = 1), Carlitz (all p_i = 1) and Simon
Newcomb (q = 1) specialisations. Also the plane-partition generating
functions of shapes.
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from algebra.polynomials import BiPolynomial, IntPolynomial
from algebra.qseries import Factor, QRational, q_binomial_poly, q_integer, q_pochhammer, series_coefficients
from checks import CheckReport, IdentityCheck
from config import get_config
from errors import LabelError, SizeLimit
from gf.descents import descent_gf, u_gf
from poset.core import LabeledPoset, disjoint_union, empty_poset, labeled_chain
from poset.shapes import Shape, shape_to_poset
from stats.permutations import major_index

logger = logging.getLogger(__name__)


def multiset_poset(parts: Sequence[int], limit: Optional[int] = None) -> LabeledPoset:
    """
    Disjoint union of chains, chain i of size parts[i-1] with every label i.

    Raises:
        SizeLimit: If the multiset exceeds the configured size
    """
    if any(part < 1 for part in parts):
        raise LabelError(f"multiset parts must be positive: {list(parts)}")
    limit = limit if limit is not None else get_config().limits.macmahon_total
    if sum(parts) > limit:
        raise SizeLimit(f"multiset of size {sum(parts)} exceeds the limit of {limit}")
    poset = empty_poset()
    for i, part in enumerate(parts):
        poset = disjoint_union(poset, labeled_chain(part, "constant", offset=i))
    return poset


def macmahon_multiset(parts: Sequence[int], t_max: int = 10) -> Tuple[BiPolynomial, CheckReport]:
    """
    A(t, q) for the multiset, checked against the product side to order t^t_max.

    Raises:
        SizeLimit: If the multiset exceeds the configured size
    """
    poset = multiset_poset(parts)
    p = poset.p
    a = descent_gf(poset).poly
    q_max = t_max * p

    product: Dict[Tuple[int, int], int] = {}
    for n in range(t_max + 1):
        term = IntPolynomial.constant(1)
        for part in parts:
            term = term * q_binomial_poly(n + part, part).to_polynomial()
        for j, c in term.terms().items():
            product[(n, j)] = c

    series = series_coefficients(QRational.build(a, q_pochhammer((1, 0), p + 1)), t_max, q_max)
    report = CheckReport("macmahon", metadata={'parts': list(parts), 't_max': t_max})
    for n in range(t_max + 1):
        left = {j: c for (i, j), c in product.items() if i == n}
        right = {j: c for (i, j), c in series.items() if i == n}
        report.add(IdentityCheck.of("macmahon_product", left == right, f"t^{n}", n))
    logger.info("macmahon %s: passed=%s", list(parts), report.passed)
    return a, report


def newcomb_polynomial(parts: Sequence[int]) -> IntPolynomial:
    """sum of t^des over permutations of the multiset."""
    return descent_gf(multiset_poset(parts)).w_polynomial()


def eulerian_check(m: int, t_max: int = 10) -> CheckReport:
    """sum_n t^n (n+1)^m against A(t, 1) / (1 - t)^(m+1) for the set {1..m}."""
    eulerian = newcomb_polynomial([1] * m)
    f = QRational.build(BiPolynomial.from_t_polynomial(eulerian), [Factor(1, 0)] * (m + 1))
    series = series_coefficients(f, t_max, 0)
    report = CheckReport("eulerian", metadata={'m': m, 'polynomial': eulerian.render("t")})
    for n in range(t_max + 1):
        report.add(IdentityCheck.of(
            "eulerian_series", series.get((n, 0), 0) == (n + 1) ** m,
            f"t^{n}: {series.get((n, 0), 0)} vs {(n + 1) ** m}", n,
        ))
    return report


def carlitz_check(m: int, t_max: int = 10) -> CheckReport:
    """sum_n t^n [n+1]_q^m against A(t, q) / (t; q)_(m+1) for the set {1..m}."""
    a = descent_gf(multiset_poset([1] * m)).poly
    series = series_coefficients(QRational.build(a, q_pochhammer((1, 0), m + 1)), t_max, t_max * m)
    report = CheckReport("carlitz", metadata={'m': m})
    for n in range(t_max + 1):
        expected = q_integer(n + 1) ** m
        got = IntPolynomial.from_terms({j: c for (i, j), c in series.items() if i == n})
        report.add(IdentityCheck.of(
            "carlitz_series", got == expected, f"t^{n}: {got.render()} vs {expected.render()}", n,
        ))
    return report


# =============================================================================
# Plane partitions
# =============================================================================

def plane_partition_gf(Y: Sequence[int], Yp: Sequence[int] = ()) -> QRational:
    """Generating function of reverse plane fillings of Y/Y' by sum of entries."""
    return u_gf(shape_to_poset(Y, Yp))


def lattice_words(content: Sequence[int]) -> List[Tuple[int, ...]]:
    """Lattice permutations with content[i-1] copies of letter i, lexicographic."""
    words: List[Tuple[int, ...]] = []
    remaining = list(content)
    word: List[int] = []
    total = sum(content)

    def extend() -> None:
        if len(word) == total:
            words.append(tuple(word))
            return
        for letter in range(1, len(remaining) + 1):
            if not remaining[letter - 1]:
                continue
            used = content[letter - 1] - remaining[letter - 1]
            if letter > 1 and used + 1 > content[letter - 2] - remaining[letter - 2]:
                continue
            remaining[letter - 1] -= 1
            word.append(letter)
            extend()
            word.pop()
            remaining[letter - 1] += 1

    extend()
    return words


def lattice_numerator(Y: Sequence[int]) -> IntPolynomial:
    """
    sum of q^maj over lattice permutations of content Y; the numerator of the
    plane-partition generating function of the straight shape Y.
    """
    shape = Shape.of(Y)
    terms: Dict[int, int] = {}
    for word in lattice_words(shape.outer):
        maj = major_index(word)
        terms[maj] = terms.get(maj, 0) + 1
    return IntPolynomial.from_terms(terms)
