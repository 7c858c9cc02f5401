"""
Real-Rootedness
===============

Exact real-rootedness test by Sturm sequences. The number of distinct real
roots of a polynomial equals V(-oo) - V(+oo), where V counts sign changes along
its Sturm sequence. A square-free polynomial of degree d is real-rooted exactly
when that count is d.
"""

import logging
from typing import List

import sympy as sp

from algebra.polynomials import IntPolynomial
from errors import ZeroPolynomial

logger = logging.getLogger(__name__)

_t = sp.Symbol('t')


def _to_sympy(f: IntPolynomial) -> sp.Poly:
    return sp.Poly(list(reversed(f.coeffs)), _t, domain=sp.QQ)


def _sign_changes(signs: List[int]) -> int:
    nonzero = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(nonzero, nonzero[1:]) if a != b)


def _signs_at_infinity(sequence: List[sp.Poly], negative: bool) -> List[int]:
    signs = []
    for poly in sequence:
        lead = poly.LC()
        sign = 1 if lead > 0 else -1 if lead < 0 else 0
        if negative and poly.degree() % 2:
            sign = -sign
        signs.append(sign)
    return signs


def _sturm_count(poly: sp.Poly) -> int:
    if poly.degree() <= 0:
        return 0
    sequence = sp.sturm(poly)
    return _sign_changes(_signs_at_infinity(sequence, negative=True)) - _sign_changes(
        _signs_at_infinity(sequence, negative=False)
    )


def distinct_real_roots(f: IntPolynomial) -> int:
    """
    Number of distinct real roots.

    Raises:
        ZeroPolynomial: If f is zero
    """
    if f.is_zero:
        raise ZeroPolynomial("the zero polynomial has no root count")
    return _sturm_count(_to_sympy(f))


def real_rooted(f: IntPolynomial) -> bool:
    """
    True when every complex root of f is real.

    Powers of the variable are factored out first; constants are real-rooted.

    Raises:
        ZeroPolynomial: If f is zero
    """
    if f.is_zero:
        raise ZeroPolynomial("real-rootedness is undefined for the zero polynomial")
    stripped = IntPolynomial(f.coeffs[f.lowest_degree:])
    if stripped.degree <= 0:
        return True

    poly = _to_sympy(stripped)
    square_free = poly.quo(sp.gcd(poly, poly.diff(_t)))
    roots = _sturm_count(square_free)
    logger.debug("Sturm count %d for square-free degree %d", roots, square_free.degree())
    return roots == square_free.degree()
