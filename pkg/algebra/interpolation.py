"""
Interpolation
=============

Exact polynomial interpolation over the rationals, delegated to sympy.
"""

from fractions import Fraction
from typing import Sequence, Tuple, Union

import sympy as sp

from algebra.polynomials import RationalPolynomial
from errors import DuplicateArgument

_m = sp.Symbol('m')


def _to_fraction(c: sp.Rational) -> Fraction:
    return Fraction(int(c.p), int(c.q))


def interpolate(points: Sequence[Tuple[int, Union[int, Fraction]]]) -> RationalPolynomial:
    """
    Unique polynomial of degree < len(points) through every point.

    Raises:
        DuplicateArgument: If two points share an argument
    """
    arguments = [x for x, _ in points]
    if len(set(arguments)) != len(arguments):
        raise DuplicateArgument(f"interpolation arguments repeat: {arguments}")
    if not points:
        return RationalPolynomial()

    data = [(sp.Integer(x), sp.Rational(Fraction(y).numerator, Fraction(y).denominator)) for x, y in points]
    poly = sp.Poly(sp.interpolate(data, _m), _m, domain=sp.QQ)
    return RationalPolynomial(tuple(_to_fraction(c) for c in reversed(poly.all_coeffs())))
