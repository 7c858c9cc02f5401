"""
Algebra Package
===============

Exact polynomial arithmetic, q-series with factored denominators,
interpolation and real-rootedness certificates.
"""

from algebra.interpolation import interpolate
from algebra.polynomials import (
    BiPolynomial,
    IntPolynomial,
    LaurentPolynomial,
    MultiPolynomial,
    RationalPolynomial,
)
from algebra.qseries import Factor, QRational, q_binomial, q_binomial_poly, q_pochhammer, series_coefficients
from algebra.roots import distinct_real_roots, real_rooted

__all__ = [
    "BiPolynomial",
    "Factor",
    "IntPolynomial",
    "LaurentPolynomial",
    "MultiPolynomial",
    "QRational",
    "RationalPolynomial",
    "distinct_real_roots",
    "interpolate",
    "q_binomial",
    "q_binomial_poly",
    "q_pochhammer",
    "real_rooted",
    "series_coefficients",
]
