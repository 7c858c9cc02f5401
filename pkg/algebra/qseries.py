"""
q-Series
========

Rational generating functions whose denominators are products of factors
(1 - t^e q^a), kept factored and never expanded. Identities between them are
tested by cross-multiplication or by comparing truncated Taylor series.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from algebra.polynomials import BiPolynomial, IntPolynomial, LaurentPolynomial
from errors import AlgebraError, NotPolynomial

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Factor:
    """The denominator factor (1 - t^t_power * q^q_power)."""

    t_power: int
    q_power: int

    def __post_init__(self) -> None:
        if self.t_power not in (0, 1) or self.q_power < 0:
            raise AlgebraError(f"unsupported factor (1 - t^{self.t_power} q^{self.q_power})")
        if self.t_power == 0 and self.q_power == 0:
            raise AlgebraError("factor (1 - 1) is zero")

    def expand(self) -> BiPolynomial:
        return BiPolynomial({(0, 0): 1, (self.t_power, self.q_power): -1})

    def render(self) -> str:
        return f"(1-{BiPolynomial.monomial(self.t_power, self.q_power).render()})"


def q_pochhammer(base: Tuple[int, int], n: int) -> Tuple[Factor, ...]:
    """
    Factors of (a; q)_n for a = t^e q^j, given as base = (e, j).

    (t; q)_3 is q_pochhammer((1, 0), 3) = (1-t)(1-t*q)(1-t*q^2).
    """
    if n < 0:
        raise AlgebraError(f"q_pochhammer length must be nonnegative, got {n}")
    t_power, q_offset = base
    return tuple(Factor(t_power, q_offset + i) for i in range(n))


@dataclass(frozen=True)
class QRational:
    """
    numerator * q^q_shift / prod(denominator).

    Build values through QRational.build, which sorts the factors and folds a
    nonnegative shift into the numerator, so equal inputs give equal values.
    """

    numerator: BiPolynomial
    denominator: Tuple[Factor, ...] = ()
    q_shift: int = 0

    @classmethod
    def build(
        cls,
        numerator: BiPolynomial,
        denominator: Sequence[Factor] = (),
        q_shift: int = 0,
    ) -> QRational:
        if numerator.is_zero:
            return cls(BiPolynomial.zero(), (), 0)
        if q_shift > 0:
            numerator = numerator.shift_q(q_shift)
            q_shift = 0
        return cls(numerator, tuple(sorted(denominator)), q_shift)

    @classmethod
    def polynomial(cls, poly: IntPolynomial) -> QRational:
        return cls.build(BiPolynomial.from_q_polynomial(poly))

    @property
    def is_zero(self) -> bool:
        return self.numerator.is_zero

    @property
    def has_t(self) -> bool:
        return self.numerator.has_t or any(f.t_power for f in self.denominator)

    def __mul__(self, other: QRational) -> QRational:
        return QRational.build(
            self.numerator * other.numerator,
            self.denominator + other.denominator,
            self.q_shift + other.q_shift,
        )

    def scale(self, k: int) -> QRational:
        return QRational.build(self.numerator * k, self.denominator, self.q_shift)

    def denominator_product(self) -> BiPolynomial:
        product = BiPolynomial.one()
        for factor in self.denominator:
            product = product * factor.expand()
        return product

    def equivalent(self, other: QRational) -> bool:
        """True when both expressions are the same rational function."""
        base = min(self.q_shift, other.q_shift)
        left = self.numerator.shift_q(self.q_shift - base) * other.denominator_product()
        right = other.numerator.shift_q(other.q_shift - base) * self.denominator_product()
        return left == right

    def reduce(self) -> LaurentPolynomial:
        """
        Divide out the denominator exactly.

        Raises:
            NotPolynomial: If the expression depends on t or leaves a remainder
        """
        if self.has_t:
            raise NotPolynomial("only t-free expressions reduce to Laurent polynomials")
        numerator = self.numerator.q_polynomial()
        divisor = self.denominator_product().q_polynomial()
        return LaurentPolynomial.from_polynomial(numerator.exact_divide(divisor), self.q_shift)

    def invert_q(self) -> QRational:
        """
        Substitute q -> 1/q in a t-free expression.

        Uses 1/(1 - q^-a) = -q^a / (1 - q^a), so the factor list is unchanged.
        """
        if self.has_t:
            raise AlgebraError("invert_q supports t-free expressions only")
        if self.is_zero:
            return self
        top = self.numerator.q_degree
        flipped = BiPolynomial({(0, top - j): c for (_, j), c in self.numerator.terms.items()})
        if len(self.denominator) % 2:
            flipped = -flipped
        shift = -self.q_shift - top + sum(f.q_power for f in self.denominator)
        return QRational.build(flipped, self.denominator, shift)

    def render(self) -> str:
        numerator = self.numerator.render()
        if self.q_shift:
            numerator = f"q^{self.q_shift}*({numerator})"
        if not self.denominator:
            return numerator
        if len(self.numerator.terms) > 1 and not self.q_shift:
            numerator = f"({numerator})"
        factors = [f.render() for f in self.denominator]
        denominator = factors[0] if len(factors) == 1 else "(" + "*".join(factors) + ")"
        return f"{numerator} / {denominator}"

    def __str__(self) -> str:
        return self.render()


def _qbinomial_factors(n: int, k: int) -> Tuple[List[int], List[int], int, int]:
    """Numerator/denominator q-exponents of prod (1-q^(n-i))/(1-q^(i+1)), sign and shift."""
    top: List[int] = []
    sign = 1
    shift = 0
    for i in range(k):
        exponent = n - i
        if exponent < 0:
            # 1 - q^-a = -q^-a (1 - q^a)
            sign = -sign
            shift -= -exponent
            exponent = -exponent
        top.append(exponent)
    return top, [i + 1 for i in range(k)], sign, shift


def q_binomial(n: int, k: int) -> QRational:
    """
    Gaussian coefficient as prod_{i<k} (1 - q^(n-i)) / (1 - q^(i+1)).

    Negative n is allowed; k < 0 gives zero.
    """
    if k < 0:
        return QRational.build(BiPolynomial.zero())
    top, bottom, sign, shift = _qbinomial_factors(n, k)
    if 0 in top:
        return QRational.build(BiPolynomial.zero())
    numerator = BiPolynomial.one() * sign
    for exponent in top:
        numerator = numerator * Factor(0, exponent).expand()
    return QRational.build(numerator, [Factor(0, e) for e in bottom], shift)


@lru_cache(maxsize=4096)
def q_binomial_poly(n: int, k: int) -> LaurentPolynomial:
    """q_binomial(n, k) reduced; a Laurent polynomial when n < 0."""
    return q_binomial(n, k).reduce()


def series_coefficients(f: QRational, t_max: int, q_max: int) -> Dict[Tuple[int, int], int]:
    """
    Taylor coefficients of f up to t^t_max q^q_max; zero entries omitted.

    Raises:
        NotPolynomial: If f carries a negative q shift (not a power series)
    """
    if f.q_shift < 0:
        raise NotPolynomial("expression with a negative q shift has no power series")
    grid = [[0] * (q_max + 1) for _ in range(t_max + 1)]
    for (i, j), c in f.numerator.terms.items():
        if i <= t_max and j <= q_max:
            grid[i][j] += c
    for factor in f.denominator:
        e, a = factor.t_power, factor.q_power
        # g = f + x*g with x = t^e q^a
        for i in range(e, t_max + 1):
            row, source = grid[i], grid[i - e]
            for j in range(a, q_max + 1):
                row[j] += source[j - a]
    logger.debug("Expanded %d factors to t^%d q^%d", len(f.denominator), t_max, q_max)
    return {(i, j): grid[i][j] for i in range(t_max + 1) for j in range(q_max + 1) if grid[i][j]}


def q_integer(n: int) -> IntPolynomial:
    """[n]_q = 1 + q + ... + q^(n-1)."""
    return IntPolynomial((1,) * n)
