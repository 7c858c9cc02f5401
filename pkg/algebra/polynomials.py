"""
Exact Polynomials
=================

Immutable polynomial value types with arbitrary-precision coefficients:

- IntPolynomial: one variable, integer coefficients, index = degree
- LaurentPolynomial: one variable, integer exponents of either sign
- BiPolynomial: integer polynomials in t and q
- RationalPolynomial: one variable, exact rational coefficients
- MultiPolynomial: integer polynomials in q1..qs

Canonical text rendering: terms in increasing total degree, t before q,
explicit "*" and "^", e.g. "1 + 4*t + t^2".
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple, Union

from errors import InvalidArgument, NotPolynomial

Number = Union[int, Fraction]


# =============================================================================
# Rendering helpers
# =============================================================================

def _power(var: str, exponent: int) -> str:
    if exponent == 0:
        return ""
    if exponent == 1:
        return var
    return f"{var}^{exponent}"


def _monomial(parts: Iterable[Tuple[str, int]]) -> str:
    return "*".join(p for p in (_power(v, e) for v, e in parts) if p)


def render_terms(terms: Sequence[Tuple[Number, str]]) -> str:
    """Render (coefficient, monomial) pairs, already in display order."""
    pieces: List[str] = []
    for index, (coeff, monomial) in enumerate(terms):
        if coeff == 0:
            continue
        magnitude = abs(coeff)
        if monomial and magnitude == 1:
            body = monomial
        elif monomial:
            body = f"{magnitude}*{monomial}"
        else:
            body = str(magnitude)
        if not pieces:
            pieces.append(f"-{body}" if coeff < 0 else body)
        else:
            pieces.append(f" - {body}" if coeff < 0 else f" + {body}")
    return "".join(pieces) if pieces else "0"


# =============================================================================
# One variable, integer coefficients
# =============================================================================

@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial; coeffs[d] is the coefficient of degree d."""

    coeffs: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        coeffs = list(self.coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, 'coeffs', tuple(int(c) for c in coeffs))

    @classmethod
    def constant(cls, value: int) -> IntPolynomial:
        return cls((value,))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntPolynomial:
        if degree < 0:
            raise NotPolynomial(f"negative degree {degree}")
        return cls((0,) * degree + (coeff,))

    @classmethod
    def from_terms(cls, terms: Mapping[int, int]) -> IntPolynomial:
        """Build from a degree -> coefficient mapping."""
        if not terms:
            return cls()
        if min(terms) < 0:
            raise NotPolynomial("negative exponent in polynomial terms")
        coeffs = [0] * (max(terms) + 1)
        for degree, coeff in terms.items():
            coeffs[degree] += coeff
        return cls(tuple(coeffs))

    @property
    def degree(self) -> int:
        """Degree, or -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lowest_degree(self) -> int:
        """Smallest degree with a nonzero coefficient (-1 for zero)."""
        for degree, coeff in enumerate(self.coeffs):
            if coeff:
                return degree
        return -1

    def coefficient(self, degree: int) -> int:
        if 0 <= degree < len(self.coeffs):
            return self.coeffs[degree]
        return 0

    def terms(self) -> Dict[int, int]:
        return {d: c for d, c in enumerate(self.coeffs) if c}

    def __add__(self, other: Union[IntPolynomial, int]) -> IntPolynomial:
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(tuple(self.coefficient(d) + other.coefficient(d) for d in range(size)))

    __radd__ = __add__

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Union[IntPolynomial, int]) -> IntPolynomial:
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        return self + (-other)

    def __mul__(self, other: Union[IntPolynomial, int]) -> IntPolynomial:
        if isinstance(other, int):
            return IntPolynomial(tuple(other * c for c in self.coeffs))
        if self.is_zero or other.is_zero:
            return IntPolynomial()
        product = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    product[i + j] += a * b
        return IntPolynomial(tuple(product))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> IntPolynomial:
        result = IntPolynomial.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __call__(self, x: Number) -> Number:
        value: Number = 0
        for coeff in reversed(self.coeffs):
            value = value * x + coeff
        return value

    def shift(self, k: int) -> IntPolynomial:
        """Multiply by var^k (k >= 0)."""
        return IntPolynomial((0,) * k + self.coeffs) if self.coeffs else self

    def exact_divide(self, divisor: IntPolynomial) -> IntPolynomial:
        """
        Exact division with integer quotient.

        Raises:
            NotPolynomial: If the division leaves a remainder
        """
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        remainder = list(self.coeffs)
        lead = divisor.coeffs[-1]
        quotient = [0] * max(len(remainder) - len(divisor.coeffs) + 1, 0)
        for shift in range(len(quotient) - 1, -1, -1):
            top = remainder[shift + len(divisor.coeffs) - 1]
            if top % lead:
                raise NotPolynomial("non-integral quotient")
            factor = top // lead
            quotient[shift] = factor
            if factor:
                for i, c in enumerate(divisor.coeffs):
                    remainder[shift + i] -= factor * c
        if any(remainder):
            raise NotPolynomial("division leaves a remainder")
        return IntPolynomial(tuple(quotient))

    def is_palindromic(self) -> bool:
        """True when the coefficient sequence reads the same reversed."""
        return self.coeffs == self.coeffs[::-1]

    def render(self, var: str = "q") -> str:
        return render_terms([(c, _power(var, d)) for d, c in enumerate(self.coeffs)])

    def __str__(self) -> str:
        return self.render()


# =============================================================================
# One variable, Laurent
# =============================================================================

@dataclass(frozen=True, eq=False)
class LaurentPolynomial:
    """Integer Laurent polynomial in q."""

    terms: Mapping[int, int]

    def __post_init__(self) -> None:
        clean = {int(e): int(c) for e, c in self.terms.items() if c}
        object.__setattr__(self, 'terms', MappingProxyType(clean))

    @classmethod
    def zero(cls) -> LaurentPolynomial:
        return cls({})

    @classmethod
    def from_polynomial(cls, poly: IntPolynomial, shift: int = 0) -> LaurentPolynomial:
        """q^shift * poly."""
        return cls({d + shift: c for d, c in poly.terms().items()})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPolynomial):
            other = LaurentPolynomial.from_polynomial(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return dict(self.terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: LaurentPolynomial) -> LaurentPolynomial:
        merged = dict(self.terms)
        for e, c in other.terms.items():
            merged[e] = merged.get(e, 0) + c
        return LaurentPolynomial(merged)

    def __neg__(self) -> LaurentPolynomial:
        return LaurentPolynomial({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: LaurentPolynomial) -> LaurentPolynomial:
        return self + (-other)

    def __mul__(self, other: Union[LaurentPolynomial, int]) -> LaurentPolynomial:
        if isinstance(other, int):
            return LaurentPolynomial({e: other * c for e, c in self.terms.items()})
        product: Dict[int, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                product[e1 + e2] = product.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(product)

    __rmul__ = __mul__

    def shift(self, k: int) -> LaurentPolynomial:
        """Multiply by q^k."""
        return LaurentPolynomial({e + k: c for e, c in self.terms.items()})

    def invert(self) -> LaurentPolynomial:
        """Substitute q -> 1/q."""
        return LaurentPolynomial({-e: c for e, c in self.terms.items()})

    def to_polynomial(self) -> IntPolynomial:
        """
        Convert to an ordinary polynomial.

        Raises:
            NotPolynomial: If a negative exponent is present
        """
        return IntPolynomial.from_terms(dict(self.terms))

    def __call__(self, x: Number) -> Number:
        return sum((Fraction(x) ** e * c for e, c in self.terms.items()), Fraction(0))

    def render(self, var: str = "q") -> str:
        return render_terms([(self.terms[e], _power(var, e)) for e in sorted(self.terms)])

    def __str__(self) -> str:
        return self.render()


# =============================================================================
# Two variables t, q
# =============================================================================

@dataclass(frozen=True, eq=False)
class BiPolynomial:
    """Integer polynomial in t and q; terms map (t-degree, q-degree) -> coefficient."""

    terms: Mapping[Tuple[int, int], int]

    def __post_init__(self) -> None:
        clean = {(int(i), int(j)): int(c) for (i, j), c in self.terms.items() if c}
        object.__setattr__(self, 'terms', MappingProxyType(clean))

    @classmethod
    def zero(cls) -> BiPolynomial:
        return cls({})

    @classmethod
    def one(cls) -> BiPolynomial:
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, t_degree: int, q_degree: int, coeff: int = 1) -> BiPolynomial:
        return cls({(t_degree, q_degree): coeff})

    @classmethod
    def from_q_polynomial(cls, poly: IntPolynomial) -> BiPolynomial:
        return cls({(0, d): c for d, c in poly.terms().items()})

    @classmethod
    def from_t_polynomial(cls, poly: IntPolynomial) -> BiPolynomial:
        return cls({(d, 0): c for d, c in poly.terms().items()})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def t_degree(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    @property
    def q_degree(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    @property
    def has_t(self) -> bool:
        return any(i for i, _ in self.terms)

    def coefficient(self, t_degree: int, q_degree: int) -> int:
        return self.terms.get((t_degree, q_degree), 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiPolynomial):
            return NotImplemented
        return dict(self.terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: BiPolynomial) -> BiPolynomial:
        merged = dict(self.terms)
        for key, c in other.terms.items():
            merged[key] = merged.get(key, 0) + c
        return BiPolynomial(merged)

    def __neg__(self) -> BiPolynomial:
        return BiPolynomial({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: BiPolynomial) -> BiPolynomial:
        return self + (-other)

    def __mul__(self, other: Union[BiPolynomial, int]) -> BiPolynomial:
        if isinstance(other, int):
            return BiPolynomial({k: other * c for k, c in self.terms.items()})
        product: Dict[Tuple[int, int], int] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                key = (i1 + i2, j1 + j2)
                product[key] = product.get(key, 0) + c1 * c2
        return BiPolynomial(product)

    __rmul__ = __mul__

    def shift_q(self, k: int) -> BiPolynomial:
        """Multiply by q^k (k >= 0)."""
        if k < 0:
            raise NotPolynomial(f"negative q shift {k}")
        return BiPolynomial({(i, j + k): c for (i, j), c in self.terms.items()})

    def evaluate(self, t: Number, q: Number) -> Number:
        return sum((Fraction(t) ** i * Fraction(q) ** j * c for (i, j), c in self.terms.items()), Fraction(0))

    def at_q_one(self) -> IntPolynomial:
        """Specialize q = 1, leaving a polynomial in t."""
        collected: Dict[int, int] = {}
        for (i, _), c in self.terms.items():
            collected[i] = collected.get(i, 0) + c
        return IntPolynomial.from_terms(collected)

    def at_t_one(self) -> IntPolynomial:
        """Specialize t = 1, leaving a polynomial in q."""
        collected: Dict[int, int] = {}
        for (_, j), c in self.terms.items():
            collected[j] = collected.get(j, 0) + c
        return IntPolynomial.from_terms(collected)

    def t_slice(self, t_degree: int) -> IntPolynomial:
        """Coefficient of t^t_degree, as a polynomial in q."""
        return IntPolynomial.from_terms({j: c for (i, j), c in self.terms.items() if i == t_degree})

    def q_polynomial(self) -> IntPolynomial:
        """The polynomial in q of a t-free value."""
        if self.has_t:
            raise NotPolynomial("value depends on t")
        return self.t_slice(0)

    def total(self) -> int:
        """Sum of all coefficients (value at t = q = 1)."""
        return sum(self.terms.values())

    def sorted_terms(self) -> List[Tuple[Tuple[int, int], int]]:
        """Terms in canonical display order."""
        return sorted(self.terms.items(), key=lambda item: (item[0][0] + item[0][1], -item[0][0]))

    def render(self, t_var: str = "t", q_var: str = "q") -> str:
        return render_terms([(c, _monomial(((t_var, i), (q_var, j)))) for (i, j), c in self.sorted_terms()])

    def __str__(self) -> str:
        return self.render()


# =============================================================================
# One variable, rational coefficients
# =============================================================================

@dataclass(frozen=True)
class RationalPolynomial:
    """Polynomial in m with exact rational coefficients; coeffs[d] multiplies m^d."""

    coeffs: Tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        coeffs = [Fraction(c) for c in self.coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, 'coeffs', tuple(coeffs))

    @classmethod
    def constant(cls, value: Number) -> RationalPolynomial:
        return cls((Fraction(value),))

    @classmethod
    def variable(cls) -> RationalPolynomial:
        return cls((Fraction(0), Fraction(1)))

    @classmethod
    def binomial(cls, offset: int, k: int) -> RationalPolynomial:
        """C(m + offset, k) as a polynomial in m (k >= 0)."""
        result = cls.constant(1)
        for i in range(k):
            result = result * cls((Fraction(offset - i, i + 1), Fraction(1, i + 1)))
        return result

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, degree: int) -> Fraction:
        if 0 <= degree < len(self.coeffs):
            return self.coeffs[degree]
        return Fraction(0)

    def __add__(self, other: Union[RationalPolynomial, Number]) -> RationalPolynomial:
        if not isinstance(other, RationalPolynomial):
            other = RationalPolynomial.constant(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return RationalPolynomial(tuple(self.coefficient(d) + other.coefficient(d) for d in range(size)))

    __radd__ = __add__

    def __neg__(self) -> RationalPolynomial:
        return RationalPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Union[RationalPolynomial, Number]) -> RationalPolynomial:
        if not isinstance(other, RationalPolynomial):
            other = RationalPolynomial.constant(other)
        return self + (-other)

    def __mul__(self, other: Union[RationalPolynomial, Number]) -> RationalPolynomial:
        if not isinstance(other, RationalPolynomial):
            return RationalPolynomial(tuple(Fraction(other) * c for c in self.coeffs))
        if self.is_zero or other.is_zero:
            return RationalPolynomial()
        product = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                product[i + j] += a * b
        return RationalPolynomial(tuple(product))

    __rmul__ = __mul__

    def __call__(self, x: Number) -> Fraction:
        value = Fraction(0)
        for coeff in reversed(self.coeffs):
            value = value * x + coeff
        return value

    def compose_affine(self, a: Number, b: Number) -> RationalPolynomial:
        """f(a*m + b)."""
        inner = RationalPolynomial((Fraction(b), Fraction(a)))
        result = RationalPolynomial()
        for coeff in reversed(self.coeffs):
            result = result * inner + coeff
        return result

    def render(self, var: str = "m") -> str:
        return render_terms([(c, _power(var, d)) for d, c in enumerate(self.coeffs)])

    def __str__(self) -> str:
        return self.render()


# =============================================================================
# Several variables q1..qs
# =============================================================================

@dataclass(frozen=True, eq=False)
class MultiPolynomial:
    """Integer polynomial in q1..qs; terms map exponent tuples -> coefficient."""

    n_vars: int
    terms: Mapping[Tuple[int, ...], int]

    def __post_init__(self) -> None:
        clean: Dict[Tuple[int, ...], int] = {}
        for exps, c in self.terms.items():
            if len(exps) != self.n_vars:
                raise InvalidArgument(f"exponent {exps} does not have {self.n_vars} entries")
            if c:
                clean[tuple(int(e) for e in exps)] = int(c)
        object.__setattr__(self, 'terms', MappingProxyType(clean))

    @classmethod
    def one(cls, n_vars: int) -> MultiPolynomial:
        return cls(n_vars, {(0,) * n_vars: 1})

    def coefficient(self, exponents: Sequence[int]) -> int:
        return self.terms.get(tuple(exponents), 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiPolynomial):
            return NotImplemented
        return self.n_vars == other.n_vars and dict(self.terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash((self.n_vars, frozenset(self.terms.items())))

    def __add__(self, other: MultiPolynomial) -> MultiPolynomial:
        merged = dict(self.terms)
        for key, c in other.terms.items():
            merged[key] = merged.get(key, 0) + c
        return MultiPolynomial(self.n_vars, merged)

    def __mul__(self, other: MultiPolynomial) -> MultiPolynomial:
        product: Dict[Tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                product[key] = product.get(key, 0) + c1 * c2
        return MultiPolynomial(self.n_vars, product)

    def truncate(self, degree: int) -> MultiPolynomial:
        """Drop terms with any exponent above degree."""
        return MultiPolynomial(self.n_vars, {e: c for e, c in self.terms.items() if max(e, default=0) <= degree})

    def render(self, prefix: str = "q") -> str:
        ordered = sorted(self.terms.items(), key=lambda item: (sum(item[0]), tuple(-e for e in item[0])))
        names = [f"{prefix}{i + 1}" for i in range(self.n_vars)]
        return render_terms([(c, _monomial(zip(names, exps))) for exps, c in ordered])

    def __str__(self) -> str:
        return self.render()
