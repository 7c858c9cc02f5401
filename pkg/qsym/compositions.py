"""
Compositions and Fundamental Quasi-Symmetric Functions
======================================================

Compositions of p correspond to subsets of [p-1] through their partial sums.
F_alpha is the sum of x_{i_1} ... x_{i_p} over 1 <= i_1 <= ... <= i_p with
strict rises exactly required at the partial sums of alpha. Expansions are
truncated to n variables and stored as MultiPolynomial values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import accumulate, combinations, combinations_with_replacement
from typing import Dict, FrozenSet, Iterable, List, Tuple

from algebra.polynomials import MultiPolynomial
from errors import InvalidArgument

MonomialExpansion = MultiPolynomial


@dataclass(frozen=True, order=True)
class Composition:
    """Ordered positive parts."""

    parts: Tuple[int, ...]

    def __post_init__(self) -> None:
        if any(part < 1 for part in self.parts):
            raise InvalidArgument(f"composition parts must be positive: {list(self.parts)}")

    @classmethod
    def from_descent_set(cls, descents: Iterable[int], p: int) -> Composition:
        cuts = [0] + sorted(descents) + [p]
        return cls(tuple(b - a for a, b in zip(cuts, cuts[1:]) if b > a))

    @property
    def degree(self) -> int:
        return sum(self.parts)

    def descent_set(self) -> FrozenSet[int]:
        """Partial sums, last one excluded."""
        return frozenset(list(accumulate(self.parts))[:-1])

    def render(self) -> str:
        return "(" + ",".join(str(part) for part in self.parts) + ")"


def compositions(p: int) -> List[Composition]:
    """All compositions of p, ordered by their descent sets."""
    subsets = [frozenset(c) for k in range(max(p, 1)) for c in combinations(range(1, p), k)]
    return [Composition.from_descent_set(s, p) for s in subsets]


def fundamental_expand(alpha: Composition, n_vars: int) -> MonomialExpansion:
    """F_alpha in n_vars variables."""
    if n_vars < 1:
        raise InvalidArgument(f"n_vars must be positive, got {n_vars}")
    strict = alpha.descent_set()
    terms: Dict[Tuple[int, ...], int] = {}
    for indices in combinations_with_replacement(range(1, n_vars + 1), alpha.degree):
        if all(indices[k - 1] < indices[k] for k in strict):
            exponents = [0] * n_vars
            for i in indices:
                exponents[i - 1] += 1
            key = tuple(exponents)
            terms[key] = terms.get(key, 0) + 1
    return MultiPolynomial(n_vars, terms)


@dataclass
class QsymElement:
    """Integer combination of fundamental quasi-symmetric functions of one degree."""

    degree: int
    coeffs: Dict[Composition, int] = field(default_factory=dict)

    def add(self, alpha: Composition, count: int = 1) -> None:
        if alpha.degree != self.degree:
            raise InvalidArgument(f"composition {alpha.render()} does not have degree {self.degree}")
        self.coeffs[alpha] = self.coeffs.get(alpha, 0) + count
        if not self.coeffs[alpha]:
            del self.coeffs[alpha]

    def expand(self, n_vars: int) -> MonomialExpansion:
        total = MultiPolynomial(n_vars, {})
        for alpha, c in self.coeffs.items():
            total = total + fundamental_expand(alpha, n_vars) * MultiPolynomial(n_vars, {(0,) * n_vars: c})
        return total

    def render(self) -> str:
        pieces = []
        for alpha in sorted(self.coeffs):
            c = self.coeffs[alpha]
            body = f"F{alpha.render()}" if c == 1 else f"{c}*F{alpha.render()}"
            pieces.append(body)
        return " + ".join(pieces) if pieces else "0"

    def to_dict(self) -> Dict[str, int]:
        return {alpha.render(): c for alpha, c in sorted(self.coeffs.items())}
