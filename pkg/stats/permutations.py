"""
Permutation Statistics
======================

Descent sets, major index (greater index), peaks, lattice words and the
type-B descent statistic. Positions are 1-based throughout.
"""

from dataclasses import dataclass
from itertools import permutations as _permutations
from itertools import product
from typing import FrozenSet, Iterator, Sequence, Tuple

from algebra.polynomials import IntPolynomial
from errors import DuplicateLetters, WordError

Word = Tuple[int, ...]


@dataclass(frozen=True)
class DescentStatistics:
    """Descent set S, des = |S| and maj = sum of S."""

    descent_set: FrozenSet[int]
    des: int
    maj: int


def descent_set(word: Sequence[int]) -> FrozenSet[int]:
    return frozenset(j for j in range(1, len(word)) if word[j - 1] > word[j])


def descent_statistics(word: Sequence[int]) -> DescentStatistics:
    """Descent set, descent count and major index of a word over any alphabet."""
    s = descent_set(word)
    return DescentStatistics(s, len(s), sum(s))


def major_index(word: Sequence[int]) -> int:
    return sum(descent_set(word))


def peak_set(word: Sequence[int]) -> FrozenSet[int]:
    """
    Interior positions i with word(i-1) < word(i) > word(i+1).

    Raises:
        DuplicateLetters: If a letter repeats
    """
    if len(set(word)) != len(word):
        raise DuplicateLetters(f"peak set needs distinct letters: {list(word)}")
    return frozenset(i for i in range(2, len(word)) if word[i - 2] < word[i - 1] > word[i])


def is_lattice_permutation(word: Sequence[int]) -> bool:
    """True when every prefix has at least as many k's as (k+1)'s, for every k."""
    counts: dict[int, int] = {}
    for letter in word:
        counts[letter] = counts.get(letter, 0) + 1
        if letter > 1 and counts[letter] > counts.get(letter - 1, 0):
            return False
    return True


# =============================================================================
# Permutations of [p]
# =============================================================================

def _check_permutation(perm: Sequence[int]) -> None:
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise WordError(f"not a permutation of 1..{len(perm)}: {list(perm)}")


def all_permutations(p: int) -> Iterator[Word]:
    """Permutations of 1..p in lexicographic order."""
    return _permutations(range(1, p + 1))


def inverse(perm: Sequence[int]) -> Word:
    _check_permutation(perm)
    result = [0] * len(perm)
    for i, v in enumerate(perm, start=1):
        result[v - 1] = i
    return tuple(result)


def compose(first: Sequence[int], second: Sequence[int]) -> Word:
    """first o second, i.e. i -> first(second(i))."""
    _check_permutation(first)
    _check_permutation(second)
    if len(first) != len(second):
        raise WordError("permutations of different sizes")
    return tuple(first[v - 1] for v in second)


def complement_word(word: Sequence[int], p: int) -> Word:
    """Letterwise i -> p + 1 - i."""
    return tuple(p + 1 - w for w in word)


# =============================================================================
# Type B
# =============================================================================

@dataclass(frozen=True)
class SignedPermutation:
    """Values pi(1..p), nonzero, with |pi| a permutation of 1..p."""

    values: Word

    def __post_init__(self) -> None:
        if 0 in self.values:
            raise WordError("signed permutation values must be nonzero")
        _check_permutation([abs(v) for v in self.values])

    @property
    def p(self) -> int:
        return len(self.values)


def _type_b_key(v: int, p: int) -> int:
    # 1 < 2 < ... < p+1 < -p < ... < -1
    return v if v > 0 else 2 * (p + 1) + v


def signed_descent_set(pi: SignedPermutation) -> FrozenSet[int]:
    """Positions i in 1..p with pi(i) > pi(i+1), with sentinel pi(p+1) = p + 1."""
    p = pi.p
    keys = [_type_b_key(v, p) for v in pi.values] + [p + 1]
    return frozenset(i for i in range(1, p + 1) if keys[i - 1] > keys[i])


def signed_permutations(p: int) -> Iterator[SignedPermutation]:
    for perm in _permutations(range(1, p + 1)):
        for signs in product((1, -1), repeat=p):
            yield SignedPermutation(tuple(s * v for s, v in zip(signs, perm)))


def type_b_descent_polynomial(p: int) -> IntPolynomial:
    """Sum of t^|S(pi)| over all 2^p p! signed permutations."""
    counts = [0] * (p + 1)
    for pi in signed_permutations(p):
        counts[len(signed_descent_set(pi))] += 1
    return IntPolynomial(tuple(counts))
