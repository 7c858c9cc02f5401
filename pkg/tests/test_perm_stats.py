#!/usr/bin/env python3
"""
Permutation Statistics Tests
============================

Tests for descent sets, major index, peaks, lattice words, permutation
arithmetic and the type-B descent statistic.

Run with: pytest tests/test_perm_stats.py -v
"""

from itertools import permutations

import pytest

from errors import DuplicateLetters, WordError
from stats.permutations import (
    SignedPermutation,
    all_permutations,
    complement_word,
    compose,
    descent_set,
    descent_statistics,
    inverse,
    is_lattice_permutation,
    major_index,
    peak_set,
    signed_descent_set,
    type_b_descent_polynomial,
)


# =============================================================================
# Descents
# =============================================================================

class TestDescents:
    """Descent set, des and maj over arbitrary words."""

    def test_word_with_repeated_letters(self):
        stats = descent_statistics([2, 1, 1, 1, 3, 3, 2, 1, 3])
        assert stats.descent_set == frozenset({1, 6, 7})
        assert stats.des == 3
        assert stats.maj == 14

    def test_empty_and_single(self):
        assert descent_set([]) == frozenset()
        assert descent_statistics([5]).maj == 0

    def test_weakly_increasing_word_has_no_descents(self):
        assert descent_set([1, 1, 2, 2, 3]) == frozenset()

    def test_maj_is_mahonian(self):
        # maj over S_4 has the same distribution as inversions: [4]_q!
        counts = [0] * 7
        for perm in all_permutations(4):
            counts[major_index(perm)] += 1
        assert counts == [1, 3, 5, 6, 5, 3, 1]

    def test_eulerian_numbers(self):
        counts = [0] * 4
        for perm in all_permutations(4):
            counts[len(descent_set(perm))] += 1
        assert counts == [1, 11, 11, 1]


# =============================================================================
# Peaks and lattice words
# =============================================================================

class TestPeaks:
    """Interior peak positions."""

    @pytest.mark.parametrize("word,expected", [
        ((1, 3, 2), {2}),
        ((2, 1, 3), set()),
        ((1, 2, 3), set()),
        ((1, 4, 2, 5, 3), {2, 4}),
        ((3, 1), set()),
    ])
    def test_examples(self, word, expected):
        assert peak_set(word) == frozenset(expected)

    def test_repeated_letters_rejected(self):
        with pytest.raises(DuplicateLetters):
            peak_set([1, 2, 1])

    def test_peaks_never_adjacent_or_at_ends(self):
        for perm in all_permutations(5):
            peaks = peak_set(perm)
            assert all(1 < i < 5 for i in peaks)
            assert all(i + 1 not in peaks for i in peaks)


class TestLatticeWords:
    """Ballot condition on prefixes."""

    @pytest.mark.parametrize("word,expected", [
        ((1, 1, 2, 2), True),
        ((1, 2, 1, 2), True),
        ((2, 1, 1, 2), False),
        ((1, 2, 2, 1), False),
        ((1, 2, 3, 1), True),
        ((1, 3, 2), False),
        ((), True),
    ])
    def test_examples(self, word, expected):
        assert is_lattice_permutation(word) is expected

    def test_catalan_count(self):
        # lattice words with three 1's and three 2's
        words = set(permutations((1, 1, 1, 2, 2, 2)))
        assert sum(is_lattice_permutation(w) for w in words) == 5


# =============================================================================
# Permutation arithmetic
# =============================================================================

class TestArithmetic:
    """Inverse, composition and complement."""

    def test_inverse(self):
        assert inverse((2, 3, 1)) == (3, 1, 2)
        assert inverse(inverse((4, 1, 3, 2))) == (4, 1, 3, 2)

    def test_compose_applies_second_first(self):
        assert compose((2, 3, 1), (3, 1, 2)) == (1, 2, 3)
        assert compose((2, 1, 3), (1, 3, 2)) == (2, 3, 1)

    def test_complement(self):
        assert complement_word((1, 3, 2), 3) == (3, 1, 2)

    def test_non_permutation_rejected(self):
        with pytest.raises(WordError):
            inverse((1, 1, 2))
        with pytest.raises(WordError):
            compose((1, 2), (1, 2, 3))


# =============================================================================
# Type B
# =============================================================================

class TestTypeB:
    """Signed permutations with the p + 1 sentinel."""

    def test_small_descent_polynomials(self):
        assert type_b_descent_polynomial(1).coeffs == (1, 1)
        assert type_b_descent_polynomial(2).coeffs == (1, 6, 1)

    def test_total_count(self):
        assert type_b_descent_polynomial(3)(1) == 48

    def test_all_negative_descends_everywhere(self):
        assert signed_descent_set(SignedPermutation((-1, -2, -3))) == frozenset({1, 2, 3})

    def test_identity_has_no_descents(self):
        assert signed_descent_set(SignedPermutation((1, 2, 3))) == frozenset()

    def test_negative_last_letter_descends_to_sentinel(self):
        assert signed_descent_set(SignedPermutation((1, -2))) == frozenset({2})

    @pytest.mark.parametrize("values", [(1, 0), (1, -1), (2, 3)])
    def test_invalid_signed_permutations(self, values):
        with pytest.raises(WordError):
            SignedPermutation(values)
