#!/usr/bin/env python3
"""
Labeled Poset Tests
===================

Tests for poset construction, linear extensions, order ideals, chains,
labelings, skew shapes and the JSON input schemas.

Run with: pytest tests/test_poset_core.py -v
"""

import json
from itertools import permutations
from math import factorial

import networkx as nx
import pytest

from config import OracleBudget, PpartConfig, set_config
from errors import (
    BudgetExceeded,
    CycleError,
    GraphError,
    ImproperLabeling,
    LabelClash,
    LabelError,
    PosetError,
    ShapeError,
)
from poset.core import (
    LabelingKind,
    antichain,
    chain_poset,
    classify_labeling,
    complement_labeling,
    count_linear_extensions,
    disjoint_union,
    empty_poset,
    graded_chain_length,
    ideal_multichain_count,
    labeled_chain,
    labelings_equivalent,
    linear_extensions,
    maximal_chains,
    order_ideals,
    poset_from_covers,
)
from oracle.enumeration import topological_order
from poset.schemas import load_graph, load_poset, load_shape
from poset.shapes import Shape, cell_poset, shape_to_poset
from stats.permutations import descent_set
from posets import SMALL_POSETS


def words(P):
    return [ext.render() for ext in linear_extensions(P)]


# =============================================================================
# Construction
# =============================================================================

class TestConstruction:
    """poset_from_covers and the builders."""

    def test_relation_is_transitive_closure(self):
        P = poset_from_covers(3, [(1, 2), (2, 3)])
        assert P.relation == frozenset({(1, 2), (2, 3), (1, 3)})
        assert P.covers == ((1, 2), (2, 3))

    def test_antichain_has_empty_relation(self):
        assert antichain(3).relation == frozenset()

    def test_cycle_raises(self):
        with pytest.raises(CycleError):
            poset_from_covers(3, [(1, 2), (2, 3), (3, 1)])

    def test_out_of_range_cover_raises(self):
        with pytest.raises(PosetError):
            poset_from_covers(2, [(1, 3)])

    def test_incomparable_equal_labels_raise(self):
        with pytest.raises(LabelError):
            antichain(2, [1, 1])

    def test_comparable_equal_labels_allowed(self):
        P = labeled_chain(3, "constant")
        assert P.omega == (1, 1, 1)
        assert not P.is_proper

    def test_unknown_chain_kind(self):
        with pytest.raises(LabelError):
            labeled_chain(2, "sideways")

    def test_redundant_cover_is_dropped_from_hasse(self):
        P = poset_from_covers(3, [(1, 2), (2, 3), (1, 3)])
        assert P.covers == ((1, 2), (2, 3))

    def test_to_dict_round_trip(self, fig1):
        data = fig1.to_dict()
        assert poset_from_covers(data['p'], data['covers'], data['labels']) == fig1


class TestCoverValidation:
    """Cycles, malformed pairs and element order."""

    def test_ordered_elements_respect_covers(self):
        order = topological_order(poset_from_covers(4, [(3, 1), (1, 2), (4, 2)]))
        assert order == [3, 1, 4, 2]

    def test_cycle_message_names_members(self):
        with pytest.raises(CycleError, match="cycle through"):
            poset_from_covers(2, [(1, 2), (2, 1)])

    def test_self_loop_is_a_cycle(self):
        with pytest.raises(CycleError):
            poset_from_covers(2, [(1, 1)])

    def test_long_cycle_is_detected(self):
        covers = [(i, i + 1) for i in range(1, 700)] + [(700, 1)]
        with pytest.raises(CycleError):
            poset_from_covers(700, covers)

    def test_malformed_pair(self):
        with pytest.raises(PosetError, match="pairs"):
            poset_from_covers(3, [(1, 2, 3)])

    def test_negative_element_count(self):
        with pytest.raises(PosetError):
            poset_from_covers(-1, [])


# =============================================================================
# Linear extensions
# =============================================================================

class TestLinearExtensions:
    """Linear extensions as label words."""

    def test_three_element_example(self, fig1):
        assert words(fig1) == ["213", "231"]

    def test_antichain_gives_all_permutations(self):
        assert words(antichain(3)) == ["123", "132", "213", "231", "312", "321"]

    def test_natural_chain(self):
        assert words(labeled_chain(4)) == ["1234"]

    def test_empty_poset_has_one_empty_extension(self):
        extensions = linear_extensions(empty_poset())
        assert len(extensions) == 1
        assert extensions[0].word == ()

    def test_two_digit_labels_are_space_separated(self):
        P = antichain(2, [3, 12])
        assert words(P) == ["3 12", "12 3"]

    @pytest.mark.parametrize("P", SMALL_POSETS)
    def test_count_matches_topological_sorts(self, P):
        sorts = sum(1 for _ in nx.all_topological_sorts(P.graph)) if P.p else 1
        assert count_linear_extensions(P) == sorts == len(linear_extensions(P))

    def test_budget_exceeded(self):
        set_config(PpartConfig(budget=OracleBudget(max_linear_extensions=5)))
        with pytest.raises(BudgetExceeded):
            linear_extensions(antichain(3))

    def test_explicit_limit_overrides_config(self):
        assert len(linear_extensions(antichain(3), limit=factorial(3))) == 6


# =============================================================================
# Ideals and chains
# =============================================================================

class TestIdealsAndChains:
    """Order ideals, maximal chains and ideal multichains."""

    def test_order_ideals_of_example(self, fig1):
        ideals = [i.sorted_members() for i in order_ideals(fig1)]
        assert ideals == [(), (2,), (1, 2), (2, 3), (1, 2, 3)]

    @pytest.mark.parametrize("P", SMALL_POSETS)
    def test_order_ideals_match_subset_scan(self, P):
        expected = set()
        for mask in range(1 << P.p):
            members = {x for x in P.elements if mask >> (x - 1) & 1}
            if all(P.down_sets[x] <= members for x in members):
                expected.add(frozenset(members))
        assert {i.members for i in order_ideals(P)} == expected

    def test_maximal_chains_of_v(self, v_poset):
        assert maximal_chains(v_poset) == [(1, 2), (1, 3)]

    def test_graded_length(self, v_poset):
        assert graded_chain_length(v_poset) == 1
        assert graded_chain_length(labeled_chain(4)) == 3

    def test_ungraded_poset(self):
        P = poset_from_covers(4, [(1, 2), (1, 3), (3, 4)])
        assert graded_chain_length(P) is None

    def test_ideal_multichains_of_chain(self):
        # multisets of size 2 from m values
        assert [ideal_multichain_count(labeled_chain(2), m) for m in range(5)] == [0, 1, 3, 6, 10]


# =============================================================================
# Labelings
# =============================================================================

class TestLabelings:
    """Complement, classification, equivalence and unions."""

    def test_complement(self, fig1):
        assert complement_labeling(fig1).omega == (3, 2, 1)
        assert complement_labeling(fig1).relation == fig1.relation

    def test_complement_requires_proper(self):
        with pytest.raises(ImproperLabeling):
            complement_labeling(labeled_chain(2, "constant"))

    def test_classify(self, fig1):
        assert classify_labeling(labeled_chain(3)) is LabelingKind.NATURAL
        assert classify_labeling(labeled_chain(3, "strict")) is LabelingKind.STRICT
        assert classify_labeling(fig1) is LabelingKind.MIXED
        assert classify_labeling(antichain(3)) is LabelingKind.NATURAL

    def test_equivalent_labelings(self, v_poset):
        assert labelings_equivalent(v_poset, [1, 2, 3], [1, 3, 2])
        assert not labelings_equivalent(labeled_chain(2), [1, 2], [2, 1])

    @pytest.mark.parametrize("P", [P for P in SMALL_POSETS if P.p == 3])
    def test_equivalent_labelings_share_descent_sets(self, P):
        def multiset(omega):
            return sorted(sorted(descent_set(e.word)) for e in linear_extensions(P.with_labels(omega)))

        labelings = list(permutations(range(1, 4)))
        for first in labelings:
            for second in labelings:
                if labelings_equivalent(P, first, second):
                    assert multiset(first) == multiset(second)

    def test_disjoint_union(self):
        union = disjoint_union(labeled_chain(2), labeled_chain(1, offset=2))
        assert union.p == 3
        assert union.relation == frozenset({(1, 2)})
        assert words(union) == ["123", "132", "312"]

    def test_disjoint_union_label_clash(self):
        with pytest.raises(LabelClash):
            disjoint_union(labeled_chain(2), labeled_chain(2))

    def test_empty_is_union_identity(self, fig1):
        assert disjoint_union(fig1, empty_poset()) == fig1

    def test_chain_poset_reads_word(self):
        assert words(chain_poset([2, 3, 1])) == ["231"]


# =============================================================================
# Shapes
# =============================================================================

class TestShapes:
    """Skew shapes and their cell posets."""

    def test_padding_and_sizes(self):
        shape = Shape.of([3, 2, 2], [2, 1])
        assert shape.inner == (2, 1, 0)
        assert (shape.eta, shape.eta_inner, shape.size) == (7, 3, 4)

    def test_kreweras_example_cells(self):
        poset, cells = cell_poset(Shape.of([3, 2, 2], [2, 1, 0]))
        assert cells == [(1, 3), (2, 2), (3, 1), (3, 2)]
        assert poset.covers == ((2, 4), (3, 4))

    @pytest.mark.parametrize("outer,inner", [
        ([2, 3], []),
        ([2, 2], [3]),
        ([2, -1], []),
        ([1], [0, 1]),
    ])
    def test_invalid_shapes(self, outer, inner):
        with pytest.raises(ShapeError):
            Shape.of(outer, inner)

    def test_box_poset(self):
        P = shape_to_poset([2, 2])
        assert P.covers == ((1, 2), (1, 3), (2, 4), (3, 4))
        assert classify_labeling(P) is LabelingKind.NATURAL


# =============================================================================
# Input files
# =============================================================================

class TestSchemas:
    """JSON loaders and their error mapping."""

    def test_load_poset(self, fig1, fig1_file):
        assert load_poset(fig1_file) == fig1

    def test_labels_default_to_natural(self, tmp_path):
        path = tmp_path / "chain.json"
        path.write_text(json.dumps({"p": 2, "covers": [[1, 2]]}), encoding="utf-8")
        assert load_poset(path).omega == (1, 2)

    @pytest.mark.parametrize("payload", [
        {"p": 2, "covers": [[1, 2, 3]]},
        {"p": 2, "covers": [[1, 3]]},
        {"p": 2, "labels": [1]},
        {"p": 2, "labels": [0, 1]},
        {"covers": []},
    ])
    def test_invalid_poset_files(self, tmp_path, payload):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(payload), encoding="utf-8")
        with pytest.raises(PosetError):
            load_poset(path)

    def test_unreadable_file(self, tmp_path):
        with pytest.raises(PosetError):
            load_poset(tmp_path / "missing.json")

    def test_cyclic_file(self, tmp_path):
        path = tmp_path / "cycle.json"
        path.write_text(json.dumps({"p": 2, "covers": [[1, 2], [2, 1]]}), encoding="utf-8")
        with pytest.raises(CycleError):
            load_poset(path)

    def test_load_graph(self, tmp_path):
        path = tmp_path / "k3.json"
        path.write_text(json.dumps({"n": 3, "edges": [[1, 2], [2, 3], [3, 1]]}), encoding="utf-8")
        assert load_graph(path).sorted_edges() == [(1, 2), (1, 3), (2, 3)]

    @pytest.mark.parametrize("payload", [
        {"n": 2, "edges": [[1, 1]]},
        {"n": 2, "edges": [[1, 2], [2, 1]]},
        {"n": 2, "edges": [[1, 3]]},
    ])
    def test_invalid_graphs(self, tmp_path, payload):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(payload), encoding="utf-8")
        with pytest.raises(GraphError):
            load_graph(path)

    def test_load_shape(self, tmp_path):
        path = tmp_path / "shape.json"
        path.write_text(json.dumps({"outer": [3, 2, 2], "inner": [2, 1]}), encoding="utf-8")
        assert load_shape(path) == Shape((3, 2, 2), (2, 1, 0))

    def test_invalid_shape_file(self, tmp_path):
        path = tmp_path / "shape.json"
        path.write_text(json.dumps({"outer": [1, 2]}), encoding="utf-8")
        with pytest.raises(ShapeError):
            load_shape(path)
