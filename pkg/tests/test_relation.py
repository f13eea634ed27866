"""Data model and axiom predicate tests."""

import numpy as np
import pytest

from fuzzorder import (
    CarrierMismatchError,
    EmptyFamilyError,
    FuzzyRelation,
    check_order,
    extends,
    incomparable_pairs,
    is_antisymmetric,
    is_linear,
    is_reflexive,
    is_transitive,
    pointwise_inf,
)

from conftest import identity_relation


# ---------------------------------------------------------------- model


def test_construction_rejects_empty_carrier():
    with pytest.raises(ValueError, match="nonempty"):
        FuzzyRelation((), [])


def test_construction_rejects_non_square_grid():
    with pytest.raises(ValueError, match="2x2"):
        FuzzyRelation(("a", "b"), [[1, 0, 0], [0, 1, 0]])


def test_construction_rejects_out_of_range_values():
    with pytest.raises(ValueError, match=r"\[0, 1\]"):
        FuzzyRelation(("a",), [[1.5]])
    with pytest.raises(ValueError, match=r"\[0, 1\]"):
        FuzzyRelation(("a", "b"), [[1, -0.1], [0, 1]])


def test_construction_rejects_nan_and_infinity():
    with pytest.raises(ValueError, match="finite"):
        FuzzyRelation(("a",), [[float("nan")]])
    with pytest.raises(ValueError, match="finite"):
        FuzzyRelation(("a",), [[float("inf")]])


def test_construction_rejects_bad_labels():
    with pytest.raises(ValueError, match="distinct"):
        FuzzyRelation(("a", "a"), [[1, 0], [0, 1]])
    with pytest.raises(ValueError, match="nonempty strings"):
        FuzzyRelation(("a", ""), [[1, 0], [0, 1]])


def test_grid_is_immutable(order3):
    with pytest.raises(ValueError):
        order3.grid[0, 0] = 0.5


def test_construction_copies_input_array():
    source = np.array([[1.0, 0.5], [0.0, 1.0]])
    r = FuzzyRelation(("a", "b"), source)
    source[0, 1] = 0.9
    assert r.value("a", "b") == 0.5


def test_equality_is_bit_exact(order3):
    same = FuzzyRelation(order3.labels, order3.grid)
    assert same == order3
    assert order3.with_value("a", "c", 0.4000000001) != order3
    assert FuzzyRelation(("x", "y", "z"), order3.grid) != order3


def test_element_lookup(order7):
    assert order7.index_of("x3") == 2
    assert order7.element(0).label == "x1"
    assert order7.value("x3", "x1") == 0.15
    with pytest.raises(KeyError):
        order7.index_of("nope")
    with pytest.raises(IndexError):
        order7.index_of(7)


# ---------------------------------------------------------------- axioms


def test_reflexive_on_golden_sample(order3):
    assert is_reflexive(order3)


def test_reflexive_trivial_singleton():
    assert is_reflexive(FuzzyRelation(("a",), [[1]]))


def test_reflexive_fails_with_witness():
    r = FuzzyRelation(("p", "q"), [[0.9, 0], [0, 1]])
    verdict = is_reflexive(r)
    assert not verdict
    assert verdict.witnesses == (("p", 0.9),)


def test_antisymmetric_on_golden_sample(order7):
    assert is_antisymmetric(order7)


def test_antisymmetric_fails_with_witness():
    r = FuzzyRelation(("a", "b"), [[1, 0.3], [0.2, 1]])
    verdict = is_antisymmetric(r)
    assert not verdict
    assert verdict.witnesses == ((("a", "b"), 0.3, 0.2),)


def test_antisymmetric_vacuous_when_offdiagonal_zero():
    assert is_antisymmetric(identity_relation(4))


def test_transitive_on_golden_sample(order4):
    assert is_transitive(order4)


def test_transitive_fails_with_witness():
    r = FuzzyRelation(("a", "b", "c"), [[1, 0.5, 0], [0, 1, 0.5], [0, 0, 1]])
    verdict = is_transitive(r)
    assert not verdict
    assert verdict.witnesses == ((("a", "b", "c"), 0.0, 0.5),)


def test_transitive_identity():
    assert is_transitive(identity_relation(3))


def test_check_order_all_pass(order7):
    report = check_order(order7)
    assert report.is_order
    assert report.reflexive and report.antisymmetric and report.transitive
    assert report.reflexivity_witnesses == ()
    assert report.antisymmetry_witnesses == ()
    assert report.transitivity_witnesses == ()


def test_check_order_antisymmetry_only_failure():
    report = check_order(FuzzyRelation(("a", "b"), [[1, 0.3], [0.2, 1]]))
    assert report.reflexive and report.transitive and not report.antisymmetric
    assert not report.is_order


def test_check_order_reflexivity_failure():
    report = check_order(FuzzyRelation(("a",), [[0.5]]))
    assert not report.reflexive
    assert not report.is_order


def test_order_implies_unit_diagonal_and_one_direction(order7):
    assert check_order(order7).is_order
    assert (np.diagonal(order7.grid) == 1.0).all()
    g = order7.grid
    for i in range(order7.n):
        for j in range(order7.n):
            if i != j:
                assert not (g[i, j] > 0 and g[j, i] > 0)


# ---------------------------------------------------------------- linearity


def test_linear_on_linearized_sample(order3_linear):
    assert is_linear(order3_linear)


def test_not_linear_with_incomparable_witnesses(order7):
    verdict = is_linear(order7)
    assert not verdict
    labels = [(p.first.label, p.second.label) for p in verdict.witnesses]
    assert ("x1", "x2") in labels


def test_singleton_is_linear():
    assert is_linear(FuzzyRelation(("a",), [[1]]))


def test_incomparable_pairs_order7(order7):
    pairs = [(p.first.label, p.second.label) for p in incomparable_pairs(order7)]
    # frozen from an exhaustive scan of all 21 unordered pairs
    assert pairs == [("x1", "x2"), ("x2", "x3"), ("x4", "x5"), ("x4", "x7")]


def test_incomparable_pairs_order3(order3):
    pairs = [(p.first.label, p.second.label) for p in incomparable_pairs(order3)]
    assert pairs == [("a", "b"), ("b", "c")]


def test_incomparable_pairs_empty_for_linear(order7_linear):
    assert incomparable_pairs(order7_linear) == []


def test_linear_iff_no_incomparable_pairs(order3, order7, order7_linear):
    for r in (order3, order7, order7_linear, identity_relation(1)):
        assert bool(is_linear(r)) == (incomparable_pairs(r) == [])


# ---------------------------------------------------------------- extends


def test_linearization_extends_input(order7, order7_linear):
    assert extends(order7, order7_linear)


def test_extends_is_reflexive(order7):
    assert extends(order7, order7)


def test_extends_fails_backwards(order7, order7_linear):
    assert not extends(order7_linear, order7)
    assert order7_linear.value("x1", "x2") == 1 and order7.value("x1", "x2") == 0


def test_extends_carrier_mismatch(order3, order4):
    with pytest.raises(CarrierMismatchError):
        extends(order3, order4)


def test_extends_antisymmetry_of_the_ordering(order7, order7_linear):
    assert not (extends(order7, order7_linear) and extends(order7_linear, order7))


def test_extends_transitivity_of_the_ordering(order3):
    middle = order3.with_value("a", "b", 0.2)
    top = middle.with_value("b", "c", 0.7)
    assert extends(order3, middle) and extends(middle, top)
    assert extends(order3, top)


# ---------------------------------------------------------------- infimum


def test_pointwise_inf_singleton(order7):
    assert pointwise_inf([order7]) == order7


def test_pointwise_inf_entrywise_minimum():
    a = FuzzyRelation(("a", "b"), [[1, 1], [0, 1]])
    b = FuzzyRelation(("a", "b"), [[1, 0], [1, 1]])
    assert pointwise_inf([a, b]) == FuzzyRelation(("a", "b"), [[1, 0], [0, 1]])


def test_pointwise_inf_errors(order3, order4):
    with pytest.raises(EmptyFamilyError):
        pointwise_inf([])
    with pytest.raises(CarrierMismatchError):
        pointwise_inf([order3, order4])


def test_pointwise_inf_is_idempotent_and_permutation_insensitive(order3, order3_linear):
    first = pointwise_inf([order3, order3_linear])
    assert pointwise_inf([order3_linear, order3]) == first
    assert pointwise_inf([first, first]) == first


def test_pointwise_inf_extended_by_every_member(order3, order3_linear):
    inf = pointwise_inf([order3, order3_linear])
    assert extends(inf, order3)
    assert extends(inf, order3_linear)
