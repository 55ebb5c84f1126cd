import pytest

from gscat.core.predicates import (check_dom_propositions, check_dup_discharge_uniqueness, check_weak_product, dom,
                                   is_functional, is_total, is_weakly_functional, mediating_candidates)
from gscat.errors import MissingObject
from gscat.finrel import Rel, as_presentation, open_finrel, rel_discharge, rel_dup, rel_id
from test.gsctest import SMALL_BUDGET, assert_fails, assert_passes


def test_total_and_functional_relations():
    P = open_finrel()
    both_images = Rel.from_pairs(1, 2, [(0, 0), (0, 1)])
    assert is_total(P, both_images)
    assert not is_functional(P, both_images)
    partial = Rel.from_pairs(2, 1, [(1, 0)])
    assert is_functional(P, partial)
    assert not is_total(P, partial)


def test_domain_is_partial_identity():
    P = open_finrel()
    R = Rel.from_pairs(2, 1, [(1, 0)])
    assert dom(P, R) == Rel.from_pairs(2, 2, [(1, 1)])
    assert dom(P, rel_id(3)) == rel_id(3)


def test_domain_needs_square_object():
    P = as_presentation(object_list=(2, 3))
    with pytest.raises(MissingObject):
        dom(P, Rel(3, 2))


def test_weak_functionality_in_finrel_is_functionality():
    P = open_finrel()
    R = Rel.from_pairs(1, 2, [(0, 0), (0, 1)])
    assert not is_weakly_functional(P, R)
    shared, doubled = mediating_candidates(P, R)
    assert shared != doubled


def test_dom_propositions_hold_in_finrel():
    assert_passes(check_dom_propositions(as_presentation(object_list=(1, 2, 4)), **SMALL_BUDGET))


def test_weak_product_in_finrel():
    P = as_presentation(object_list=(1, 2, 4))
    assert_passes(check_weak_product(P, 1, 2, **SMALL_BUDGET))
    assert_passes(check_weak_product(P, 2, 2, **SMALL_BUDGET))


def test_same_structure_is_unique_in_finrel():
    P = as_presentation(object_list=(1, 2, 4))
    report = check_dup_discharge_uniqueness(P, rel_dup, rel_discharge)
    assert_passes(report)
    assert report.counts["dup-equivalent"] == 2
    assert report.counts["discharge-equivalent"] == 3
    assert report.notes == []


def test_empty_discharger_is_not_equivalent():
    P = as_presentation(object_list=(1, 2))
    w = assert_fails(check_dup_discharge_uniqueness(P, None, lambda a: Rel(a, 1)), "discharge-equivalent")
    assert w.values["object"] == 1
