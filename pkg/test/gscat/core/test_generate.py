import pytest

from gscat.core.generate import check_order_contains, generate_oplax_preorder
from gscat.errors import MissingPreorder
from gscat.finrel import Rel, as_presentation, rel_id
from gscat.models import PresentationFixture
from gscat.monads import finset_presentation
from test.gsctest import assert_passes, terminal_presentation_document


def test_generated_order_is_contained_in_inclusion():
    P = as_presentation(object_list=(1, 2))
    generated = generate_oplax_preorder(P)
    assert_passes(check_order_contains(generated, P))
    assert generated.name == "finrel[generated]"


def test_generated_order_relates_discharge_generator():
    P = as_presentation(object_list=(1, 2))
    generated = generate_oplax_preorder(P)
    empty = Rel(1, 1)
    assert generated.leq(empty, rel_id(1))
    assert not generated.leq(rel_id(1), empty)
    assert generated.leq(rel_id(2), rel_id(2))


def test_generation_is_idempotent():
    generated = generate_oplax_preorder(as_presentation(object_list=(1, 2)))
    again = generate_oplax_preorder(generated, extend=True)
    assert again.generated_order.pairs == generated.generated_order.pairs
    assert again.generated_order.size() == generated.generated_order.size()


def test_generated_order_on_functions_is_equality():
    P = finset_presentation((1, 2))
    order = generate_oplax_preorder(P).generated_order
    assert all(i == j for pairs in order.pairs.values() for i, j in pairs)
    assert order.size() == sum(len(P.hom(a, b)) for a in (1, 2) for b in (1, 2))


def test_extending_an_oplax_order_adds_nothing():
    P = as_presentation(object_list=(1, 2))
    related = sum(1 for a in (1, 2) for b in (1, 2) for f in P.hom(a, b) for g in P.hom(a, b) if P.leq(f, g))
    assert generate_oplax_preorder(P, extend=True).generated_order.size() == related
    with pytest.raises(MissingPreorder):
        generate_oplax_preorder(PresentationFixture(terminal_presentation_document(leq=False)).build(), extend=True)
