import pytest

from gscat.core import check_gs_axioms, check_oplax_cartesian
from gscat.errors import Infeasible, NotGsMonoidalMonad, TypeMismatch
from gscat.finrel import Rel
from gscat.monads import (check_kleisli_rel_isomorphism, check_kleisli_subcategories, check_multiset_scalars,
                          finset_presentation, get_monad, kleisli_category, kleisli_graph, kleisli_to_pspan,
                          open_kleisli, powerset_to_rel, rel_to_powerset)
from test.gsctest import SMALL_BUDGET, assert_fails, assert_passes


def test_powerset_compose_binds():
    K = kleisli_category("powerset", (1, 2))
    f = K.model.morphism(1, 2, [frozenset([0, 1])])
    g = K.model.morphism(2, 1, [frozenset([0]), frozenset()])
    assert K.compose(g, f) == K.model.morphism(1, 1, [frozenset([0])])
    assert powerset_to_rel(f) == Rel.from_pairs(1, 2, [(0, 0), (0, 1)])
    assert rel_to_powerset(powerset_to_rel(g)) == g


def test_homset_sizes_and_cap():
    assert len(kleisli_category("lifting", (2, 3)).hom(2, 3)) == 16
    assert len(finset_presentation((2, 3)).hom(3, 2)) == 8
    with pytest.raises(Infeasible):
        kleisli_category("powerset", (1, 4), cap=1000)
    assert not open_kleisli("multiset").hom(1, 2).finite


def test_kleisli_graph():
    lifting = open_kleisli("lifting").model
    f = lifting.morphism(2, 2, [None, (1,)])
    assert kleisli_graph(f) == Rel.from_pairs(2, 2, [(1, 1)])
    writer = open_kleisli("writer:2").model
    with pytest.raises(TypeMismatch):
        kleisli_graph(writer.identity(1))


def test_isomorphism_with_finrel():
    report = check_kleisli_rel_isomorphism((1, 2), **SMALL_BUDGET)
    assert_passes(report)


def test_subcategories():
    assert_passes(check_kleisli_subcategories((1, 2), **SMALL_BUDGET))


def test_multiset_scalars():
    report = check_multiset_scalars(4)
    assert_passes(report)
    P = open_kleisli("multiset")
    three = P.model.morphism(1, 1, [P.model.monad.decode([3], 1)])
    nine = P.model.morphism(1, 1, [P.model.monad.decode([9], 1)])
    assert P.compose(three, three) == nine


@pytest.mark.parametrize("name", ["powerset", "nonempty", "lifting"])
def test_ordered_kleisli_categories_are_oplax(name):
    K = kleisli_category(name, (1, 2))
    assert_passes(check_gs_axioms(K, **SMALL_BUDGET))
    assert_passes(check_oplax_cartesian(K, **SMALL_BUDGET))


def test_writer_kleisli_is_gs_but_not_from_gs_monad():
    K = kleisli_category("writer:2", (1, 2, 4))
    assert_passes(check_gs_axioms(K, **SMALL_BUDGET))
    with pytest.raises(NotGsMonoidalMonad) as excinfo:
        kleisli_to_pspan(get_monad("writer:2"))
    assert_fails(excinfo.value.report, "dup")
