import pytest

from gscat.errors import TypeMismatch
from gscat.finrel import Rel, open_finrel, rel_dup, rel_id
from gscat.monads import open_kleisli
from gscat.termgraph import (Assignment, Box, Operation, TermGraph, check_eval_functorial,
                             check_sharing_vs_copying, check_term_graph_axioms, layering, sharing_pair, tg_dup,
                             tg_eval, tg_from_op)
from test.gsctest import assert_passes

F = Operation("f", ["A"], ["B"])


@pytest.fixture
def finrel():
    return open_finrel()


def test_single_box_evaluates_to_its_morphism(finrel):
    f = Rel.from_pairs(2, 3, [(0, 1), (1, 0), (1, 2)])
    alpha = Assignment({"A": 2, "B": 3}, {"f": f})
    assert tg_eval(tg_from_op(F), finrel, alpha) == f
    assert tg_eval(tg_dup(["A"]), finrel, alpha) == rel_dup(2)


def test_sharing_evaluates_like_copying_only_for_functions(finrel):
    shared, copied = sharing_pair(F)
    total = Rel.from_pairs(1, 2, [(0, 0), (0, 1)])
    alpha = Assignment({"A": 1, "B": 2}, {"f": total})
    assert tg_eval(shared, finrel, alpha) == Rel.from_pairs(1, 4, [(0, 0), (0, 3)])
    assert tg_eval(copied, finrel, alpha) == Rel.from_pairs(1, 4, [(0, 0), (0, 1), (0, 2), (0, 3)])
    function = Rel.from_pairs(1, 2, [(0, 1)])
    alpha = Assignment({"A": 1, "B": 2}, {"f": function})
    assert tg_eval(shared, finrel, alpha) == tg_eval(copied, finrel, alpha)


def test_layering_order():
    t = TermGraph(["A", "B", "A", "B"], [0, 2], [3, 1], [Box(F, [2], [3]), Box(F, [0], [1])])
    assert layering(t) == [0, 1]
    assert layering(t, reverse=True) == [1, 0]
    f = Rel.from_pairs(1, 2, [(0, 1)])
    P = open_finrel()
    alpha = Assignment({"A": 1, "B": 2}, {"f": f})
    assert tg_eval(t, P, alpha) == tg_eval(t, P, alpha, reverse=True) == Rel.from_pairs(1, 4, [(0, 3)])


def test_assignment_type_errors(finrel):
    with pytest.raises(TypeMismatch):
        Assignment({"A": 1}, {"f": rel_id(1)}).obj(finrel, ["B"])
    alpha = Assignment({"A": 1, "B": 2}, {"f": rel_id(1)})
    with pytest.raises(TypeMismatch):
        tg_eval(tg_from_op(F), finrel, alpha)


def test_term_graph_axioms():
    report = check_term_graph_axioms(cases=25, seed=1)
    assert_passes(report)
    assert report.counts["hexagon"] == 25
    assert report.counts["symmetry-unit"] == 50


def test_eval_is_functorial():
    assert_passes(check_eval_functorial(open_finrel(), cases=15, seed=2))
    assert_passes(check_eval_functorial(open_kleisli("lifting"), cases=15, seed=2))


def test_sharing_vs_copying():
    assert_passes(check_sharing_vs_copying(open_finrel(), cases=20, seed=3))
