import random

import pytest

from gscat.errors import InterfaceMismatch, MalformedPresentation, SortMismatch
from gscat.termgraph import (Box, Operation, Signature, TermGraph, sharing_pair, shuffled, tg_compose,
                             tg_discharge, tg_dup, tg_equal, tg_from_op, tg_id, tg_invariant, tg_symmetry,
                             tg_tensor, tg_unreachable_boxes)

F = Operation("f", ["A"], ["B"])
G = Operation("g", ["A", "A"], ["A"])


def test_signature_rejects_undeclared_sorts():
    sig = Signature(["A", "B"], [("f", ["A"], ["B"])])
    assert sig.op("f") == F
    with pytest.raises(SortMismatch):
        Signature(["A"], [F])
    with pytest.raises(SortMismatch):
        sig.op("h")


def test_malformed_graphs():
    with pytest.raises(MalformedPresentation):
        TermGraph(["A"], [0, 0], [0])
    with pytest.raises(MalformedPresentation):
        TermGraph(["A"], [], [0])
    with pytest.raises(MalformedPresentation):
        TermGraph(["A"], [0], [1])
    loop = Operation("h", ["A"], ["A"])
    with pytest.raises(MalformedPresentation):
        TermGraph(["A"], [], [0], [Box(loop, [0], [0])])
    with pytest.raises(SortMismatch):
        TermGraph(["B", "B"], [0], [1], [Box(F, [0], [1])])
    with pytest.raises(InterfaceMismatch):
        TermGraph(["A", "B"], [0], [1], [Box(F, [0, 0], [1])])


def test_compose_checks_interfaces():
    with pytest.raises(SortMismatch):
        tg_compose(tg_id(["A"]), tg_id(["B"]))
    with pytest.raises(InterfaceMismatch):
        tg_compose(tg_id(["A"]), tg_id(["A", "A"]))


def test_structure_graphs():
    assert tg_dup(["A", "B"]).outputs == (0, 1, 0, 1)
    assert tg_symmetry(["A"], ["B"]).output_word == ("B", "A")
    assert tg_discharge(["A"]).output_word == ()
    t = tg_tensor(tg_from_op(F), tg_from_op(G))
    assert t.input_word == ("A", "A", "A")
    assert t.output_word == ("B", "A")


def test_gs_axioms_hold_up_to_isomorphism():
    w = ("A",)
    dup, ident = tg_dup(w), tg_id(w)
    assert tg_equal(tg_compose(tg_tensor(dup, ident), dup), tg_compose(tg_tensor(ident, dup), dup))
    assert tg_equal(tg_compose(tg_symmetry(w, w), dup), dup)
    assert tg_equal(tg_compose(tg_tensor(tg_discharge(w), ident), dup), ident)


def test_sharing_is_not_copying():
    shared, copied = sharing_pair(F)
    assert len(shared.boxes) == 1
    assert len(copied.boxes) == 2
    assert not tg_equal(shared, copied)


def test_discarded_box_stays():
    dropped = tg_compose(tg_discharge(F.outputs), tg_from_op(F))
    assert tg_unreachable_boxes(dropped) == [0]
    assert not tg_equal(dropped, tg_discharge(F.inputs))


def test_relabelling_invariance():
    rng = random.Random(7)
    t = tg_compose(tg_from_op(G), tg_tensor(tg_id(["A"]), tg_compose(tg_id(["A"]), tg_id(["A"]))))
    t = tg_compose(tg_dup(["A"]), t)
    for _ in range(5):
        s = shuffled(t, rng)
        assert tg_equal(s, t)
        assert tg_invariant(s) == tg_invariant(t)


def test_port_order_matters():
    swapped = tg_compose(tg_from_op(G), tg_symmetry(["A"], ["A"]))
    assert not tg_equal(swapped, tg_from_op(G))


def test_hexagon_and_unit_symmetry():
    w, v, x = ("A",), ("B", "A"), ("B",)
    hexagon = tg_compose(tg_tensor(tg_id(v), tg_symmetry(w, x)), tg_tensor(tg_symmetry(w, v), tg_id(x)))
    assert tg_equal(tg_symmetry(w, v + x), hexagon)
    assert not tg_equal(tg_symmetry(w, v + x), tg_tensor(tg_symmetry(w, v), tg_id(x)))
    assert tg_equal(tg_symmetry(v, ()), tg_id(v))
    assert tg_equal(tg_symmetry((), v), tg_id(v))
