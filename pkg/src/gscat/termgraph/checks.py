#!/usr/bin/env python

import logging
import random

from ..core.predicates import is_functional
from ..core.report import LawChecker
from .evaluate import tg_eval
from .generators import random_assignment, random_signature, random_term_graph, random_word, shuffled
from .graph import (tg_compose, tg_discharge, tg_dup, tg_from_op, tg_id, tg_symmetry, tg_tensor,
                    tg_unreachable_boxes)
from .iso import tg_equal, tg_invariant

log = logging.getLogger(__name__)

DEFAULT_CASES = 500


def _chain(rng, signature, count, inputs=None):
    """``count`` composable random graphs, first to last."""
    graphs = []
    word = inputs
    for _ in range(count):
        t = random_term_graph(signature, rng, boxes=rng.randint(0, 3), inputs=word)
        graphs.append(t)
        word = t.output_word
    return graphs


def _law(checker, law, lhs, rhs, **items):
    checker.expect_equal(law, lhs, rhs, tg_equal, **items)


def check_term_graph_axioms(cases=DEFAULT_CASES, seed=0):
    """
    Check the symmetric monoidal and gs-monoidal axioms under :func:`tg_equal` on random graphs over
    random signatures, together with relabelling invariance of equality and the failure of naturality
    of the duplicator and discharger once a box is involved.

    :rtype: LawReport
    """
    rng = random.Random(seed)
    checker = LawChecker("term-graph-axioms", label=str)
    for case in range(cases):
        sig = random_signature(rng)
        s, t, r = _chain(rng, sig, 3)
        u = random_term_graph(sig, rng, boxes=rng.randint(0, 2))
        w, v = random_word(sig.sorts, rng), random_word(sig.sorts, rng)

        _law(checker, "equal-reflexive", s, s, s=s)
        _law(checker, "relabel-invariant", shuffled(s, rng), s, s=s)
        checker.expect("invariant-hash", tg_invariant(shuffled(s, rng)) == tg_invariant(s), s=s)
        checker.expect("equal-symmetric", tg_equal(s, t) == tg_equal(t, s), s=s, t=t)

        _law(checker, "identity-left", tg_compose(tg_id(s.output_word), s), s, s=s)
        _law(checker, "identity-right", tg_compose(s, tg_id(s.input_word)), s, s=s)
        _law(checker, "associativity", tg_compose(r, tg_compose(t, s)), tg_compose(tg_compose(r, t), s),
             r=r, s=s, t=t)
        _law(checker, "tensor-associativity", tg_tensor(tg_tensor(s, t), u), tg_tensor(s, tg_tensor(t, u)),
             s=s, t=t, u=u)
        _law(checker, "tensor-unit", tg_tensor(tg_id(()), s), s, s=s)

        s2, t2 = _chain(rng, sig, 2)
        _law(checker, "bifunctoriality", tg_tensor(tg_compose(t, s), tg_compose(t2, s2)),
             tg_compose(tg_tensor(t, t2), tg_tensor(s, s2)), s=s, t=t, s2=s2, t2=t2)
        lhs = tg_compose(tg_symmetry(s.output_word, u.output_word), tg_tensor(s, u))
        rhs = tg_compose(tg_tensor(u, s), tg_symmetry(s.input_word, u.input_word))
        _law(checker, "symmetry-naturality", lhs, rhs, s=s, u=u)
        _law(checker, "symmetry-involutive", tg_compose(tg_symmetry(v, w), tg_symmetry(w, v)), tg_id(w + v),
             w=w, v=v)
        _law(checker, "symmetry-unit", tg_symmetry(w, ()), tg_id(w), w=w)
        _law(checker, "symmetry-unit", tg_symmetry((), w), tg_id(w), w=w)
        x = random_word(sig.sorts, rng)
        hexagon = tg_compose(tg_tensor(tg_id(v), tg_symmetry(w, x)), tg_tensor(tg_symmetry(w, v), tg_id(x)))
        _law(checker, "hexagon", tg_symmetry(w, v + x), hexagon, w=w, v=v, x=x)

        ident = tg_id(w)
        dup = tg_dup(w)
        _law(checker, "counitality-left", tg_compose(tg_tensor(tg_discharge(w), ident), dup), ident, w=w)
        _law(checker, "counitality-right", tg_compose(tg_tensor(ident, tg_discharge(w)), dup), ident, w=w)
        _law(checker, "cocommutativity", tg_compose(tg_symmetry(w, w), dup), dup, w=w)
        _law(checker, "coassociativity", tg_compose(tg_tensor(dup, ident), dup),
             tg_compose(tg_tensor(ident, dup), dup), w=w)
        swap_middle = tg_tensor(tg_tensor(tg_id(w), tg_symmetry(w, v)), tg_id(v))
        _law(checker, "multiplicativity-dup", tg_dup(w + v), tg_compose(swap_middle, tg_tensor(dup, tg_dup(v))),
             w=w, v=v)
        _law(checker, "multiplicativity-discharge", tg_discharge(w + v),
             tg_tensor(tg_discharge(w), tg_discharge(v)), w=w, v=v)

        op = sig.op("f{0}".format(case % len(sig.ops)))
        f = tg_from_op(op)
        shared, copied = sharing_pair(op)
        checker.expect("dup-not-natural", not tg_equal(shared, copied), shared, copied, op=op)
        dropped = tg_compose(tg_discharge(op.outputs), f)
        checker.expect("discharge-not-natural", not tg_equal(dropped, tg_discharge(op.inputs)), dropped,
                       tg_discharge(op.inputs), op=op)
        checker.expect("no-garbage-collection", tg_unreachable_boxes(dropped) == [0], dropped, None, op=op)
    return checker.report()


def check_eval_functorial(P, cases=100, seed=0, sizes=(1, 2)):
    """
    Check that evaluation into ``P`` sends composition, tensor and structure graphs to the model's
    operations, and does not depend on the layering.

    :param GsPresentation P: an open presentation whose homsets can be sampled
    :rtype: LawReport
    """
    rng = random.Random(seed)
    checker = LawChecker("term-graph-eval[{0}]".format(P.name), label=P.label)
    eq = P.equal
    for _ in range(cases):
        sig = random_signature(rng)
        alpha = random_assignment(sig, P, rng, sizes)
        s, t = _chain(rng, sig, 2)
        u = random_term_graph(sig, rng, boxes=rng.randint(0, 2))
        w, v = random_word(sig.sorts, rng), random_word(sig.sorts, rng)
        a, b = alpha.obj(P, w), alpha.obj(P, v)

        checker.expect_equal("layering-invariant", tg_eval(s, P, alpha), tg_eval(s, P, alpha, reverse=True), eq,
                             s=s)
        checker.expect_equal("compose", tg_eval(tg_compose(t, s), P, alpha),
                             P.compose(tg_eval(t, P, alpha), tg_eval(s, P, alpha)), eq, s=s, t=t)
        checker.expect_equal("tensor", tg_eval(tg_tensor(s, u), P, alpha),
                             P.tensor(tg_eval(s, P, alpha), tg_eval(u, P, alpha)), eq, s=s, u=u)
        checker.expect_equal("identity", tg_eval(tg_id(w), P, alpha), P.identity(a), eq, w=w)
        checker.expect_equal("dup", tg_eval(tg_dup(w), P, alpha), P.dup(a), eq, w=w)
        checker.expect_equal("discharge", tg_eval(tg_discharge(w), P, alpha), P.discharge(a), eq, w=w)
        checker.expect_equal("symmetry", tg_eval(tg_symmetry(w, v), P, alpha), P.symmetry(a, b), eq, w=w, v=v)
    return checker.report()


def sharing_pair(op):
    """One box read twice, and two copies of the box fed by a duplicated input."""
    f = tg_from_op(op)
    shared = tg_compose(tg_dup(op.outputs), f)
    copied = tg_compose(tg_tensor(f, f), tg_dup(op.inputs))
    return shared, copied


def check_sharing_vs_copying(P, cases=100, seed=0, sizes=(1, 2)):
    """
    The shared and the copied graph of an operation are never equal as graphs, and they evaluate to
    the same morphism exactly when the operation is interpreted by a functional morphism.

    :rtype: LawReport
    """
    rng = random.Random(seed)
    checker = LawChecker("sharing-vs-copying[{0}]".format(P.name), label=P.label)
    for _ in range(cases):
        sig = random_signature(rng)
        alpha = random_assignment(sig, P, rng, sizes)
        op = rng.choice(sorted(sig.ops.values(), key=lambda o: o.name))
        shared, copied = sharing_pair(op)
        checker.expect("graphs-differ", not tg_equal(shared, copied), shared, copied, op=op)
        lhs, rhs = tg_eval(shared, P, alpha), tg_eval(copied, P, alpha)
        functional = is_functional(P, alpha.mor(P, op))
        checker.expect("equal-iff-functional", P.equal(lhs, rhs) == functional, lhs, rhs, op=op,
                       f=alpha.mor(P, op))
    return checker.report()
