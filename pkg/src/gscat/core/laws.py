#!/usr/bin/env python

import itertools
import logging
import random

from ..query import Instances
from .presentation import TableModel
from .report import LawChecker

log = logging.getLogger(__name__)

DEFAULT_MAX_INSTANCES = 4096
MIN_SHARE = 8


def share(max_instances, tuples):
    """Instances allotted to each object tuple of a law."""
    return max(MIN_SHARE, max_instances // max(len(tuples), 1))


def object_tuples(P, arity, admissible=None):
    objects = P.object_list()
    tuples = []
    for combo in itertools.product(objects, repeat=arity):
        if admissible is None or admissible(*combo):
            tuples.append(combo)
    return tuples


def for_homs(checker, P, tuples, homs, max_instances, rng):
    """
    Yield ``(objects, morphisms)`` for every admissible object tuple, drawing morphism tuples from
    the homsets ``homs(*objects)`` returns.
    """
    per_tuple = share(max_instances, tuples)
    for combo in tuples:
        spaces = [P.hom(a, b) for a, b in homs(*combo)]
        for morphisms in checker.sampled(Instances(spaces, per_tuple, rng)):
            yield combo, morphisms


def check_category_and_monoidal(P, max_instances=DEFAULT_MAX_INSTANCES, seed=0):
    """
    Verify the symmetric strict monoidal category laws of a presentation.

    Covers associativity and unitality of composition, bifunctoriality and strictness of the tensor,
    and naturality, involutivity and the hexagon for the symmetry. The hexagon is checked on every
    triple of listed objects, also when their tensor lies outside the list, unless the model is a
    fixture table.

    :param GsPresentation P: the presentation
    :param int max_instances: instance budget per law
    :param int seed: seed for sampled laws
    :return: the report
    :rtype: LawReport
    :raises MalformedPresentation: when a table references unknown identifiers
    """
    if isinstance(P.model, TableModel):
        P.model.validate()

    rng = random.Random(seed)
    checker = LawChecker("category-and-monoidal[{0}]".format(P.name), label=P.label)
    eq = P.equal
    I = P.unit()

    pairs = object_tuples(P, 2)
    for (a, b), (f,) in for_homs(checker, P, pairs, lambda a, b: [(a, b)], max_instances, rng):
        checker.expect_equal("identity-left", P.compose(P.identity(b), f), f, eq, f=f)
        checker.expect_equal("identity-right", P.compose(f, P.identity(a)), f, eq, f=f)

    quads = object_tuples(P, 4)
    for _, (f, g, h) in for_homs(checker, P, quads, lambda a, b, c, d: [(a, b), (b, c), (c, d)],
                                 max_instances, rng):
        if not checker.active("associativity"):
            break
        checker.expect_equal("associativity", P.compose(P.compose(h, g), f), P.compose(h, P.compose(g, f)), eq,
                             f=f, g=g, h=h)

    for a in P.object_list():
        checker.expect("unit-strict", P.obj(a, I) in (None, a) and P.obj(I, a) in (None, a),
                       lhs=P.obj(a, I), rhs=a, object=a)
        checker.expect("symmetry-unit", P.obj(a, I) is None or eq(P.symmetry(a, I), P.identity(a)),
                       lhs=None if P.obj(a, I) is None else P.symmetry(a, I), rhs=P.identity(a), object=a)

    for a, b in object_tuples(P, 2, lambda a, b: P.obj(a, b) is not None):
        ab = P.obj(a, b)
        checker.expect_equal("tensor-identity", P.tensor(P.identity(a), P.identity(b)), P.identity(ab), eq,
                             a=a, b=b)
        if P.obj(b, a) is not None:
            checker.expect_equal("symmetry-involution", P.compose(P.symmetry(b, a), P.symmetry(a, b)),
                                 P.identity(ab), eq, a=a, b=b)

    # fixture tables only know their listed objects; open models build the hexagon for every triple
    open_model = not isinstance(P.model, TableModel)
    for a, b, c in object_tuples(P, 3):
        if P.obj(a, b, c) is not None:
            checker.expect("tensor-associativity-objects", P.obj(a, P.obj(b, c)) in (None, P.obj(a, b, c)),
                           lhs=P.obj(a, b, c), rhs=P.obj(a, P.obj(b, c)), a=a, b=b, c=c)
        elif not open_model:
            continue
        if not open_model and None in (P.obj(b, c, a), P.obj(b, a, c), P.obj(a, c), P.obj(c, a)):
            continue
        hexagon_lhs = P.symmetry(a, P.model.tensor_obj(b, c))
        hexagon_rhs = P.compose(P.tensor(P.identity(b), P.symmetry(a, c)),
                                P.tensor(P.symmetry(a, b), P.identity(c)))
        checker.expect_equal("hexagon", hexagon_lhs, hexagon_rhs, eq, a=a, b=b, c=c)

    def _fits(*objs):
        a, b, c, a2, b2, c2 = objs
        return P.obj(a, b, c) is not None and P.obj(a2, b2, c2) is not None

    sextuples = object_tuples(P, 6, _fits)
    for _, (f, g, h) in for_homs(checker, P, sextuples,
                                 lambda a, b, c, a2, b2, c2: [(a, a2), (b, b2), (c, c2)], max_instances, rng):
        if not checker.active("tensor-associativity"):
            break
        checker.expect_equal("tensor-associativity", P.tensor(P.tensor(f, g), h), P.tensor(f, P.tensor(g, h)), eq,
                             f=f, g=g, h=h)

    for (a, b), (f,) in for_homs(checker, P, pairs, lambda a, b: [(a, b)], max_instances, rng):
        checker.expect_equal("tensor-unit", P.tensor(f, P.identity(I)), f, eq, f=f)
        checker.expect_equal("tensor-unit", P.tensor(P.identity(I), f), f, eq, f=f)

    def _bifunctor_fits(a, b, c, d, e, g):
        return P.obj(a, d) is not None and P.obj(b, e) is not None and P.obj(c, g) is not None

    sextuples = object_tuples(P, 6, _bifunctor_fits)
    for _, (f, g, h, k) in for_homs(checker, P, sextuples,
                                    lambda a, b, c, d, e, x: [(a, b), (b, c), (d, e), (e, x)], max_instances, rng):
        if not checker.active("bifunctoriality"):
            break
        lhs = P.tensor(P.compose(g, f), P.compose(k, h))
        rhs = P.compose(P.tensor(g, k), P.tensor(f, h))
        checker.expect_equal("bifunctoriality", lhs, rhs, eq, f=f, g=g, h=h, k=k)

    def _naturality_fits(a, b, c, d):
        return all(P.obj(x, y) is not None for x, y in ((a, c), (c, a), (b, d), (d, b)))

    quads = object_tuples(P, 4, _naturality_fits)
    for (a, b, c, d), (f, h) in for_homs(checker, P, quads, lambda a, b, c, d: [(a, b), (c, d)],
                                         max_instances, rng):
        if not checker.active("symmetry-naturality"):
            break
        lhs = P.compose(P.symmetry(b, d), P.tensor(f, h))
        rhs = P.compose(P.tensor(h, f), P.symmetry(a, c))
        checker.expect_equal("symmetry-naturality", lhs, rhs, eq, f=f, h=h)

    return checker.report()


def check_gs_axioms(P, max_instances=DEFAULT_MAX_INSTANCES, seed=0):
    """
    Verify the commutative comonoid axioms and the monoidal multiplicativity of duplicators and
    dischargers.

    Instances whose tensor objects fall outside the object list are skipped.

    :param GsPresentation P: the presentation
    :rtype: LawReport
    """
    if isinstance(P.model, TableModel):
        P.model.validate()

    checker = LawChecker("gs-axioms[{0}]".format(P.name), label=P.label)
    eq = P.equal
    I = P.unit()

    for a in P.object_list():
        ida = P.identity(a)
        dup = P.dup(a)
        discharge = P.discharge(a)
        if P.obj(a, a) is not None:
            checker.expect_equal("counitality-left", P.compose(P.tensor(discharge, ida), dup), ida, eq, object=a)
            checker.expect_equal("counitality-right", P.compose(P.tensor(ida, discharge), dup), ida, eq, object=a)
            checker.expect_equal("cocommutativity", P.compose(P.symmetry(a, a), dup), dup, eq, object=a)
        if P.obj(a, a, a) is not None:
            lhs = P.compose(P.tensor(dup, ida), dup)
            rhs = P.compose(P.tensor(ida, dup), dup)
            checker.expect_equal("coassociativity", lhs, rhs, eq, object=a)

    if P.contains(I):
        checker.expect_equal("unit-dup", P.dup(I), P.identity(I), eq, object=I)
        checker.expect_equal("unit-discharge", P.discharge(I), P.identity(I), eq, object=I)

    for a, b in object_tuples(P, 2, lambda a, b: P.obj(a, b) is not None):
        ab = P.obj(a, b)
        checker.expect_equal("multiplicativity-discharge", P.discharge(ab),
                             P.tensor(P.discharge(a), P.discharge(b)), eq, a=a, b=b)
        if None in (P.obj(a, a), P.obj(b, b), P.obj(a, b, a, b), P.obj(a, a, b, b), P.obj(b, a)):
            continue
        swap_middle = P.tensor(P.identity(a), P.symmetry(a, b), P.identity(b))
        rhs = P.compose(swap_middle, P.tensor(P.dup(a), P.dup(b)))
        checker.expect_equal("multiplicativity-dup", P.dup(ab), rhs, eq, a=a, b=b)

    return checker.report()


def check_oplax_cartesian(P, max_instances=DEFAULT_MAX_INSTANCES, seed=0):
    """
    Verify that the homset preorder makes the presentation oplax cartesian: the preorder is
    reflexive, transitive and monotone for composition and tensor, and every morphism satisfies
    ``dup . f <= (f x f) . dup`` and ``discharge . f <= discharge``.

    :param GsPresentation P: a presentation with a preorder
    :rtype: LawReport
    :raises MissingPreorder: when ``P`` has no preorder
    """
    P.require_order()
    rng = random.Random(seed)
    checker = LawChecker("oplax-cartesian[{0}]".format(P.name), label=P.label)
    leq = P.leq

    pairs = object_tuples(P, 2)
    for (a, b), (f,) in for_homs(checker, P, pairs, lambda a, b: [(a, b)], max_instances, rng):
        checker.expect("reflexive", leq(f, f), f, f, f=f)
        checker.expect_leq("discharge-inequality", P.compose(P.discharge(b), f), P.discharge(a), leq, f=f)
        if P.obj(a, a) is not None and P.obj(b, b) is not None:
            lhs = P.compose(P.dup(b), f)
            rhs = P.compose(P.tensor(f, f), P.dup(a))
            checker.expect_leq("dup-inequality", lhs, rhs, leq, f=f)

    for _, (f, g, h) in for_homs(checker, P, pairs, lambda a, b: [(a, b)] * 3, max_instances, rng):
        if not checker.active("transitive"):
            break
        if leq(f, g) and leq(g, h):
            checker.expect("transitive", leq(f, h), f, h, f=f, g=g, h=h)

    triples = object_tuples(P, 3)
    for _, (f, f2, g) in for_homs(checker, P, triples, lambda a, b, c: [(a, b), (a, b), (b, c)],
                                  max_instances, rng):
        if leq(f, f2):
            checker.expect_leq("compose-monotone-right", P.compose(g, f), P.compose(g, f2), leq, f=f, f2=f2, g=g)
    for _, (f, g, g2) in for_homs(checker, P, triples, lambda a, b, c: [(a, b), (b, c), (b, c)],
                                  max_instances, rng):
        if leq(g, g2):
            checker.expect_leq("compose-monotone-left", P.compose(g, f), P.compose(g2, f), leq, f=f, g=g, g2=g2)

    def _tensor_fits(a, b, c, d):
        return P.obj(a, c) is not None and P.obj(b, d) is not None

    quads = object_tuples(P, 4, _tensor_fits)
    for (a, b, c, d), (f, f2, g) in for_homs(checker, P, quads, lambda a, b, c, d: [(a, b), (a, b), (c, d)],
                                                 max_instances, rng):
        if leq(f, f2):
            checker.expect_leq("tensor-monotone-left", P.tensor(f, g), P.tensor(f2, g), leq, f=f, f2=f2, g=g)
            if P.obj(c, a) is not None and P.obj(d, b) is not None:
                checker.expect_leq("tensor-monotone-right", P.tensor(g, f), P.tensor(g, f2), leq, f=f, f2=f2, g=g)

    return checker.report()
