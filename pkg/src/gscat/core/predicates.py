#!/usr/bin/env python

import logging
import random

from ..errors import MissingObject
from ..query import Instances
from .laws import DEFAULT_MAX_INSTANCES, object_tuples, for_homs, share
from .report import LawChecker

log = logging.getLogger(__name__)


def _discharged(P, f):
    return P.compose(P.discharge(P.cod(f)), f)


def _duplicated(P, f):
    return P.compose(P.dup(P.cod(f)), f)


def _doubled(P, f):
    return P.compose(P.tensor(f, f), P.dup(P.dom(f)))


def is_total(P, f):
    """``discharge . f == discharge``"""
    return P.equal(_discharged(P, f), P.discharge(P.dom(f)))


def is_functional(P, f):
    """``dup . f == (f x f) . dup``"""
    return P.equal(_duplicated(P, f), _doubled(P, f))


def is_weakly_total(P, f):
    P.require_order()
    return P.equiv(_discharged(P, f), P.discharge(P.dom(f)))


def is_weakly_functional(P, f):
    P.require_order()
    return P.equiv(_duplicated(P, f), _doubled(P, f))


def dom(P, f):
    """
    The domain of a morphism, ``(id x (discharge . f)) . dup``.

    :param GsPresentation P: the presentation
    :param f: a morphism ``A -> B``
    :return: an endomorphism of ``A``
    :raises MissingObject: when ``A x A`` is outside the object list
    """
    a = P.dom(f)
    if P.obj(a, a) is None:
        raise MissingObject((a, a), message="needed by dom")
    return P.compose(P.tensor(P.identity(a), _discharged(P, f)), P.dup(a))


def _morphism_instances(checker, P, morphisms, max_instances, rng, admissible):
    if morphisms is not None:
        for f in morphisms:
            yield f
        return
    pairs = object_tuples(P, 2, admissible)
    for _, (f,) in for_homs(checker, P, pairs, lambda a, b: [(a, b)], max_instances, rng):
        yield f


def check_dom_propositions(P, morphisms=None, max_instances=DEFAULT_MAX_INSTANCES, seed=0):
    """
    Check the propositions about domains: functional morphisms have functional domains, a morphism
    is total exactly when its domain is the identity and, when ``P`` is ordered,
    ``dom(f) <= id`` and ``f . dom(f) ~ f``.

    :param GsPresentation P: the presentation
    :param morphisms: explicit morphisms to test; by default every homset of the object list
    :rtype: LawReport
    """
    rng = random.Random(seed)
    checker = LawChecker("dom-propositions[{0}]".format(P.name), label=P.label)
    ordered = P.ordered
    if not ordered:
        checker.note("no preorder: order clauses skipped")

    for f in _morphism_instances(checker, P, morphisms, max_instances, rng, lambda a, b: P.obj(a, a) is not None):
        a = P.dom(f)
        ida = P.identity(a)
        d = dom(P, f)
        if is_functional(P, f):
            checker.expect("functional-domain", is_functional(P, d), d, None, f=f)
        checker.expect("total-iff-domain-identity", is_total(P, f) == P.equal(d, ida), d, ida, f=f)
        if ordered:
            checker.expect_leq("domain-below-identity", d, ida, P.leq, f=f)
            checker.expect_equal("compose-domain-equivalent", P.compose(f, d), f, P.equiv, f=f)

    return checker.report()


def pairing(P, h, g):
    """``(h x g) . dup``, the candidate mediating morphism into a weak product."""
    return P.compose(P.tensor(h, g), P.dup(P.dom(h)))


def mediating_candidates(P, f):
    """
    Two morphisms into ``B x B`` that both project onto ``f`` and ``f``: ``dup . f`` and
    ``(f x f) . dup``. They differ exactly when ``f`` is not functional.
    """
    return _duplicated(P, f), _doubled(P, f)


def check_weak_product(P, a, b, max_instances=DEFAULT_MAX_INSTANCES, seed=0):
    """
    Check that ``a x b`` is a weak product for total morphisms and a genuine product for total
    functional ones.

    For every object ``c`` of the presentation and total ``h: c -> a``, ``g: c -> b`` the pairing is
    total and projects onto ``h`` and ``g``; when ``h`` and ``g`` are also functional, every total
    functional morphism with the same projections equals the pairing.

    :raises Infeasible: when a homset involved exceeds the cap
    :raises MissingObject: when ``a x b`` is outside the object list
    """
    ab = P.require_obj(a, b)
    rng = random.Random(seed)
    checker = LawChecker("weak-product[{0}; {1} x {2}]".format(P.name, a, b), label=P.label)

    left = P.tensor(P.identity(a), P.discharge(b))
    right = P.tensor(P.discharge(a), P.identity(b))

    sources = [c for c in P.object_list() if P.obj(c, c) is not None]
    per_source = share(max_instances, sources)
    for c in sources:
        hom_ca = P.hom(c, a).where(lambda h: is_total(P, h))
        hom_cb = P.hom(c, b).where(lambda g: is_total(P, g))
        mediators = None
        for h, g in checker.sampled(Instances([hom_ca, hom_cb], per_source, rng)):
            p = pairing(P, h, g)
            checker.expect("pairing-total", is_total(P, p), p, None, h=h, g=g)
            checker.expect_equal("projection-left", P.compose(left, p), h, P.equal, h=h, g=g)
            checker.expect_equal("projection-right", P.compose(right, p), g, P.equal, h=h, g=g)
            if not (is_functional(P, h) and is_functional(P, g)):
                continue
            checker.expect("pairing-functional", is_functional(P, p), p, None, h=h, g=g)
            if mediators is None:
                mediators = P.hom(c, ab).where(lambda m: is_total(P, m) and is_functional(P, m))
            for m in mediators:
                if P.equal(P.compose(left, m), h) and P.equal(P.compose(right, m), g):
                    checker.expect_equal("mediator-unique", m, p, P.equal, h=h, g=g, m=m)

    return checker.report()


def check_dup_discharge_uniqueness(P, dup2, discharge2):
    """
    Compare a second choice of duplicators and dischargers with the presentation's own: in an
    oplax cartesian category both choices agree up to the preorder equivalence.

    :param dup2: mapping or callable from objects to the alternative duplicators
    :param discharge2: mapping or callable from objects to the alternative dischargers
    :rtype: LawReport
    """
    P.require_order()
    other = P.with_structure(dup=dup2, discharge=discharge2)
    checker = LawChecker("dup-discharge-uniqueness[{0}]".format(P.name), label=P.label)
    for a in P.object_list():
        pairs = [("discharge", P.discharge(a), other.discharge(a))]
        if P.obj(a, a) is not None:
            pairs.insert(0, ("dup", P.dup(a), other.dup(a)))
        for kind, mine, theirs in pairs:
            checker.expect_equal(kind + "-equivalent", mine, theirs, P.equiv, object=a)
            if P.equiv(mine, theirs) and not P.equal(mine, theirs):
                checker.note("{0}({1}) equivalent but not equal: {2} vs {3}".format(kind, a, P.label(mine),
                                                                                    P.label(theirs)))
    return checker.report()
