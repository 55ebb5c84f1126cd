#!/usr/bin/env python

import functools
import logging
import random

from ..core.laws import object_tuples, for_homs
from ..core.report import LawChecker, merge_reports
from ..errors import UsageError

log = logging.getLogger(__name__)

DEFAULT_FUNCTOR_INSTANCES = 256

FLAVORS = ("lax", "oplax", "strong", "strict")


def _flags_sampling(check):
    """Mark the report as sampled when either model decided some comparison on sampled points only."""
    @functools.wraps(check)
    def _check(F, *args, **kwargs):
        models = [F.source.model]
        if F.target.model is not F.source.model:
            models.append(F.target.model)
        before = sum(m.sampled_comparisons for m in models)
        report = check(F, *args, **kwargs)
        sampled = sum(m.sampled_comparisons for m in models) - before
        if sampled:
            report.exhaustive = False
            report.notes.append("{0} comparisons decided on sampled points".format(sampled))
        return report
    return _check


def _identity_like(F, a, lax_identities):
    """``F(id_a)`` for lax-on-identities mappings, ``id_{F a}`` otherwise."""
    if lax_identities:
        return F.mor(F.source.identity(a))
    return F.target.identity(F.obj(a))


@_flags_sampling
def check_functoriality(F, max_instances=DEFAULT_FUNCTOR_INSTANCES, seed=0, lax_identities=False):
    """
    Verify that a mapping preserves typing, composition and identities, and is monotone on homs
    when both presentations are ordered.

    :param FunctorData F: the mapping
    :param bool lax_identities: only require ``id_{F a} <= F(id_a)``
    :rtype: LawReport
    """
    S, T = F.source, F.target
    rng = random.Random(seed)
    checker = LawChecker("functoriality[{0}]".format(F.name))

    pairs = object_tuples(S, 2)
    for (a, b), (f,) in for_homs(checker, S, pairs, lambda a, b: [(a, b)], max_instances, rng):
        Ff = F.mor(f)
        checker.expect("typing", T.dom(Ff) == F.obj(a) and T.cod(Ff) == F.obj(b),
                       lhs=(T.dom(Ff), T.cod(Ff)), rhs=(F.obj(a), F.obj(b)), f=f)

    for a in S.object_list():
        if lax_identities:
            checker.expect_leq("identity-lax", T.identity(F.obj(a)), F.mor(S.identity(a)), T.leq, object=a)
        else:
            checker.expect_equal("identity", F.mor(S.identity(a)), T.identity(F.obj(a)), T.equal, object=a)

    triples = object_tuples(S, 3)
    for _, (f, g) in for_homs(checker, S, triples, lambda a, b, c: [(a, b), (b, c)], max_instances, rng):
        if not checker.active("composition"):
            break
        checker.expect_equal("composition", F.mor(S.compose(g, f)), T.compose(F.mor(g), F.mor(f)), T.equal,
                             f=f, g=g)

    if S.ordered and T.ordered:
        for _, (f, g) in for_homs(checker, S, pairs, lambda a, b: [(a, b), (a, b)], max_instances, rng):
            if S.leq(f, g):
                checker.expect_leq("monotone", F.mor(f), F.mor(g), T.leq, f=f, g=g)
    else:
        checker.note("monotonicity not checked: an endpoint has no preorder")

    return checker.report()


def _check_lax_laws(checker, F, max_instances, rng, lax_identities):
    S, T = F.source, F.target
    I = S.unit()
    e = lambda a: _identity_like(F, a, lax_identities)

    def _fits(a, b, a2, b2):
        return S.obj(a, b) is not None and S.obj(a2, b2) is not None

    quads = object_tuples(S, 4, _fits)
    for (a, b, a2, b2), (f, g) in for_homs(checker, S, quads, lambda a, b, a2, b2: [(a, a2), (b, b2)],
                                           max_instances, rng):
        lhs = T.compose(F.psi(a2, b2), T.tensor(F.mor(f), F.mor(g)))
        rhs = T.compose(F.mor(S.tensor(f, g)), F.psi(a, b))
        checker.expect_equal("lax-naturality", lhs, rhs, T.equal, f=f, g=g)

    for a, b, c in object_tuples(S, 3, lambda a, b, c: None not in (S.obj(a, b, c), S.obj(b, c))):
        lhs = T.compose(F.psi(S.obj(a, b), c), T.tensor(F.psi(a, b), e(c)))
        rhs = T.compose(F.psi(a, S.obj(b, c)), T.tensor(e(a), F.psi(b, c)))
        checker.expect_equal("lax-associativity", lhs, rhs, T.equal, a=a, b=b, c=c)

    for a in S.object_list():
        if S.obj(I, a) is None:
            continue
        left = T.compose(e(a), F.psi(I, a), T.tensor(F.psi0(), e(a)))
        checker.expect_equal("lax-unit-left", left, e(a), T.equal, object=a)
        right = T.compose(e(a), F.psi(a, I), T.tensor(e(a), F.psi0()))
        checker.expect_equal("lax-unit-right", right, e(a), T.equal, object=a)

    for a, b in object_tuples(S, 2, lambda a, b: None not in (S.obj(a, b), S.obj(b, a))):
        lhs = T.compose(F.mor(S.symmetry(a, b)), F.psi(a, b))
        rhs = T.compose(F.psi(b, a), T.symmetry(F.obj(a), F.obj(b)))
        checker.expect_equal("lax-symmetry", lhs, rhs, T.equal, a=a, b=b)


def _check_oplax_laws(checker, F, max_instances, rng, lax_identities):
    S, T = F.source, F.target
    I = S.unit()
    e = lambda a: _identity_like(F, a, lax_identities)

    def _fits(a, b, a2, b2):
        return S.obj(a, b) is not None and S.obj(a2, b2) is not None

    quads = object_tuples(S, 4, _fits)
    for (a, b, a2, b2), (f, g) in for_homs(checker, S, quads, lambda a, b, a2, b2: [(a, a2), (b, b2)],
                                           max_instances, rng):
        lhs = T.compose(T.tensor(F.mor(f), F.mor(g)), F.phi(a, b))
        rhs = T.compose(F.phi(a2, b2), F.mor(S.tensor(f, g)))
        checker.expect_equal("oplax-naturality", lhs, rhs, T.equal, f=f, g=g)

    for a, b, c in object_tuples(S, 3, lambda a, b, c: None not in (S.obj(a, b, c), S.obj(b, c))):
        lhs = T.compose(T.tensor(F.phi(a, b), e(c)), F.phi(S.obj(a, b), c))
        rhs = T.compose(T.tensor(e(a), F.phi(b, c)), F.phi(a, S.obj(b, c)))
        checker.expect_equal("oplax-associativity", lhs, rhs, T.equal, a=a, b=b, c=c)

    for a in S.object_list():
        if S.obj(I, a) is None:
            continue
        left = T.compose(T.tensor(F.phi0(), e(a)), F.phi(I, a), e(a))
        checker.expect_equal("oplax-unit-left", left, e(a), T.equal, object=a)
        right = T.compose(T.tensor(e(a), F.phi0()), F.phi(a, I), e(a))
        checker.expect_equal("oplax-unit-right", right, e(a), T.equal, object=a)

    for a, b in object_tuples(S, 2, lambda a, b: None not in (S.obj(a, b), S.obj(b, a))):
        lhs = T.compose(F.phi(b, a), F.mor(S.symmetry(a, b)))
        rhs = T.compose(T.symmetry(F.obj(a), F.obj(b)), F.phi(a, b))
        checker.expect_equal("oplax-symmetry", lhs, rhs, T.equal, a=a, b=b)


@_flags_sampling
def check_lax_monoidal(F, max_instances=DEFAULT_FUNCTOR_INSTANCES, seed=0, lax_identities=False):
    """
    Verify naturality, associativity, unitality and symmetry of the laxator of ``F``.

    Functoriality is checked first and included in the report.

    :param FunctorData F: the functor
    :param bool lax_identities: replace ``id_{F a}`` by ``F(id_a)`` in the coherence diagrams
    :rtype: LawReport
    :raises MissingStructure: when ``F`` has no lax structure
    """
    F.require("lax")
    functoriality = check_functoriality(F, max_instances, seed, lax_identities)
    checker = LawChecker("lax-monoidal", label=str)
    _check_lax_laws(checker, F, max_instances, random.Random(seed), lax_identities)
    return merge_reports("lax-monoidal[{0}]".format(F.name), [functoriality, checker.report()])


@_flags_sampling
def check_oplax_monoidal(F, max_instances=DEFAULT_FUNCTOR_INSTANCES, seed=0, lax_identities=False):
    """
    Verify naturality, coassociativity, counitality and symmetry of the oplaxator of ``F``.

    :rtype: LawReport
    :raises MissingStructure: when ``F`` has no oplax structure
    """
    F.require("oplax")
    functoriality = check_functoriality(F, max_instances, seed, lax_identities)
    checker = LawChecker("oplax-monoidal", label=str)
    _check_oplax_laws(checker, F, max_instances, random.Random(seed), lax_identities)
    return merge_reports("oplax-monoidal[{0}]".format(F.name), [functoriality, checker.report()])


def _diagonal_objects(S):
    return [a for a in S.object_list() if S.obj(a, a) is not None]


def _check_lax_triangles(checker, F):
    S, T = F.source, F.target
    for a in _diagonal_objects(S):
        checker.expect_equal("dup-lax", F.mor(S.dup(a)), T.compose(F.psi(a, a), T.dup(F.obj(a))), T.equal,
                             object=a)
    for a in S.object_list():
        checker.expect_equal("discharge-lax", F.mor(S.discharge(a)), T.compose(F.psi0(), T.discharge(F.obj(a))),
                             T.equal, object=a)


def _check_oplax_triangles(checker, F):
    S, T = F.source, F.target
    for a in _diagonal_objects(S):
        checker.expect_equal("dup-oplax", T.compose(F.phi(a, a), F.mor(S.dup(a))), T.dup(F.obj(a)), T.equal,
                             object=a)
    for a in S.object_list():
        checker.expect_equal("discharge-oplax", T.compose(F.phi0(), F.mor(S.discharge(a))),
                             T.discharge(F.obj(a)), T.equal, object=a)


def strict_structure(F):
    """``F`` equipped with identity laxators and oplaxators."""
    T = F.target

    def _unit():
        return T.identity(T.unit())

    def _pair(a, b):
        return T.identity(T.model.tensor_obj(F.obj(a), F.obj(b)))

    return F.with_structure(psi=_pair, psi0=_unit, phi=_pair, phi0=_unit)


@_flags_sampling
def check_gs_functor(F, flavor="lax", max_instances=DEFAULT_FUNCTOR_INSTANCES, seed=0):
    """
    Verify that ``F`` is a gs-monoidal functor of the given flavor.

    The report merges the monoidal checks with the duplicator and discharger triangles. ``strong``
    additionally requires the laxator and oplaxator to be mutually inverse; ``strict`` requires
    objects to be preserved on the nose, identity structure maps and ``F(dup) = dup``,
    ``F(discharge) = discharge``.

    :param FunctorData F: the functor
    :param str flavor: one of ``lax``, ``oplax``, ``strong`` or ``strict``
    :rtype: LawReport
    :raises MissingStructure: when the structure the flavor needs is absent
    :raises UsageError: for an unknown flavor
    """
    if flavor not in FLAVORS:
        raise UsageError("Unknown functor flavor {0}; expected one of {1}".format(flavor, ", ".join(FLAVORS)))
    S, T = F.source, F.target
    reports = []

    if flavor == "strict":
        checker = LawChecker("strict", label=str)
        for a, b in object_tuples(S, 2, lambda a, b: S.obj(a, b) is not None):
            checker.expect("strict-objects", F.obj(S.obj(a, b)) == T.model.tensor_obj(F.obj(a), F.obj(b)),
                           lhs=F.obj(S.obj(a, b)), rhs=T.model.tensor_obj(F.obj(a), F.obj(b)), a=a, b=b)
            if F.has_lax:
                checker.expect_equal("strict-laxator", F.psi(a, b), T.identity(F.obj(S.obj(a, b))), T.equal,
                                     a=a, b=b)
            if F.has_oplax:
                checker.expect_equal("strict-oplaxator", F.phi(a, b), T.identity(F.obj(S.obj(a, b))), T.equal,
                                     a=a, b=b)
        checker.expect("strict-unit", F.obj(S.unit()) == T.unit(), lhs=F.obj(S.unit()), rhs=T.unit())
        for a in _diagonal_objects(S):
            checker.expect_equal("strict-dup", F.mor(S.dup(a)), T.dup(F.obj(a)), T.equal, object=a)
        for a in S.object_list():
            checker.expect_equal("strict-discharge", F.mor(S.discharge(a)), T.discharge(F.obj(a)), T.equal,
                                 object=a)
        reports.append(checker.report())
        if not (F.has_lax and F.has_oplax):
            F = strict_structure(F)

    if flavor in ("lax", "strong", "strict"):
        reports.append(check_lax_monoidal(F, max_instances, seed))
        checker = LawChecker("lax-triangles", label=str)
        _check_lax_triangles(checker, F)
        reports.append(checker.report())

    if flavor in ("oplax", "strong", "strict"):
        reports.append(check_oplax_monoidal(F, max_instances, seed))
        checker = LawChecker("oplax-triangles", label=str)
        _check_oplax_triangles(checker, F)
        reports.append(checker.report())

    if flavor == "strong":
        checker = LawChecker("strong", label=str)
        for a, b in object_tuples(S, 2, lambda a, b: S.obj(a, b) is not None):
            Fab = F.obj(S.obj(a, b))
            checker.expect_equal("laxator-inverse", T.compose(F.psi(a, b), F.phi(a, b)), T.identity(Fab), T.equal,
                                 a=a, b=b)
            FaFb = T.model.tensor_obj(F.obj(a), F.obj(b))
            checker.expect_equal("oplaxator-inverse", T.compose(F.phi(a, b), F.psi(a, b)), T.identity(FaFb),
                                 T.equal, a=a, b=b)
        checker.expect_equal("unit-laxator-inverse", T.compose(F.psi0(), F.phi0()), T.identity(F.obj(S.unit())),
                             T.equal)
        checker.expect_equal("unit-oplaxator-inverse", T.compose(F.phi0(), F.psi0()), T.identity(T.unit()),
                             T.equal)
        reports.append(checker.report())

    return merge_reports("gs-functor[{0}:{1}]".format(flavor, F.name), reports)


@_flags_sampling
def check_bilax(F, max_instances=DEFAULT_FUNCTOR_INSTANCES, seed=0):
    """
    Verify the braiding square and the three unit diagrams relating the laxator and oplaxator.

    :param FunctorData F: a functor with both structure families
    :rtype: LawReport
    :raises MissingStructure: when either family is absent
    """
    F.require("lax")
    F.require("oplax")
    S, T = F.source, F.target
    I = S.unit()
    checker = LawChecker("bilax[{0}]".format(F.name))

    def _fits(a, b, c, d):
        needed = (S.obj(a, b), S.obj(c, d), S.obj(a, c), S.obj(b, d), S.obj(b, c), S.obj(c, b),
                  S.obj(a, b, c, d), S.obj(a, c, b, d))
        return None not in needed

    for a, b, c, d in object_tuples(S, 4, _fits):
        middle = S.tensor(S.identity(a), S.symmetry(b, c), S.identity(d))
        lhs = T.compose(F.phi(S.obj(a, c), S.obj(b, d)), F.mor(middle), F.psi(S.obj(a, b), S.obj(c, d)))
        Fa, Fb, Fc, Fd = F.obj(a), F.obj(b), F.obj(c), F.obj(d)
        shuffle = T.tensor(T.identity(Fa), T.symmetry(Fb, Fc), T.identity(Fd))
        rhs = T.compose(T.tensor(F.psi(a, c), F.psi(b, d)), shuffle, T.tensor(F.phi(a, b), F.phi(c, d)))
        checker.expect_equal("braiding", lhs, rhs, T.equal, a=a, b=b, c=c, d=d)

    if S.obj(I, I) is not None:
        lhs = T.compose(F.phi(I, I), F.mor(S.identity(I)), F.psi0())
        checker.expect_equal("unit-lax-oplax", lhs, T.tensor(F.psi0(), F.psi0()), T.equal)
        lhs = T.compose(F.phi0(), F.psi(I, I))
        checker.expect_equal("unit-oplax-lax", lhs, T.tensor(F.phi0(), F.phi0()), T.equal)
    checker.expect_equal("unit-inverse", T.compose(F.phi0(), F.psi0()), T.identity(T.unit()), T.equal)
    return checker.report()


def _require_orders(F):
    F.source.require_order()
    F.target.require_order()


@_flags_sampling
def check_colax_cartesian(F, max_instances=DEFAULT_FUNCTOR_INSTANCES, seed=0, lax_identities=False):
    """
    Verify that ``F`` is lax monoidal, monotone, and satisfies ``F(dup) <= psi . dup`` and
    ``F(discharge) <= psi0 . discharge``.

    :raises MissingPreorder: when either presentation is unordered
    :raises MissingStructure: when ``F`` has no lax structure
    """
    _require_orders(F)
    monoidal = check_lax_monoidal(F, max_instances, seed, lax_identities)
    S, T = F.source, F.target
    checker = LawChecker("colax-triangles", label=str)
    for a in _diagonal_objects(S):
        checker.expect_leq("dup-colax", F.mor(S.dup(a)), T.compose(F.psi(a, a), T.dup(F.obj(a))), T.leq, object=a)
    for a in S.object_list():
        checker.expect_leq("discharge-colax", F.mor(S.discharge(a)), T.compose(F.psi0(), T.discharge(F.obj(a))),
                           T.leq, object=a)
    return merge_reports("colax-cartesian[{0}]".format(F.name), [monoidal, checker.report()])


@_flags_sampling
def check_colax_opcartesian(F, max_instances=DEFAULT_FUNCTOR_INSTANCES, seed=0, lax_identities=False):
    """
    Verify that ``F`` is oplax monoidal, monotone, and satisfies ``phi . F(dup) <= dup`` and
    ``phi0 . F(discharge) <= discharge``.

    :raises MissingPreorder: when either presentation is unordered
    :raises MissingStructure: when ``F`` has no oplax structure
    """
    _require_orders(F)
    monoidal = check_oplax_monoidal(F, max_instances, seed, lax_identities)
    S, T = F.source, F.target
    checker = LawChecker("colax-op-triangles", label=str)
    for a in _diagonal_objects(S):
        checker.expect_leq("dup-colax-op", T.compose(F.phi(a, a), F.mor(S.dup(a))), T.dup(F.obj(a)), T.leq,
                           object=a)
    for a in S.object_list():
        checker.expect_leq("discharge-colax-op", T.compose(F.phi0(), F.mor(S.discharge(a))),
                           T.discharge(F.obj(a)), T.leq, object=a)
    return merge_reports("colax-opcartesian[{0}]".format(F.name), [monoidal, checker.report()])


@_flags_sampling
def check_colax_bicartesian(F, max_instances=DEFAULT_FUNCTOR_INSTANCES, seed=0):
    """Colax cartesian, colax opcartesian and bilax."""
    return merge_reports("colax-bicartesian[{0}]".format(F.name), [
        check_colax_cartesian(F, max_instances, seed),
        check_colax_opcartesian(F, max_instances, seed),
        check_bilax(F, max_instances, seed),
    ])


@_flags_sampling
def check_lax_on_identities(F, max_instances=DEFAULT_FUNCTOR_INSTANCES, seed=0):
    """
    Verify that ``F`` preserves composition strictly and identities laxly, and, when it carries a
    laxator, the lax monoidal diagrams with ``F(id)`` in place of identities.

    :raises MissingPreorder: when the target is unordered
    """
    F.target.require_order()
    if F.has_lax:
        return check_lax_monoidal(F, max_instances, seed, lax_identities=True)
    report = check_functoriality(F, max_instances, seed, lax_identities=True)
    report.notes.append("no laxator: monoidal diagrams not checked")
    return report
