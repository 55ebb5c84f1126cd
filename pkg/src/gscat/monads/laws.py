#!/usr/bin/env python

import itertools
import logging
import random

from ..core.laws import DEFAULT_MAX_INSTANCES, MIN_SHARE
from ..core.report import LawChecker
from ..query import Instances, ListSpace

log = logging.getLogger(__name__)

# values drawn per carrier when building nested values T(T(X))
NESTED_ELEMENTS = 4


def value_list(M, elements, limit, rng):
    """
    All values of ``M`` over ``elements`` when there are at most ``limit``, else ``limit`` samples.

    :return: ``(values, exhaustive)``
    """
    space = M.values(elements)
    if space.finite and space.size <= limit:
        return space.all(), True
    if space.finite and space.size == 0:
        return [], True
    samples = []
    seen = set()
    for _ in range(limit):
        v = space.sample(rng)
        if v not in seen:
            seen.add(v)
            samples.append(v)
    return samples, False


def function_list(n, m, limit, rng):
    """Functions ``range(n) -> range(m)`` as tables: all of them, or ``limit`` samples."""
    if m ** n <= limit:
        return [tuple(t) for t in itertools.product(range(m), repeat=n)], True
    return [tuple(rng.randrange(m) for _ in range(n)) for _ in range(limit)], False


def _eq(a, b):
    return a == b


class _MonadChecker(LawChecker):
    def __init__(self, name, max_instances, rng):
        super(_MonadChecker, self).__init__(name)
        self.budget = max_instances
        self.rng = rng

    def values(self, M, elements):
        vals, exhaustive = value_list(M, elements, max(MIN_SHARE, int(self.budget ** 0.5)), self.rng)
        if not exhaustive:
            self.exhaustive = False
        return vals

    def functions(self, n, m):
        funcs, exhaustive = function_list(n, m, max(MIN_SHARE, int(self.budget ** 0.5)), self.rng)
        if not exhaustive:
            self.exhaustive = False
        return funcs

    def tuples(self, *lists):
        return self.sampled(Instances([ListSpace(lst) for lst in lists], self.budget, self.rng))


def _sizes(max_size):
    return range(1, max_size + 1)


def check_monad_laws(M, max_size=3, max_instances=DEFAULT_MAX_INSTANCES, seed=0):
    """
    Verify that ``M`` is a commutative monad through its symmetric monoidal presentation.

    Covers the unit and associativity laws of ``mult``, naturality of ``unit``, ``mult`` and ``pair``,
    associativity, unitality and symmetry of ``pair``, monoidality of ``unit`` and ``mult``, agreement of
    the two double-strength composites with ``pair``, and compatibility of ``value_leq`` with the
    structure.

    :param Monad M: the monad
    :param int max_size: largest carrier size
    :rtype: LawReport
    """
    per_size = max(MIN_SHARE, max_instances // max_size)
    checker = _MonadChecker("monad-laws[{0}]".format(M.name), per_size, random.Random(seed))
    ident = lambda x: x

    for n in _sizes(max_size):
        E = list(range(n))
        vals = checker.values(M, E)
        for v in vals:
            checker.expect_equal("mult-unit-left", M.mult(M.unit(v)), v, _eq, value=v)
            checker.expect_equal("mult-unit-right", M.mult(M.fmap(M.unit, v)), v, _eq, value=v)
            checker.expect_equal("functor-identity", M.fmap(ident, v), v, _eq, value=v)

        for m in _sizes(max_size):
            funcs = checker.functions(n, m)
            for x, f in checker.tuples(E, funcs):
                checker.expect_equal("unit-naturality", M.fmap(f.__getitem__, M.unit(x)), M.unit(f[x]), _eq,
                                     element=x, f=f)
            ends = checker.functions(m, m)
            for v, f, g in checker.tuples(vals, funcs, ends):
                lhs = M.fmap(lambda x: g[f[x]], v)
                rhs = M.fmap(g.__getitem__, M.fmap(f.__getitem__, v))
                checker.expect_equal("functor-composition", lhs, rhs, _eq, value=v, f=f, g=g)

        inner = vals[:NESTED_ELEMENTS]
        nested = checker.values(M, inner)
        funcs = checker.functions(n, n)
        for vv, f in checker.tuples(nested, funcs):
            lhs = M.fmap(f.__getitem__, M.mult(vv))
            rhs = M.mult(M.fmap(lambda u: M.fmap(f.__getitem__, u), vv))
            checker.expect_equal("mult-naturality", lhs, rhs, _eq, value=vv, f=f)

        for vvv in checker.values(M, nested[:NESTED_ELEMENTS]):
            checker.expect_equal("mult-associativity", M.mult(M.mult(vvv)), M.mult(M.fmap(M.mult, vvv)), _eq,
                                 value=vvv)

        for m in _sizes(max_size):
            others = checker.values(M, list(range(m)))
            _check_pair_laws(checker, M, vals, others, n, m)
            if n * m <= max_size:
                nested_other = checker.values(M, others[:NESTED_ELEMENTS])
                for vv, ww in checker.tuples(nested, nested_other):
                    lhs = M.mult(M.fmap(lambda p: M.pair(p[0], p[1]), M.pair(vv, ww)))
                    checker.expect_equal("mult-monoidal", lhs, M.pair(M.mult(vv), M.mult(ww)), _eq, v=vv, w=ww)

        if M.ordered:
            _check_order_laws(checker, M, vals, nested, n)
    if not M.ordered:
        checker.note("no value order: compatibility laws skipped")
    return checker.report()


def _check_pair_laws(checker, M, vals, others, n, m):
    for x, y in itertools.product(range(n), range(m)):
        checker.expect_equal("unit-monoidal", M.pair(M.unit(x), M.unit(y)), M.unit((x, y)), _eq, x=x, y=y)

    for v, w in checker.tuples(vals, others):
        checker.expect_equal("pair-symmetry", M.fmap(lambda p: (p[1], p[0]), M.pair(v, w)), M.pair(w, v), _eq,
                             v=v, w=w)
        checker.expect_equal("pair-unit-left", M.fmap(lambda p: p[1], M.pair(M.unit(0), w)), w, _eq, w=w)
        checker.expect_equal("pair-unit-right", M.fmap(lambda p: p[0], M.pair(v, M.unit(0))), v, _eq, v=v)
        left = M.mult(M.fmap(lambda p: M.strength(p[0], p[1]), M.costrength(v, w)))
        right = M.mult(M.fmap(lambda p: M.costrength(p[0], p[1]), M.strength(v, w)))
        checker.expect_equal("commutativity", left, right, _eq, v=v, w=w)
        checker.expect_equal("strength-agrees-with-pair", left, M.pair(v, w), _eq, v=v, w=w)

    f_tables = checker.functions(n, n)
    g_tables = checker.functions(m, m)
    for v, w, f, g in checker.tuples(vals, others, f_tables, g_tables):
        lhs = M.fmap(lambda p: (f[p[0]], g[p[1]]), M.pair(v, w))
        rhs = M.pair(M.fmap(f.__getitem__, v), M.fmap(g.__getitem__, w))
        checker.expect_equal("pair-naturality", lhs, rhs, _eq, v=v, w=w, f=f, g=g)

    for u, v, w in checker.tuples(vals, others, vals):
        lhs = M.fmap(lambda p: (p[0][0], (p[0][1], p[1])), M.pair(M.pair(u, v), w))
        checker.expect_equal("pair-associativity", lhs, M.pair(u, M.pair(v, w)), _eq, u=u, v=v, w=w)


def _check_order_laws(checker, M, vals, nested, n):
    leq = M.value_leq
    for v in vals:
        checker.expect("leq-reflexive", leq(v, v), v, v, value=v)
    for u, v, w in checker.tuples(vals, vals, vals):
        if leq(u, v) and leq(v, w):
            checker.expect_leq("leq-transitive", u, w, leq, u=u, v=v, w=w)
    funcs = checker.functions(n, n)
    for v, v2, f in checker.tuples(vals, vals, funcs):
        if leq(v, v2):
            checker.expect_leq("leq-fmap-monotone", M.fmap(f.__getitem__, v), M.fmap(f.__getitem__, v2), leq,
                               v=v, v2=v2, f=f)
    for v, v2, w in checker.tuples(vals, vals, vals):
        if leq(v, v2):
            checker.expect_leq("leq-pair-monotone", M.pair(v, w), M.pair(v2, w), leq, v=v, v2=v2, w=w)
    for vv, vv2 in checker.tuples(nested, nested):
        if leq(vv, vv2):
            checker.expect_leq("leq-mult-monotone", M.mult(vv), M.mult(vv2), leq, v=vv, v2=vv2)
    if not vals:
        return
    conts = [tuple(vals[(i + j) % len(vals)] for j in range(n)) for i in range(len(vals))]
    for v, k, k2 in checker.tuples(vals, conts, conts):
        if all(leq(a, b) for a, b in zip(k, k2)):
            checker.expect_leq("leq-bind-monotone", M.bind(v, k.__getitem__), M.bind(v, k2.__getitem__), leq,
                               value=v, k=k, k2=k2)


def check_gs_monoidal_monad(M, max_size=3, max_instances=DEFAULT_MAX_INSTANCES, seed=0):
    """
    Check ``T(dup) = pair . dup`` and ``T(discharge) = unit . discharge`` on the values of ``M``.

    :rtype: LawReport
    """
    checker = _MonadChecker("gs-monoidal-monad[{0}]".format(M.name), max_instances, random.Random(seed))
    for n in _sizes(max_size):
        for v in checker.values(M, list(range(n))):
            checker.expect_equal("dup", M.fmap(lambda x: (x, x), v), M.pair(v, v), _eq, value=v)
            checker.expect_equal("discharge", M.fmap(lambda x: 0, v), M.unit(0), _eq, value=v)
    return checker.report()


def check_colax_cartesian_monad(M, max_size=3, max_instances=DEFAULT_MAX_INSTANCES, seed=0):
    """
    Check ``T(dup) <= pair . dup`` and ``T(discharge) <= unit . discharge`` under the value order.

    :rtype: LawReport
    :raises MissingPreorder: when the monad has no value order
    """
    M.require_order()
    checker = _MonadChecker("colax-cartesian-monad[{0}]".format(M.name), max_instances, random.Random(seed))
    for n in _sizes(max_size):
        for v in checker.values(M, list(range(n))):
            checker.expect_leq("dup-colax", M.fmap(lambda x: (x, x), v), M.pair(v, v), M.value_leq, value=v)
            checker.expect_leq("discharge-colax", M.fmap(lambda x: 0, v), M.unit(0), M.value_leq, value=v)
    return checker.report()
