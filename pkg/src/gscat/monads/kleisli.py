#!/usr/bin/env python

import itertools
import logging
import operator
import random

from cachetools import LRUCache, cachedmethod
import numpy as np

from ..core.laws import object_tuples, for_homs
from ..core.predicates import dom
from ..core.presentation import GsModel, GsPresentation, DEFAULT_CAP
from ..core.report import LawChecker
from ..errors import DimensionMismatch, Infeasible, NotGsMonoidalMonad, TypeMismatch
from ..finrel import (Rel, all_relations, as_presentation, is_partial_function, is_total_relation, rel_compose,
                     rel_leq)
from ..functors.data import FunctorData
from ..preord.model import open_preord
from ..preord.preorder import FinPreord, MonotoneMap, preord_terminal
from ..pspan.model import open_pspan
from ..pspan.span import Span
from .base import get_monad
from .laws import check_gs_monoidal_monad

log = logging.getLogger(__name__)


class KleisliMorphism(object):
    """
    An arrow ``src -> tgt`` of the Kleisli category of ``monad``, stored as its representative: one value
    of ``T(tgt)`` per element of ``src``.
    """
    __slots__ = ("monad", "src", "tgt", "table")

    def __init__(self, monad, src, tgt, table):
        self.monad = monad
        self.src = int(src)
        self.tgt = int(tgt)
        self.table = tuple(table)
        if len(self.table) != self.src:
            raise DimensionMismatch(self.src, len(self.table), message="Kleisli table length")

    def __call__(self, x):
        return self.table[x]

    def __eq__(self, other):
        return (isinstance(other, KleisliMorphism) and self.monad.name == other.monad.name and
                (self.src, self.tgt, self.table) == (other.src, other.tgt, other.table))

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.monad.name, self.src, self.tgt, self.table))

    def __repr__(self):
        return "KleisliMorphism({0}, {1}, {2}, {3!r})".format(self.monad.name, self.src, self.tgt, self.table)

    def __str__(self):
        values = ",".join(self.monad.label(v) for v in self.table)
        return "{0}->{1}:[{2}]".format(self.src, self.tgt, values)


class KleisliModel(GsModel):
    """
    The Kleisli category of a commutative monad on finite ordinals.

    Composition binds, the tensor goes through the lax structure ``pair`` followed by the row-major
    pairing, structure arrows are ``unit`` after the FinSet ones, and arrows are ordered pointwise by the
    value order.
    """
    ordered = True

    def __init__(self, monad):
        self.monad = monad
        self.name = "kleisli[{0}]".format(monad.name)
        self._carriers = LRUCache(maxsize=64)

    def morphism(self, src, tgt, table):
        return KleisliMorphism(self.monad, src, tgt, table)

    def pure(self, src, tgt, fn):
        """The image of a function ``range(src) -> range(tgt)``."""
        return self.morphism(src, tgt, [self.monad.unit(fn(x)) for x in range(src)])

    def unit(self):
        return 1

    def tensor_obj(self, a, b):
        return a * b

    def dom(self, f):
        return f.src

    def cod(self, f):
        return f.tgt

    def identity(self, a):
        return self.pure(a, a, lambda x: x)

    def compose(self, g, f):
        if f.tgt != g.src:
            raise DimensionMismatch(f.tgt, g.src, message="composing Kleisli arrows")
        return self.morphism(f.src, g.tgt, [self.monad.bind(v, g.table.__getitem__) for v in f.table])

    def tensor(self, f, g):
        M = self.monad
        n = g.tgt
        table = []
        for x, y in itertools.product(range(f.src), range(g.src)):
            table.append(M.fmap(lambda p: p[0] * n + p[1], M.pair(f.table[x], g.table[y])))
        return self.morphism(f.src * g.src, f.tgt * g.tgt, table)

    def symmetry(self, a, b):
        return self.pure(a * b, b * a, lambda p: (p % b) * a + p // b)

    def dup(self, a):
        return self.pure(a, a * a, lambda x: x * a + x)

    def discharge(self, a):
        return self.pure(a, 1, lambda x: 0)

    def leq(self, f, g):
        return all(self.monad.value_leq(v, w) for v, w in zip(f.table, g.table))

    def label(self, f):
        return str(f)

    @cachedmethod(lambda self: self._carriers)
    def carrier(self, n):
        return self.monad.carrier(n)

    def hom_size(self, a, b):
        size = self.carrier(b).size
        return None if size is None else size ** a

    def hom_item(self, a, b, index):
        space = self.carrier(b)
        base = space.size
        table = []
        for _ in range(a):
            index, digit = divmod(index, base)
            table.append(space[digit])
        return self.morphism(a, b, table)

    def hom_index(self, a, b, f):
        space = self.carrier(b)
        if not space.finite:
            return None
        index = 0
        for v in reversed(f.table):
            index = index * space.size + space.index(v)
        return index

    def sample_hom(self, a, b, rng):
        space = self.carrier(b)
        return self.morphism(a, b, [space.sample(rng) for _ in range(a)])


def _monad(monad):
    return get_monad(monad) if isinstance(monad, str) else monad


def kleisli_category(monad, object_list=(1, 2, 4), cap=DEFAULT_CAP):
    """
    The Kleisli category of ``monad`` truncated to the given sizes.

    :param monad: a :class:`Monad` or its registry name
    :rtype: GsPresentation
    :raises Infeasible: when an enumerable homset exceeds ``cap``
    """
    model = KleisliModel(_monad(monad))
    objects = sorted(set(int(n) for n in object_list))
    for a, b in itertools.product(objects, repeat=2):
        size = model.hom_size(a, b)
        if size is not None and size > cap:
            raise Infeasible(size, cap, message="hom({0}, {1}) in {2}".format(a, b, model.name))
    if not model.monad.enumerable:
        log.debug("%s homsets are sampled", model.name)
    return GsPresentation(model, objects, cap=cap, name=model.name)


def open_kleisli(monad, cap=DEFAULT_CAP):
    model = KleisliModel(_monad(monad))
    return GsPresentation(model, None, cap=cap, name=model.name)


def finset_presentation(object_list=(1, 2, 4), cap=DEFAULT_CAP):
    """FinSet, as the Kleisli category of the identity monad."""
    P = kleisli_category("identity", object_list, cap)
    P.name = "finset"
    return P


def kleisli_F_T(monad, object_list=(1, 2, 4), cap=DEFAULT_CAP):
    """
    The free functor from FinSet into the Kleisli category: ``F(f) = unit . f``.

    It is strict gs-monoidal with identity structure maps.

    :rtype: FunctorData
    """
    M = _monad(monad)
    source = finset_presentation(object_list, cap)
    target = kleisli_category(M, object_list, cap)
    model = target.model

    def mor(f):
        return model.pure(f.src, f.tgt, f.table.__getitem__)

    def _pair(a, b):
        return model.identity(a * b)
    unit = model.identity(1)
    return FunctorData(source, target, lambda n: n, mor, psi=_pair, psi0=unit, phi=_pair, phi0=unit,
                       name="F_{0}".format(M.name))


class _GTObjects(object):
    """Memoized images of sizes under the right adjoint: carriers ordered by the value order."""

    def __init__(self, monad):
        self.monad = monad
        self._cache = {}

    def __call__(self, n):
        if n not in self._cache:
            space = self.monad.carrier(n)
            if not space.finite:
                raise Infeasible(message="G_T needs enumerable values of {0}".format(self.monad.name))
            values = space.all()
            leq = np.array([[self.monad.value_leq(v, w) for w in values] for v in values], dtype=bool)
            self._cache[n] = (FinPreord(len(values), leq.reshape((len(values), len(values)))), space)
        return self._cache[n]


def kleisli_G_T(monad, object_list=(1, 2), cap=DEFAULT_CAP, seed=0):
    """
    The right adjoint from the Kleisli category into Preord: ``n`` goes to ``T(n)`` under the value
    order and ``f`` to ``v -> bind(v, f)``; the laxator is ``pair`` and its unit is ``unit``.

    :rtype: FunctorData
    :raises Infeasible: for monads whose values cannot be enumerated
    """
    M = _monad(monad)
    source = kleisli_category(M, object_list, cap)
    target = open_preord(cap, seed=seed)
    carriers = _GTObjects(M)

    def obj(n):
        return carriers(n)[0]

    def mor(f):
        X, src = carriers(f.src)
        Y, tgt = carriers(f.tgt)
        return MonotoneMap(X, Y, values=[tgt.index(M.bind(v, f.table.__getitem__)) for v in src], check=False)

    def psi(a, b):
        A, sa = carriers(a)
        B, sb = carriers(b)
        AB, sab = carriers(a * b)
        values = [sab.index(M.fmap(lambda p: p[0] * b + p[1], M.pair(v, w))) for v in sa for w in sb]
        return MonotoneMap(target.model.tensor_obj(A, B), AB, values=values, check=False)

    def psi0():
        I, si = carriers(1)
        return MonotoneMap(preord_terminal(), I, values=[si.index(M.unit(0))], check=False)

    return FunctorData(source, target, obj, mor, psi=psi, psi0=psi0, name="G_{0}".format(M.name))


def kleisli_to_pspan(monad, object_list=(1, 2), cap=DEFAULT_CAP, max_size=3, seed=0):
    """
    The right adjoint followed by the inclusion of functions into PSpan(FinSet): ``f`` goes to the
    span with identity left leg over ``T(dom f)`` and right leg ``v -> bind(v, f)``.

    :rtype: FunctorData
    :raises NotGsMonoidalMonad: when ``monad`` is not a gs-monoidal monad
    """
    M = _monad(monad)
    report = check_gs_monoidal_monad(M, max_size=max_size, seed=seed)
    if not report.passed:
        raise NotGsMonoidalMonad(report)
    source = kleisli_category(M, object_list, cap)
    target = open_pspan(cap)
    carriers = _GTObjects(M)

    def _function_span(src_size, tgt_size, right):
        return Span(src_size, tgt_size, list(range(src_size)), right)

    def obj(n):
        return carriers(n)[1].size

    def mor(f):
        src = carriers(f.src)[1]
        tgt = carriers(f.tgt)[1]
        right = [tgt.index(M.bind(v, f.table.__getitem__)) for v in src]
        return _function_span(src.size, tgt.size, right)

    def psi(a, b):
        sa, sb, sab = carriers(a)[1], carriers(b)[1], carriers(a * b)[1]
        right = [sab.index(M.fmap(lambda p: p[0] * b + p[1], M.pair(v, w))) for v in sa for w in sb]
        return _function_span(sa.size * sb.size, sab.size, right)

    def psi0():
        si = carriers(1)[1]
        return _function_span(1, si.size, [si.index(M.unit(0))])

    return FunctorData(source, target, obj, mor, psi=psi, psi0=psi0, name="PSpan.G_{0}".format(M.name))


def powerset_to_rel(f):
    """The relation whose row ``x`` is the subset ``f(x)``."""
    if f.monad.name != "powerset":
        raise TypeMismatch("expected a powerset Kleisli arrow, got {0}".format(f.monad.name))
    return Rel.from_pairs(f.src, f.tgt, [(x, y) for x in range(f.src) for y in f.table[x]])


def rel_to_powerset(R):
    M = get_monad("powerset")
    return KleisliMorphism(M, R.src, R.tgt, [frozenset(np.flatnonzero(R.matrix[x]).tolist()) for x in range(R.src)])


def check_kleisli_rel_isomorphism(object_list=(1, 2), max_instances=4096, seed=0):
    """
    Check that the subset/row encoding is an isomorphism of preordered gs-monoidal categories between
    the powerset Kleisli category and FinRel.

    :rtype: LawReport
    """
    K = kleisli_category("powerset", object_list)
    R = as_presentation(object_list=object_list)
    rng = random.Random(seed)
    checker = LawChecker("kleisli-rel-isomorphism")

    pairs = object_tuples(K, 2)
    for _, (f,) in for_homs(checker, K, pairs, lambda a, b: [(a, b)], max_instances, rng):
        checker.expect_equal("round-trip", rel_to_powerset(powerset_to_rel(f)), f, K.equal, f=f)
        checker.expect("same-index", K.hom(f.src, f.tgt).index(f) == powerset_to_rel(f).index(), f=f)
    for _, (R1,) in for_homs(checker, R, pairs, lambda a, b: [(a, b)], max_instances, rng):
        checker.expect_equal("round-trip-rel", powerset_to_rel(rel_to_powerset(R1)), R1, R.equal, relation=R1)

    triples = object_tuples(K, 3)
    for _, (f, g) in for_homs(checker, K, triples, lambda a, b, c: [(a, b), (b, c)], max_instances, rng):
        checker.expect_equal("compose", powerset_to_rel(K.compose(g, f)),
                             R.compose(powerset_to_rel(g), powerset_to_rel(f)), R.equal, f=f, g=g)
    for _, (f, g) in for_homs(checker, K, object_tuples(K, 4), lambda a, b, c, d: [(a, b), (c, d)],
                              max_instances, rng):
        checker.expect_equal("tensor", powerset_to_rel(K.tensor(f, g)),
                             R.tensor(powerset_to_rel(f), powerset_to_rel(g)), R.equal, f=f, g=g)
    for _, (f, g) in for_homs(checker, K, pairs, lambda a, b: [(a, b), (a, b)], max_instances, rng):
        checker.expect("order", K.leq(f, g) == R.leq(powerset_to_rel(f), powerset_to_rel(g)), f=f, g=g)

    for a in K.object_list():
        checker.expect_equal("identity", powerset_to_rel(K.identity(a)), R.identity(a), R.equal, object=a)
        checker.expect_equal("dup", powerset_to_rel(K.dup(a)), R.dup(a), R.equal, object=a)
        checker.expect_equal("discharge", powerset_to_rel(K.discharge(a)), R.discharge(a), R.equal, object=a)
        for b in K.object_list():
            checker.expect_equal("symmetry", powerset_to_rel(K.symmetry(a, b)), R.symmetry(a, b), R.equal,
                                 a=a, b=b)
    return checker.report()


def kleisli_graph(f):
    """
    The relation underlying a powerset, nonempty powerset or lifting Kleisli arrow: ``x`` is related
    to the elements of ``f(x)``.
    """
    name = f.monad.name
    if name in ("powerset", "nonempty"):
        rows = f.table
    elif name == "lifting":
        rows = [() if v is None else v for v in f.table]
    else:
        raise TypeMismatch("{0} arrows have no underlying relation".format(name))
    return Rel.from_pairs(f.src, f.tgt, [(x, y) for x in range(f.src) for y in rows[x]])


def check_kleisli_subcategories(object_list=(1, 2), max_instances=4096, seed=0):
    """
    Check that the nonempty powerset Kleisli category is the category of total relations and that
    the lifting Kleisli category is the category of partial functions ordered by graph inclusion.

    Both comparisons go through :func:`kleisli_graph`; the hom counts show that every total relation,
    respectively every partial function, is reached.

    :rtype: LawReport
    """
    rng = random.Random(seed)
    checker = LawChecker("kleisli-subcategories")
    for name, predicate in (("nonempty", is_total_relation), ("lifting", is_partial_function)):
        K = kleisli_category(name, object_list)
        for a, b in object_tuples(K, 2):
            expected = sum(1 for R in all_relations(a, b) if predicate(R))
            checker.expect("{0}-hom-count".format(name), K.hom(a, b).size == expected, K.hom(a, b).size, expected,
                           a=a, b=b)
        for _, (f, g) in for_homs(checker, K, object_tuples(K, 2), lambda a, b: [(a, b), (a, b)], max_instances, rng):
            checker.expect("{0}-graph".format(name), predicate(kleisli_graph(f)), kleisli_graph(f), None, f=f)
            checker.expect("{0}-order".format(name), K.leq(f, g) == rel_leq(kleisli_graph(f), kleisli_graph(g)),
                           f=f, g=g)
        for _, (f, g) in for_homs(checker, K, object_tuples(K, 3), lambda a, b, c: [(a, b), (b, c)],
                                  max_instances, rng):
            checker.expect_equal("{0}-compose".format(name), kleisli_graph(K.compose(g, f)),
                                 rel_compose(kleisli_graph(g), kleisli_graph(f)), operator.eq, f=f, g=g)
    return checker.report()


def check_multiset_scalars(max_scalar=10):
    """
    In the multiset Kleisli category an endomorphism of the unit is a scalar ``k``, its domain is ``k``
    again, and so ``f . dom(f)`` is ``k * k``: the composite equals ``f`` only for ``0`` and ``1``.

    :rtype: LawReport
    """
    P = open_kleisli("multiset")
    model = P.model
    checker = LawChecker("multiset-scalars[<={0}]".format(max_scalar), label=P.label)
    for k in range(max_scalar + 1):
        f = model.morphism(1, 1, [model.monad.decode([k], 1)])
        square = model.morphism(1, 1, [model.monad.decode([k * k], 1)])
        lhs = P.compose(f, dom(P, f))
        checker.expect_equal("compose-domain-is-square", lhs, square, P.equal, k=k)
        checker.expect("compose-domain-equals-f-iff-idempotent", P.equal(lhs, f) == (k in (0, 1)), lhs, f, k=k)
    return checker.report()
