#!/usr/bin/env python

import logging
import random

from ..core.report import LawChecker
from ..errors import DimensionMismatch
from ..finrel import rel_leq
from ..functors.data import FunctorData
from .hypograph import hypograph
from .model import open_preord, DEFAULT_POINTWISE_LIMIT
from .preorder import HomPreorder, MonotoneMap, preord_product, preord_terminal

log = logging.getLogger(__name__)

# hom-preorders above this size are not pushed through the hypograph
HYPOGRAPH_LIMIT = 256


def hom_functor_to_preord(P, A, pointwise_limit=DEFAULT_POINTWISE_LIMIT, seed=0):
    """
    The representable ``P(A, -)`` as a mapping into Preord.

    Objects go to hom-preorders, ``f`` to post-composition; the laxator sends ``(f, g)`` to
    ``(f x g) . dup_A`` with unit ``discharge_A``, the oplaxator sends ``f`` to its two
    marginals ``(id x discharge) . f`` and ``(discharge x id) . f``.

    :param GsPresentation P: an oplax cartesian presentation
    :param A: the representing object
    :rtype: FunctorData
    :raises Infeasible: when a homset out of ``A`` exceeds the cap
    """
    P.require_order()
    target = open_preord(P.cap, pointwise_limit, seed)
    terminal = preord_terminal()
    unit = P.unit()
    homs = {}

    def obj(X):
        if X not in homs:
            homs[X] = HomPreorder(P, A, X)
        return homs[X]

    def mor(f):
        src, tgt = obj(P.dom(f)), obj(P.cod(f))
        return MonotoneMap(src, tgt, fn=lambda i: tgt.index(P.compose(f, src.element(i))))

    def psi(X, Y):
        FX, FY, FXY = obj(X), obj(Y), obj(P.model.tensor_obj(X, Y))
        n = FY.size
        dup = P.dup(A)

        def _pair(p):
            f, g = FX.element(p // n), FY.element(p % n)
            return FXY.index(P.compose(P.tensor(f, g), dup))
        return MonotoneMap(preord_product(FX, FY), FXY, fn=_pair)

    def psi0():
        FI = obj(unit)
        point = FI.index(P.discharge(A))
        return MonotoneMap(terminal, FI, fn=lambda _: point)

    def phi(X, Y):
        FX, FY, FXY = obj(X), obj(Y), obj(P.model.tensor_obj(X, Y))
        n = FY.size
        left = P.tensor(P.identity(X), P.discharge(Y))
        right = P.tensor(P.discharge(X), P.identity(Y))

        def _marginals(i):
            f = FXY.element(i)
            return FX.index(P.compose(left, f)) * n + FY.index(P.compose(right, f))
        return MonotoneMap(FXY, preord_product(FX, FY), fn=_marginals)

    def phi0():
        return MonotoneMap(obj(unit), terminal, fn=lambda _: 0)

    return FunctorData(P, target, obj, mor, psi=psi, psi0=psi0, phi=phi, phi0=phi0,
                       name="{0}({1},-)".format(P.name, A))


def _pointwise_leq(F, f, g, points):
    Ff, Fg = F.mor(f), F.mor(g)
    tgt = Ff.tgt
    return all(tgt.leq(Ff(x), Fg(x)) for x in points)


def completeness_experiment(P, pairs, max_points=DEFAULT_POINTWISE_LIMIT, seed=0):
    """
    Compare the order of ``P`` with the order seen through representable functors.

    For every parallel pair ``(f, g)`` and every object ``X`` of ``P``, ``P(X, f) <= P(X, g)`` is
    tested pointwise on ``hom(X, dom f)`` and, when the hom-preorder is small, through the hypograph
    in FinRel. ``f <= g`` must hold exactly when no representable separates the pair.

    :param GsPresentation P: an oplax cartesian presentation
    :param pairs: parallel morphism pairs
    :param int max_points: homsets larger than this are compared on sampled points
    :rtype: LawReport
    :raises DimensionMismatch: when a pair is not parallel
    """
    P.require_order()
    rng = random.Random(seed)
    checker = LawChecker("completeness[{0}]".format(P.name), label=P.label)
    functors = dict((X, hom_functor_to_preord(P, X, max_points, seed)) for X in P.object_list())

    for f, g in pairs:
        a, b = P.dom(f), P.cod(f)
        if (P.dom(g), P.cod(g)) != (a, b):
            raise DimensionMismatch((a, b), (P.dom(g), P.cod(g)), message="completeness pair")
        below = P.leq(f, g)

        yoneda = True
        through_rel = True
        rel_checked = False
        for X, F in functors.items():
            FX = F.obj(a)
            if FX.size <= max_points:
                points = range(FX.size)
            else:
                checker.exhaustive = False
                checker.note("hom({0}, {1}) compared on {2} sampled points".format(X, a, max_points))
                points = rng.sample(range(FX.size), max_points)
                if X == a:
                    points.append(FX.index(P.identity(a)))
            yoneda = yoneda and _pointwise_leq(F, f, g, points)
            if FX.size <= HYPOGRAPH_LIMIT:
                through_rel = through_rel and rel_leq(hypograph(F.mor(f)), hypograph(F.mor(g)))
                rel_checked = rel_checked or X == a

        checker.expect("yoneda-separation", below == yoneda, below, yoneda, f=f, g=g)
        if rel_checked:
            checker.expect("hypograph-separation", below == through_rel, below, through_rel, f=f, g=g)
        else:
            checker.note("hypograph comparison skipped for {0}: hom-preorders too large".format(P.label(f)))
    return checker.report()
