#!/usr/bin/env python

import itertools
import logging

import numpy as np

from ..core.report import LawChecker, merge_reports
from ..finrel import Rel, rel_compose, rel_id, rel_leq, open_finrel
from ..functors.checks import check_colax_cartesian, check_lax_on_identities
from ..functors.data import FunctorData
from .model import preord_presentation, default_preorders
from .preorder import all_preorders, all_monotone_maps, identity_map, map_compose, preord_product, preord_terminal

log = logging.getLogger(__name__)


def hypograph(f):
    """
    The relation ``{(x, y) : y <= f(x)}`` on the underlying sets of a monotone map.

    :param MonotoneMap f: the map
    :rtype: Rel
    """
    values = np.array(f.values, dtype=np.intp)
    return Rel(f.src.size, f.tgt.size, f.tgt.matrix[:, values].T)


def hypograph_functor(source=None, cap=None):
    """
    The hypograph mapping ``Preord -> FinRel`` with laxator ``R(id_{X x Y})`` and unit ``id_1``.

    It preserves composition strictly and identities only laxly.

    :param source: the Preord presentation to use as source
    :rtype: FunctorData
    """
    if source is None:
        source = preord_presentation()
    target = open_finrel() if cap is None else open_finrel(cap)
    return FunctorData(source, target, lambda X: X.size, hypograph,
                       psi=lambda X, Y: hypograph(identity_map(preord_product(X, Y))),
                       psi0=rel_id(1), name="R")


def _preorders_up_to(max_size):
    result = [preord_terminal()]
    for n in range(2, max_size + 1):
        result.extend(all_preorders(n))
    return result


def check_hypograph_functoriality(max_size=3, max_instances=4096, seed=0):
    """
    Check the hypograph mapping on every monotone map between preorder representatives up to
    ``max_size`` elements: strict composition, lax identities (equality exactly on discrete preorders),
    preservation and reflection of the pointwise order, and colax cartesianness up to identities.

    :rtype: LawReport
    """
    preorders = _preorders_up_to(max_size)
    checker = LawChecker("hypograph")
    maps = {}
    graphs = {}
    for X, Y in itertools.product(preorders, repeat=2):
        maps[(X, Y)] = all_monotone_maps(X, Y)
        for f in maps[(X, Y)]:
            graphs[f] = hypograph(f)

    for X in preorders:
        R_id = hypograph(identity_map(X))
        checker.expect("identity-lax", rel_leq(rel_id(X.size), R_id), rel_id(X.size), R_id, preorder=X)
        checker.expect("identity-exact-iff-discrete", (R_id == rel_id(X.size)) == X.is_discrete(), R_id,
                       rel_id(X.size), preorder=X)

    for X, Y, Z in itertools.product(preorders, repeat=3):
        if not checker.active("composition"):
            break
        for f, g in itertools.product(maps[(X, Y)], maps[(Y, Z)]):
            lhs = hypograph(map_compose(g, f))
            rhs = rel_compose(graphs[g], graphs[f])
            if not checker.expect("composition", lhs == rhs, lhs, rhs, f=f, g=g):
                break

    for X, Y in itertools.product(preorders, repeat=2):
        for f, g in itertools.product(maps[(X, Y)], repeat=2):
            pointwise = all(Y.leq(a, b) for a, b in zip(f.values, g.values))
            included = rel_leq(graphs[f], graphs[g])
            checker.expect("order-preserved-and-reflected", pointwise == included, graphs[f], graphs[g],
                           f=f, g=g)

    functor = hypograph_functor(preord_presentation(default_preorders(min(max_size, 2))))
    return merge_reports("hypograph-functoriality", [
        checker.report(),
        check_lax_on_identities(functor, max_instances, seed),
        check_colax_cartesian(functor, max_instances, seed, lax_identities=True),
    ])
