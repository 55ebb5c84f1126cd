#!/usr/bin/env python

import logging
import random

from cachetools import LRUCache, cachedmethod

from ..core.presentation import GsModel, GsPresentation, DEFAULT_CAP
from ..errors import Infeasible
from .preorder import (FinPreord, all_preorders, all_monotone_maps, identity_map, map_compose, map_tensor,
                       map_symmetry, map_diagonal, map_terminal, preord_product, preord_terminal)

log = logging.getLogger(__name__)

DEFAULT_POINTWISE_LIMIT = 64
# largest |Y|^|X| for which hom(X, Y) is enumerated
ENUMERATION_LIMIT = 65536


class PreordModel(GsModel):
    """
    Finite preorders and monotone maps, ordered pointwise; the cartesian product is the tensor.

    Maps whose source has more than ``pointwise_limit`` elements are compared on a seeded sample of
    points only; ``sampled_comparisons`` counts how often that happened.
    """
    name = "preord"
    ordered = True

    def __init__(self, pointwise_limit=DEFAULT_POINTWISE_LIMIT, seed=0):
        self.pointwise_limit = pointwise_limit
        self.seed = seed
        self.sampled_comparisons = 0
        self._homs = LRUCache(maxsize=256)

    def _points(self, X):
        if X.size <= self.pointwise_limit:
            return range(X.size)
        self.sampled_comparisons += 1
        rng = random.Random(self.seed * 1000003 + X.size)
        return rng.sample(range(X.size), self.pointwise_limit)

    def unit(self):
        return preord_terminal()

    def tensor_obj(self, X, Y):
        return preord_product(X, Y)

    def dom(self, f):
        return f.src

    def cod(self, f):
        return f.tgt

    def identity(self, X):
        return identity_map(X)

    def compose(self, g, f):
        return map_compose(g, f)

    def tensor(self, f, g):
        return map_tensor(f, g)

    def symmetry(self, X, Y):
        return map_symmetry(X, Y)

    def dup(self, X):
        return map_diagonal(X)

    def discharge(self, X):
        return map_terminal(X)

    def equal(self, f, g):
        if f.src != g.src or f.tgt != g.tgt:
            return False
        if not f.lazy and not g.lazy:
            return f.values == g.values
        return all(f(x) == g(x) for x in self._points(f.src))

    def leq(self, f, g):
        return all(f.tgt.leq(f(x), g(x)) for x in self._points(f.src))

    def key(self, f):
        return (f.src.key, f.tgt.key, f.values)

    def label(self, f):
        return repr(f)

    @cachedmethod(lambda self: self._homs)
    def _hom_list(self, X, Y):
        if not (isinstance(X, FinPreord) and isinstance(Y, FinPreord)):
            return None
        if Y.size ** X.size > ENUMERATION_LIMIT:
            return None
        log.debug("Enumerating monotone maps %r -> %r", X, Y)
        return all_monotone_maps(X, Y)

    def hom_size(self, X, Y):
        maps = self._hom_list(X, Y)
        return None if maps is None else len(maps)

    def hom_item(self, X, Y, index):
        return self._hom_list(X, Y)[index]

    def sample_hom(self, X, Y, rng):
        raise Infeasible(Y.size ** X.size, ENUMERATION_LIMIT, message="monotone maps {0!r} -> {1!r}".format(X, Y))


def default_preorders(max_size=2):
    """Representatives of the preorders up to ``max_size`` elements plus their pairwise products."""
    base = [preord_terminal()]
    for n in range(2, max_size + 1):
        base.extend(all_preorders(n))
    objects = list(base)
    for X in base[1:]:
        for Y in base[1:]:
            XY = preord_product(X, Y)
            if XY not in objects:
                objects.append(XY)
    return objects


def preord_presentation(preorders=None, max_size=2, cap=DEFAULT_CAP, pointwise_limit=DEFAULT_POINTWISE_LIMIT,
                        seed=0):
    """
    Preord truncated to a list of preorders.

    :param preorders: the objects; defaults to :func:`default_preorders`
    :param int max_size: largest representative used by the default object list
    :rtype: GsPresentation
    """
    if preorders is None:
        preorders = default_preorders(max_size)
    return GsPresentation(PreordModel(pointwise_limit, seed), preorders, cap=cap, name="preord")


def open_preord(cap=DEFAULT_CAP, pointwise_limit=DEFAULT_POINTWISE_LIMIT, seed=0):
    """Preord with every finite preorder available, for use as a functor target."""
    return GsPresentation(PreordModel(pointwise_limit, seed), None, cap=cap, name="preord")
