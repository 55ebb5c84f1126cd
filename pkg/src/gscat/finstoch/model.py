#!/usr/bin/env python

import logging

from cachetools import LRUCache, cachedmethod

from ..core.presentation import GsModel, GsPresentation, DEFAULT_CAP
from ..errors import Infeasible
from .stoch import (stoch_compose, stoch_tensor, stoch_id, stoch_symmetry, stoch_dup, stoch_discharge, support_leq,
                    sample_stoch, distributions, all_stoch_matrices)

log = logging.getLogger(__name__)


class FinStochModel(GsModel):
    """
    Finite ordinals and stochastic matrices, ordered by support inclusion.

    Homsets are infinite and sampled, unless ``max_denominator`` bounds them to the matrices whose
    entries have denominators at most that value. Composites may leave the bounded homsets.
    """
    name = "finstoch"
    ordered = True

    def __init__(self, max_denominator=None, max_weight=3):
        self.max_denominator = max_denominator
        self.max_weight = max_weight
        self._homs = LRUCache(maxsize=64)

    def unit(self):
        return 1

    def tensor_obj(self, a, b):
        return a * b

    def dom(self, f):
        return f.src

    def cod(self, f):
        return f.tgt

    def identity(self, a):
        return stoch_id(a)

    def compose(self, g, f):
        return stoch_compose(g, f)

    def tensor(self, f, g):
        return stoch_tensor(f, g)

    def symmetry(self, a, b):
        return stoch_symmetry(a, b)

    def dup(self, a):
        return stoch_dup(a)

    def discharge(self, a):
        return stoch_discharge(a)

    def leq(self, f, g):
        return support_leq(f, g)

    @cachedmethod(lambda self: self._homs)
    def _hom(self, a, b):
        log.debug("Enumerating stochastic matrices %d -> %d with denominators <= %d", a, b, self.max_denominator)
        matrices = all_stoch_matrices(a, b, self.max_denominator)
        return matrices, dict((f, i) for i, f in enumerate(matrices))

    def hom_size(self, a, b):
        if self.max_denominator is None:
            return None
        return len(distributions(b, self.max_denominator)) ** a

    def hom_item(self, a, b, index):
        return self._hom(a, b)[0][index]

    def hom_index(self, a, b, f):
        if self.max_denominator is None:
            return None
        return self._hom(a, b)[1].get(f)

    def sample_hom(self, a, b, rng):
        return sample_stoch(a, b, rng, self.max_weight)


def finstoch_presentation(sizes=(1, 2, 3), max_denominator=None, cap=DEFAULT_CAP):
    """
    FinStoch on the given sizes. Sampled presentations also list the squares of the sizes so that
    every duplicator of a listed size is available; bounded ones keep only the sizes.

    :param int max_denominator: enumerate bounded homsets instead of sampling
    :rtype: GsPresentation
    :raises Infeasible: when a bounded homset has more than ``cap`` matrices
    """
    objects = set(int(n) for n in sizes)
    if max_denominator is None:
        objects |= set(n * n for n in objects)
    objects = sorted(objects)
    model = FinStochModel(max_denominator)
    if max_denominator is not None:
        for a in objects:
            for b in objects:
                size = model.hom_size(a, b)
                if size > cap:
                    raise Infeasible(size, cap, message="stochastic matrices {0} -> {1}".format(a, b))
    return GsPresentation(model, objects, cap=cap, name="finstoch")


def open_finstoch(cap=DEFAULT_CAP):
    return GsPresentation(FinStochModel(), None, cap=cap, name="finstoch")
