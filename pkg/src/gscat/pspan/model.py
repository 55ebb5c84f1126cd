#!/usr/bin/env python

import logging
from math import comb

from cachetools import LRUCache, cachedmethod

from ..core.presentation import GsModel, GsPresentation, DEFAULT_CAP
from ..errors import Infeasible
from .span import (all_spans, span_compose, span_tensor, span_id, span_symmetry, span_dup, span_discharge,
                   span_leq)

log = logging.getLogger(__name__)

DEFAULT_APEX_BOUND = 4


def count_spans(src, tgt, apex_bound):
    cells = src * tgt
    return sum(comb(cells + k - 1, k) for k in range(apex_bound + 1))


class PSpanModel(GsModel):
    """
    Spans of finite sets up to isomorphism, ordered by the existence of 2-cells.

    Homsets enumerate the spans whose apex is at most ``apex_bound``; composites may be larger and are
    kept exactly.
    """
    name = "pspan"
    ordered = True

    def __init__(self, apex_bound=DEFAULT_APEX_BOUND):
        self.apex_bound = apex_bound
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
        return span_id(a)

    def compose(self, g, f):
        return span_compose(g, f)

    def tensor(self, f, g):
        return span_tensor(f, g)

    def symmetry(self, a, b):
        return span_symmetry(a, b)

    def dup(self, a):
        return span_dup(a)

    def discharge(self, a):
        return span_discharge(a)

    def leq(self, f, g):
        return span_leq(f, g)

    @cachedmethod(lambda self: self._homs)
    def _hom(self, a, b):
        log.debug("Enumerating spans %d -> %d with apex <= %d", a, b, self.apex_bound)
        spans = all_spans(a, b, self.apex_bound)
        return spans, dict((s, i) for i, s in enumerate(spans))

    def hom_size(self, a, b):
        return count_spans(a, b, self.apex_bound)

    def hom_item(self, a, b, index):
        return self._hom(a, b)[0][index]

    def hom_index(self, a, b, f):
        return self._hom(a, b)[1].get(f)


def pspan_presentation(object_list=(1, 2, 4), apex_bound=DEFAULT_APEX_BOUND, cap=DEFAULT_CAP):
    """
    PSpan(FinSet) truncated to a list of sizes, with homsets bounded by apex size.

    :rtype: GsPresentation
    :raises Infeasible: when a bounded homset has more than ``cap`` spans
    """
    objects = sorted(set(int(n) for n in object_list))
    for a in objects:
        for b in objects:
            size = count_spans(a, b, apex_bound)
            if size > cap:
                raise Infeasible(size, cap, message="spans {0} -> {1} with apex <= {2}".format(a, b, apex_bound))
    return GsPresentation(PSpanModel(apex_bound), objects, cap=cap, name="pspan")


def open_pspan(cap=DEFAULT_CAP, apex_bound=DEFAULT_APEX_BOUND):
    return GsPresentation(PSpanModel(apex_bound), None, cap=cap, name="pspan")
