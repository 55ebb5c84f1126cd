#!/usr/bin/env python

import logging

from ..core.presentation import GsModel, GsPresentation, DEFAULT_CAP
from ..errors import Infeasible, UsageError
from .rel import (Rel, rel_compose, rel_tensor, rel_id, rel_symmetry, rel_dup, rel_discharge, rel_leq)

log = logging.getLogger(__name__)


class FinRelModel(GsModel):
    """Finite ordinals and relations, ordered by inclusion."""
    name = "finrel"
    ordered = True

    def unit(self):
        return 1

    def tensor_obj(self, a, b):
        return a * b

    def dom(self, f):
        return f.src

    def cod(self, f):
        return f.tgt

    def identity(self, a):
        return rel_id(a)

    def compose(self, g, f):
        return rel_compose(g, f)

    def tensor(self, f, g):
        return rel_tensor(f, g)

    def symmetry(self, a, b):
        return rel_symmetry(a, b)

    def dup(self, a):
        return rel_dup(a)

    def discharge(self, a):
        return rel_discharge(a)

    def leq(self, f, g):
        return rel_leq(f, g)

    def hom_size(self, a, b):
        return 2 ** (a * b)

    def hom_item(self, a, b, index):
        return Rel.from_index(a, b, index)

    def hom_index(self, a, b, f):
        return f.index()


def as_presentation(max_size=None, object_list=None, cap=DEFAULT_CAP, order="inclusion"):
    """
    FinRel truncated to a list of sizes.

    :param int max_size: use the sizes ``1..max_size`` when no object list is given
    :param object_list: explicit sizes
    :param int cap: largest homset allowed
    :param str order: ``inclusion``, ``reversed`` or ``trivial``
    :rtype: GsPresentation
    :raises Infeasible: when some homset between listed sizes has more than ``cap`` relations
    """
    if object_list is None:
        if max_size is None:
            raise UsageError("as_presentation needs max_size or object_list")
        object_list = range(1, max_size + 1)
    objects = sorted(set(int(n) for n in object_list))

    for a in objects:
        for b in objects:
            size = 2 ** (a * b)
            if size > cap:
                raise Infeasible(size, cap, message="hom({0}, {1}) in FinRel".format(a, b))

    P = GsPresentation(FinRelModel(), objects, cap=cap, name="finrel")
    if order == "reversed":
        return P.reversed_order()
    elif order == "trivial":
        return P.trivial_order()
    elif order not in ("inclusion", "default", None):
        raise UsageError("Unknown order {0} for FinRel".format(order))
    return P


def open_finrel(cap=DEFAULT_CAP):
    """FinRel with every size available, for use as a functor target."""
    return GsPresentation(FinRelModel(), None, cap=cap, name="finrel")
