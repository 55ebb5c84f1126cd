#!/usr/bin/env python

from collections import defaultdict, deque
import logging

from ..errors import Infeasible
from .report import LawChecker

log = logging.getLogger(__name__)

DEFAULT_CLOSURE_CAP = 512


class GeneratedOrder(object):
    """
    A preorder stored as index pairs per homset.

    :ivar pairs: mapping ``(a, b) -> set of (i, j)`` over homset indices
    """
    def __init__(self, presentation, homs, index, pairs):
        self._presentation = presentation
        self.homs = homs
        self._index = index
        self.pairs = pairs

    def __call__(self, f, g):
        P = self._presentation
        hom = (P.dom(f), P.cod(f))
        if hom not in self.pairs:
            return P.equal(f, g)
        key = P.model.key
        try:
            return (self._index[hom][key(f)], self._index[hom][key(g)]) in self.pairs[hom]
        except KeyError:
            return P.equal(f, g)

    def size(self):
        return sum(len(p) for p in self.pairs.values())

    def related(self):
        """All related pairs as morphisms, in homset and index order."""
        for hom in sorted(self.pairs, key=repr):
            items = self.homs[hom]
            for i, j in sorted(self.pairs[hom]):
                yield items[i], items[j]


def generate_oplax_preorder(P, closure_cap=DEFAULT_CLOSURE_CAP, extend=False):
    """
    Compute the least preorder making ``P`` oplax cartesian.

    The generators are ``dup . f <= (f x f) . dup`` and ``discharge . f <= discharge`` for every
    morphism ``f`` whose tensor objects are in the object list; the closure adds reflexivity,
    transitivity, pre- and post-composition and whiskering ``x (x) -`` and ``- (x) x`` by identities,
    again only inside the object list. The result is therefore a lower bound for the preorder that an
    untruncated category would generate.

    With ``extend`` the closure also starts from every pair already related in ``P``, so the result is
    the least oplax cartesian preorder containing ``P``'s own.

    :param GsPresentation P: the presentation; every homset must have at most ``closure_cap`` morphisms
    :param int closure_cap: largest homset size accepted
    :param bool extend: seed the closure with the preorder of ``P``
    :return: ``P`` with the generated preorder
    :rtype: GsPresentation
    :raises Infeasible: when a homset is larger than ``closure_cap``
    """
    if extend:
        P.require_order()
    objects = P.object_list()
    key = P.model.key
    homs = {}
    index = {}
    for a in objects:
        for b in objects:
            hom = P.hom(a, b)
            size = hom.size
            if size is None or size > closure_cap:
                raise Infeasible(size, closure_cap, message="hom({0}, {1}) in the generated preorder".format(a, b))
            homs[(a, b)] = list(hom)
            index[(a, b)] = dict((key(f), i) for i, f in enumerate(homs[(a, b)]))

    pairs = defaultdict(set)
    above = defaultdict(lambda: defaultdict(set))
    below = defaultdict(lambda: defaultdict(set))
    queue = deque()

    def _add(f, g):
        hom = (P.dom(f), P.cod(f))
        if hom not in index:
            return
        i = index[hom].get(key(f))
        j = index[hom].get(key(g))
        if i is None or j is None or (i, j) in pairs[hom]:
            return
        pairs[hom].add((i, j))
        above[hom][i].add(j)
        below[hom][j].add(i)
        queue.append((hom, i, j))

    for hom, items in homs.items():
        for f in items:
            _add(f, f)

    if extend:
        for items in homs.values():
            for f in items:
                for g in items:
                    if P.leq(f, g):
                        _add(f, g)

    I = P.unit()
    for (a, b), items in homs.items():
        for f in items:
            if P.obj(a, a) is not None and P.obj(b, b) is not None:
                _add(P.compose(P.dup(b), f), P.compose(P.tensor(f, f), P.dup(a)))
            if P.contains(I):
                _add(P.compose(P.discharge(b), f), P.discharge(a))

    rounds = 0
    while queue:
        rounds += 1
        (a, b), i, j = queue.popleft()
        f, g = homs[(a, b)][i], homs[(a, b)][j]

        for k in list(below[(a, b)][i]):
            _add(homs[(a, b)][k], g)
        for k in list(above[(a, b)][j]):
            _add(f, homs[(a, b)][k])

        for c in objects:
            for h in homs[(b, c)]:
                _add(P.compose(h, f), P.compose(h, g))
            for h in homs[(c, a)]:
                _add(P.compose(f, h), P.compose(g, h))
            if P.obj(c, a) is not None and P.obj(c, b) is not None:
                idc = P.identity(c)
                _add(P.tensor(idc, f), P.tensor(idc, g))
            if P.obj(a, c) is not None and P.obj(b, c) is not None:
                idc = P.identity(c)
                _add(P.tensor(f, idc), P.tensor(g, idc))

    order = GeneratedOrder(P, homs, index, dict(pairs))
    log.debug("Generated preorder on %s: %d pairs after %d steps", P.name, order.size(), rounds)
    generated = P.with_order(order, name=P.name + "[generated]")
    generated.generated_order = order
    return generated


def check_order_contains(generated, P):
    """
    Check that every pair of a generated preorder is related in ``P``'s own preorder.

    :param GsPresentation generated: output of :func:`generate_oplax_preorder`
    :param GsPresentation P: presentation whose preorder should contain the generated one
    :rtype: LawReport
    """
    P.require_order()
    checker = LawChecker("order-contains[{0}]".format(P.name), label=P.label)
    for f, g in generated.generated_order.related():
        checker.expect_leq("generated-below", f, g, P.leq, f=f, g=g)
    return checker.report()
