#!/usr/bin/env python

import itertools
import logging
import random

from ..core.laws import check_gs_axioms, check_oplax_cartesian
from ..core.report import LawChecker, merge_reports
from ..finrel.model import open_finrel
from ..finrel.rel import all_total_relations, is_total_relation, rel_compose, rel_tensor
from ..functors.checks import check_gs_functor
from ..functors.data import FunctorData
from .model import finstoch_presentation
from .stoch import all_stoch_matrices, sample_stoch, stoch_compose, stoch_tensor, support, uniform_stoch

log = logging.getLogger(__name__)

DEFAULT_SAMPLES = 200


def support_functor(P):
    """Support as a strict gs-monoidal functor from a FinStoch presentation into FinRel."""
    return FunctorData(P, open_finrel(), lambda n: n, support, name="support")


def _check_quotient(checker, P, sizes, samples, rng):
    by_type = {}
    for _ in range(samples):
        a, b = rng.choice(sizes), rng.choice(sizes)
        by_type.setdefault((a, b), []).append(sample_stoch(a, b, rng))
    for matrices in by_type.values():
        for f in matrices:
            checker.expect("support-total", is_total_relation(support(f)), support(f), None, f=f)
        for f, g in itertools.product(matrices, repeat=2):
            equivalent = P.equiv(f, g)
            checker.expect("equivalence-is-equal-support", equivalent == (support(f) == support(g)),
                           equivalent, support(f) == support(g), f=f, g=g)

    for a in sizes:
        for b in sizes:
            for R in all_total_relations(a, b):
                f = uniform_stoch(R)
                checker.expect("surjective-on-total", support(f) == R, support(f), R, relation=R)


def _check_bounded_support(checker, max_denominator):
    """Functoriality of support on every bounded matrix between sizes 1 and 2."""
    homs = dict(((a, b), all_stoch_matrices(a, b, max_denominator)) for a in (1, 2) for b in (1, 2))
    for (a, b), fs in homs.items():
        for c in (1, 2):
            for f, g in itertools.product(fs, homs[(b, c)]):
                checker.expect_equal("bounded-compose", support(stoch_compose(g, f)),
                                     rel_compose(support(g), support(f)), lambda x, y: x == y, f=f, g=g)
    for f, g in itertools.product(homs[(2, 2)], homs[(1, 2)]):
        checker.expect_equal("bounded-tensor", support(stoch_tensor(f, g)), rel_tensor(support(f), support(g)),
                             lambda x, y: x == y, f=f, g=g)


def check_support_oplax(samples=DEFAULT_SAMPLES, sizes=(1, 2, 3), seed=0, max_denominator=3):
    """
    Check FinStoch against the support preorder.

    The oplax cartesian inequalities and closure rules are checked on ``samples`` seeded matrices
    per law. The closure rules are those of the generated preorder, so passing them means the
    generated preorder is contained in the support preorder. Support is checked to be a strict
    gs-monoidal functor into FinRel, both on samples and on every matrix with denominators at most
    ``max_denominator`` between sizes 1 and 2. Finally the quotient by ``~=`` is compared with total
    relations: equivalence is equality of supports, and every total relation is the support of its
    uniform matrix.

    :rtype: LawReport
    """
    sizes = sorted(set(int(n) for n in sizes))
    P = finstoch_presentation(sizes)
    reports = [
        check_gs_axioms(P, samples, seed),
        check_oplax_cartesian(P, samples, seed),
        check_gs_functor(support_functor(P), "strict", samples, seed),
    ]

    checker = LawChecker("support-quotient", label=str)
    _check_quotient(checker, P, sizes, samples, random.Random(seed))
    if max_denominator:
        _check_bounded_support(checker, max_denominator)
    checker.note("supports are total: relations with an element related to nothing, such as the empty "
                 "relation 1 -> 1, are not realized, so the quotient is compared with total relations only")
    reports.append(checker.report())
    return merge_reports("finstoch-support[{0}]".format(",".join(str(n) for n in sizes)), reports)
