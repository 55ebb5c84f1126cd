#!/usr/bin/env python

import logging

from ..core.predicates import is_weakly_functional, is_weakly_total
from ..core.report import LawChecker
from .model import pspan_presentation
from .span import (all_spans, is_two_cell, span_canonicalize, span_leq, span_is_weakly_functional,
                   span_is_weakly_total, two_cell, Span)

log = logging.getLogger(__name__)


def check_two_cell_criterion(sizes=(1, 2, 3), apex_bound=4):
    """
    Cross-check the 2-cell search against the support criterion, verify that every map it
    returns commutes with both legs, and check idempotence and relabelling-invariance of the
    canonical form, on every bounded span between the given sizes.

    :rtype: LawReport
    """
    checker = LawChecker("two-cell-criterion")
    for a in sizes:
        for b in sizes:
            spans = all_spans(a, b, apex_bound)
            for s in spans:
                checker.expect("canonical-idempotent", span_canonicalize(s) == s, span_canonicalize(s), s, span=s)
                relabelled = Span(a, b, reversed(s.left), reversed(s.right))
                checker.expect("canonical-invariant", relabelled == s, relabelled, s, span=s)
            for s in spans:
                for t in spans:
                    if not checker.active("search-agrees-with-support"):
                        break
                    alpha = two_cell(s, t)
                    found = alpha is not None
                    checker.expect("search-agrees-with-support", found == span_leq(s, t), found, span_leq(s, t),
                                   s=s, t=t)
                    if found:
                        checker.expect("two-cell-commutes", is_two_cell(s, t, alpha), alpha, None, s=s, t=t)
    return checker.report()


def check_span_predicates(sizes=(1, 2), apex_bound=3, max_instances=4096):
    """
    Check that the element-level tests for weakly functional and weakly total spans agree with the
    gs-monoidal definitions evaluated in PSpan.

    :rtype: LawReport
    """
    P = pspan_presentation(sizes, apex_bound)
    checker = LawChecker("span-predicates", label=str)
    for a in P.object_list():
        for b in P.object_list():
            homset = P.hom(a, b)
            for i, s in enumerate(homset):
                if i >= max_instances:
                    checker.exhaustive = False
                    break
                checker.expect("weakly-functional", span_is_weakly_functional(s) == is_weakly_functional(P, s),
                               span_is_weakly_functional(s), is_weakly_functional(P, s), span=s)
                checker.expect("weakly-total", span_is_weakly_total(s) == is_weakly_total(P, s),
                               span_is_weakly_total(s), is_weakly_total(P, s), span=s)
    return checker.report()
