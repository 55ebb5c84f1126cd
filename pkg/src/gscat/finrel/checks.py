#!/usr/bin/env python

import logging

from ..core.predicates import dom, is_functional, is_total
from ..core.report import LawChecker
from .model import open_finrel
from .rel import all_relations, is_partial_function, is_total_relation, rel_domain, rel_id

log = logging.getLogger(__name__)


def check_relation_predicates(max_size=3):
    """
    Compare the matrix tests for partial functions, total relations and domains with the equational
    definitions evaluated in FinRel, on every relation between sizes ``1..max_size``.

    :rtype: LawReport
    """
    P = open_finrel()
    checker = LawChecker("relation-predicates[<={0}]".format(max_size))
    for src in range(1, max_size + 1):
        for tgt in range(1, max_size + 1):
            log.debug("Enumerating %d relations %d -> %d", 2 ** (src * tgt), src, tgt)
            ident = rel_id(src)
            for R in all_relations(src, tgt):
                checker.expect("partial-function-equation", is_partial_function(R) == is_functional(P, R), R=R)
                checker.expect("total-equation", is_total_relation(R) == is_total(P, R), R=R)
                d = dom(P, R)
                checker.expect_equal("domain-formula", d, rel_domain(R), P.equal, R=R)
                checker.expect("total-iff-domain-identity", is_total_relation(R) == (d == ident), d, ident, R=R)
    return checker.report()
