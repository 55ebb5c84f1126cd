#!/usr/bin/env python

from collections import OrderedDict
import logging

from .core.generate import check_order_contains, generate_oplax_preorder
from .core.laws import check_category_and_monoidal, check_gs_axioms, check_oplax_cartesian
from .core.predicates import check_dom_propositions, check_dup_discharge_uniqueness, check_weak_product
from .core.report import LawChecker, merge_reports
from .errors import UsageError
from .finrel import all_relations, as_presentation, check_relation_predicates, open_finrel, rel_discharge, rel_dup
from .finstoch import check_support_oplax, finstoch_presentation, open_finstoch
from .functors.checks import check_colax_bicartesian, check_colax_cartesian, check_gs_functor, check_lax_monoidal
from .models import load_fixture
from .monads import (check_colax_cartesian_monad, check_gs_monoidal_monad, check_kleisli_rel_isomorphism,
                     check_kleisli_subcategories, check_monad_laws, check_multiset_scalars, finset_presentation,
                     get_monad, kleisli_category, kleisli_F_T, kleisli_G_T, kleisli_to_pspan, open_kleisli)
from .preord import (check_hypograph_functoriality, completeness_experiment, hom_functor_to_preord, open_preord,
                     preord_presentation)
from .pspan import (check_span_predicates, check_two_cell_criterion, open_pspan, pspan_presentation,
                    span_dup_repeated)
from .termgraph import check_eval_functorial, check_sharing_vs_copying, check_term_graph_axioms

log = logging.getLogger(__name__)

MODEL_NAMES = ("finrel", "finset", "pspan", "finstoch", "preord", "kleisli:<monad>")
ORDERS = ("default", "reversed", "trivial", "generated")
CHECKS = ("gs", "oplax", "dom", "weakproduct")


def presentation(config, model=None):
    """
    The presentation a run works on: a presentation fixture when one is configured, otherwise a
    built-in model truncated to the configured sizes, with the configured order applied.

    :param RunConfig config: the run configuration
    :param str model: overrides ``config.model``
    :rtype: GsPresentation
    :raises UsageError: for unknown models or orders
    :raises Infeasible: when a homset between the sizes exceeds the cap
    """
    if config.presentation:
        P = load_fixture(config.presentation, kind="presentation")
    else:
        P = _builtin(model or config.model, config)

    order = config.order
    if order == "reversed":
        return P.reversed_order()
    elif order == "trivial":
        return P.trivial_order()
    elif order == "generated":
        return generate_oplax_preorder(P, config.closure_cap)
    elif order != "default":
        raise UsageError("Unknown order {0}; expected one of {1}".format(order, ", ".join(ORDERS)))
    return P


def _builtin(name, config):
    sizes = config.sizes
    if name == "finrel":
        return as_presentation(object_list=sizes, cap=config.cap)
    elif name == "finset":
        return finset_presentation(sizes, config.cap)
    elif name == "pspan":
        return pspan_presentation(sizes, config.apex_bound, config.cap)
    elif name == "finstoch":
        return finstoch_presentation(sizes, cap=config.cap)
    elif name == "preord":
        if max(sizes) > 2:
            log.debug("Preord objects are the preorders on at most 2 elements; ignoring sizes above 2")
        return preord_presentation(max_size=min(max(sizes), 2), cap=config.cap,
                                   pointwise_limit=config.pointwise_limit, seed=config.seed)
    elif name.startswith("kleisli:"):
        return kleisli_category(get_monad(name.partition(":")[2]), sizes, config.cap)
    raise UsageError("Unknown model {0}; expected one of {1}".format(name, ", ".join(MODEL_NAMES)))


def open_presentation(name, config):
    """The untruncated presentation of a built-in model, used to evaluate term graphs."""
    if name == "finrel":
        return open_finrel(config.cap)
    elif name == "finset":
        P = open_kleisli("identity", config.cap)
        P.name = "finset"
        return P
    elif name == "pspan":
        return open_pspan(config.cap, config.apex_bound)
    elif name == "finstoch":
        return open_finstoch(config.cap)
    elif name == "preord":
        return open_preord(config.cap, config.pointwise_limit, config.seed)
    elif name.startswith("kleisli:"):
        return open_kleisli(name.partition(":")[2], config.cap)
    raise UsageError("Unknown model {0}; expected one of {1}".format(name, ", ".join(MODEL_NAMES)))


def check_presentation(P, check, config):
    """
    Run one of the named checks on a presentation.

    :param str check: ``gs``, ``oplax``, ``dom`` or ``weakproduct``
    :rtype: list
    """
    budget = dict(max_instances=config.max_instances, seed=config.seed)
    if check == "gs":
        return [check_category_and_monoidal(P, **budget), check_gs_axioms(P, **budget)]
    elif check == "oplax":
        P.require_order()
        return [check_oplax_cartesian(P, **budget)]
    elif check == "dom":
        return [check_dom_propositions(P, **budget)]
    elif check == "weakproduct":
        pairs = [(a, b) for a in P.object_list() for b in P.object_list() if P.obj(a, b) is not None]
        if not pairs:
            raise UsageError("no pair of objects of {0} has its tensor in the object list".format(P.name))
        return [check_weak_product(P, a, b, **budget) for a, b in pairs]
    raise UsageError("Unknown check {0}; expected one of {1}".format(check, ", ".join(CHECKS)))


def expect_failure(report, law=None):
    """
    A report that passes when ``report`` fails, and fails naming ``report`` when it passes.

    :param LawReport report: the report of a check that must not hold
    :param str law: when given, that law in particular must be among the failures
    """
    checker = LawChecker("expected-failure[{0}]".format(report.name))
    failed = report.failed_laws()
    if law is None:
        checker.expect("fails", bool(failed), report.verdict, "fail")
    else:
        checker.expect("fails", any(f == law or f.endswith("/" + law) for f in failed), ",".join(failed), law)
    if report.witness is not None:
        checker.note("witness: {0}".format(report.witness))
    return checker.report()


def monad_reports(monad, config):
    """
    Monad laws, gs-monoidality and the two adjoint functors of a monad.

    The free functor is always checked colax cartesian; the right adjoint only when the monad
    itself is colax cartesian under its value order.
    """
    M = get_monad(monad) if isinstance(monad, str) else monad
    budget = dict(max_instances=config.max_instances, seed=config.seed)
    small = tuple(n for n in config.sizes if n <= 2) or (1,)
    reports = [check_monad_laws(M, max_size=3, **budget)]
    gs = check_gs_monoidal_monad(M, max_size=3, **budget)
    reports.append(gs)
    F = kleisli_F_T(M, config.sizes, config.cap)
    reports.append(check_gs_functor(F, "strict", **budget))
    reports.append(check_colax_cartesian(F, **budget))
    if M.enumerable:
        G = kleisli_G_T(M, small, config.cap, config.seed)
        reports.append(check_lax_monoidal(G, **budget))
        if check_colax_cartesian_monad(M, max_size=3, **budget).passed:
            reports.append(check_colax_cartesian(G, **budget))
        if gs.passed:
            reports.append(check_gs_functor(G, "lax", **budget))
            reports.append(check_gs_functor(kleisli_to_pspan(M, small, config.cap, seed=config.seed), "lax",
                                            **budget))
    return reports


def _finrel_suite(config):
    budget = dict(max_instances=config.max_instances, seed=config.seed)
    P = as_presentation(object_list=(1, 2, 4), cap=config.cap)
    small = as_presentation(object_list=(1, 2), cap=config.cap)
    generated = generate_oplax_preorder(small, config.closure_cap)
    return [
        check_category_and_monoidal(P, **budget),
        check_gs_axioms(P, **budget),
        check_oplax_cartesian(P, **budget),
        expect_failure(check_oplax_cartesian(P.reversed_order(), **budget)),
        check_relation_predicates(3),
        check_weak_product(P, 1, 2, **budget),
        check_weak_product(P, 2, 2, **budget),
        check_order_contains(generated, small),
        check_dup_discharge_uniqueness(P, rel_dup, rel_discharge),
    ]


def _dom_suite(config):
    relations = [R for a in range(1, 4) for b in range(1, 4) for R in all_relations(a, b)]
    return [
        check_dom_propositions(open_finrel(config.cap), morphisms=relations),
        check_multiset_scalars(10),
    ]


def _kleisli_suite(config):
    budget = dict(max_instances=config.max_instances, seed=config.seed)
    reports = [
        check_kleisli_rel_isomorphism((1, 2, 4), **budget),
        check_kleisli_subcategories((1, 2, 3), **budget),
    ]
    for name in ("powerset", "nonempty", "lifting"):
        K = kleisli_category(name, (1, 2), config.cap)
        reports.append(check_gs_axioms(K, **budget))
        reports.append(check_oplax_cartesian(K, **budget))
        reports.append(check_colax_cartesian(kleisli_F_T(name, (1, 2), config.cap), **budget))
        reports.append(check_colax_cartesian(kleisli_G_T(name, (1, 2), config.cap, config.seed), **budget))
    reports.append(check_colax_cartesian(kleisli_F_T("distribution", (1, 2), config.cap), **budget))
    return reports


def _writer_suite(config):
    budget = dict(max_instances=config.max_instances, seed=config.seed)
    reports = []
    for name in ("writer:2", "writer:3"):
        M = get_monad(name)
        K = kleisli_category(M, (1, 2, 4), config.cap)
        reports.append(check_monad_laws(M, max_size=3, **budget))
        reports.append(expect_failure(check_gs_monoidal_monad(M, max_size=3, **budget)))
        reports.append(check_gs_axioms(K, **budget))
        reports.append(check_weak_product(K, 1, 2, **budget))
        reports.append(check_weak_product(K, 2, 2, **budget))
        reports.append(check_gs_functor(kleisli_F_T(M, (1, 2, 4), config.cap), "strict", **budget))
        G = kleisli_G_T(M, (1, 2), config.cap, config.seed)
        reports.append(check_lax_monoidal(G, **budget))
        reports.append(expect_failure(check_gs_functor(G, "lax", **budget)))
    for name in ("identity", "writer:1"):
        M = get_monad(name)
        reports.append(check_gs_monoidal_monad(M, max_size=3, **budget))
        reports.append(check_gs_functor(kleisli_G_T(M, (1, 2), config.cap, config.seed), "lax", **budget))
        reports.append(check_gs_functor(kleisli_to_pspan(M, (1, 2), config.cap, seed=config.seed), "lax",
                                        **budget))
    return reports


def _pspan_suite(config):
    budget = dict(max_instances=config.max_instances, seed=config.seed)
    P = pspan_presentation((1, 2, 4), config.apex_bound, config.cap)
    return [
        check_gs_axioms(P, **budget),
        check_oplax_cartesian(P, **budget),
        check_two_cell_criterion((1, 2, 3), config.apex_bound),
        check_span_predicates((1, 2), min(config.apex_bound, 3), config.max_instances),
        check_dup_discharge_uniqueness(P, span_dup_repeated, None),
    ]


def _finstoch_suite(config):
    return [check_support_oplax(config.samples, (1, 2, 3), config.seed)]


def completeness_reports(config, object_list=None):
    """
    The representables of FinRel are colax bicartesian and separate the order, also through Rel.

    Every configured size is used; hom-preorders above ``pointwise_limit`` are compared on sampled
    points and the affected reports say so.
    """
    budget = dict(max_instances=config.max_instances, seed=config.seed)
    P = as_presentation(object_list=config.sizes if object_list is None else object_list, cap=config.cap)
    reports = [check_colax_bicartesian(hom_functor_to_preord(P, X, config.pointwise_limit, config.seed), **budget)
               for X in P.object_list()]
    pairs = [(f, g) for a, b in ((1, 2), (2, 2)) if P.contains(a) and P.contains(b)
             for f in P.hom(a, b) for g in P.hom(a, b)]
    reports.append(completeness_experiment(P, pairs, config.pointwise_limit, config.seed))
    return reports


def _preord_suite(config):
    return completeness_reports(config) + [
        check_hypograph_functoriality(3, config.max_instances, config.seed),
    ]


def _termgraph_suite(config):
    cases = max(config.samples, 500)
    return [
        check_term_graph_axioms(cases, config.seed),
        check_eval_functorial(open_finrel(config.cap), cases, config.seed),
        check_eval_functorial(open_kleisli("lifting", config.cap), cases, config.seed),
        check_sharing_vs_copying(open_finrel(config.cap), config.samples, config.seed),
    ]


SUITES = OrderedDict([
    ("finrel", _finrel_suite),
    ("domain", _dom_suite),
    ("kleisli", _kleisli_suite),
    ("writer", _writer_suite),
    ("pspan", _pspan_suite),
    ("finstoch", _finstoch_suite),
    ("completeness", _preord_suite),
    ("termgraph", _termgraph_suite),
])


def report_all(config, suites=None):
    """
    Run the named suites, all of them by default, in a fixed order.

    Each suite is merged into one report named after it.

    :rtype: list
    """
    names = list(SUITES) if suites is None else list(suites)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise UsageError("Unknown suite {0}; expected one of {1}".format(", ".join(unknown), ", ".join(SUITES)))
    reports = []
    for name in names:
        log.debug("Running suite %s", name)
        reports.append(merge_reports(name, SUITES[name](config)))
    return reports
