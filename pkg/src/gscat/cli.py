#!/usr/bin/env python

import argparse
from collections import OrderedDict
from dataclasses import asdict
import logging
import sys

from .config import load_run_config
from .core.laws import check_gs_axioms, check_oplax_cartesian
from .errors import GsError, TypeMismatch, UsageError
from .finstoch import check_support_oplax, support
from .models import AssignmentFixture, dump_json, load_fixture, read_document, to_document
from .monads import (check_colax_cartesian_monad, check_gs_monoidal_monad, check_kleisli_rel_isomorphism,
                     check_monad_laws, get_monad, kleisli_category)
from .preord import check_hypograph_functoriality, hypograph
from .pspan import check_span_predicates, check_two_cell_criterion, span_compose, span_leq, two_cell
from .suites import (CHECKS, MODEL_NAMES, ORDERS, SUITES, check_presentation, completeness_reports, monad_reports,
                     open_presentation, presentation, report_all)
from .termgraph import check_eval_functorial, check_term_graph_axioms, tg_equal, tg_eval

log = logging.getLogger(__name__)

REPORT_SCHEMA = "gscat-report/1"


def eprint(*args, **kwargs):
    print(*args, file=sys.stderr, **kwargs)


class Outcome(object):
    """What a subcommand produced: law reports to judge and computed values to print."""

    def __init__(self, reports=None, results=None):
        self.reports = list(reports or ())
        self.results = list(results or ())

    @property
    def passed(self):
        return all(r.passed for r in self.reports)

    def add_result(self, name, value, label=None):
        document = value if _plain(value) else to_document(value)
        self.results.append(OrderedDict([("name", name), ("value", document),
                                         ("label", str(value) if label is None else label)]))


def _plain(value):
    return value is None or isinstance(value, (bool, int, float, str, list, dict))


def build_cli_parser(description="Law checkers for gs-monoidal and oplax cartesian categories"):
    parser = argparse.ArgumentParser(prog="gscat", description=description)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--profile", help="configuration profile to use", default=None)
    common.add_argument("--config", help="configuration file, instead of the default search path", default=None)
    common.add_argument("--format", dest="output_format", choices=("text", "json"), default=None,
                        help="output format")
    common.add_argument("--sizes", help="comma-separated object sizes, e.g. 1,2,4", default=None)
    common.add_argument("--cap", type=int, help="largest homset that may be enumerated", default=None)
    common.add_argument("--seed", type=int, help="seed for sampled instances", default=None)
    common.add_argument("--samples", type=int, help="sample count for sampled suites", default=None)
    common.add_argument("--max-instances", dest="max_instances", type=int, default=None,
                        help="law instances checked per law")
    common.add_argument("--apex-bound", dest="apex_bound", type=int, default=None,
                        help="largest span apex enumerated")
    common.add_argument("--verbose", help="enable debug logging", default=False, action="store_true")

    commands = parser.add_subparsers(dest="subcommand", required=True)

    check = commands.add_parser("check", parents=[common], help="check the laws of a presentation")
    check.add_argument("action", choices=CHECKS)
    check.add_argument("--model", default=None, help="one of {0}".format(", ".join(MODEL_NAMES)))
    check.add_argument("--order", default=None, choices=ORDERS, help="preorder on the homsets")
    check.add_argument("--presentation", default=None, help="presentation fixture to check instead of a model")
    check.set_defaults(func=cmd_check)

    monad = commands.add_parser("monad", help="check a built-in monad")
    monad_sub = monad.add_subparsers(dest="action", required=True)
    for action, func in (("laws", cmd_monad_laws), ("gs", cmd_monad_gs), ("colax", cmd_monad_colax),
                         ("functors", cmd_monad_functors)):
        p = monad_sub.add_parser(action, parents=[common])
        p.add_argument("--monad", required=True, help="monad name, e.g. powerset or writer:2")
        p.set_defaults(func=func)

    kleisli = commands.add_parser("kleisli", help="Kleisli categories of built-in monads")
    kleisli_sub = kleisli.add_subparsers(dest="action", required=True)
    p = kleisli_sub.add_parser("build", parents=[common], help="list the homsets, or normalize arrow fixtures")
    p.add_argument("--monad", default=None)
    p.add_argument("fixtures", nargs="*", help="Kleisli arrow documents")
    p.set_defaults(func=cmd_kleisli_build)
    p = kleisli_sub.add_parser("check", parents=[common])
    p.add_argument("--monad", required=True)
    p.set_defaults(func=cmd_kleisli_check)

    span = commands.add_parser("span", help="spans of finite sets")
    span_sub = span.add_subparsers(dest="action", required=True)
    p = span_sub.add_parser("compose", parents=[common], help="compose spans, first one first")
    p.add_argument("fixtures", nargs="+")
    p.set_defaults(func=cmd_span_compose)
    p = span_sub.add_parser("leq", parents=[common], help="whether a 2-cell from the first span to the second exists")
    p.add_argument("fixtures", nargs=2)
    p.set_defaults(func=cmd_span_leq)
    p = span_sub.add_parser("check", parents=[common])
    p.set_defaults(func=cmd_span_check)

    stoch = commands.add_parser("stoch", help="stochastic matrices")
    stoch_sub = stoch.add_subparsers(dest="action", required=True)
    p = stoch_sub.add_parser("support", parents=[common])
    p.add_argument("fixtures", nargs="+")
    p.set_defaults(func=cmd_stoch_support)
    p = stoch_sub.add_parser("check", parents=[common])
    p.set_defaults(func=cmd_stoch_check)

    preord = commands.add_parser("preord", help="preorders, the hypograph and completeness")
    preord_sub = preord.add_subparsers(dest="action", required=True)
    p = preord_sub.add_parser("hypograph", parents=[common], help="hypographs of monotone maps, or the functor checks")
    p.add_argument("fixtures", nargs="*")
    p.set_defaults(func=cmd_preord_hypograph)
    p = preord_sub.add_parser("completeness", parents=[common])
    p.set_defaults(func=cmd_preord_completeness)

    termgraph = commands.add_parser("termgraph", help="term graphs over a signature")
    termgraph_sub = termgraph.add_subparsers(dest="action", required=True)
    p = termgraph_sub.add_parser("eval", parents=[common], help="evaluate a graph under an assignment")
    p.add_argument("fixtures", nargs=2, metavar=("GRAPH", "ASSIGNMENT"))
    p.add_argument("--reverse", action="store_true", default=False, help="break layering ties the other way")
    p.set_defaults(func=cmd_termgraph_eval)
    p = termgraph_sub.add_parser("equal", parents=[common])
    p.add_argument("fixtures", nargs=2)
    p.set_defaults(func=cmd_termgraph_equal)
    p = termgraph_sub.add_parser("check", parents=[common])
    p.add_argument("--model", default=None, help="model to evaluate into")
    p.set_defaults(func=cmd_termgraph_check)

    report = commands.add_parser("report", help="run the acceptance suites")
    report_sub = report.add_subparsers(dest="action", required=True)
    p = report_sub.add_parser("all", parents=[common])
    p.add_argument("--suite", action="append", dest="suites", choices=list(SUITES), default=None)
    p.set_defaults(func=cmd_report_all)

    return parser


def get_run_config(args):
    overrides = dict((key, getattr(args, key, None)) for key in
                     ("sizes", "cap", "seed", "samples", "max_instances", "apex_bound", "output_format", "model",
                      "monad", "order", "presentation"))
    overrides["subcommand"] = args.subcommand
    overrides["action"] = args.action
    overrides["fixtures"] = list(getattr(args, "fixtures", None) or ())
    return load_run_config(args.profile, args.config, **overrides)


# check

def cmd_check(config, args):
    P = presentation(config)
    return Outcome(check_presentation(P, config.action, config))


# monad

def cmd_monad_laws(config, args):
    return Outcome([check_monad_laws(get_monad(config.monad), 3, config.max_instances, config.seed)])


def cmd_monad_gs(config, args):
    return Outcome([check_gs_monoidal_monad(get_monad(config.monad), 3, config.max_instances, config.seed)])


def cmd_monad_colax(config, args):
    return Outcome([check_colax_cartesian_monad(get_monad(config.monad), 3, config.max_instances, config.seed)])


def cmd_monad_functors(config, args):
    return Outcome(monad_reports(config.monad, config))


# kleisli

def cmd_kleisli_build(config, args):
    outcome = Outcome()
    for path in config.fixtures:
        f = load_fixture(path, kind="kleisli")
        if config.monad and f.monad.name != config.monad:
            raise TypeMismatch("{0} holds a {1} arrow, not a {2} one".format(path, f.monad.name, config.monad))
        outcome.add_result(path, f)
    if config.monad:
        K = kleisli_category(config.monad, config.sizes, config.cap)
        for a in K.object_list():
            for b in K.object_list():
                size = K.hom(a, b).size
                outcome.add_result("hom({0}, {1})".format(a, b), size, "infinite" if size is None else str(size))
    elif not config.fixtures:
        raise UsageError("kleisli build needs --monad or arrow fixtures")
    return outcome


def cmd_kleisli_check(config, args):
    K = kleisli_category(config.monad, config.sizes, config.cap)
    budget = dict(max_instances=config.max_instances, seed=config.seed)
    reports = [check_gs_axioms(K, **budget), check_oplax_cartesian(K, **budget)]
    if K.model.monad.name == "powerset":
        reports.append(check_kleisli_rel_isomorphism(K.object_list(), **budget))
    return Outcome(reports)


# span

def cmd_span_compose(config, args):
    spans = [load_fixture(path, kind="span") for path in config.fixtures]
    result = spans[0]
    for s in spans[1:]:
        result = span_compose(s, result)
    outcome = Outcome()
    outcome.add_result("composite", result)
    return outcome


def cmd_span_leq(config, args):
    s, t = [load_fixture(path, kind="span") for path in config.fixtures]
    outcome = Outcome()
    below = span_leq(s, t)
    outcome.add_result("leq", below)
    cell = two_cell(s, t)
    outcome.add_result("two_cell", None if cell is None else list(cell))
    return outcome


def _sizes_up_to(sizes, limit, check):
    """The sizes a bounded check runs on, and a note naming the sizes it leaves out."""
    kept = tuple(n for n in sizes if n <= limit) or (1,)
    dropped = [str(n) for n in sizes if n > limit]
    if not dropped:
        return kept, None
    note = "{0} runs on sizes up to {1}; skipped {2}".format(check, limit, ",".join(dropped))
    log.debug(note)
    return kept, note


def _noted(report, note):
    if note is not None:
        report.notes.append(note)
    return report


def cmd_span_check(config, args):
    reports = check_presentation(presentation(config, "pspan"), "gs", config)
    reports.extend(check_presentation(presentation(config, "pspan"), "oplax", config))
    small, note = _sizes_up_to(config.sizes, 3, "two-cell criterion")
    reports.append(_noted(check_two_cell_criterion(small, config.apex_bound), note))
    smaller, note = _sizes_up_to(config.sizes, 2, "span predicates")
    reports.append(_noted(check_span_predicates(smaller, min(config.apex_bound, 3), config.max_instances), note))
    return Outcome(reports)


# stoch

def cmd_stoch_support(config, args):
    outcome = Outcome()
    for path in config.fixtures:
        outcome.add_result(path, support(load_fixture(path, kind="stoch")))
    return outcome


def cmd_stoch_check(config, args):
    sizes, note = _sizes_up_to(config.sizes, 3, "support check")
    return Outcome([_noted(check_support_oplax(config.samples, sizes, config.seed), note)])


# preord

def cmd_preord_hypograph(config, args):
    if not config.fixtures:
        largest = max(config.sizes)
        note = None
        if largest > 3:
            note = "hypograph check runs on preorders up to 3 elements; skipped size {0}".format(largest)
            log.debug(note)
        report = check_hypograph_functoriality(min(largest, 3), config.max_instances, config.seed)
        return Outcome([_noted(report, note)])
    outcome = Outcome()
    for path in config.fixtures:
        outcome.add_result(path, hypograph(load_fixture(path, kind="monotone_map")))
    return outcome


def cmd_preord_completeness(config, args):
    return Outcome(completeness_reports(config))


# termgraph

def cmd_termgraph_eval(config, args):
    graph_path, assignment_path = config.fixtures
    t = load_fixture(graph_path, kind="termgraph")
    fixture = AssignmentFixture(read_document(assignment_path), path=assignment_path)
    alpha = fixture.build()
    P = open_presentation(fixture.model, config)
    outcome = Outcome()
    outcome.add_result("value", tg_eval(t, P, alpha, reverse=args.reverse))
    return outcome


def cmd_termgraph_equal(config, args):
    s, t = [load_fixture(path, kind="termgraph") for path in config.fixtures]
    outcome = Outcome()
    outcome.add_result("equal", tg_equal(s, t))
    return outcome


def cmd_termgraph_check(config, args):
    P = open_presentation(config.model, config)
    return Outcome([check_term_graph_axioms(config.samples, config.seed),
                    check_eval_functorial(P, config.samples, config.seed)])


# report

def cmd_report_all(config, args):
    return Outcome(report_all(config, args.suites))


def render(config, outcome):
    if config.output_format == "json":
        document = OrderedDict([
            ("schema", REPORT_SCHEMA),
            ("command", [config.subcommand, config.action]),
            ("config", asdict(config)),
            ("passed", outcome.passed),
            ("reports", [r.to_dict() for r in outcome.reports]),
            ("results", outcome.results),
        ])
        return dump_json(document)

    lines = [str(r) for r in outcome.reports]
    for result in outcome.results:
        lines.append("{0}: {1}".format(result["name"], result["label"]))
    if outcome.reports:
        lines.append("PASS" if outcome.passed else "FAIL")
    return "\n".join(lines)


def run(argv=None):
    """
    Parse ``argv`` and run one subcommand.

    :return: 0 when every law report passed, 1 on a law failure, 2 on usage and fixture errors
    """
    parser = build_cli_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    if args.verbose:
        logging.basicConfig()
        logging.getLogger("gscat").setLevel(logging.DEBUG)

    try:
        config = get_run_config(args)
        outcome = args.func(config, args)
    except GsError as e:
        eprint("gscat: {0}".format(e))
        return 2

    print(render(config, outcome))
    return 0 if outcome.passed else 1


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
