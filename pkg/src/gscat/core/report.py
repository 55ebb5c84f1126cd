#!/usr/bin/env python

from collections import OrderedDict
import logging

log = logging.getLogger(__name__)


class Witness(object):
    """
    A counterexample to a named law.

    :ivar law: name of the violated law
    :ivar items: ordered mapping of the quantified variables to their labels
    :ivar lhs: label of the left-hand side
    :ivar rhs: label of the right-hand side
    :ivar values: the raw quantified values and both sides, kept for re-evaluation
    """
    def __init__(self, law, items=None, lhs=None, rhs=None, values=None):
        self.law = law
        self.items = OrderedDict(items or ())
        self.lhs = lhs
        self.rhs = rhs
        self.values = values

    def to_dict(self):
        return {
            "law": self.law,
            "items": OrderedDict((k, str(v)) for k, v in self.items.items()),
            "lhs": None if self.lhs is None else str(self.lhs),
            "rhs": None if self.rhs is None else str(self.rhs),
        }

    def __str__(self):
        parts = ", ".join("{0}={1}".format(k, v) for k, v in self.items.items())
        msg = "{0} [{1}]".format(self.law, parts)
        if self.lhs is not None or self.rhs is not None:
            msg += ": {0} vs {1}".format(self.lhs, self.rhs)
        return msg


class LawReport(object):
    """
    Outcome of a checker.

    :ivar name: the checker or suite name
    :ivar checked_count: number of law instances tested
    :ivar counts: instances tested per law, in the order the laws were first seen
    :ivar failures: one witness per failing law
    :ivar exhaustive: ``False`` when some law was sampled rather than enumerated
    :ivar notes: free-form remarks (skipped instances, sampling, caveats)
    """
    def __init__(self, name, counts=None, failures=None, exhaustive=True, notes=None):
        self.name = name
        self.counts = OrderedDict(counts or ())
        self.failures = list(failures or ())
        self.exhaustive = exhaustive
        self.notes = list(notes or ())

    @property
    def checked_count(self):
        return sum(self.counts.values())

    @property
    def witness(self):
        return self.failures[0] if self.failures else None

    @property
    def passed(self):
        return not self.failures

    @property
    def verdict(self):
        return "pass" if self.passed else "fail"

    def failed_laws(self):
        return [w.law for w in self.failures]

    def to_dict(self):
        return OrderedDict([
            ("name", self.name),
            ("verdict", self.verdict),
            ("checked_count", self.checked_count),
            ("exhaustive", self.exhaustive),
            ("counts", OrderedDict(self.counts)),
            ("witness", None if self.witness is None else self.witness.to_dict()),
            ("failures", [w.to_dict() for w in self.failures]),
            ("notes", list(self.notes)),
        ])

    def __str__(self):
        mode = "exhaustive" if self.exhaustive else "sampled"
        msg = "{0}: {1} ({2} instances, {3})".format(self.name, self.verdict.upper(), self.checked_count, mode)
        for w in self.failures:
            msg += "\n  witness: {0}".format(w)
        for note in self.notes:
            msg += "\n  note: {0}".format(note)
        return msg


def merge_reports(name, reports):
    """
    Combine several reports into one; law names are prefixed by the sub-report name.

    :param str name: name of the combined report
    :param list reports: the reports to combine
    :rtype: LawReport
    """
    merged = LawReport(name)
    for report in reports:
        for law, count in report.counts.items():
            merged.counts["{0}/{1}".format(report.name, law)] = count
        for w in report.failures:
            merged.failures.append(Witness("{0}/{1}".format(report.name, w.law), w.items, w.lhs, w.rhs,
                                           w.values))
        merged.exhaustive = merged.exhaustive and report.exhaustive
        merged.notes.extend("{0}: {1}".format(report.name, n) for n in report.notes)
    return merged


class LawChecker(object):
    """
    Accumulates law instances into a :class:`LawReport`, keeping the first violation per law.

    :param str name: report name
    :param label: callable turning a value into a short string for witnesses
    """
    def __init__(self, name, label=str):
        self.name = name
        self.label = label
        self.counts = OrderedDict()
        self.failed = OrderedDict()
        self.exhaustive = True
        self.notes = []

    def active(self, law):
        """Whether instances of ``law`` are still being tested."""
        self.counts.setdefault(law, 0)
        return law not in self.failed

    def note(self, message):
        if message not in self.notes:
            log.debug("%s: %s", self.name, message)
            self.notes.append(message)

    def sampled(self, instances):
        self.exhaustive = self.exhaustive and instances.exhaustive
        return instances

    def expect(self, law, ok, lhs=None, rhs=None, **items):
        if not self.active(law):
            return False
        self.counts[law] += 1
        if not ok:
            lhs_label = None if lhs is None else self.label(lhs)
            rhs_label = None if rhs is None else self.label(rhs)
            labelled = [(k, self.label(v)) for k, v in items.items()]
            self.failed[law] = Witness(law, labelled, lhs_label, rhs_label, values=dict(items, lhs=lhs, rhs=rhs))
            log.debug("%s: law %s failed", self.name, law)
        return bool(ok)

    def expect_equal(self, law, lhs, rhs, equal, **items):
        if not self.active(law):
            return False
        return self.expect(law, equal(lhs, rhs), lhs, rhs, **items)

    def expect_leq(self, law, lhs, rhs, leq, **items):
        if not self.active(law):
            return False
        return self.expect(law, leq(lhs, rhs), lhs, rhs, **items)

    def report(self):
        return LawReport(self.name, self.counts, list(self.failed.values()), self.exhaustive, self.notes)
