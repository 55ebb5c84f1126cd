#!/usr/bin/env python

import itertools
import logging

from ..errors import DimensionMismatch

log = logging.getLogger(__name__)


class Span(object):
    """
    A span ``src <- apex -> tgt`` of finite sets, up to isomorphism.

    Over finite sets an isomorphism class of spans is a multiset of ``(left, right)`` pairs, so the
    canonical form sorts the apex by its pair; ``left`` and ``right`` are read back from the sorted pairs.
    """
    __slots__ = ("src", "tgt", "pairs")

    def __init__(self, src, tgt, left, right):
        self.src = int(src)
        self.tgt = int(tgt)
        left, right = list(left), list(right)
        if len(left) != len(right):
            raise DimensionMismatch(len(left), len(right), message="span legs have different apexes")
        for a, b in zip(left, right):
            if not (0 <= a < self.src and 0 <= b < self.tgt):
                raise DimensionMismatch((self.src, self.tgt), (a, b), message="span leg out of range")
        self.pairs = tuple(sorted(zip((int(a) for a in left), (int(b) for b in right))))

    @classmethod
    def from_pairs(cls, src, tgt, pairs):
        pairs = list(pairs)
        return cls(src, tgt, [a for a, _ in pairs], [b for _, b in pairs])

    @property
    def apex(self):
        return len(self.pairs)

    @property
    def left(self):
        return tuple(a for a, _ in self.pairs)

    @property
    def right(self):
        return tuple(b for _, b in self.pairs)

    def support(self):
        return frozenset(self.pairs)

    def __eq__(self, other):
        return isinstance(other, Span) and (self.src, self.tgt, self.pairs) == (other.src, other.tgt, other.pairs)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.src, self.tgt, self.pairs))

    def __repr__(self):
        return "Span({0}, {1}, {2}, {3})".format(self.src, self.tgt, list(self.left), list(self.right))

    def __str__(self):
        return "{0}->{1}:[{2}]".format(self.src, self.tgt, ",".join("({0},{1})".format(a, b) for a, b in self.pairs))


def span_canonicalize(s):
    """The canonical representative; spans are stored canonically, so this rebuilds from the legs."""
    return Span(s.src, s.tgt, s.left, s.right)


def span_compose(t, s):
    """``t`` after ``s``, by pullback over the middle set."""
    if s.tgt != t.src:
        raise DimensionMismatch(s.tgt, t.src, message="composing spans")
    pairs = [(a, c) for a, b in s.pairs for b2, c in t.pairs if b == b2]
    return Span.from_pairs(s.src, t.tgt, pairs)


def span_tensor(s, t):
    """Product apex with legs paired row-major."""
    pairs = [(a * t.src + c, b * t.tgt + d) for (a, b), (c, d) in itertools.product(s.pairs, t.pairs)]
    return Span.from_pairs(s.src * t.src, s.tgt * t.tgt, pairs)


def function_span(src, tgt, fn):
    """The span ``src <-id src -> tgt`` of a function."""
    return Span(src, tgt, range(src), [fn(x) for x in range(src)])


def span_id(n):
    return function_span(n, n, lambda x: x)


def span_symmetry(m, n):
    return function_span(m * n, n * m, lambda p: (p % n) * m + p // n)


def span_dup(n):
    return function_span(n, n * n, lambda x: x * n + x)


def span_dup_repeated(n, copies=2):
    """A duplicator whose apex holds each diagonal pair ``copies`` times; it has the support of ``span_dup``."""
    return Span.from_pairs(n, n * n, [(x, x * n + x) for x in range(n) for _ in range(copies)])


def span_discharge(n):
    return function_span(n, 1, lambda x: 0)


def is_two_cell(s, t, alpha):
    """Whether ``alpha``, given as a tuple over the apex of ``s``, commutes with both legs into ``t``."""
    if len(alpha) != s.apex:
        return False
    return all(0 <= j < t.apex and t.left[j] == s.left[i] and t.right[j] == s.right[i]
               for i, j in enumerate(alpha))


def two_cell(s, t):
    """
    Search for ``alpha: apex(s) -> apex(t)`` commuting with both legs.

    Every map between the apexes is a candidate; a partial map is abandoned as soon as one of
    its points breaks either leg.

    :return: the first such map found, as a tuple, or ``None``
    """
    if (s.src, s.tgt) != (t.src, t.tgt):
        raise DimensionMismatch((s.src, s.tgt), (t.src, t.tgt), message="comparing spans")
    s_left, s_right, t_left, t_right = s.left, s.right, t.left, t.right

    def _extend(prefix):
        i = len(prefix)
        if i == s.apex:
            return tuple(prefix)
        for j in range(t.apex):
            if t_left[j] != s_left[i] or t_right[j] != s_right[i]:
                continue
            found = _extend(prefix + [j])
            if found is not None:
                return found
        return None
    return _extend([])


def span_leq_search(s, t):
    return two_cell(s, t) is not None


def span_leq(s, t):
    """A 2-cell ``s => t`` exists iff every pair of ``s`` occurs in ``t``."""
    if (s.src, s.tgt) != (t.src, t.tgt):
        raise DimensionMismatch((s.src, s.tgt), (t.src, t.tgt), message="comparing spans")
    return s.support() <= t.support()


def span_is_weakly_functional(s):
    seen = {}
    for a, b in s.pairs:
        if seen.setdefault(a, b) != b:
            return False
    return True


def span_is_weakly_total(s):
    return set(s.left) == set(range(s.src))


def all_spans(src, tgt, apex_bound):
    """Every span ``src -> tgt`` with apex at most ``apex_bound``, in order of apex size."""
    cells = [(a, b) for a in range(src) for b in range(tgt)]
    spans = []
    for k in range(apex_bound + 1):
        for combo in itertools.combinations_with_replacement(cells, k):
            spans.append(Span.from_pairs(src, tgt, combo))
    return spans
