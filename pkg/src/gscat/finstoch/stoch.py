#!/usr/bin/env python

from fractions import Fraction
import itertools
import logging

from cachetools import LRUCache, cached
import numpy as np

from ..errors import DimensionMismatch, RowSumViolation
from ..finrel.rel import Rel, rel_leq

log = logging.getLogger(__name__)

DEFAULT_MAX_WEIGHT = 3


class StochMatrix(object):
    """
    A stochastic matrix ``src -> tgt`` with exact rational entries; entry ``(x, y)`` is ``f(y|x)``.

    Entries are kept in a numpy object array of :class:`fractions.Fraction`. Every row must sum to
    exactly one.
    """
    __slots__ = ("src", "tgt", "entries", "_key")

    def __init__(self, src, tgt, rows):
        self.src = int(src)
        self.tgt = int(tgt)
        rows = [list(row) for row in rows]
        if len(rows) != self.src or any(len(row) != self.tgt for row in rows):
            raise DimensionMismatch((self.src, self.tgt), (len(rows), [len(row) for row in rows]),
                                    message="stochastic matrix rows")
        entries = np.empty((self.src, self.tgt), dtype=object)
        for x, row in enumerate(rows):
            total = Fraction(0)
            for y, p in enumerate(row):
                p = Fraction(str(p)) if isinstance(p, str) else Fraction(p)
                if p < 0:
                    raise RowSumViolation(x, p, message="negative entry {0} in row {1}".format(p, x))
                entries[x, y] = p
                total += p
            if total != 1:
                raise RowSumViolation(x, total)
        entries.setflags(write=False)
        self.entries = entries
        self._key = (self.src, self.tgt, tuple(entries.flat))

    @classmethod
    def from_function(cls, src, tgt, fn):
        """The deterministic matrix putting all mass of ``x`` on ``fn(x)``."""
        return cls(src, tgt, [[1 if fn(x) == y else 0 for y in range(tgt)] for x in range(src)])

    def rows(self):
        return [list(row) for row in self.entries.tolist()]

    def key(self):
        return self._key

    def __eq__(self, other):
        return isinstance(other, StochMatrix) and self._key == other._key

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return "StochMatrix({0}, {1}, {2})".format(self.src, self.tgt,
                                                   [[str(p) for p in row] for row in self.rows()])

    def __str__(self):
        rows = ",".join("[{0}]".format(",".join(str(p) for p in row)) for row in self.rows())
        return "{0}->{1}:[{2}]".format(self.src, self.tgt, rows)


def stoch_compose(g, f):
    """``g`` after ``f``: the matrix product ``f . g`` of row-stochastic matrices."""
    if f.tgt != g.src:
        raise DimensionMismatch(f.tgt, g.src, message="composing stochastic matrices")
    product = f.entries.dot(g.entries) if f.tgt else np.zeros((f.src, g.tgt), dtype=object)
    return StochMatrix(f.src, g.tgt, product.tolist())


def stoch_tensor(f, g):
    """Kronecker product; rows and columns are paired row-major."""
    return StochMatrix(f.src * g.src, f.tgt * g.tgt, np.kron(f.entries, g.entries).reshape(
        (f.src * g.src, f.tgt * g.tgt)).tolist())


def stoch_id(n):
    return StochMatrix.from_function(n, n, lambda x: x)


def stoch_symmetry(m, n):
    return StochMatrix.from_function(m * n, n * m, lambda p: (p % n) * m + p // n)


def stoch_dup(n):
    return StochMatrix.from_function(n, n * n, lambda x: x * n + x)


def stoch_discharge(n):
    return StochMatrix.from_function(n, 1, lambda x: 0)


def support(f):
    """The relation of all ``(x, y)`` with ``f(y|x) > 0``."""
    return Rel(f.src, f.tgt, np.array(f.entries > 0, dtype=bool).reshape((f.src, f.tgt)))


def support_leq(f, g):
    return rel_leq(support(f), support(g))


def uniform_stoch(R):
    """
    The matrix spreading each row uniformly over the related elements of a total relation.

    :raises RowSumViolation: when some element is related to nothing
    """
    rows = []
    for x in range(R.src):
        related = int(R.matrix[x].sum())
        if not related:
            raise RowSumViolation(x, 0, message="element {0} is related to nothing".format(x))
        rows.append([Fraction(1, related) if R.matrix[x, y] else 0 for y in range(R.tgt)])
    return StochMatrix(R.src, R.tgt, rows)


def sample_stoch(src, tgt, rng, max_weight=DEFAULT_MAX_WEIGHT):
    """
    A random stochastic matrix whose rows are integer weights in ``0..max_weight`` normalized.

    :raises RowSumViolation: when ``tgt`` is empty but ``src`` is not
    """
    if src and not tgt:
        raise RowSumViolation(0, 0, message="no stochastic matrix {0} -> 0".format(src))
    rows = []
    for _ in range(src):
        weights = [rng.randint(0, max_weight) for _ in range(tgt)]
        if not any(weights):
            weights[rng.randrange(tgt)] = 1
        total = sum(weights)
        rows.append([Fraction(w, total) for w in weights])
    return StochMatrix(src, tgt, rows)


@cached(LRUCache(maxsize=64))
def distributions(n, max_denominator):
    """Every distribution on ``range(n)`` whose entries have denominators at most ``max_denominator``."""
    found = set()
    for d in range(1, max_denominator + 1):
        for counts in itertools.product(range(d + 1), repeat=n):
            if sum(counts) == d:
                found.add(tuple(Fraction(c, d) for c in counts))
    return tuple(sorted(found, reverse=True))


def all_stoch_matrices(src, tgt, max_denominator=3):
    """Every stochastic matrix ``src -> tgt`` whose entries have denominators at most ``max_denominator``."""
    rows = distributions(tgt, max_denominator)
    return [StochMatrix(src, tgt, choice) for choice in itertools.product(rows, repeat=src)]
