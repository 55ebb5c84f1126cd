#!/usr/bin/env python

import itertools
import logging

import numpy as np

from ..errors import DimensionMismatch

log = logging.getLogger(__name__)


class Rel(object):
    """
    A relation between the finite ordinals ``src`` and ``tgt``, stored as a boolean matrix.

    Elements of a tensor ``m x n`` are addressed by the row-major pairing ``p(a, b) = a * n + b``.
    """
    __slots__ = ("src", "tgt", "matrix", "_key")

    def __init__(self, src, tgt, matrix=None):
        self.src = int(src)
        self.tgt = int(tgt)
        if matrix is None:
            matrix = np.zeros((self.src, self.tgt), dtype=bool)
        matrix = np.array(matrix, dtype=bool)
        if matrix.shape != (self.src, self.tgt):
            if matrix.ndim != 1 or matrix.size != self.src * self.tgt:
                raise DimensionMismatch((self.src, self.tgt), matrix.shape)
            matrix = matrix.reshape((self.src, self.tgt))
        matrix.setflags(write=False)
        self.matrix = matrix
        self._key = (self.src, self.tgt, np.packbits(matrix).tobytes())

    @classmethod
    def from_pairs(cls, src, tgt, pairs):
        matrix = np.zeros((src, tgt), dtype=bool)
        for a, b in pairs:
            if not (0 <= a < src and 0 <= b < tgt):
                raise DimensionMismatch((src, tgt), (a, b), message="pair out of range")
            matrix[a, b] = True
        return cls(src, tgt, matrix)

    @classmethod
    def from_index(cls, src, tgt, index):
        """The relation whose entry ``(a, b)`` is bit ``a * tgt + b`` of ``index``."""
        n = src * tgt
        bits = np.array([(index >> k) & 1 for k in range(n)], dtype=bool)
        return cls(src, tgt, bits.reshape((src, tgt)))

    def index(self):
        flat = self.matrix.reshape(-1)
        return sum(1 << k for k in np.flatnonzero(flat).tolist())

    def pairs(self):
        return [tuple(p) for p in np.argwhere(self.matrix).tolist()]

    def __eq__(self, other):
        return isinstance(other, Rel) and self._key == other._key

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return "Rel({0}, {1}, {2})".format(self.src, self.tgt, self.pairs())

    def __str__(self):
        pairs = ",".join("({0},{1})".format(a, b) for a, b in self.pairs())
        return "{0}->{1}:{{{2}}}".format(self.src, self.tgt, pairs)


def rel_compose(S, R):
    """``S`` after ``R``: ``a (S.R) c`` iff ``a R b`` and ``b S c`` for some ``b``."""
    if R.tgt != S.src:
        raise DimensionMismatch(R.tgt, S.src, message="composing relations")
    product = R.matrix.astype(np.int32) @ S.matrix.astype(np.int32)
    return Rel(R.src, S.tgt, product > 0)


def rel_tensor(R, S):
    return Rel(R.src * S.src, R.tgt * S.tgt, np.kron(R.matrix, S.matrix).astype(bool))


def rel_id(n):
    return Rel(n, n, np.eye(n, dtype=bool))


def rel_symmetry(m, n):
    matrix = np.zeros((m * n, n * m), dtype=bool)
    for a in range(m):
        for b in range(n):
            matrix[a * n + b, b * m + a] = True
    return Rel(m * n, n * m, matrix)


def rel_dup(n):
    matrix = np.zeros((n, n * n), dtype=bool)
    for a in range(n):
        matrix[a, a * n + a] = True
    return Rel(n, n * n, matrix)


def rel_discharge(n):
    return Rel(n, 1, np.ones((n, 1), dtype=bool))


def rel_leq(R, S):
    """Inclusion of relations."""
    if (R.src, R.tgt) != (S.src, S.tgt):
        raise DimensionMismatch((R.src, R.tgt), (S.src, S.tgt), message="comparing relations")
    return not np.any(R.matrix & ~S.matrix)


def is_partial_function(R):
    return bool(np.all(R.matrix.sum(axis=1) <= 1))


def is_total_relation(R):
    return bool(np.all(R.matrix.any(axis=1))) if R.tgt else R.src == 0


def rel_domain(R):
    """The partial identity on the elements related to something."""
    return Rel(R.src, R.src, np.diag(R.matrix.any(axis=1)) if R.tgt else np.zeros((R.src, R.src), dtype=bool))


def all_relations(src, tgt):
    """Every relation ``src -> tgt`` in index order."""
    return [Rel.from_index(src, tgt, i) for i in range(2 ** (src * tgt))]


def all_total_relations(src, tgt):
    """Every total relation ``src -> tgt``, choosing a nonempty row for each element of ``src``."""
    rows = []
    for mask in range(1, 2 ** tgt):
        rows.append([bool((mask >> b) & 1) for b in range(tgt)])
    if src and not rows:
        return []
    return [Rel(src, tgt, np.array(choice, dtype=bool).reshape((src, tgt)))
            for choice in itertools.product(rows, repeat=src)]
