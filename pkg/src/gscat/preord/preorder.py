#!/usr/bin/env python

import itertools
import logging

from cachetools import LRUCache, cached
import numpy as np

from ..errors import DimensionMismatch, InvalidPreorder, NotMonotone

log = logging.getLogger(__name__)

# products up to this many elements are materialized as order matrices
MATERIALIZE_LIMIT = 4096


class Preorder(object):
    """
    A finite preordered set on the elements ``0 .. size - 1``.

    Subclasses implement ``leq(x, y)``; equality and hashing go through ``key``.
    """
    size = 0

    def leq(self, x, y):
        raise NotImplementedError()

    @property
    def key(self):
        raise NotImplementedError()

    @property
    def matrix(self):
        """The order as a boolean matrix, computed on first use."""
        m = getattr(self, "_matrix", None)
        if m is None:
            log.debug("Materializing order matrix of %r", self)
            m = np.array([[self.leq(x, y) for y in range(self.size)] for x in range(self.size)], dtype=bool)
            m = m.reshape((self.size, self.size))
            m.setflags(write=False)
            self._matrix = m
        return m

    def is_discrete(self):
        return bool(np.array_equal(self.matrix, np.eye(self.size, dtype=bool)))

    def __eq__(self, other):
        return isinstance(other, Preorder) and self.key == other.key

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.key)


class FinPreord(Preorder):
    """
    A finite preorder given by its order matrix.

    :param int size: number of elements
    :param leq: ``size x size`` boolean matrix, reflexive and transitive
    :raises InvalidPreorder: when the matrix is not a preorder
    """
    def __init__(self, size, leq, name=None):
        self.size = int(size)
        m = np.array(leq, dtype=bool).reshape((self.size, self.size))
        if not np.all(np.diag(m)):
            raise InvalidPreorder("order is not reflexive")
        composite = (m.astype(np.int32) @ m.astype(np.int32)) > 0
        if np.any(composite & ~m):
            raise InvalidPreorder("order is not transitive")
        m.setflags(write=False)
        self._matrix = m
        self.name = name
        self._key = ("matrix", self.size, np.packbits(m).tobytes())

    @classmethod
    def from_pairs(cls, size, pairs, name=None):
        """Reflexive-transitive closure of the given pairs."""
        m = np.eye(size, dtype=bool)
        for x, y in pairs:
            if not (0 <= x < size and 0 <= y < size):
                raise InvalidPreorder("pair ({0}, {1}) out of range for size {2}".format(x, y, size))
            m[x, y] = True
        for k in range(size):
            m = m | (m[:, k:k + 1] & m[k:k + 1, :])
        return cls(size, m, name=name)

    @classmethod
    def chain(cls, size):
        return cls(size, np.triu(np.ones((size, size), dtype=bool)), name="C{0}".format(size))

    @classmethod
    def discrete(cls, size):
        return cls(size, np.eye(size, dtype=bool), name="D{0}".format(size))

    @classmethod
    def indiscrete(cls, size):
        return cls(size, np.ones((size, size), dtype=bool), name="K{0}".format(size))

    def leq(self, x, y):
        return bool(self._matrix[x, y])

    @property
    def key(self):
        return self._key

    def pairs(self):
        return [tuple(p) for p in np.argwhere(self._matrix).tolist()]

    def __repr__(self):
        if self.name:
            return self.name
        return "FinPreord({0}, {1})".format(self.size, self.pairs())


class HomPreorder(Preorder):
    """The hom-preorder ``hom(a, b)`` of an ordered presentation; elements are homset indices."""

    def __init__(self, presentation, a, b):
        self.presentation = presentation
        self.a = a
        self.b = b
        self.homset = presentation.hom(a, b)
        self.size = len(self.homset)

    def leq(self, x, y):
        return self.presentation.leq(self.homset[x], self.homset[y])

    def element(self, x):
        return self.homset[x]

    def index(self, f):
        return self.homset.index(f)

    @property
    def key(self):
        return ("hom", id(self.presentation), self.a, self.b)

    def __repr__(self):
        return "{0}({1}, {2})".format(self.presentation.name, self.a, self.b)


class ProductPreorder(Preorder):
    """A lazy cartesian product; factors are flattened and terminal factors dropped."""

    def __init__(self, factors):
        flat = []
        for factor in factors:
            if isinstance(factor, ProductPreorder):
                flat.extend(factor.factors)
            elif factor.size == 1 and isinstance(factor, FinPreord):
                continue
            else:
                flat.append(factor)
        self.factors = tuple(flat)
        self.size = 1
        for factor in self.factors:
            self.size *= factor.size

    def split(self, x):
        coords = []
        for factor in reversed(self.factors):
            x, r = divmod(x, factor.size)
            coords.append(r)
        return tuple(reversed(coords))

    def leq(self, x, y):
        return all(f.leq(a, b) for f, a, b in zip(self.factors, self.split(x), self.split(y)))

    @property
    def key(self):
        return ("product",) + tuple(f.key for f in self.factors)

    def __repr__(self):
        return " x ".join(repr(f) for f in self.factors) or "1"


def preord_terminal():
    return FinPreord(1, [[True]], name="1")


def preord_product(X, Y):
    """
    Cartesian product with the componentwise order; element ``(x, y)`` is ``x * Y.size + y``.

    Small products of matrix preorders are materialized, so the product is strictly associative and
    unital on the nose.
    """
    if X.size == 1 and isinstance(X, FinPreord):
        return Y
    if Y.size == 1 and isinstance(Y, FinPreord):
        return X
    if isinstance(X, FinPreord) and isinstance(Y, FinPreord) and X.size * Y.size <= MATERIALIZE_LIMIT:
        return FinPreord(X.size * Y.size, np.kron(X.matrix, Y.matrix).astype(bool))
    return ProductPreorder((X, Y))


class MonotoneMap(object):
    """
    A monotone map between finite preorders.

    Either ``values`` (one target element per source element) or a callable ``fn`` is given; maps
    built from a callable evaluate lazily and are used between large hom-preorders.

    :raises NotMonotone: when a materialized map breaks monotonicity and ``check`` is set
    """
    def __init__(self, src, tgt, values=None, fn=None, check=True, name=None):
        self.src = src
        self.tgt = tgt
        self.name = name
        if values is not None:
            values = tuple(int(v) for v in values)
            if len(values) != src.size:
                raise DimensionMismatch(src.size, len(values), message="values of a monotone map")
            if any(v < 0 or v >= tgt.size for v in values):
                raise DimensionMismatch(tgt.size, max(values), message="monotone map value out of range")
            self._values = values
            self._fn = values.__getitem__
            if check:
                self._check_monotone()
        elif fn is not None:
            self._values = None
            self._fn = fn
        else:
            raise ValueError("MonotoneMap needs values or fn")

    def _check_monotone(self):
        if isinstance(self.src, FinPreord) and isinstance(self.tgt, FinPreord):
            v = np.array(self._values, dtype=np.intp)
            image = self.tgt.matrix[np.ix_(v, v)]
            bad = np.argwhere(self.src.matrix & ~image)
            if len(bad):
                raise NotMonotone(tuple(bad[0].tolist()))
            return
        for x in range(self.src.size):
            for y in range(self.src.size):
                if self.src.leq(x, y) and not self.tgt.leq(self._values[x], self._values[y]):
                    raise NotMonotone((x, y))

    def __call__(self, x):
        return self._fn(x)

    @property
    def lazy(self):
        return self._values is None

    @property
    def values(self):
        if self._values is None:
            self._values = tuple(self._fn(x) for x in range(self.src.size))
        return self._values

    def __eq__(self, other):
        if not isinstance(other, MonotoneMap):
            return False
        return self.src == other.src and self.tgt == other.tgt and self.values == other.values

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.src, self.tgt, self.values))

    def __repr__(self):
        if self.name:
            return self.name
        if self.lazy and self.src.size > 16:
            return "<map {0} -> {1}>".format(self.src, self.tgt)
        return "{0}->{1}:{2}".format(self.src, self.tgt, list(self.values))


def identity_map(X):
    if isinstance(X, FinPreord):
        return MonotoneMap(X, X, values=range(X.size), check=False)
    return MonotoneMap(X, X, fn=lambda x: x)


def map_compose(g, f):
    """``g`` after ``f``."""
    if f.tgt != g.src:
        raise DimensionMismatch(f.tgt, g.src, message="composing monotone maps")
    if f.lazy or g.lazy:
        return MonotoneMap(f.src, g.tgt, fn=lambda x: g(f(x)))
    return MonotoneMap(f.src, g.tgt, values=[g.values[v] for v in f.values], check=False)


def map_pairing(f, g):
    """The map ``x -> (f(x), g(x))`` into the product of the targets."""
    if f.src != g.src:
        raise DimensionMismatch(f.src, g.src, message="pairing monotone maps")
    tgt = preord_product(f.tgt, g.tgt)
    n = g.tgt.size
    if f.lazy or g.lazy:
        return MonotoneMap(f.src, tgt, fn=lambda x: f(x) * n + g(x))
    return MonotoneMap(f.src, tgt, values=[a * n + b for a, b in zip(f.values, g.values)], check=False)


def map_projections(X, Y):
    """The two projections out of ``X x Y``."""
    XY = preord_product(X, Y)
    n = Y.size
    if isinstance(XY, FinPreord):
        first = MonotoneMap(XY, X, values=[p // n for p in range(XY.size)], check=False)
        second = MonotoneMap(XY, Y, values=[p % n for p in range(XY.size)], check=False)
        return first, second
    return MonotoneMap(XY, X, fn=lambda p: p // n), MonotoneMap(XY, Y, fn=lambda p: p % n)


def map_tensor(f, g):
    src = preord_product(f.src, g.src)
    tgt = preord_product(f.tgt, g.tgt)
    m, n = g.src.size, g.tgt.size
    if f.lazy or g.lazy or not isinstance(src, FinPreord):
        return MonotoneMap(src, tgt, fn=lambda p: f(p // m) * n + g(p % m))
    values = [f.values[p // m] * n + g.values[p % m] for p in range(src.size)]
    return MonotoneMap(src, tgt, values=values, check=False)


def map_symmetry(X, Y):
    src = preord_product(X, Y)
    tgt = preord_product(Y, X)
    m, n = X.size, Y.size
    if isinstance(src, FinPreord):
        return MonotoneMap(src, tgt, values=[(p % n) * m + p // n for p in range(src.size)], check=False)
    return MonotoneMap(src, tgt, fn=lambda p: (p % n) * m + p // n)


def map_diagonal(X):
    tgt = preord_product(X, X)
    n = X.size
    if isinstance(X, FinPreord) and isinstance(tgt, FinPreord):
        return MonotoneMap(X, tgt, values=[x * n + x for x in range(n)], check=False)
    return MonotoneMap(X, tgt, fn=lambda x: x * n + x)


def map_terminal(X):
    return MonotoneMap(X, preord_terminal(), fn=lambda x: 0) if not isinstance(X, FinPreord) \
        else MonotoneMap(X, preord_terminal(), values=[0] * X.size, check=False)


_preorders_cache = LRUCache(maxsize=16)


@cached(_preorders_cache)
def all_preorders(size, up_to_iso=True):
    """
    Every preorder on ``size`` elements, optionally one per isomorphism class.

    :rtype: list of FinPreord
    """
    if size == 0:
        return [FinPreord(0, np.zeros((0, 0), dtype=bool))]
    off_diagonal = [(x, y) for x in range(size) for y in range(size) if x != y]
    seen = set()
    result = []
    for bits in itertools.product((False, True), repeat=len(off_diagonal)):
        m = np.eye(size, dtype=bool)
        for (x, y), bit in zip(off_diagonal, bits):
            m[x, y] = bit
        if np.any(((m.astype(np.int32) @ m.astype(np.int32)) > 0) & ~m):
            continue
        if up_to_iso:
            canonical = min(m[np.ix_(p, p)].tobytes() for p in itertools.permutations(range(size)))
            if canonical in seen:
                continue
            seen.add(canonical)
        result.append(FinPreord(size, m))
    return result


def all_monotone_maps(X, Y):
    """Every monotone map ``X -> Y`` between matrix preorders, in lexicographic order of values."""
    maps = []
    for values in itertools.product(range(Y.size), repeat=X.size):
        v = np.array(values, dtype=np.intp)
        if X.size and np.any(X.matrix & ~Y.matrix[np.ix_(v, v)]):
            continue
        maps.append(MonotoneMap(X, Y, values=values, check=False))
    return maps
