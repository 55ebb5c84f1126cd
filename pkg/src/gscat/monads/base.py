#!/usr/bin/env python

import logging

from ..errors import Infeasible, UsageError, MissingPreorder
from ..query import BaseSpace

log = logging.getLogger(__name__)


class ValueSpace(BaseSpace):
    """
    The values ``T(X)`` of a monad over a finite list of elements, addressed by index.

    Enumerable monads give every value an index; the others (multisets, distributions) are only
    sampled.
    """
    def __init__(self, monad, elements):
        super(ValueSpace, self).__init__()
        self.monad = monad
        self.elements = list(elements)
        self.positions = dict((e, i) for i, e in enumerate(self.elements))

    def _size(self):
        return self.monad.count(len(self.elements))

    def _item(self, index):
        return self.monad.value_at(self, index)

    def sample(self, rng):
        return self.monad.sample(self.elements, rng)

    def index(self, value):
        if not self.finite:
            raise Infeasible(message="values of {0} are not enumerable".format(self.monad.name))
        return self.monad.index_of(self, value)

    def __repr__(self):
        return "{0}({1} elements)".format(self.monad.name, len(self.elements))


class Monad(object):
    """
    A commutative monad on finite sets.

    Values range over arbitrary hashable elements. Subclasses provide ``unit``, ``fmap``, ``mult``
    and the lax structure ``pair`` (``c``), which sends two values to a value over pairs. ``bind`` and
    the strengths are derived.

    :ivar name: registry name
    :ivar enumerable: whether ``T(X)`` is finite for finite ``X``
    """
    name = "monad"
    enumerable = True
    ordered = True

    def unit(self, x):
        raise NotImplementedError()

    def fmap(self, f, v):
        raise NotImplementedError()

    def mult(self, vv):
        raise NotImplementedError()

    def pair(self, v, w):
        raise NotImplementedError()

    def bind(self, v, k):
        return self.mult(self.fmap(k, v))

    def strength(self, x, w):
        """``c(unit(x), w)``"""
        return self.pair(self.unit(x), w)

    def costrength(self, v, y):
        return self.pair(v, self.unit(y))

    def value_leq(self, v, w):
        return v == w

    def require_order(self):
        if not self.ordered:
            raise MissingPreorder("monad {0} has no order on its values".format(self.name))

    # enumeration

    def count(self, n):
        """Number of values over ``n`` elements, ``None`` when infinite."""
        return None

    def value_at(self, space, index):
        raise Infeasible(message="values of {0} are not enumerable".format(self.name))

    def index_of(self, space, value):
        raise Infeasible(message="values of {0} are not enumerable".format(self.name))

    def sample(self, elements, rng):
        raise NotImplementedError()

    def values(self, elements):
        return ValueSpace(self, elements)

    def carrier(self, n):
        return ValueSpace(self, range(n))

    # fixtures

    def encode(self, v, n):
        """The fixture encoding of a value over ``range(n)``."""
        raise NotImplementedError()

    def decode(self, data, n):
        raise NotImplementedError()

    def label(self, v):
        return str(v)

    def __repr__(self):
        return "Monad({0})".format(self.name)


_registry = {}


def register_monad(name):
    """Class decorator adding a monad to the registry under ``name``."""
    def _register(cls):
        cls.name = name
        _registry[name] = cls
        return cls
    return _register


def monad_names():
    return sorted(_registry) + ["writer:<k>"]


def get_monad(name):
    """
    Look up a built-in monad by name; ``writer:k`` gives the writer monad over ``Z/k``.

    :raises UsageError: for an unknown name
    """
    if name.startswith("writer"):
        _, _, order = name.partition(":")
        try:
            k = int(order or 2)
        except ValueError:
            raise UsageError("writer monad needs an integer group order, got {0}".format(order))
        if k < 1:
            raise UsageError("writer monad needs a positive group order, got {0}".format(k))
        return _registry["writer"](k)
    try:
        return _registry[name]()
    except KeyError:
        raise UsageError("Unknown monad {0}; available: {1}".format(name, ", ".join(monad_names())))
