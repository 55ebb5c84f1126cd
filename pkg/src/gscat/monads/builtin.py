#!/usr/bin/env python

from collections import defaultdict
from fractions import Fraction
import logging

from ..errors import FixtureError, RowSumViolation
from .base import Monad, register_monad

log = logging.getLogger(__name__)


def _collect(weighted):
    """Sum the weights of equal elements into a canonical frozenset of ``(element, weight)``."""
    totals = defaultdict(int)
    for x, w in weighted:
        totals[x] += w
    return frozenset((x, w) for x, w in totals.items() if w)


def _sorted_label(items):
    return "{" + ",".join(sorted(str(x) for x in items)) + "}"


@register_monad("identity")
class IdentityMonad(Monad):
    """Values are the elements themselves; its Kleisli category is FinSet."""

    def unit(self, x):
        return x

    def fmap(self, f, v):
        return f(v)

    def mult(self, vv):
        return vv

    def pair(self, v, w):
        return (v, w)

    def count(self, n):
        return n

    def value_at(self, space, index):
        return space.elements[index]

    def index_of(self, space, value):
        return space.positions[value]

    def sample(self, elements, rng):
        return rng.choice(elements)

    def encode(self, v, n):
        return v

    def decode(self, data, n):
        x = int(data)
        if not 0 <= x < n:
            raise FixtureError("element {0} out of range for size {1}".format(x, n))
        return x


@register_monad("powerset")
class PowersetMonad(Monad):
    """Finite subsets ordered by inclusion; its Kleisli category is FinRel."""

    def unit(self, x):
        return frozenset((x,))

    def fmap(self, f, v):
        return frozenset(f(x) for x in v)

    def mult(self, vv):
        return frozenset().union(*vv)

    def pair(self, v, w):
        return frozenset((x, y) for x in v for y in w)

    def value_leq(self, v, w):
        return v <= w

    def count(self, n):
        return 2 ** n

    def value_at(self, space, index):
        return frozenset(e for j, e in enumerate(space.elements) if (index >> j) & 1)

    def index_of(self, space, value):
        return sum(1 << space.positions[e] for e in value)

    def sample(self, elements, rng):
        return frozenset(e for e in elements if rng.random() < 0.5)

    def encode(self, v, n):
        return sum(1 << x for x in v)

    def decode(self, data, n):
        mask = int(data)
        if mask < 0 or mask >> n:
            raise FixtureError("bitmask {0} out of range for size {1}".format(mask, n))
        return frozenset(x for x in range(n) if (mask >> x) & 1)

    def label(self, v):
        return _sorted_label(v)


@register_monad("nonempty")
class NonemptyPowersetMonad(PowersetMonad):
    """Nonempty subsets; its Kleisli arrows are the total relations."""

    def count(self, n):
        return 2 ** n - 1

    def value_at(self, space, index):
        return super(NonemptyPowersetMonad, self).value_at(space, index + 1)

    def index_of(self, space, value):
        return super(NonemptyPowersetMonad, self).index_of(space, value) - 1

    def sample(self, elements, rng):
        v = super(NonemptyPowersetMonad, self).sample(elements, rng)
        return v or frozenset((rng.choice(elements),))

    def decode(self, data, n):
        v = super(NonemptyPowersetMonad, self).decode(data, n)
        if not v:
            raise FixtureError("nonempty powerset value cannot be empty")
        return v


@register_monad("lifting")
class LiftingMonad(Monad):
    """
    Adds a least element: ``None`` is undefined, ``(x,)`` is defined.

    Its Kleisli arrows are the partial functions.
    """
    def unit(self, x):
        return (x,)

    def fmap(self, f, v):
        return None if v is None else (f(v[0]),)

    def mult(self, vv):
        return None if vv is None else vv[0]

    def pair(self, v, w):
        if v is None or w is None:
            return None
        return ((v[0], w[0]),)

    def value_leq(self, v, w):
        return v is None or v == w

    def count(self, n):
        return n + 1

    def value_at(self, space, index):
        return None if index == 0 else (space.elements[index - 1],)

    def index_of(self, space, value):
        return 0 if value is None else space.positions[value[0]] + 1

    def sample(self, elements, rng):
        i = rng.randrange(len(elements) + 1)
        return None if i == 0 else (elements[i - 1],)

    def encode(self, v, n):
        return None if v is None else v[0]

    def decode(self, data, n):
        if data is None or data == "null":
            return None
        x = int(data)
        if not 0 <= x < n:
            raise FixtureError("element {0} out of range for size {1}".format(x, n))
        return (x,)

    def label(self, v):
        return "_" if v is None else str(v[0])


@register_monad("multiset")
class MultisetMonad(Monad):
    """Finite multisets with natural-number multiplicities; values are sampled, never enumerated."""
    enumerable = False
    max_multiplicity = 3

    def unit(self, x):
        return frozenset(((x, 1),))

    def fmap(self, f, v):
        return _collect((f(x), k) for x, k in v)

    def mult(self, vv):
        return _collect((y, k * l) for inner, k in vv for y, l in inner)

    def pair(self, v, w):
        return _collect(((x, y), k * l) for x, k in v for y, l in w)

    def sample(self, elements, rng):
        return _collect((e, rng.randint(0, self.max_multiplicity)) for e in elements)

    def encode(self, v, n):
        counts = dict(v)
        return [counts.get(x, 0) for x in range(n)]

    def decode(self, data, n):
        if len(data) != n:
            raise FixtureError("multiset vector has {0} entries, expected {1}".format(len(data), n))
        if any(int(k) < 0 for k in data):
            raise FixtureError("multiset multiplicities must be natural numbers")
        return _collect((x, int(k)) for x, k in enumerate(data))

    def label(self, v):
        return _sorted_label("{0}:{1}".format(x, k) for x, k in v)


@register_monad("distribution")
class DistributionMonad(Monad):
    """Finitely supported probability distributions with exact rational weights."""
    enumerable = False
    max_weight = 3

    def unit(self, x):
        return frozenset(((x, Fraction(1)),))

    def fmap(self, f, v):
        return _collect((f(x), p) for x, p in v)

    def mult(self, vv):
        return _collect((y, p * q) for inner, p in vv for y, q in inner)

    def pair(self, v, w):
        return _collect(((x, y), p * q) for x, p in v for y, q in w)

    def sample(self, elements, rng):
        if not elements:
            raise IndexError("no distribution over the empty set")
        weights = [rng.randint(0, self.max_weight) for _ in elements]
        if not any(weights):
            weights[rng.randrange(len(weights))] = 1
        total = sum(weights)
        return _collect((e, Fraction(w, total)) for e, w in zip(elements, weights))

    def encode(self, v, n):
        probs = dict(v)
        return [str(probs.get(x, Fraction(0))) for x in range(n)]

    def decode(self, data, n):
        if len(data) != n:
            raise FixtureError("distribution vector has {0} entries, expected {1}".format(len(data), n))
        probs = [Fraction(str(p)) for p in data]
        if any(p < 0 for p in probs):
            raise FixtureError("probabilities must be nonnegative")
        if sum(probs) != 1:
            raise RowSumViolation(0, sum(probs))
        return _collect(enumerate(probs))

    def label(self, v):
        return _sorted_label("{0}:{1}".format(x, p) for x, p in v)


@register_monad("writer")
class WriterMonad(Monad):
    """
    Pairs ``(g, x)`` of an element of ``Z/order`` and a value; multiplication adds the group parts.

    :param int order: the order of the cyclic group
    """
    def __init__(self, order=2):
        self.order = order
        self.name = "writer:{0}".format(order)

    def unit(self, x):
        return (0, x)

    def fmap(self, f, v):
        return (v[0], f(v[1]))

    def mult(self, vv):
        g, (h, x) = vv
        return ((g + h) % self.order, x)

    def pair(self, v, w):
        return ((v[0] + w[0]) % self.order, (v[1], w[1]))

    def count(self, n):
        return self.order * n

    def value_at(self, space, index):
        g, j = divmod(index, len(space.elements))
        return (g, space.elements[j])

    def index_of(self, space, value):
        return value[0] * len(space.elements) + space.positions[value[1]]

    def sample(self, elements, rng):
        return (rng.randrange(self.order), rng.choice(elements))

    def encode(self, v, n):
        return [v[0], v[1]]

    def decode(self, data, n):
        g, x = int(data[0]), int(data[1])
        if not 0 <= g < self.order or not 0 <= x < n:
            raise FixtureError("writer value {0} out of range".format(data))
        return (g, x)

    def label(self, v):
        return "{0}.{1}".format(v[0], v[1])
