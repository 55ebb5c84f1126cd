#!/usr/bin/env python

import itertools
import logging
import random

from .errors import Infeasible, MoreThanOneResult

log = logging.getLogger(__name__)


class BaseSpace(object):
    """
    A finite or infinite collection addressed by index.

    Subclasses provide ``_size()`` (``None`` when the collection cannot be enumerated) and
    ``_item(index)``; infinite collections provide ``sample(rng)`` instead.
    """
    def __init__(self):
        self._cached_size = -1

    @property
    def size(self):
        if self._cached_size == -1:
            self._cached_size = self._size()
        return self._cached_size

    @property
    def finite(self):
        return self.size is not None

    def _size(self):
        return 0

    def _item(self, index):
        raise IndexError(index)

    def sample(self, rng):
        if not self.finite:
            raise Infeasible(message="{0} cannot be sampled".format(self))
        if self.size == 0:
            raise IndexError("cannot sample from an empty collection")
        return self._item(rng.randrange(self.size))

    def all(self):
        return list(self)

    def first(self):
        if not self.finite:
            return self.sample(random.Random(0))
        if self.size == 0:
            return None
        return self._item(0)

    def one(self):
        if self.size != 1:
            raise MoreThanOneResult(message="{0} results found in {1}".format(self.size, self))
        return self._item(0)

    def __len__(self):
        if not self.finite:
            raise Infeasible(message="{0} is not enumerable".format(self))
        return self.size

    def __getitem__(self, item):
        if isinstance(item, slice):
            return [self._item(ii) for ii in range(*item.indices(len(self)))]
        elif isinstance(item, int):
            if item < 0:
                item += len(self)
            if item < 0 or item >= len(self):
                raise IndexError(item)
            return self._item(item)
        else:
            raise TypeError("Invalid argument type")

    def __iter__(self):
        for ii in range(len(self)):
            yield self._item(ii)

    def where(self, predicate):
        return ListSpace([x for x in self if predicate(x)])


class ListSpace(BaseSpace):
    def __init__(self, items):
        super(ListSpace, self).__init__()
        self._items = list(items)

    def _size(self):
        return len(self._items)

    def _item(self, index):
        return self._items[index]

    def __repr__(self):
        return "ListSpace({0} items)".format(len(self._items))


class HomSet(BaseSpace):
    """
    The morphisms between two objects of a presentation, enumerated lazily through its model.

    Accessing a homset whose size exceeds the presentation's cap raises :class:`Infeasible`; models
    whose homsets are infinite (multisets, distributions, stochastic matrices) are sampled instead.
    """
    def __init__(self, presentation, src, tgt):
        super(HomSet, self).__init__()
        self._presentation = presentation
        self._model = presentation.model
        self.src = src
        self.tgt = tgt
        self._index = None

    def _size(self):
        return self._model.hom_size(self.src, self.tgt)

    def _check_cap(self):
        size = self.size
        cap = self._presentation.cap
        if size is not None and size > cap:
            raise Infeasible(size, cap, message="hom({0}, {1})".format(self.src, self.tgt))

    def _item(self, index):
        return self._model.hom_item(self.src, self.tgt, index)

    def __len__(self):
        self._check_cap()
        return super(HomSet, self).__len__()

    def sample(self, rng):
        if self.finite:
            self._check_cap()
            return self._item(rng.randrange(self.size))
        return self._model.sample_hom(self.src, self.tgt, rng)

    def index(self, f):
        """
        Position of a morphism in the enumeration order.

        :param f: a morphism of this homset
        :return: its index
        :rtype: int
        """
        idx = self._model.hom_index(self.src, self.tgt, f)
        if idx is not None:
            return idx
        if self._index is None:
            log.debug("Materializing index of hom(%s, %s)", self.src, self.tgt)
            self._index = dict((self._model.key(g), i) for i, g in enumerate(self))
        try:
            return self._index[self._model.key(f)]
        except KeyError:
            raise ValueError("{0} is not in hom({1}, {2})".format(self._model.label(f), self.src, self.tgt))

    def __repr__(self):
        return "hom({0}, {1})".format(self.src, self.tgt)


class Instances(object):
    """
    Tuples of items drawn from several spaces, exhaustively when the product fits the budget,
    otherwise sampled with a seeded generator.

    :ivar exhaustive: whether every tuple was produced
    """
    def __init__(self, spaces, budget, rng):
        self.spaces = list(spaces)
        self.budget = budget
        self.rng = rng
        total = 1
        for space in self.spaces:
            if not space.finite:
                total = None
                break
            total *= space.size
        self.total = total
        self.exhaustive = total is not None and total <= budget
        for space in self.spaces:
            if isinstance(space, HomSet):
                space._check_cap()

    def __iter__(self):
        if self.exhaustive:
            return itertools.product(*self.spaces)
        if self.total == 0:
            return iter(())
        log.debug("Sampling %d instances over %s", self.budget, self.spaces)
        return self._sampled()

    def _sampled(self):
        for _ in range(self.budget):
            yield tuple(space.sample(self.rng) for space in self.spaces)
