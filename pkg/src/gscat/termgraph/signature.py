#!/usr/bin/env python

import logging

from ..errors import SortMismatch

log = logging.getLogger(__name__)


class Operation(object):
    """A generating arrow ``name: inputs -> outputs`` over words of sorts."""
    __slots__ = ("name", "inputs", "outputs")

    def __init__(self, name, inputs=(), outputs=()):
        self.name = str(name)
        self.inputs = tuple(inputs)
        self.outputs = tuple(outputs)

    def _key(self):
        return self.name, self.inputs, self.outputs

    def __eq__(self, other):
        return isinstance(other, Operation) and self._key() == other._key()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return "Operation({0!r}, {1}, {2})".format(self.name, list(self.inputs), list(self.outputs))

    def __str__(self):
        return "{0}: {1} -> {2}".format(self.name, " ".join(self.inputs) or "I", " ".join(self.outputs) or "I")


class Signature(object):
    """
    Sorts and operations of a term-graph signature.

    :param sorts: sort names
    :param ops: :class:`Operation` instances, or ``(name, inputs, outputs)`` triples
    :raises SortMismatch: when an operation mentions an undeclared sort
    """
    def __init__(self, sorts, ops=()):
        self.sorts = tuple(str(s) for s in sorts)
        self.ops = {}
        for op in ops:
            if not isinstance(op, Operation):
                op = Operation(*op)
            self.add(op)

    def add(self, op):
        known = set(self.sorts)
        for sort in op.inputs + op.outputs:
            if sort not in known:
                raise SortMismatch("operation {0} uses undeclared sort {1}".format(op.name, sort))
        self.ops[op.name] = op
        return op

    def op(self, name):
        try:
            return self.ops[name]
        except KeyError:
            raise SortMismatch("unknown operation {0}".format(name))

    def check_word(self, word):
        known = set(self.sorts)
        for sort in word:
            if sort not in known:
                raise SortMismatch("undeclared sort {0}".format(sort))
        return tuple(word)

    def __repr__(self):
        return "Signature({0}, {1})".format(list(self.sorts), sorted(self.ops.values(), key=lambda o: o.name))
