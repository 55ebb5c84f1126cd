#!/usr/bin/env python

import logging

import networkx as nx

from ..errors import InterfaceMismatch, MalformedPresentation, SortMismatch

log = logging.getLogger(__name__)


class Box(object):
    """An occurrence of an operation, with the wires attached to its input and output ports."""
    __slots__ = ("op", "inputs", "outputs")

    def __init__(self, op, inputs, outputs):
        self.op = op
        self.inputs = tuple(int(w) for w in inputs)
        self.outputs = tuple(int(w) for w in outputs)

    def __repr__(self):
        return "Box({0}, {1}, {2})".format(self.op.name, list(self.inputs), list(self.outputs))


class TermGraph(object):
    """
    A term graph with an input and an output interface.

    Wires are numbered ``0..len(wires)-1`` and ``wires[w]`` is the sort of wire ``w``. Every wire has
    exactly one producer, either a position of the input interface or an output port of a box. The
    output interface lists wires; a wire listed twice is shared and a wire never consumed is discarded.

    :raises MalformedPresentation: when a wire has no producer or two, or the boxes form a cycle
    :raises SortMismatch: when a port and its wire disagree on the sort
    """
    def __init__(self, wires, inputs, outputs, boxes=()):
        self.wires = tuple(wires)
        self.inputs = tuple(int(w) for w in inputs)
        self.outputs = tuple(int(w) for w in outputs)
        self.boxes = tuple(boxes)
        self._validate()

    def _validate(self):
        producers = [None] * len(self.wires)

        def _produce(w, producer):
            if not 0 <= w < len(self.wires):
                raise MalformedPresentation("wire {0} does not exist".format(w))
            if producers[w] is not None:
                raise MalformedPresentation("wire {0} has two producers".format(w))
            producers[w] = producer

        for k, w in enumerate(self.inputs):
            _produce(w, ("in", k))
        for b, box in enumerate(self.boxes):
            if len(box.inputs) != len(box.op.inputs) or len(box.outputs) != len(box.op.outputs):
                raise InterfaceMismatch(box.op.inputs + box.op.outputs,
                                        tuple(str(w) for w in box.inputs + box.outputs),
                                        message="ports of box {0}".format(b))
            for k, w in enumerate(box.outputs):
                _produce(w, ("box", b, k))
            for w, sort in zip(box.inputs + box.outputs, box.op.inputs + box.op.outputs):
                if not 0 <= w < len(self.wires):
                    raise MalformedPresentation("wire {0} does not exist".format(w))
                if self.wires[w] != sort:
                    raise SortMismatch("wire {0} has sort {1} but box {2} ({3}) expects {4}".format(
                        w, self.wires[w], b, box.op.name, sort))
        for w, producer in enumerate(producers):
            if producer is None:
                raise MalformedPresentation("wire {0} has no producer".format(w))
        for w in self.outputs:
            if not 0 <= w < len(self.wires):
                raise MalformedPresentation("wire {0} does not exist".format(w))
        self.producers = tuple(producers)
        if not nx.is_directed_acyclic_graph(self.dependencies()):
            raise MalformedPresentation("term graph has a cycle")

    @property
    def input_word(self):
        return tuple(self.wires[w] for w in self.inputs)

    @property
    def output_word(self):
        return tuple(self.wires[w] for w in self.outputs)

    def consumers(self, w):
        """Box input slots and output positions reading wire ``w``."""
        found = [("box", b, k) for b, box in enumerate(self.boxes) for k, v in enumerate(box.inputs) if v == w]
        found.extend(("out", k) for k, v in enumerate(self.outputs) if v == w)
        return found

    def dependencies(self):
        """The box-dependency graph: an edge ``b -> c`` when a wire produced by ``b`` feeds ``c``."""
        graph = nx.DiGraph()
        graph.add_nodes_from(range(len(self.boxes)))
        for c, box in enumerate(self.boxes):
            for w in box.inputs:
                producer = self.producers[w]
                if producer[0] == "box":
                    graph.add_edge(producer[1], c)
        return graph

    def __repr__(self):
        return "TermGraph({0}, {1}, {2}, {3})".format(list(self.wires), list(self.inputs), list(self.outputs),
                                                      list(self.boxes))

    def __str__(self):
        boxes = " ".join("{0}{1}->{2}".format(b.op.name, list(b.inputs), list(b.outputs)) for b in self.boxes)
        return "[{0}] -> [{1}] {{{2}}}".format(" ".join(self.input_word), " ".join(self.output_word), boxes)


def _check_word(expected, actual):
    if len(expected) != len(actual):
        raise InterfaceMismatch(expected, actual)
    if tuple(expected) != tuple(actual):
        raise SortMismatch("interface sorts differ: [{0}] vs [{1}]".format(" ".join(expected), " ".join(actual)))


def tg_from_op(op):
    """The graph of a single box."""
    n, m = len(op.inputs), len(op.outputs)
    return TermGraph(op.inputs + op.outputs, range(n), range(n, n + m), [Box(op, range(n), range(n, n + m))])


def tg_id(word):
    word = tuple(word)
    return TermGraph(word, range(len(word)), range(len(word)))


def tg_symmetry(w1, w2):
    w1, w2 = tuple(w1), tuple(w2)
    n, m = len(w1), len(w2)
    return TermGraph(w1 + w2, range(n + m), list(range(n, n + m)) + list(range(n)))


def tg_dup(word):
    word = tuple(word)
    n = len(word)
    return TermGraph(word, range(n), list(range(n)) * 2)


def tg_discharge(word):
    word = tuple(word)
    return TermGraph(word, range(len(word)), ())


def tg_compose(t, s):
    """
    ``t`` after ``s``: the output wires of ``s`` are glued to the input wires of ``t``.

    Nothing is collected: boxes whose results are never used stay in the graph.

    :raises InterfaceMismatch: when the interfaces have different lengths
    :raises SortMismatch: when they have the same length but different sorts
    """
    _check_word(s.output_word, t.input_word)
    glued = dict(zip(t.inputs, s.outputs))
    fresh = {}
    wires = list(s.wires)
    for w, sort in enumerate(t.wires):
        if w not in glued:
            fresh[w] = len(wires)
            wires.append(sort)

    def _map(w):
        return glued[w] if w in glued else fresh[w]

    boxes = list(s.boxes) + [Box(b.op, [_map(w) for w in b.inputs], [_map(w) for w in b.outputs]) for b in t.boxes]
    return TermGraph(wires, s.inputs, [_map(w) for w in t.outputs], boxes)


def tg_tensor(s, t):
    """Disjoint union with concatenated interfaces."""
    shift = len(s.wires)

    def _map(w):
        return w + shift

    boxes = list(s.boxes) + [Box(b.op, [_map(w) for w in b.inputs], [_map(w) for w in b.outputs]) for b in t.boxes]
    return TermGraph(s.wires + t.wires, s.inputs + tuple(_map(w) for w in t.inputs),
                     s.outputs + tuple(_map(w) for w in t.outputs), boxes)


def tg_unreachable_boxes(t):
    """Boxes from which no wire of the output interface can be reached."""
    graph = nx.DiGraph()
    for b, box in enumerate(t.boxes):
        graph.add_node(("box", b))
        for w in box.inputs:
            graph.add_edge(("wire", w), ("box", b))
        for w in box.outputs:
            graph.add_edge(("box", b), ("wire", w))
    reachable = set()
    for w in set(t.outputs):
        node = ("wire", w)
        if node in graph:
            reachable |= nx.ancestors(graph, node)
    return [b for b in range(len(t.boxes)) if ("box", b) not in reachable]
