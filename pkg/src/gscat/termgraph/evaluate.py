#!/usr/bin/env python

import logging

from ..errors import TypeMismatch

log = logging.getLogger(__name__)


class Assignment(object):
    """
    Interpretation of a signature: sorts to objects, operations to morphisms of some presentation.

    :raises TypeMismatch: when a sort is unassigned or an operation's morphism has the wrong type
    """
    def __init__(self, sorts, ops):
        self.sorts = dict(sorts)
        self.ops = dict(ops)

    def obj(self, P, word):
        result = P.unit()
        for sort in word:
            try:
                result = P.model.tensor_obj(result, self.sorts[sort])
            except KeyError:
                raise TypeMismatch("sort {0} has no object".format(sort))
        return result

    def mor(self, P, op):
        try:
            f = self.ops[op.name]
        except KeyError:
            raise TypeMismatch("operation {0} has no morphism".format(op.name))
        expected = (self.obj(P, op.inputs), self.obj(P, op.outputs))
        actual = (P.dom(f), P.cod(f))
        if expected != actual:
            raise TypeMismatch("operation {0} needs a morphism {1} -> {2}, got {3} -> {4}".format(
                op.name, expected[0], expected[1], actual[0], actual[1]))
        return f


def _copies(P, a, k):
    """The morphism ``a -> a^k`` built from duplicators, or the discharger when ``k`` is zero."""
    if k == 0:
        return P.discharge(a)
    result = P.identity(a)
    for _ in range(k - 1):
        result = P.compose(P.tensor(result, P.identity(a)), P.dup(a))
    return result


def wiring(P, objs, src, tgt):
    """
    The structural morphism rearranging the wires ``src`` into ``tgt``.

    Every wire of ``tgt`` must occur in ``src``. Wires are duplicated or discharged as often as
    needed, then moved into place by adjacent symmetries.

    :param dict objs: object of each wire
    """
    src, tgt = list(src), list(tgt)
    counts = [tgt.count(w) for w in src]
    if len(set(src)) != len(src):
        raise TypeMismatch("wires {0} are not distinct".format(src))

    result = None
    for w, k in zip(src, counts):
        piece = _copies(P, objs[w], k)
        result = piece if result is None else P.tensor(result, piece)
    if result is None:
        result = P.identity(P.unit())

    current = [w for w, k in zip(src, counts) for _ in range(k)]
    seen = {}
    positions = []
    for w in current:
        occurrence = seen.get(w, 0)
        seen[w] = occurrence + 1
        positions.append([i for i, v in enumerate(tgt) if v == w][occurrence])

    unit = P.unit()
    for end in range(len(positions) - 1, 0, -1):
        for j in range(end):
            if positions[j] > positions[j + 1]:
                before = unit
                for w in current[:j]:
                    before = P.model.tensor_obj(before, objs[w])
                after = unit
                for w in current[j + 2:]:
                    after = P.model.tensor_obj(after, objs[w])
                swap = P.tensor(P.identity(before), P.symmetry(objs[current[j]], objs[current[j + 1]]),
                                P.identity(after))
                result = P.compose(swap, result)
                current[j], current[j + 1] = current[j + 1], current[j]
                positions[j], positions[j + 1] = positions[j + 1], positions[j]
    return result


def layering(t, reverse=False):
    """
    Boxes in evaluation order: at each step the least ready box, or the greatest when ``reverse``.
    """
    ready_wires = set(t.inputs)
    pending = list(range(len(t.boxes)))
    order = []
    while pending:
        ready = [b for b in pending if all(w in ready_wires for w in t.boxes[b].inputs)]
        b = max(ready) if reverse else min(ready)
        order.append(b)
        pending.remove(b)
        ready_wires.update(t.boxes[b].outputs)
    return order


def tg_eval(t, P, assignment, reverse=False):
    """
    Evaluate ``t`` in ``P``.

    Boxes are evaluated one layer at a time in the order of :func:`layering`. Each layer rearranges
    the live wires so that the box's inputs come first, applies the box's morphism tensored with the
    identity on the remaining live wires, and keeps the box's outputs in front. A final rearrangement
    produces the output interface. Boxes whose results are never used are still evaluated.

    :param TermGraph t: the graph
    :param GsPresentation P: the target; open presentations are the usual choice
    :param Assignment assignment: the interpretation
    :param bool reverse: break ties between ready boxes by the greatest index
    :raises TypeMismatch: when the assignment does not type the graph
    """
    objs = dict((w, assignment.obj(P, (sort,))) for w, sort in enumerate(t.wires))
    order = layering(t, reverse)

    def _needed(w, step):
        if w in t.outputs:
            return True
        return any(w in t.boxes[c].inputs for c in order[step + 1:])

    live = list(t.inputs)
    result = P.identity(assignment.obj(P, t.input_word))
    for step, b in enumerate(order):
        box = t.boxes[b]
        rest = [w for w in live if _needed(w, step)]
        arranged = list(box.inputs) + rest
        result = P.compose(wiring(P, objs, live, arranged), result)
        rest_obj = P.unit()
        for w in rest:
            rest_obj = P.model.tensor_obj(rest_obj, objs[w])
        result = P.compose(P.tensor(assignment.mor(P, box.op), P.identity(rest_obj)), result)
        live = list(box.outputs) + rest
        log.debug("Evaluated box %d (%s) at step %d", b, box.op.name, step)
    return P.compose(wiring(P, objs, live, t.outputs), result)
