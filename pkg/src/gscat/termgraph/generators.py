#!/usr/bin/env python

import logging

from .evaluate import Assignment
from .graph import Box, TermGraph
from .signature import Operation, Signature

log = logging.getLogger(__name__)


def random_word(sorts, rng, max_length=2):
    return tuple(rng.choice(sorts) for _ in range(rng.randint(0, max_length)))


def random_signature(rng, sorts=2, ops=3, max_arity=2):
    """A signature with sorts ``s0, s1, ...`` and operations ``f0, f1, ...`` of random arity."""
    names = ["s{0}".format(i) for i in range(sorts)]
    operations = []
    for i in range(ops):
        inputs = random_word(names, rng, max_arity)
        outputs = random_word(names, rng, max_arity)
        if not outputs:
            outputs = (rng.choice(names),)
        operations.append(Operation("f{0}".format(i), inputs, outputs))
    return Signature(names, operations)


def random_term_graph(signature, rng, boxes=3, inputs=None, outputs=None):
    """
    A random acyclic graph: boxes are added one at a time reading random existing wires.

    Operations whose input sorts are not all available are skipped, so the graph may have fewer boxes
    than asked for. The output interface picks wires with repetition; when ``outputs`` is a word it
    must be realizable, else a random length is used.
    """
    wires = list(random_word(signature.sorts, rng) if inputs is None else inputs)
    input_wires = list(range(len(wires)))
    placed = []
    ops = sorted(signature.ops.values(), key=lambda o: o.name)
    for _ in range(boxes):
        op = rng.choice(ops)
        by_sort = {}
        for w, sort in enumerate(wires):
            by_sort.setdefault(sort, []).append(w)
        if any(sort not in by_sort for sort in op.inputs):
            continue
        ins = [rng.choice(by_sort[sort]) for sort in op.inputs]
        outs = list(range(len(wires), len(wires) + len(op.outputs)))
        wires.extend(op.outputs)
        placed.append(Box(op, ins, outs))

    if outputs is None:
        chosen = [rng.randrange(len(wires)) for _ in range(rng.randint(0, 3))] if wires else []
    else:
        chosen = []
        for sort in outputs:
            candidates = [w for w, s in enumerate(wires) if s == sort]
            chosen.append(rng.choice(candidates))
    return TermGraph(wires, input_wires, chosen, placed)


def random_assignment(signature, P, rng, sizes=(1, 2)):
    """Random objects for the sorts and random morphisms of matching type drawn from ``P``'s homsets."""
    sorts = dict((s, rng.choice(sizes)) for s in signature.sorts)
    assignment = Assignment(sorts, {})
    for name, op in sorted(signature.ops.items()):
        a = assignment.obj(P, op.inputs)
        b = assignment.obj(P, op.outputs)
        assignment.ops[name] = P.hom(a, b).sample(rng)
    return assignment


def shuffled(t, rng):
    """``t`` with its wires and boxes renumbered by random permutations."""
    wire_perm = list(range(len(t.wires)))
    rng.shuffle(wire_perm)
    box_order = list(range(len(t.boxes)))
    rng.shuffle(box_order)
    wires = [None] * len(t.wires)
    for old, new in enumerate(wire_perm):
        wires[new] = t.wires[old]
    boxes = []
    for b in box_order:
        box = t.boxes[b]
        boxes.append(Box(box.op, [wire_perm[w] for w in box.inputs], [wire_perm[w] for w in box.outputs]))
    return TermGraph(wires, [wire_perm[w] for w in t.inputs], [wire_perm[w] for w in t.outputs], boxes)
