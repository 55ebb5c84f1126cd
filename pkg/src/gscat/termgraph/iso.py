#!/usr/bin/env python

import logging

import networkx as nx

log = logging.getLogger(__name__)


def port_graph(t):
    """
    The labelled directed graph of ``t`` used for isomorphism tests.

    Wires, boxes, box ports and interface positions are nodes. Port and interface nodes carry their
    position, so isomorphisms of this graph preserve both interfaces and the order of box ports.
    """
    graph = nx.DiGraph()
    for w, sort in enumerate(t.wires):
        graph.add_node(("wire", w), label="wire:{0}".format(sort))
    for k, w in enumerate(t.inputs):
        graph.add_node(("in", k), label="in:{0}".format(k))
        graph.add_edge(("in", k), ("wire", w))
    for k, w in enumerate(t.outputs):
        graph.add_node(("out", k), label="out:{0}".format(k))
        graph.add_edge(("wire", w), ("out", k))
    for b, box in enumerate(t.boxes):
        graph.add_node(("box", b), label="box:{0}".format(box.op))
        for k, w in enumerate(box.inputs):
            slot = ("slot-in", b, k)
            graph.add_node(slot, label="slot-in:{0}".format(k))
            graph.add_edge(("wire", w), slot)
            graph.add_edge(slot, ("box", b))
        for k, w in enumerate(box.outputs):
            slot = ("slot-out", b, k)
            graph.add_node(slot, label="slot-out:{0}".format(k))
            graph.add_edge(("box", b), slot)
            graph.add_edge(slot, ("wire", w))
    return graph


def tg_invariant(t, iterations=3):
    """Weisfeiler-Lehman hash of the port graph; isomorphic graphs have equal invariants."""
    return nx.weisfeiler_lehman_graph_hash(port_graph(t), node_attr="label", iterations=iterations)


def _same_label(a, b):
    return a["label"] == b["label"]


def tg_equal(s, t):
    """
    Whether ``s`` and ``t`` are isomorphic by a bijection of wires and boxes that fixes both
    interfaces and preserves operation labels and port order.
    """
    if (s.input_word, s.output_word) != (t.input_word, t.output_word):
        return False
    if (len(s.wires), len(s.boxes)) != (len(t.wires), len(t.boxes)):
        return False
    if sorted(str(b.op) for b in s.boxes) != sorted(str(b.op) for b in t.boxes):
        return False
    gs, gt = port_graph(s), port_graph(t)
    if nx.weisfeiler_lehman_graph_hash(gs, node_attr="label") != nx.weisfeiler_lehman_graph_hash(gt, node_attr="label"):
        return False
    return nx.is_isomorphic(gs, gt, node_match=_same_label)
