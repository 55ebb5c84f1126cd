from gscat.termgraph.signature import Operation, Signature
from gscat.termgraph.graph import (Box, TermGraph, tg_from_op, tg_id, tg_symmetry, tg_dup, tg_discharge, tg_compose,
                                   tg_tensor, tg_unreachable_boxes)
from gscat.termgraph.iso import port_graph, tg_equal, tg_invariant
from gscat.termgraph.evaluate import Assignment, wiring, layering, tg_eval
from gscat.termgraph.generators import random_word, random_signature, random_term_graph, random_assignment, shuffled
from gscat.termgraph.checks import (check_term_graph_axioms, check_eval_functorial, sharing_pair,
                                    check_sharing_vs_copying)
