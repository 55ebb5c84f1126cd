from gscat.pspan.span import (Span, span_canonicalize, span_compose, span_tensor, span_id, span_symmetry, span_dup,
                              span_dup_repeated, span_discharge, span_leq, span_leq_search, two_cell, is_two_cell,
                              span_is_weakly_functional, span_is_weakly_total, function_span, all_spans)
from gscat.pspan.model import PSpanModel, pspan_presentation, open_pspan, count_spans
from gscat.pspan.checks import check_two_cell_criterion, check_span_predicates
