from gscat.finrel.rel import (Rel, rel_compose, rel_tensor, rel_id, rel_symmetry, rel_dup, rel_discharge, rel_leq,
                              is_partial_function, is_total_relation, rel_domain, all_relations,
                              all_total_relations)
from gscat.finrel.model import FinRelModel, as_presentation, open_finrel
from gscat.finrel.checks import check_relation_predicates
