from gscat.core.presentation import GsModel, TableModel, GsPresentation, DEFAULT_CAP
from gscat.core.report import LawReport, Witness, LawChecker, merge_reports
from gscat.core.laws import check_category_and_monoidal, check_gs_axioms, check_oplax_cartesian
from gscat.core.predicates import (is_total, is_functional, is_weakly_total, is_weakly_functional, dom,
                                   check_dom_propositions, check_weak_product, check_dup_discharge_uniqueness,
                                   pairing, mediating_candidates)
from gscat.core.generate import generate_oplax_preorder, check_order_contains
