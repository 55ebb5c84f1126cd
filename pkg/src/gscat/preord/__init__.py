from gscat.preord.preorder import (Preorder, FinPreord, HomPreorder, ProductPreorder, MonotoneMap, preord_product,
                                   preord_terminal, identity_map, map_compose, map_pairing, map_projections,
                                   map_tensor, map_symmetry, map_diagonal, map_terminal, all_preorders,
                                   all_monotone_maps)
from gscat.preord.model import PreordModel, preord_presentation, open_preord, default_preorders
from gscat.preord.hypograph import hypograph, hypograph_functor, check_hypograph_functoriality
from gscat.preord.completeness import hom_functor_to_preord, completeness_experiment
