from gscat.functors.data import FunctorData, identity_functor, compose_functors
from gscat.functors.checks import (check_functoriality, check_lax_monoidal, check_oplax_monoidal, check_gs_functor,
                                   check_bilax, check_colax_cartesian, check_colax_opcartesian,
                                   check_colax_bicartesian, check_lax_on_identities, strict_structure)
