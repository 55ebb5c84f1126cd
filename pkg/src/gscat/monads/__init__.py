from gscat.monads.base import Monad, ValueSpace, get_monad, monad_names, register_monad
from gscat.monads.builtin import (IdentityMonad, PowersetMonad, NonemptyPowersetMonad, LiftingMonad, MultisetMonad,
                                  DistributionMonad, WriterMonad)
from gscat.monads.laws import check_monad_laws, check_gs_monoidal_monad, check_colax_cartesian_monad
from gscat.monads.kleisli import (KleisliMorphism, KleisliModel, kleisli_category, open_kleisli, finset_presentation,
                                  kleisli_F_T, kleisli_G_T, kleisli_to_pspan, powerset_to_rel, rel_to_powerset,
                                  check_kleisli_rel_isomorphism, kleisli_graph, check_kleisli_subcategories,
                                  check_multiset_scalars)
