from gscat.finstoch.stoch import (StochMatrix, stoch_compose, stoch_tensor, stoch_id, stoch_symmetry, stoch_dup,
                                  stoch_discharge, support, support_leq, uniform_stoch, sample_stoch, distributions,
                                  all_stoch_matrices)
from gscat.finstoch.model import FinStochModel, finstoch_presentation, open_finstoch
from gscat.finstoch.checks import support_functor, check_support_oplax
