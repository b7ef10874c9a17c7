"""
Finite unipotent groups U(Z/p^k) and their group algebras over F_p.
"""

from .unipotent import (FiniteUnipotentGroup, UnitriangularModel, make_group, lower_central_series,
                        matrix_model_check, associativity_check,
                        gr_bracket_check, frattini_rank)
from .group_algebra import (PBWMonomialSet, TruncGroupAlgebra, pbw_monomials, pbw_weight_count,
                            augmentation_powers, pbw_independence_check)
