"""
Root systems, Weyl groups and the integral nilpotent Lie algebras they define.
"""

from .rootsystem import RootSystem, Root, build_root_system, coxeter_number, sum_of_subset
from .weyl import WeylGroup, WeylElement, enumerate_weyl_group, inversion_set, dot_action, poincare_polynomial
from .nilpotent import (NilpotentLieAlgebra, chevalley_structure_constants, weil_restrict, jacobi_check,
                        flip_bracket_sign, galois_permutation, lie_lower_central_series)
from .enveloping import TruncatedEnvelopingAlgebra
