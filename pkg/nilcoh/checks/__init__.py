"""
Theorem checks: Kostant's weights and the Galois-orbit multiplicities.
"""

from .kostant import KostantPrediction, kostant_predict, verify_kostant, highest_weight_check
from .multiplicity import (WeylMultiset, OrbitReport, parse_galois, enumerate_multisets, orbit_count,
                           corollary_report, galois_invariants_oracle)
