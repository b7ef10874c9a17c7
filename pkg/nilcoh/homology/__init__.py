"""
Exact homological algebra: Smith normal form, CE complexes, cohomology and spectral sequences.
"""

from .fields import PrimeField, RationalField, field_for
from .snf import SNFResult, smith_normal_form, integer_rank
from .cochain import CochainComplex, build_ce_complex
from .cohomology import CohomologyResult, cohomology, base_change_rank_check
from .specseq import (FilteredComplex, SSPage, pages, gr_of_cohomology, collapse_certificate,
                      weight_height_filtration, random_filtered_complex)
