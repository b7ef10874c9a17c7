"""
Input data for nilcoh: the Cartan matrix catalog and runtime settings.
"""

from .cartan import cartan_matrix, parse_type_label, classical_counts, supported_types
from .settings import Settings
