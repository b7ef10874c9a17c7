"""
nilcoh - Integral cohomology of nilpotent radicals and their unipotent groups

This package provides exact tools to construct and check:
- Root systems, Weyl groups, lengths, inversion sets and the dot action
- Chevalley structure constants of the positive nilpotent radical and its Weil restriction
- Chevalley-Eilenberg cohomology over the integers via Smith normal form
- Kostant's weight decomposition and the Galois-orbit multiplicity count
- Spectral sequences of filtered cochain complexes over prime fields and the rationals
- Finite unipotent groups U(Z/p^k), their lower central series and group algebra filtrations
"""

__version__ = '1.0.0'
