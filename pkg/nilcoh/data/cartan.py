"""
Cartan matrix catalog for the simple types.
"""

import re
from math import factorial

import numpy as np

from ..errors import UnsupportedType

TYPE_PATTERN = re.compile(r"^\s*([A-Ga-g])\s*(\d+)\s*$")

DEFAULT_RANKS = {
    'A': (1, 2, 3, 4),
    'B': (2, 3, 4),
    'C': (2, 3, 4),
    'D': (4,),
    'G': (2,),
}

EXCEPTIONAL_RANKS = {
    'E': (6, 7, 8),
    'F': (4,),
}


def cartan_matrix(series, rank):
    """
    Cartan matrix of a simple type with A[i, j] = <alpha_i^vee, alpha_j>.

    Nodes follow Bourbaki numbering: B_n ends on a short root, C_n on a long
    one, G2 starts with the short root and F4 has alpha_3, alpha_4 short.

    Parameters:
    series (str): One of 'A'..'G'
    rank (int): Number of simple roots

    Returns:
    numpy.ndarray: rank x rank integer matrix
    """
    A = 2 * np.eye(rank, dtype=int)
    chain = range(rank - 1)
    if series in ('B', 'C', 'D', 'E'):
        chain = range(rank - 2)

    if series in ('A', 'B', 'C', 'D', 'E'):
        for i in chain:
            A[i, i + 1] = -1
            A[i + 1, i] = -1

    if series == 'B':
        A[-2, -1] = -1
        A[-1, -2] = -2
    elif series == 'C':
        A[-2, -1] = -2
        A[-1, -2] = -1
    elif series == 'D':
        # last node hangs off the third-to-last one
        A[-3, -1] = -1
        A[-1, -3] = -1
    elif series == 'E':
        A[-4, -1] = -1
        A[-1, -4] = -1
    elif series == 'F':
        A[0, 1] = A[1, 0] = -1
        A[1, 2] = -1
        A[2, 1] = -2
        A[2, 3] = A[3, 2] = -1
    elif series == 'G':
        A[0, 1] = -3
        A[1, 0] = -1
    return A


def classical_counts(series, rank):
    """
    Number of positive roots and order of the Weyl group.

    Parameters:
    series (str): Type letter
    rank (int): Rank

    Returns:
    tuple: (positive root count, Weyl group order)
    """
    if series == 'A':
        return rank * (rank + 1) // 2, factorial(rank + 1)
    if series in ('B', 'C'):
        return rank * rank, 2 ** rank * factorial(rank)
    if series == 'D':
        return rank * (rank - 1), 2 ** (rank - 1) * factorial(rank)
    exceptional = {
        ('E', 6): (36, 51840),
        ('E', 7): (63, 2903040),
        ('E', 8): (120, 696729600),
        ('F', 4): (24, 1152),
        ('G', 2): (6, 12),
    }
    return exceptional[(series, rank)]


def supported_types(allow_exceptional=False):
    """Sorted list of type labels such as 'A2' accepted by the catalog"""
    ranks = dict(DEFAULT_RANKS)
    if allow_exceptional:
        ranks.update(EXCEPTIONAL_RANKS)
    return sorted(f"{series}{rank}" for series, values in ranks.items() for rank in values)


def parse_type_label(label, rank=None, allow_exceptional=False):
    """
    Split and validate a type label.

    Parameters:
    label (str): Either a combined label such as 'B3' or a bare letter
    rank (int, optional): Rank when label is a bare letter
    allow_exceptional (bool): Accept E6, E7, E8 and F4

    Returns:
    tuple: (series letter, rank)
    """
    if rank is None:
        match = TYPE_PATTERN.match(str(label))
        if not match:
            raise UnsupportedType(f"Cannot parse type label '{label}'")
        series, rank = match.group(1).upper(), int(match.group(2))
    else:
        series, rank = str(label).strip().upper(), int(rank)

    ranks = dict(DEFAULT_RANKS)
    if allow_exceptional:
        ranks.update(EXCEPTIONAL_RANKS)
    if series in EXCEPTIONAL_RANKS and not allow_exceptional:
        raise UnsupportedType(f"Type {series}{rank} needs NILCOH_ALLOW_EXCEPTIONAL")
    if series not in ranks or rank not in ranks[series]:
        raise UnsupportedType(
            f"Unsupported type {series}{rank}; supported: {', '.join(supported_types(allow_exceptional))}"
        )
    return series, rank
