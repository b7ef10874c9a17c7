"""
Root systems of simple split groups: positive roots, heights, rho and pairings.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..data.cartan import cartan_matrix, classical_counts, parse_type_label
from ..data.settings import Settings
from ..errors import NilcohError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Root:
    """A positive root in simple-root coordinates"""
    coords: tuple

    @property
    def height(self):
        return sum(self.coords)

    def to_dict(self):
        return {'coords': list(self.coords), 'height': self.height}


def weight_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def weight_neg(a):
    return tuple(-x for x in a)


class RootSystem:
    """
    Split root system of a simple type with its standard positive system.

    Roots live in simple-root coordinates, weights in fundamental-weight
    coordinates; the Cartan matrix converts the former into the latter.
    """

    def __init__(self, type_label, rank, cartan, positive_roots, lengths):
        self.type_label = type_label
        self.rank = rank
        self.cartan_matrix = cartan
        self.positive_roots = tuple(positive_roots)
        self.lengths = tuple(lengths)
        self.simple_roots = tuple(tuple(int(x) for x in cartan[:, j]) for j in range(rank))
        self.rho = tuple([1] * rank)

        self._index = {root.coords: i for i, root in enumerate(self.positive_roots)}
        self._gram = np.array([[cartan[i, j] * lengths[i] // 2 for j in range(rank)]
                               for i in range(rank)], dtype=int)
        self._weight_index = {}
        for i, root in enumerate(self.positive_roots):
            weight = self.to_weight(root.coords)
            self._weight_index[weight] = (1, i)
            self._weight_index[weight_neg(weight)] = (-1, i)

    @property
    def name(self):
        return f"{self.type_label}{self.rank}"

    @property
    def num_positive(self):
        return len(self.positive_roots)

    @property
    def heights(self):
        return tuple(root.height for root in self.positive_roots)

    @property
    def highest_root(self):
        return self.positive_roots[-1]

    @property
    def is_simply_laced(self):
        return len(set(self.lengths)) == 1

    def root_index(self, coords):
        """Index of a positive root given by simple-root coordinates, or None"""
        return self._index.get(tuple(coords))

    def is_root(self, coords):
        coords = tuple(coords)
        return coords in self._index or weight_neg(coords) in self._index

    def to_weight(self, coords):
        return tuple(int(x) for x in self.cartan_matrix @ np.asarray(coords, dtype=int))

    def classify_weight(self, weight):
        """
        Identify a root from its fundamental-weight coordinates.

        Returns:
        tuple: (sign, positive root index) or None if the weight is not a root
        """
        return self._weight_index.get(tuple(weight))

    def inner_product(self, a, b):
        """Symmetric form on simple-root coordinates, short roots of length 2"""
        return int(np.asarray(a, dtype=int) @ self._gram @ np.asarray(b, dtype=int))

    def root_length(self, index):
        coords = self.positive_roots[index].coords
        return self.inner_product(coords, coords)

    def coroot_pairing(self, coords, weight):
        """
        <alpha^vee, lambda> for a root alpha and a weight lambda.

        Parameters:
        coords (tuple): Root in simple-root coordinates
        weight (tuple): Weight in fundamental coordinates

        Returns:
        int: The pairing
        """
        norm = self.inner_product(coords, coords)
        total = sum(Fraction(c * self.lengths[j] * weight[j], norm) for j, c in enumerate(coords))
        if total.denominator != 1:
            raise NilcohError(f"Non-integral pairing of {coords} with {weight}")
        return int(total)

    def string_below(self, beta, alpha):
        """Largest i with beta - i*alpha a root (either sign)"""
        i = 0
        while self.is_root(tuple(b - (i + 1) * a for b, a in zip(beta, alpha))):
            i += 1
        return i

    def to_dict(self):
        return {
            'type': self.type_label,
            'rank': self.rank,
            'cartan': self.cartan_matrix.tolist(),
            'positive_roots': [root.to_dict() for root in self.positive_roots],
            'rho': list(self.rho),
            'coxeter': coxeter_number(self),
        }


def _root_lengths(cartan):
    # squared lengths propagated along the Dynkin diagram
    rank = cartan.shape[0]
    lengths = [None] * rank
    lengths[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(rank):
            if j != i and cartan[i, j] != 0 and lengths[j] is None:
                lengths[j] = lengths[i] * int(cartan[i, j]) / int(cartan[j, i])
                stack.append(j)
    shortest = min(lengths)
    return [int(2 * value / shortest) for value in lengths]


def _positive_roots(cartan):
    """
    Positive roots in simple-root coordinates, grown by root strings from the simple roots.

    Ordered by height, then descending lexicographically on the coordinates:
    in B2 this gives (1, 0), (0, 1), (1, 1), (1, 2).
    """
    rank = cartan.shape[0]
    simple = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    known = set(simple)
    layer = list(simple)
    while layer:
        next_layer = []
        for beta in layer:
            for i in range(rank):
                # alpha_i-string through beta: p steps down, q steps up
                p = 0
                while tuple(b - (p + 1) * (j == i) for j, b in enumerate(beta)) in known:
                    p += 1
                pairing = sum(int(cartan[i, j]) * beta[j] for j in range(rank))
                q = p - pairing
                if q > 0:
                    candidate = tuple(b + (j == i) for j, b in enumerate(beta))
                    if candidate not in known:
                        known.add(candidate)
                        next_layer.append(candidate)
        layer = next_layer
    # equal heights: descending on coordinates, so alpha_1 precedes alpha_2
    ordered = sorted(known, key=lambda c: (sum(c), tuple(-x for x in c)))
    return [Root(coords) for coords in ordered]


def build_root_system(type_label, rank=None):
    """
    Build and validate the root system of a simple type.

    Parameters:
    type_label (str): 'A2' style label, or the bare letter when rank is given
    rank (int, optional): Rank

    Returns:
    RootSystem: Validated root system
    """
    settings = Settings()
    series, rank = parse_type_label(type_label, rank, settings.allow_exceptional)
    cartan = cartan_matrix(series, rank)
    lengths = _root_lengths(cartan)
    roots = _positive_roots(cartan)
    rs = RootSystem(series, rank, cartan, roots, lengths)
    _validate(rs)
    logger.info("Built root system %s with %d positive roots", rs.name, rs.num_positive)
    return rs


def _validate(rs):
    A = rs.cartan_matrix
    if not all(A[i, i] == 2 for i in range(rs.rank)):
        raise NilcohError(f"{rs.name}: Cartan diagonal must be 2")
    if any(A[i, j] > 0 for i in range(rs.rank) for j in range(rs.rank) if i != j):
        raise NilcohError(f"{rs.name}: positive off-diagonal Cartan entry")

    expected, _ = classical_counts(rs.type_label, rs.rank)
    if rs.num_positive != expected:
        raise NilcohError(f"{rs.name}: found {rs.num_positive} positive roots, expected {expected}")

    heights = rs.heights
    if any(a > b for a, b in zip(heights, heights[1:])):
        raise NilcohError(f"{rs.name}: positive roots not sorted by height")

    for a in rs.positive_roots:
        for b in rs.positive_roots:
            total = weight_add(a.coords, b.coords)
            if rs.is_root(total) and rs.root_index(total) is None:
                raise NilcohError(f"{rs.name}: {total} missing from the positive roots")


def coxeter_number(rs):
    """
    Coxeter number: max over positive roots of <alpha^vee, rho> plus one.

    Parameters:
    rs (RootSystem): Root system

    Returns:
    int: Coxeter number
    """
    return max(rs.coroot_pairing(root.coords, rs.rho) for root in rs.positive_roots) + 1


def sum_of_subset(rs, subset):
    """
    Sum of the positive roots with the given indices, as a weight.

    Parameters:
    rs (RootSystem): Root system
    subset (iterable): Positive-root indices

    Returns:
    tuple: Weight in fundamental coordinates
    """
    total = tuple([0] * rs.rank)
    for index in subset:
        total = weight_add(total, rs.to_weight(rs.positive_roots[index].coords))
    return total
