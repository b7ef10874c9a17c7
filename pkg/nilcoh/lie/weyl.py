"""
Weyl group enumeration, lengths, inversion sets and the dot action.
"""

import logging
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from ..data.cartan import classical_counts
from ..data.settings import Settings
from ..errors import GroupTooLarge, NilcohError
from .rootsystem import weight_add

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class WeylElement:
    """Weyl group element acting on fundamental-weight coordinates"""
    index: int
    reduced_word: tuple
    action: np.ndarray = field(repr=False)

    @property
    def length(self):
        return len(self.reduced_word)

    @property
    def key(self):
        return tuple(self.action.flatten().tolist())

    def word_label(self):
        if not self.reduced_word:
            return "e"
        return "".join(f"s{i + 1}" for i in self.reduced_word)


def simple_reflection(rs, i):
    """Matrix of s_i on fundamental coordinates: lambda -> lambda - lambda_i * alpha_i"""
    S = np.eye(rs.rank, dtype=int)
    S[:, i] -= rs.cartan_matrix[:, i]
    return S


class WeylGroup:
    """
    Enumerated Weyl group.

    Elements are stored in breadth-first order, so element 0 is the identity
    and indices are non-decreasing in length.
    """

    def __init__(self, root_system, elements):
        self.root_system = root_system
        self.elements = tuple(elements)
        self._lookup = {w.key: w.index for w in self.elements}
        self.by_length = {}
        for w in self.elements:
            self.by_length.setdefault(w.length, []).append(w.index)
        self._dot_zero = {}

    @property
    def order(self):
        return len(self.elements)

    @property
    def identity(self):
        return self.elements[0]

    @property
    def longest(self):
        top = max(self.by_length)
        return self.elements[self.by_length[top][0]]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, index):
        return self.elements[index]

    def index_of(self, action):
        return self._lookup.get(tuple(np.asarray(action).flatten().tolist()))

    def element_for_word(self, word):
        """Element represented by an arbitrary word in simple reflections"""
        action = np.eye(self.root_system.rank, dtype=int)
        for i in word:
            action = action @ simple_reflection(self.root_system, i)
        return self.elements[self.index_of(action)]

    def apply(self, w, weight):
        return tuple(int(x) for x in w.action @ np.asarray(weight, dtype=int))

    def dot_zero(self, index):
        """Cached w.0 for the element with the given index"""
        if index not in self._dot_zero:
            zero = tuple([0] * self.root_system.rank)
            self._dot_zero[index] = dot_action(self.root_system, self.elements[index], zero)
        return self._dot_zero[index]


def enumerate_weyl_group(rs, cap=None):
    """
    Enumerate W by breadth-first search over right multiplication by simple reflections.

    Parameters:
    rs (RootSystem): Root system
    cap (int, optional): Maximal order, defaults to the 'weyl' setting

    Returns:
    WeylGroup: Enumerated group
    """
    if cap is None:
        cap = Settings().cap('weyl')
    generators = [simple_reflection(rs, i) for i in range(rs.rank)]
    identity = np.eye(rs.rank, dtype=int)

    elements = [WeylElement(0, (), identity)]
    seen = {elements[0].key}
    queue = deque([elements[0]])
    while queue:
        w = queue.popleft()
        for i, s in enumerate(generators):
            action = w.action @ s
            key = tuple(action.flatten().tolist())
            if key in seen:
                continue
            if len(elements) >= cap:
                raise GroupTooLarge(f"Weyl group of {rs.name} exceeds the cap of {cap} elements")
            seen.add(key)
            element = WeylElement(len(elements), w.reduced_word + (i,), action)
            elements.append(element)
            queue.append(element)

    _, expected = classical_counts(rs.type_label, rs.rank)
    if len(elements) != expected:
        raise NilcohError(f"W({rs.name}) has {len(elements)} elements, expected {expected}")
    logger.info("Enumerated W(%s): %d elements, longest length %d",
                rs.name, len(elements), elements[-1].length)
    return WeylGroup(rs, elements)


def inversion_set(rs, w):
    """
    Phi(w) = w(Phi^-) intersected with Phi^+.

    Parameters:
    rs (RootSystem): Root system
    w (WeylElement): Element

    Returns:
    frozenset: Positive-root indices
    """
    result = set()
    for root in rs.positive_roots:
        negative = tuple(-x for x in rs.to_weight(root.coords))
        image = tuple(int(x) for x in w.action @ np.asarray(negative, dtype=int))
        found = rs.classify_weight(image)
        if found is None:
            raise NilcohError(f"{w.word_label()} does not permute the roots of {rs.name}")
        sign, index = found
        if sign > 0:
            result.add(index)
    return frozenset(result)


def dot_action(rs, w, weight):
    """w.lambda = w(lambda + rho) - rho"""
    shifted = weight_add(weight, rs.rho)
    image = w.action @ np.asarray(shifted, dtype=int)
    return tuple(int(x) - r for x, r in zip(image, rs.rho))


def poincare_polynomial(W):
    """
    Length generating function of W.

    Parameters:
    W (WeylGroup): Enumerated group

    Returns:
    list: Coefficient of t^n at position n
    """
    top = max(W.by_length)
    return [len(W.by_length.get(n, [])) for n in range(top + 1)]
