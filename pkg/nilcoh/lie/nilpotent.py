"""
Positive nilpotent radical from Chevalley structure constants, and its Weil restriction.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

import sympy

from ..errors import NilcohError
from ..homology.fields import field_for
from .rootsystem import coxeter_number, weight_add, weight_neg

logger = logging.getLogger(__name__)


class _ChevalleyTable:
    """
    Structure constants N(r, s) on all roots, built from extraspecial pairs.

    Roots are simple-root coordinate tuples of either sign. Only pairs of
    positive roots are stored; the remaining signs follow from the standard
    relations between N(r, s) on positive, negative and mixed pairs.
    """

    def __init__(self, rs):
        self.rs = rs
        self.positive = {}
        self.extraspecial = {}

    def norm(self, coords):
        return self.rs.inner_product(coords, coords)

    def is_positive(self, coords):
        return self.rs.root_index(coords) is not None

    def value(self, r, s):
        total = weight_add(r, s)
        if not any(total) or not self.rs.is_root(total):
            return Fraction(0)
        r_pos, s_pos = self.is_positive(r), self.is_positive(s)
        if r_pos and s_pos:
            return Fraction(self.positive[(r, s)])
        if not r_pos and not s_pos:
            return -self.value(weight_neg(r), weight_neg(s))
        if not r_pos:
            return -self.value(s, r)

        # r positive, s = -gamma negative
        gamma = weight_neg(s)
        eta = weight_add(r, s)
        if self.is_positive(eta):
            return -Fraction(self.norm(eta), self.norm(r)) * self.value(gamma, eta)
        eta = weight_neg(eta)
        return Fraction(self.norm(eta), self.norm(gamma)) * self.value(eta, r)

    def build(self):
        rs = self.rs
        roots = [root.coords for root in rs.positive_roots]
        for xi in roots:
            pairs = []
            for alpha in roots:
                beta = tuple(x - a for x, a in zip(xi, alpha))
                if self.is_positive(beta) and roots.index(alpha) < roots.index(beta):
                    pairs.append((alpha, beta))
            if not pairs:
                continue

            gamma, delta = pairs[0]
            magnitude = rs.string_below(delta, gamma) + 1
            self.extraspecial[xi] = (gamma, delta)
            self.positive[(gamma, delta)] = magnitude
            self.positive[(delta, gamma)] = -magnitude

            norm_xi = self.norm(xi)
            for alpha, beta in pairs[1:]:
                first = Fraction(0)
                if rs.is_root(tuple(b - g for b, g in zip(beta, gamma))):
                    first = (self.value(beta, weight_neg(gamma)) * self.value(alpha, weight_neg(delta))
                             / self.norm(tuple(b - g for b, g in zip(beta, gamma))))
                second = Fraction(0)
                if rs.is_root(tuple(a - g for a, g in zip(alpha, gamma))):
                    second = (self.value(weight_neg(gamma), alpha) * self.value(beta, weight_neg(delta))
                              / self.norm(tuple(a - g for a, g in zip(alpha, gamma))))
                value = Fraction(norm_xi, magnitude) * (first + second)
                expected = rs.string_below(beta, alpha) + 1
                if value.denominator != 1 or abs(value) != expected:
                    raise NilcohError(
                        f"{rs.name}: structure constant for {alpha}+{beta} came out as {value}, "
                        f"expected magnitude {expected}"
                    )
                self.positive[(alpha, beta)] = int(value)
                self.positive[(beta, alpha)] = -int(value)
        return self


@dataclass
class NilpotentLieAlgebra:
    """
    Integral nilpotent Lie algebra with a basis of root vectors in Galois slots.

    Basis element b = slot * |Phi+| + root index is x_(root, slot); the
    bracket table maps an ordered pair (i, j) to {k: coefficient} and only
    lists nonzero brackets.
    """
    root_system: object
    d: int
    basis: tuple
    bracket_table: dict
    grading: tuple
    min_valid_prime: int
    extraspecial: dict = field(default_factory=dict)

    @property
    def dim(self):
        return len(self.basis)

    def bracket(self, i, j):
        return self.bracket_table.get((i, j), {})

    def root_of(self, i):
        return self.basis[i][0]

    def slot_of(self, i):
        return self.basis[i][1]

    def weight(self, i):
        """Torus weight of x_i: its root, as a weight, in its slot"""
        rs = self.root_system
        return self.slot_of(i), rs.to_weight(rs.positive_roots[self.root_of(i)].coords)

    def structure_constant(self, i, j):
        """N for [x_i, x_j] when both sit in one slot, else 0"""
        values = self.bracket(i, j)
        return next(iter(values.values())) if values else 0

    def to_dict(self):
        rs = self.root_system
        return {
            'type': rs.name,
            'd': self.d,
            'dim': self.dim,
            'min_valid_prime': self.min_valid_prime,
            'basis': [{'root': list(rs.positive_roots[r].coords), 'slot': s, 'height': h}
                      for (r, s), h in zip(self.basis, self.grading)],
            'brackets': [{'i': i, 'j': j, 'terms': {str(k): v for k, v in sorted(terms.items())}}
                         for (i, j), terms in sorted(self.bracket_table.items()) if i < j],
        }


def chevalley_structure_constants(rs):
    """
    Build u = Lie U from Chevalley constants N(alpha, beta).

    Each extraspecial pair gets the positive constant p + 1; every other pair
    is solved from it, so the result is a Chevalley basis.

    Parameters:
    rs (RootSystem): Root system

    Returns:
    NilpotentLieAlgebra: Algebra with d = 1
    """
    table = _ChevalleyTable(rs).build()
    brackets = {}
    for (alpha, beta), value in table.positive.items():
        target = rs.root_index(weight_add(alpha, beta))
        brackets[(rs.root_index(alpha), rs.root_index(beta))] = {target: value}

    extraspecial = {rs.root_index(xi): (rs.root_index(a), rs.root_index(b))
                    for xi, (a, b) in table.extraspecial.items()}
    h = coxeter_number(rs)
    algebra = NilpotentLieAlgebra(
        root_system=rs,
        d=1,
        basis=tuple((i, 0) for i in range(rs.num_positive)),
        bracket_table=brackets,
        grading=rs.heights,
        min_valid_prime=int(sympy.nextprime(max(5, h) - 1)),
        extraspecial=extraspecial,
    )
    logger.info("Chevalley algebra of %s: dim %d, %d nonzero brackets",
                rs.name, algebra.dim, len(brackets) // 2)
    return algebra


def weil_restrict(L, d):
    """
    Direct sum of d copies of L, slot-major.

    Parameters:
    L (NilpotentLieAlgebra): Algebra with d = 1
    d (int): Number of Galois slots

    Returns:
    NilpotentLieAlgebra: Algebra of dimension d * dim L
    """
    if L.d != 1:
        raise NilcohError("weil_restrict expects an algebra with a single slot")
    if d < 1:
        raise NilcohError(f"Number of slots must be positive, got {d}")
    if d == 1:
        return L

    size = L.dim
    brackets = {}
    for slot in range(d):
        offset = slot * size
        for (i, j), terms in L.bracket_table.items():
            brackets[(i + offset, j + offset)] = {k + offset: c for k, c in terms.items()}

    return NilpotentLieAlgebra(
        root_system=L.root_system,
        d=d,
        basis=tuple((root, slot) for slot in range(d) for root, _ in L.basis),
        bracket_table=brackets,
        grading=tuple(L.grading) * d,
        min_valid_prime=L.min_valid_prime,
        extraspecial=L.extraspecial,
    )


def galois_permutation(L, shift=1):
    """Basis permutation induced by rotating slots by shift"""
    size = L.dim // L.d
    return [((i // size + shift) % L.d) * size + i % size for i in range(L.dim)]


def flip_bracket_sign(L, i, j, symmetric=True):
    """Copy of L with the sign of [x_i, x_j] flipped (and [x_j, x_i] when symmetric)"""
    brackets = {key: dict(terms) for key, terms in L.bracket_table.items()}
    pairs = [(i, j), (j, i)] if symmetric else [(i, j)]
    for pair in pairs:
        if pair not in brackets:
            raise NilcohError(f"[x_{pair[0]}, x_{pair[1]}] is zero; nothing to flip")
        brackets[pair] = {k: -c for k, c in brackets[pair].items()}
    return NilpotentLieAlgebra(L.root_system, L.d, L.basis, brackets, L.grading,
                               L.min_valid_prime, L.extraspecial)


def _add_into(target, terms, scale):
    for k, c in terms.items():
        target[k] = target.get(k, 0) + scale * c


def _nested(L, x, y, z):
    # [x, [y, z]]
    result = {}
    for k, c in L.bracket(y, z).items():
        _add_into(result, L.bracket(x, k), c)
    return result


@dataclass
class JacobiReport:
    passed: bool
    checked_pairs: int
    checked_triples: int
    violation: dict = None

    def to_dict(self):
        return {
            'status': 'pass' if self.passed else 'fail',
            'checked_pairs': self.checked_pairs,
            'checked_triples': self.checked_triples,
            'violation': self.violation,
        }


def jacobi_check(L):
    """
    Exhaustive antisymmetry and Jacobi check over the basis.

    Parameters:
    L (NilpotentLieAlgebra): Algebra

    Returns:
    JacobiReport: First violation, if any
    """
    n = L.dim
    pairs = 0
    for i in range(n):
        for j in range(i, n):
            pairs += 1
            left = L.bracket(i, j)
            right = {k: -c for k, c in L.bracket(j, i).items()}
            if {k: c for k, c in left.items() if c} != {k: c for k, c in right.items() if c}:
                logger.warning("Antisymmetry fails for (%d, %d)", i, j)
                return JacobiReport(False, pairs, 0, {
                    'kind': 'antisymmetry', 'triple': [i, j],
                    'bracket_ij': {str(k): c for k, c in left.items()},
                    'bracket_ji': {str(k): c for k, c in L.bracket(j, i).items()},
                })

    triples = 0
    for x, y, z in combinations(range(n), 3):
        triples += 1
        total = {}
        _add_into(total, _nested(L, x, y, z), 1)
        _add_into(total, _nested(L, y, z, x), 1)
        _add_into(total, _nested(L, z, x, y), 1)
        residue = {k: c for k, c in total.items() if c}
        if residue:
            logger.warning("Jacobi fails for (%d, %d, %d)", x, y, z)
            return JacobiReport(False, pairs, triples, {
                'kind': 'jacobi', 'triple': [x, y, z],
                'residue': {str(k): c for k, c in sorted(residue.items())},
            })
    return JacobiReport(True, pairs, triples)


def lie_lower_central_series(L, p=0):
    """
    Iterated brackets L^1 = L, L^{n+1} = [L, L^n] over Q (p = 0) or GF(p).

    Parameters:
    L (NilpotentLieAlgebra): Algebra
    p (int): Prime, or 0 for the rationals

    Returns:
    list: Per level {level, dim, predicted_dim, matches}
    """
    F = field_for(p)
    n = L.dim
    current = F.identity(n)
    levels = []
    level = 1
    while True:
        predicted = [i for i in range(n) if L.grading[i] >= level]
        pred_space = F.array([[1 if j == i else 0 for j in range(n)] for i in predicted], n)
        dim = F.rank(current)
        joint = F.rank(F.stack([current, pred_space], n))
        matches = dim == len(predicted) and joint == dim
        levels.append({'level': level, 'dim': dim, 'predicted_dim': len(predicted), 'matches': matches})
        if dim == 0:
            break

        rows = []
        for i in range(n):
            for vector in current:
                image = [0] * n
                for j, coeff in enumerate(vector):
                    if coeff == 0:
                        continue
                    for k, c in L.bracket(i, j).items():
                        image[k] += c * coeff
                rows.append(image)
        current = F.row_basis(rows, n) if rows else F.zeros(0, n)
        level += 1
    return levels
