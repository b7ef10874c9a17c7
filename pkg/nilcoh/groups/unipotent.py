"""
Finite unipotent groups U(Z/p^k) with normal-form coordinates and collection.
"""

import logging
import math
from collections import deque
from fractions import Fraction
from itertools import product

import numpy as np
import sympy

from ..data.settings import Settings
from ..errors import CapExceeded, NilcohError, UnsupportedPrime, UnsupportedType
from ..lie.enveloping import TruncatedEnvelopingAlgebra
from ..lie.nilpotent import chevalley_structure_constants

logger = logging.getLogger(__name__)


class FiniteUnipotentGroup:
    """
    U(Z/p^k), optionally as a product of d slots.

    An element is the tuple (c_0, ..., c_{n-1}) of the normal form
    prod_i theta_i(c_i) taken in root order, slot-major.
    """

    def __init__(self, root_system, algebra, p, k, d, commutator_table):
        self.root_system = root_system
        self.algebra = algebra
        self.p = p
        self.k = k
        self.d = d
        self.modulus = p ** k
        self.commutator_table = commutator_table
        self.size = root_system.num_positive
        self.length = d * self.size
        self.heights = tuple(root_system.heights) * d

    @property
    def order(self):
        return self.modulus ** self.length

    @property
    def identity(self):
        return tuple([0] * self.length)

    def root_element(self, root, value=1, slot=0):
        coords = [0] * self.length
        coords[slot * self.size + root] = value % self.modulus
        return tuple(coords)

    def generators(self, simple_only=True):
        """theta_alpha(1) for the simple roots (or all roots) of every slot"""
        roots = range(self.size)
        if simple_only:
            roots = [i for i in roots if self.root_system.positive_roots[i].height == 1]
        return [self.root_element(i, 1, slot) for slot in range(self.d) for i in roots]

    def _conjugation_word(self, i, r, g, c):
        # syllables of [theta_i(r), theta_g(c)] for i > g
        if i // self.size != g // self.size:
            return []
        offset = (g // self.size) * self.size
        entries = self.commutator_table.get((g - offset, i - offset), [])
        q = self.modulus
        return [(offset + root, -(C * pow(c, a, q) * pow(r, b, q)) % q)
                for a, b, root, C in reversed(entries)]

    def collect(self, coords, syllables):
        """
        Multiply a normal form by a word of syllables (index, value) and collect.

        Parameters:
        coords (tuple): Normal form of the left factor
        syllables (list): (coordinate index, value) pairs applied left to right

        Returns:
        tuple: Normal form of the product
        """
        q = self.modulus
        result = list(coords)
        stack = list(reversed(syllables))
        while stack:
            g, c = stack.pop()
            c %= q
            if not c:
                continue
            tail = [(i, result[i]) for i in range(g + 1, self.length) if result[i]]
            for i, _ in tail:
                result[i] = 0
            result[g] = (result[g] + c) % q
            # tail * theta_g(c) = theta_g(c) * prod theta_i(r) [theta_i(r), theta_g(c)]
            pending = []
            for i, r in tail:
                pending.append((i, r))
                pending.extend(self._conjugation_word(i, r, g, c))
            stack.extend(reversed(pending))
        return tuple(result)

    def syllables(self, x):
        return [(i, c) for i, c in enumerate(x) if c]

    def multiply(self, x, y):
        return self.collect(x, self.syllables(y))

    def inverse(self, x):
        return self.collect(self.identity, [(i, -c) for i, c in reversed(self.syllables(x))])

    def commutator(self, x, y):
        """[x, y] = x^-1 y^-1 x y"""
        return self.multiply(self.multiply(self.inverse(x), self.inverse(y)), self.multiply(x, y))

    def power(self, x, n):
        result = self.identity
        for _ in range(n):
            result = self.multiply(result, x)
        return result

    def index_of(self, x):
        index = 0
        for c in x:
            index = index * self.modulus + c
        return index

    def element_at(self, index):
        coords = []
        for _ in range(self.length):
            index, c = divmod(index, self.modulus)
            coords.append(c)
        return tuple(reversed(coords))

    def elements(self):
        return product(range(self.modulus), repeat=self.length)

    def random_element(self, rng):
        return tuple(int(c) for c in rng.integers(0, self.modulus, size=self.length))

    def to_dict(self):
        rs = self.root_system
        return {
            'type': rs.name,
            'p': self.p,
            'k': self.k,
            'd': self.d,
            'order': f"{self.p}^{self.k * self.length}",
            'commutator_table': [
                {'alpha': list(rs.positive_roots[a].coords), 'beta': list(rs.positive_roots[b].coords),
                 'terms': [{'i': i, 'j': j, 'root': list(rs.positive_roots[root].coords), 'constant': C}
                           for i, j, root, C in entries]}
                for (a, b), entries in sorted(self.commutator_table.items()) if entries
            ],
        }


def _reduce_constant(C, q):
    C = Fraction(C)
    return C.numerator * pow(C.denominator, -1, q) % q


def make_group(rs, p, k=1, d=1):
    """
    Build U(Z/p^k) (d slots) from the Chevalley structure constants.

    Parameters:
    rs (RootSystem): Root system
    p (int): Prime, at least 5
    k (int): Truncation exponent
    d (int): Number of slots

    Returns:
    FiniteUnipotentGroup: Group with its commutator table
    """
    if not sympy.isprime(p) or p < 5:
        raise UnsupportedPrime(f"Unipotent group models need a prime p >= 5, got {p}")
    if k < 1 or d < 1:
        raise NilcohError(f"k and d must be positive, got k={k}, d={d}")

    algebra = chevalley_structure_constants(rs)
    enveloping = TruncatedEnvelopingAlgebra(algebra)
    q = p ** k
    table = {}
    for a in range(rs.num_positive):
        for b in range(a + 1, rs.num_positive):
            terms = enveloping.commutator_terms(a, b)
            table[(a, b)] = [(i, j, root, _reduce_constant(C, q)) for i, j, root, C in terms]
    group = FiniteUnipotentGroup(rs, algebra, p, k, d, table)
    logger.info("Built U(Z/%d^%d) of type %s with %d slot(s), %d coordinates",
                p, k, rs.name, d, group.length)
    return group


class UnitriangularModel:
    """
    Upper unitriangular matrices over Z/p^k realising type A groups.

    theta_alpha(t) maps to 1 + t * eps_alpha * E_(i, j) with signs chosen so
    that x_alpha -> eps_alpha E_alpha respects the structure constants.
    """

    def __init__(self, group):
        rs = group.root_system
        if rs.type_label != 'A' or group.d != 1:
            raise UnsupportedType("Unitriangular model exists for type A with a single slot")
        self.group = group
        self.n = rs.rank + 1
        self.positions = []
        for root in rs.positive_roots:
            support = [i for i, c in enumerate(root.coords) if c]
            self.positions.append((support[0], support[-1] + 1))
        self.signs = self._signs()

    def _unit(self, index):
        E = np.zeros((self.n, self.n), dtype=np.int64)
        E[self.positions[index]] = 1
        return E

    def _signs(self):
        algebra = self.group.algebra
        signs = []
        for index, root in enumerate(self.group.root_system.positive_roots):
            if root.height == 1:
                signs.append(1)
                continue
            a, b = algebra.extraspecial[index]
            Ea, Eb = self._unit(a), self._unit(b)
            sigma = int((Ea @ Eb - Eb @ Ea)[self.positions[index]])
            N = algebra.structure_constant(a, b)
            signs.append(signs[a] * signs[b] * sigma // N)
        return signs

    def matrix(self, x):
        q = self.group.modulus
        M = np.eye(self.n, dtype=np.int64)
        for index, c in enumerate(x):
            if c:
                factor = np.eye(self.n, dtype=np.int64) + (self.signs[index] * c) * self._unit(index)
                M = (M @ factor) % q
        return M % q


def matrix_model_check(group, samples=10000, seed=0, exhaustive_limit=125):
    """
    Compare products in G with unitriangular matrix products.

    All pairs are checked when |G| <= exhaustive_limit, otherwise random pairs.

    Returns:
    dict: {status, checked, exhaustive, mismatches}
    """
    model = UnitriangularModel(group)
    q = group.modulus
    if group.order <= exhaustive_limit:
        elements = list(group.elements())
        pairs = ((x, y) for x in elements for y in elements)
        exhaustive = True
    else:
        rng = np.random.default_rng(seed)
        pairs = ((group.random_element(rng), group.random_element(rng)) for _ in range(samples))
        exhaustive = False

    mismatches = []
    checked = 0
    for x, y in pairs:
        checked += 1
        expected = (model.matrix(x) @ model.matrix(y)) % q
        if not np.array_equal(model.matrix(group.multiply(x, y)), expected):
            mismatches.append({'x': list(x), 'y': list(y)})
            if len(mismatches) >= 10:
                break
    if mismatches:
        logger.warning("Matrix model disagrees on %d of %d pairs", len(mismatches), checked)
    return {'status': 'fail' if mismatches else 'pass', 'checked': checked,
            'exhaustive': exhaustive, 'mismatches': mismatches}


def associativity_check(group, samples=1000, seed=0):
    """Random triples: (xy)z == x(yz), x x^-1 == 1 and 1 x == x"""
    rng = np.random.default_rng(seed)
    failures = []
    for _ in range(samples):
        x, y, z = (group.random_element(rng) for _ in range(3))
        if group.multiply(group.multiply(x, y), z) != group.multiply(x, group.multiply(y, z)):
            failures.append({'law': 'associativity', 'x': list(x), 'y': list(y), 'z': list(z)})
        if group.multiply(x, group.inverse(x)) != group.identity:
            failures.append({'law': 'inverse', 'x': list(x)})
        if group.multiply(group.identity, x) != x:
            failures.append({'law': 'identity', 'x': list(x)})
        if len(failures) >= 10:
            break
    return {'status': 'fail' if failures else 'pass', 'checked': samples, 'failures': failures}


def _closure(group, generators, cap):
    members = {group.identity}
    queue = deque([group.identity])
    while queue:
        x = queue.popleft()
        for g in generators:
            y = group.multiply(x, g)
            if y not in members:
                members.add(y)
                if len(members) > cap:
                    raise CapExceeded(f"Subgroup closure exceeds the cap of {cap} elements")
                queue.append(y)
    return members


def normal_closure(group, seeds, conjugators, cap):
    """
    Smallest normal subgroup containing the seeds.

    Returns:
    tuple: (member set, generating list)
    """
    gens = [s for s in seeds if s != group.identity]
    members = _closure(group, gens, cap)
    changed = True
    while changed:
        changed = False
        for s in list(gens):
            for g in conjugators:
                conj = group.multiply(group.multiply(group.inverse(g), s), g)
                if conj not in members:
                    gens.append(conj)
                    members = _closure(group, gens, cap)
                    changed = True
    return members, gens


def _level_report(group, level, order, members):
    predicted = [i for i, h in enumerate(group.heights) if h >= level]
    predicted_order = group.modulus ** len(predicted)
    support_ok = True
    if members is not None:
        low = [i for i, h in enumerate(group.heights) if h < level]
        support_ok = all(x[i] == 0 for x in members for i in low)
    return {
        'level': level,
        'order': order,
        'predicted_order': predicted_order,
        'predicted_roots': predicted,
        'matches': support_ok and order == predicted_order,
    }


def lower_central_series(group, cap=None):
    """
    C^1 = G, C^{n+1} = [G, C^n], each compared with prod_{h(alpha) >= n} N_alpha.

    Parameters:
    group (FiniteUnipotentGroup): Group
    cap (int, optional): Closure size cap, defaults to the 'group' setting

    Returns:
    list: One report per level, ending with the trivial subgroup
    """
    if cap is None:
        cap = Settings().cap('group')
    generators = group.generators(simple_only=False)
    levels = [_level_report(group, 1, group.order, None)]
    level_gens = generators
    level = 1
    while True:
        seeds = sorted({group.commutator(x, y) for x in generators for y in level_gens})
        members, level_gens = normal_closure(group, seeds, generators, cap)
        level += 1
        report = _level_report(group, level, len(members), members)
        logger.debug("C^%d has order %d", level, len(members))
        levels.append(report)
        if len(members) == 1:
            break
    return levels


def frattini_rank(group, cap=None):
    """log_p of |G / [G, G] G^p|"""
    if cap is None:
        cap = Settings().cap('group')
    generators = group.generators(simple_only=False)
    seeds = [group.commutator(x, y) for x in generators for y in generators]
    seeds += [group.power(x, group.p) for x in generators]
    members, _ = normal_closure(group, sorted(set(seeds)), generators, cap)
    return round(math.log(group.order // len(members), group.p))


def gr_bracket_check(group):
    """
    Compare commutators of root elements with the Lie bracket on gr N.

    For theta_alpha(1), theta_beta(1) of heights m, n the commutator must lie
    in C^{m+n} with coordinate N(alpha, beta) mod p^k at alpha + beta and
    zero at the other roots of height m + n.

    Returns:
    dict: Report with status, checked pairs and mismatches
    """
    q = group.modulus
    algebra = group.algebra
    rs = group.root_system
    mismatches = []
    checked = 0
    for a in range(group.length):
        for b in range(group.length):
            if a == b:
                continue
            checked += 1
            m, n = group.heights[a], group.heights[b]
            c = group.commutator(group.root_element(a % group.size, 1, a // group.size),
                                 group.root_element(b % group.size, 1, b // group.size))
            same_slot = a // group.size == b // group.size
            target = None
            if same_slot:
                total = tuple(x + y for x, y in zip(rs.positive_roots[a % group.size].coords,
                                                    rs.positive_roots[b % group.size].coords))
                index = rs.root_index(total)
                if index is not None:
                    target = (a // group.size) * group.size + index
            for i, h in enumerate(group.heights):
                if h > m + n:
                    continue
                expected = 0
                if i == target:
                    expected = algebra.structure_constant(a % group.size, b % group.size) % q
                if c[i] != expected:
                    mismatches.append({'pair': [a, b], 'coordinate': i, 'found': c[i], 'expected': expected})
    status = 'pass' if not mismatches else 'fail'
    if mismatches:
        logger.warning("gr bracket check found %d mismatches", len(mismatches))
    return {'status': status, 'checked_pairs': checked, 'mismatches': mismatches}
