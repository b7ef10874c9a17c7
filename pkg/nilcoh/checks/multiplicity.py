"""
Galois-orbit multiplicities for the Weil-restricted algebra.

A d-multiset of Weyl elements with total length n contributes the
character sum(w_i.0); its arrangements over the d slots are permuted by
the Galois group acting on slots by precomposition.
"""

import logging
import re
from dataclasses import dataclass, field
from itertools import combinations_with_replacement

import numpy as np
import sympy
from sympy.combinatorics import Permutation, PermutationGroup
from sympy.combinatorics.named_groups import CyclicGroup
from sympy.utilities.iterables import multiset_permutations

from ..errors import ConfigError
from ..homology.snf import integer_rank
from ..lie.weyl import poincare_polynomial

logger = logging.getLogger(__name__)

CYCLE_PATTERN = re.compile(r'\(([^()]*)\)')


class UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}
        self.rank = {x: 0 for x in items}

    def find(self, x):
        y = self.parent[x]
        if self.parent[y] != y:
            y = self.parent[x] = self.find(y)
        return y

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x


def find_orbits(generators, space, action):
    """Orbits of a group given by generators, as sorted lists"""
    uf = UnionFind(space)
    for g in generators:
        for x in space:
            uf.union(x, action(g, x))
    orbits = {}
    for x in space:
        orbits.setdefault(uf.find(x), []).append(x)
    return sorted(sorted(orbit) for orbit in orbits.values())


def precompose(g, arrangement):
    """(a o g)(i) = a(g(i))"""
    image = g.array_form
    return tuple(arrangement[image[i]] for i in range(len(arrangement)))


def parse_galois(spec, d):
    """
    Permutation group on the slots 0..d-1.

    Parameters:
    spec (str): 'cyclic' or 'perm:(0 1)(2 3);(0 2)'
    d (int): Number of slots

    Returns:
    PermutationGroup: Galois group acting on slots
    """
    spec = (spec or 'cyclic').strip()
    if spec == 'cyclic':
        if d == 1:
            return PermutationGroup([Permutation([0])])
        return CyclicGroup(d)
    if not spec.startswith('perm:'):
        raise ConfigError(f"Galois spec must be 'cyclic' or 'perm:...', got '{spec}'")

    generators = []
    for text in spec[len('perm:'):].split(';'):
        text = text.strip()
        if not text:
            continue
        bodies = CYCLE_PATTERN.findall(text)
        if not bodies or CYCLE_PATTERN.sub('', text).strip():
            raise ConfigError(f"Generator '{text}' is not written in cycle notation")
        cycles = []
        for body in bodies:
            try:
                cycle = [int(x) for x in body.replace(',', ' ').split()]
            except ValueError:
                raise ConfigError(f"Bad cycle '({body})' in Galois spec")
            if any(x < 0 or x >= d for x in cycle) or len(set(cycle)) != len(cycle):
                raise ConfigError(f"Cycle ({body}) is not a cycle on the slots 0..{d - 1}")
            if len(cycle) > 1:
                cycles.append(cycle)
        generators.append(Permutation(cycles, size=d) if cycles else Permutation(list(range(d))))
    if not generators:
        raise ConfigError(f"Galois spec '{spec}' has no generators")
    group = PermutationGroup(generators)
    if d > 1 and not group.is_transitive():
        logger.warning("Galois group %s is not transitive on %d slots", spec, d)
    return group


@dataclass
class WeylMultiset:
    """Unordered d-multiset of Weyl element indices, sorted"""
    entries: tuple
    total_length: int
    character: tuple
    labels: tuple = ()

    def arrangements(self):
        return [tuple(a) for a in multiset_permutations(list(self.entries))]

    def to_dict(self):
        return {
            'elements': list(self.labels),
            'total_length': self.total_length,
            'character': list(self.character),
        }


@dataclass
class OrbitReport:
    arrangements: int
    orbits: int
    burnside: int
    stabilizer_profile: list = field(default_factory=list)
    group_order: int = 1

    @property
    def all_free(self):
        return all(size == self.group_order for size in self.stabilizer_profile)

    def to_dict(self):
        return {
            'arrangements': self.arrangements,
            'orbits': self.orbits,
            'burnside': self.burnside,
            'orbit_sizes': list(self.stabilizer_profile),
            'all_free': self.all_free,
        }


def slot_sum(W, entries):
    rank = W.root_system.rank
    total = [0] * rank
    for index in entries:
        for j, x in enumerate(W.dot_zero(index)):
            total[j] += x
    return tuple(total)


def enumerate_multisets(W, d, n):
    """
    All unordered d-multisets of elements of W with total length n.

    Parameters:
    W (WeylGroup): Enumerated group
    d (int): Number of slots
    n (int): Total length

    Returns:
    list: WeylMultiset in lexicographic order of element indices
    """
    result = []
    for entries in combinations_with_replacement(range(W.order), d):
        total = sum(W[i].length for i in entries)
        if total != n:
            continue
        result.append(WeylMultiset(entries, total, slot_sum(W, entries),
                                   tuple(W[i].word_label() for i in entries)))
    return result


def orbit_count(m, galois):
    """
    Galois orbits on the arrangements of a multiset.

    Orbits come from union-find over the generators and are cross-checked
    with Burnside's count over all group elements.

    Parameters:
    m (WeylMultiset): Multiset
    galois (PermutationGroup): Group on the slots

    Returns:
    OrbitReport: Arrangement and orbit counts
    """
    space = m.arrangements()
    orbits = find_orbits(galois.generators, space, precompose)
    elements = list(galois.generate())
    fixed = sum(1 for g in elements for a in space if precompose(g, a) == a)
    burnside, remainder = divmod(fixed, len(elements))
    if remainder or burnside != len(orbits):
        logger.warning("Burnside count %s/%d disagrees with %d orbits for %s",
                       fixed, len(elements), len(orbits), m.labels)
    return OrbitReport(len(space), len(orbits), burnside,
                       sorted((len(orbit) for orbit in orbits), reverse=True), len(elements))


def arrangement_series(W, d):
    """Coefficients of poincare(t)^d"""
    poincare = poincare_polynomial(W)
    series = np.array([1], dtype=object)
    for _ in range(d):
        series = np.convolve(series, np.array(poincare, dtype=object))
    return [int(x) for x in series]


def _frobenius_matrix(m, g, e):
    """Integer matrix of x -> x^g on Z[x]/(Phi_m) in the basis 1, x, .., x^(e-1)"""
    x = sympy.Symbol('x')
    phi = sympy.Poly(sympy.cyclotomic_poly(m, x), x)
    sigma = np.zeros((e, e), dtype=object)
    for j in range(e):
        image = sympy.Poly(x ** ((g * j) % m), x).rem(phi)
        for power, coeff in zip(range(image.degree(), -1, -1), image.all_coeffs()):
            sigma[power, j] = int(coeff)
    return sigma


def _primitive_root(m):
    if m <= 2:
        return 1
    try:
        g = sympy.primitive_root(m)
    except ValueError:
        g = None
    if g is None:
        raise ConfigError(f"(Z/{m})^x is not cyclic; no oracle ring for m = {m}")
    return int(g)


def galois_invariants_oracle(rs, W, d, n, m):
    """
    Rank over Z of the Galois-fixed part of the free R-module on arrangements.

    R = Z[x]/(Phi_m) with phi(m) = d; the generator rotates slots by one step
    and acts on coefficients by x -> x^g for a primitive root g mod m.

    Parameters:
    rs (RootSystem): Root system
    W (WeylGroup): Enumerated group
    d (int): Number of slots
    n (int): Total length
    m (int): Cyclotomic order

    Returns:
    dict: {m, e, generator, characters: [{character, arrangements, fixed_rank}]}
    """
    e = int(sympy.totient(m))
    if e != d:
        raise ConfigError(f"phi({m}) = {e} does not match d = {d}")
    g = _primitive_root(m)
    sigma = _frobenius_matrix(m, g, e)
    rotation = Permutation([(i + 1) % d for i in range(d)]) if d > 1 else Permutation([0])

    by_character = {}
    for multiset in enumerate_multisets(W, d, n):
        by_character.setdefault(multiset.character, []).extend(multiset.arrangements())

    characters = []
    for character, arrangements in sorted(by_character.items()):
        arrangements = sorted(arrangements)
        position = {a: i for i, a in enumerate(arrangements)}
        size = len(arrangements)
        P = np.zeros((size, size), dtype=object)
        for a, i in position.items():
            P[position[precompose(rotation, a)], i] = 1
        gamma = np.kron(P, sigma)
        fixed = size * e - integer_rank(gamma - np.eye(size * e, dtype=int).astype(object))
        characters.append({'character': list(character), 'arrangements': size, 'fixed_rank': int(fixed)})
        logger.debug("Oracle m=%d character %s: %d arrangements, fixed rank %d",
                     m, character, size, fixed)
    return {'m': m, 'e': e, 'generator': g, 'characters': characters}


def corollary_report(rs, W, d, n, galois=None, oracle=None, cohomology_rank=None):
    """
    Multiplicities per character in degree n of the d-slot algebra.

    Parameters:
    rs (RootSystem): Root system
    W (WeylGroup): Enumerated group
    d (int): Number of slots
    n (int): Degree
    galois (PermutationGroup, optional): Slot group, cyclic by default
    oracle (int, optional): Cyclotomic order for the invariants oracle
    cohomology_rank (int, optional): Free rank of H^n to compare the arrangement total with

    Returns:
    dict: Report with status, characters and totals
    """
    galois = galois if galois is not None else parse_galois('cyclic', d)
    multisets = enumerate_multisets(W, d, n)
    series = arrangement_series(W, d)
    expected = series[n] if n < len(series) else 0

    grouped = {}
    for multiset in multisets:
        grouped.setdefault(multiset.character, []).append((multiset, orbit_count(multiset, galois)))

    oracle_ranks = {}
    if oracle is not None:
        result = galois_invariants_oracle(rs, W, d, n, oracle)
        oracle_ranks = {tuple(c['character']): c['fixed_rank'] for c in result['characters']}

    failures = []
    characters = []
    total = 0
    for character, members in sorted(grouped.items()):
        arrangements = sum(report.arrangements for _, report in members)
        orbits = sum(report.orbits for _, report in members)
        all_free = all(report.all_free for _, report in members)
        total += arrangements
        entry = {
            'character': list(character),
            'multisets': [dict(m.to_dict(), **report.to_dict()) for m, report in members],
            'arrangements': arrangements,
            'multiplicity': orbits,
            'all_free': all_free,
        }
        for m, report in members:
            if report.burnside != report.orbits:
                failures.append({'character': list(character), 'multiset': list(m.labels), 'problem': 'burnside'})
        if oracle is not None:
            fixed = oracle_ranks.get(character)
            entry['oracle_rank'] = fixed
            entry['orbit_rank'] = d * orbits
            if all_free:
                entry['agrees'] = fixed == d * orbits
                if not entry['agrees']:
                    failures.append({'character': list(character), 'problem': 'oracle rank'})
            else:
                # stabilised arrangements: both counts are reported side by side
                entry['agrees'] = None
        characters.append(entry)

    coincidences = sum(1 for entry in characters if len(entry['multisets']) > 1)
    if total != expected:
        failures.append({'problem': 'arrangement total', 'total': total, 'expected': expected})
    if cohomology_rank is not None and cohomology_rank != total:
        failures.append({'problem': 'cohomology rank', 'total': total, 'cohomology_rank': cohomology_rank})
    for failure in failures:
        logger.warning("Multiplicity check failed for %s d=%d n=%d: %s", rs.name, d, n, failure)

    return {
        'status': 'fail' if failures else 'pass',
        'type': rs.name,
        'd': d,
        'degree': n,
        'galois_order': len(list(galois.generate())),
        'total_arrangements': total,
        'expected_arrangements': expected,
        'cohomology_rank': cohomology_rank,
        'coincident_characters': coincidences,
        'characters': characters,
        'failures': failures,
    }
