"""
Integral cohomology of CE complexes, computed weight block by weight block.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
import sympy
from scipy import sparse

from ..data.settings import Settings
from ..errors import ConfigError
from .cochain import build_ce_complex
from .snf import smith_normal_form

logger = logging.getLogger(__name__)


def label_to_json(label):
    """Weight label as a list; single-slot labels unwrap to one weight"""
    if len(label) == 1:
        return list(label[0])
    return [list(w) for w in label]


@dataclass
class DegreeCohomology:
    degree: int
    free_rank: int
    torsion: list
    weights: dict = field(default_factory=dict)
    weight_torsion: dict = field(default_factory=dict)

    def to_dict(self):
        return {
            'free_rank': self.free_rank,
            'torsion': sorted(self.torsion),
            'weights': [{'weight': label_to_json(label), 'rank': rank}
                        for label, rank in sorted(self.weights.items()) if rank],
        }


@dataclass
class CohomologyResult:
    """H^q(L, Z) per degree: free rank, torsion invariant factors and weight ranks"""
    degrees: list
    d: int = 1

    @property
    def ranks(self):
        return [deg.free_rank for deg in self.degrees]

    def torsion_primes(self):
        primes = set()
        for deg in self.degrees:
            for factor in deg.torsion:
                primes.update(sympy.primefactors(factor))
        return sorted(primes)

    def euler_characteristic(self):
        return sum((-1) ** deg.degree * deg.free_rank for deg in self.degrees)

    def specialize(self, p):
        """
        H^q(L, Z_p) and the GF(p) Betti numbers from the integral answer.

        Parameters:
        p (int): Prime

        Returns:
        dict: Per degree free rank, p-primary torsion orders and mod-p Betti number
        """
        result = {}
        for deg in self.degrees:
            local = [p ** sympy.multiplicity(p, f) for f in deg.torsion if f % p == 0]
            result[deg.degree] = {'free_rank': deg.free_rank, 'torsion': sorted(local)}
        for deg in self.degrees:
            following = result.get(deg.degree + 1, {'torsion': []})['torsion']
            result[deg.degree]['betti_mod_p'] = (deg.free_rank + len(result[deg.degree]['torsion'])
                                                 + len(following))
        return result

    def to_dict(self):
        return {str(deg.degree): deg.to_dict() for deg in self.degrees}


def _block_invariants(C, label):
    """Invariant factors of every d_q restricted to one weight label"""
    factors = {}
    for q in range(C.top_degree):
        block = C.block(q, label)
        if block.size and np.any(block):
            factors[q] = smith_normal_form(block, transforms=False).invariant_factors
        else:
            factors[q] = []
    return label, factors


def cohomology(C, jobs=None):
    """
    H^q = ker d_q / im d_{q-1}, assembled from independent weight blocks.

    Parameters:
    C (CochainComplex): Complex
    jobs (int, optional): Worker threads for the blocks, defaults to the settings

    Returns:
    CohomologyResult: Free ranks, torsion and weight decomposition
    """
    jobs = jobs or Settings().jobs
    labels = C.labels()
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            invariants = dict(pool.map(lambda label: _block_invariants(C, label), labels))
    else:
        invariants = dict(_block_invariants(C, label) for label in labels)

    degrees = []
    for q in range(C.top_degree + 1):
        deg = DegreeCohomology(q, 0, [])
        sizes = C.weight_blocks(q)
        for label in labels:
            size = len(sizes.get(label, []))
            if not size:
                continue
            outgoing = len(invariants[label].get(q, []))
            incoming = invariants[label].get(q - 1, []) if q > 0 else []
            rank = size - outgoing - len(incoming)
            torsion = [f for f in incoming if f > 1]
            deg.weights[label] = rank
            if torsion:
                deg.weight_torsion[label] = torsion
            deg.free_rank += rank
            deg.torsion.extend(torsion)
        deg.torsion.sort()
        degrees.append(deg)

    result = CohomologyResult(degrees, C.algebra.d)
    logger.info("Cohomology over %d weight blocks: ranks %s, torsion primes %s",
                len(labels), result.ranks, result.torsion_primes() or "none")
    return result


def parse_ring_polynomial(spec):
    """
    Coefficients of a monic integer polynomial, leading first.

    Parameters:
    spec (str or list): 'x**2+x+1' style text or a coefficient list

    Returns:
    list: Integer coefficients
    """
    if isinstance(spec, (list, tuple)):
        coeffs = [int(c) for c in spec]
    else:
        x = sympy.Symbol('x')
        try:
            poly = sympy.Poly(sympy.sympify(str(spec)), x)
        except (sympy.SympifyError, sympy.PolynomialError, TypeError) as exc:
            raise ConfigError(f"Cannot read polynomial '{spec}': {exc}")
        if poly.free_symbols - {x} or not all(c.is_integer for c in poly.all_coeffs()):
            raise ConfigError(f"Ring polynomial must have integer coefficients in x, got '{spec}'")
        coeffs = [int(c) for c in poly.all_coeffs()]
    if not coeffs or coeffs[0] != 1:
        raise ConfigError(f"Ring polynomial must be monic with integer coefficients, got {spec}")
    return coeffs


def base_change_rank_check(L, polynomial):
    """
    Free ranks of H^*(L tensor R, R) for R = Z[x]/(f) against e times those of H^*(L, Z).

    Integer scalars act on R = Z^e as multiples of the identity, so each
    weight block of d_q becomes its Kronecker product with I_e. Only the
    degree e of f matters: the rank of each block is e times its integral
    rank by construction, whatever the coefficients of f.

    Parameters:
    L (NilpotentLieAlgebra): Algebra
    polynomial (str or list): Monic polynomial f of degree e

    Returns:
    dict: Report with status and per-degree ranks
    """
    coeffs = parse_ring_polynomial(polynomial)
    e = len(coeffs) - 1
    C = build_ce_complex(L)
    base = cohomology(C)
    identity = sparse.identity(e, dtype=np.int64, format='csr')

    degrees = []
    passed = True
    for q in range(C.top_degree + 1):
        rank = 0
        for label, cols in C.weight_blocks(q).items():
            size = len(cols) * e
            outgoing = C.block(q, label)
            incoming = C.block(q - 1, label) if q > 0 else np.zeros((0, 0), dtype=np.int64)
            out_rank = smith_normal_form(sparse.kron(sparse.csr_matrix(outgoing), identity).toarray(),
                                         transforms=False).rank if outgoing.size else 0
            in_rank = smith_normal_form(sparse.kron(sparse.csr_matrix(incoming), identity).toarray(),
                                        transforms=False).rank if incoming.size else 0
            rank += size - out_rank - in_rank
        expected = e * base.ranks[q]
        ok = rank == expected
        passed = passed and ok
        degrees.append({'degree': q, 'rank_over_R_as_Z': rank, 'expected': expected, 'ok': ok})
    return {
        'status': 'pass' if passed else 'fail',
        'polynomial': coeffs,
        'e': e,
        'degrees': degrees,
    }
