"""
Chevalley-Eilenberg cochain complex of a nilpotent Lie algebra with trivial coefficients.
"""

import logging
from dataclasses import dataclass
from itertools import combinations

import numpy as np
from scipy import sparse

from ..data.settings import Settings
from ..errors import DimensionCap

logger = logging.getLogger(__name__)


def _sort_sign(seq):
    """Sign of the permutation sorting seq (entries distinct)"""
    inversions = sum(1 for a in range(len(seq)) for b in range(a + 1, len(seq)) if seq[a] > seq[b])
    return -1 if inversions % 2 else 1


@dataclass
class CochainComplex:
    """
    Exterior powers of the dual algebra with the CE differential.

    basis[q] lists sorted q-subsets S (f_S = f_{s_1} ^ ... ^ f_{s_q}) in
    lexicographic order; differentials[q] has shape (len(basis[q+1]), len(basis[q])).
    """
    algebra: object
    basis: list
    index: list
    differentials: list
    weight_labels: list

    @property
    def top_degree(self):
        return len(self.basis) - 1

    def dims(self):
        return [len(b) for b in self.basis]

    def differential(self, q):
        """d_q, or an empty map outside 0..top-1"""
        if 0 <= q < len(self.differentials):
            return self.differentials[q]
        rows = len(self.basis[q + 1]) if 0 <= q + 1 <= self.top_degree else 0
        cols = len(self.basis[q]) if 0 <= q <= self.top_degree else 0
        return sparse.csr_matrix((rows, cols), dtype=np.int64)

    def weight_blocks(self, q):
        """Weight label -> basis indices in degree q"""
        blocks = {}
        if 0 <= q <= self.top_degree:
            for i, label in enumerate(self.weight_labels[q]):
                blocks.setdefault(label, []).append(i)
        return blocks

    def labels(self):
        found = set()
        for labels in self.weight_labels:
            found.update(labels)
        return sorted(found)

    def block(self, q, label):
        """Dense integer block of d_q between the basis elements of one weight"""
        cols = self.weight_blocks(q).get(label, [])
        rows = self.weight_blocks(q + 1).get(label, [])
        if not rows or not cols:
            return np.zeros((len(rows), len(cols)), dtype=np.int64)
        return self.differential(q)[rows, :][:, cols].toarray()

    def check_square_zero(self):
        """First degree q with d_{q+1} d_q != 0, or None"""
        for q in range(len(self.differentials) - 1):
            product = (self.differentials[q + 1] @ self.differentials[q]).tocsr()
            product.eliminate_zeros()
            if product.nnz:
                return q
        return None

    def check_weight_preserving(self):
        """First (q, row, col) whose entry joins different weights, or None"""
        for q, D in enumerate(self.differentials):
            coo = D.tocoo()
            for r, c, v in zip(coo.row, coo.col, coo.data):
                if v and self.weight_labels[q + 1][r] != self.weight_labels[q][c]:
                    return q, int(r), int(c)
        return None

    def euler_characteristic(self):
        return sum((-1) ** q * n for q, n in enumerate(self.dims()))


def monomial_label(algebra, subset):
    """Per-slot weight -sum of the roots in subset"""
    rank = algebra.root_system.rank
    label = [[0] * rank for _ in range(algebra.d)]
    for i in subset:
        slot, weight = algebra.weight(i)
        for j, w in enumerate(weight):
            label[slot][j] -= w
    return tuple(tuple(w) for w in label)


def build_ce_complex(L, cap=None):
    """
    Cochain complex of L with trivial integer coefficients.

    On generators d f_k = -sum_{a<b} c^k_{ab} f_a ^ f_b, extended as a
    graded derivation; this is the formula
    (d lambda)(x_0..x_q) = sum_{i<j} (-1)^{i+j} lambda([x_i, x_j], x_0..^i..^j..x_q).

    Parameters:
    L (NilpotentLieAlgebra): Algebra
    cap (int, optional): Largest algebra dimension, defaults to the 'exterior' setting

    Returns:
    CochainComplex: Complex with sparse integer differentials
    """
    if cap is None:
        cap = Settings().cap('exterior')
    D = L.dim
    if D > cap:
        raise DimensionCap(f"Algebra dimension {D} exceeds the exterior cap {cap}")

    dual = {k: [] for k in range(D)}
    for (a, b), terms in L.bracket_table.items():
        if a < b:
            for k, c in terms.items():
                dual[k].append((a, b, -c))

    basis = [list(combinations(range(D), q)) for q in range(D + 1)]
    index = [{S: i for i, S in enumerate(b)} for b in basis]
    labels = [[monomial_label(L, S) for S in b] for b in basis]

    differentials = []
    for q in range(D):
        entries = {}
        for col, S in enumerate(basis[q]):
            for m, k in enumerate(S):
                rest = S[:m] + S[m + 1:]
                for a, b, c in dual[k]:
                    if a in rest or b in rest:
                        continue
                    seq = S[:m] + (a, b) + S[m + 1:]
                    row = index[q + 1][tuple(sorted(seq))]
                    value = (-1) ** m * c * _sort_sign(seq)
                    entries[(row, col)] = entries.get((row, col), 0) + value
        entries = {key: v for key, v in entries.items() if v}
        rows = [r for r, _ in entries]
        cols = [c for _, c in entries]
        matrix = sparse.coo_matrix((list(entries.values()), (rows, cols)),
                                   shape=(len(basis[q + 1]), len(basis[q])), dtype=np.int64).tocsr()
        differentials.append(matrix)

    logger.info("CE complex of dimension %d: %d cochains, %d nonzero entries",
                D, sum(len(b) for b in basis), sum(m.nnz for m in differentials))
    return CochainComplex(L, basis, index, differentials, labels)
