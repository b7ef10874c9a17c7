"""
Smith normal form over the integers with exact Python integers.
"""

from dataclasses import dataclass

import numpy as np


@dataclass
class SNFResult:
    """
    Invariant factors d_1 | d_2 | ... and transforms with U @ M @ V == D.

    U and V are None when transforms were not requested.
    """
    shape: tuple
    invariant_factors: list
    U: np.ndarray = None
    V: np.ndarray = None

    @property
    def rank(self):
        return len(self.invariant_factors)

    @property
    def torsion(self):
        return [f for f in self.invariant_factors if f > 1]

    def diagonal(self):
        D = np.zeros(self.shape, dtype=object)
        for i, f in enumerate(self.invariant_factors):
            D[i, i] = f
        return D


def _as_object_matrix(M):
    A = np.array(M, dtype=object)
    if A.ndim == 1:
        A = A.reshape(1, -1) if A.size else A.reshape(0, 0)
    return np.vectorize(int, otypes=[object])(A) if A.size else A


def _smallest_nonzero(A, t):
    best = None
    rows, cols = A.shape
    for i in range(t, rows):
        for j in range(t, cols):
            v = A[i, j]
            if v != 0 and (best is None or abs(v) < best[0]):
                best = (abs(v), i, j)
                if best[0] == 1:
                    return best
    return best


def smith_normal_form(M, transforms=True):
    """
    Exact Smith normal form.

    Pivots on the entry of least absolute value, clears its row and column by
    Euclidean steps and repairs divisibility by adding an offending row.

    Parameters:
    M (array-like): Integer matrix
    transforms (bool): Also accumulate unimodular U, V

    Returns:
    SNFResult: Invariant factors and optional transforms
    """
    A = _as_object_matrix(M)
    rows, cols = A.shape
    U = V = None
    if transforms:
        U = np.eye(rows, dtype=int).astype(object)
        V = np.eye(cols, dtype=int).astype(object)

    def swap_rows(i, j):
        if i != j:
            A[[i, j], :] = A[[j, i], :]
            if transforms:
                U[[i, j], :] = U[[j, i], :]

    def swap_cols(i, j):
        if i != j:
            A[:, [i, j]] = A[:, [j, i]]
            if transforms:
                V[:, [i, j]] = V[:, [j, i]]

    factors = []
    t = 0
    while t < min(rows, cols):
        found = _smallest_nonzero(A, t)
        if found is None:
            break
        _, i, j = found
        swap_rows(t, i)
        swap_cols(t, j)

        while True:
            pivot = A[t, t]
            dirty = False
            for i in range(t + 1, rows):
                if A[i, t] != 0:
                    q = A[i, t] // pivot
                    A[i, :] = A[i, :] - q * A[t, :]
                    if transforms:
                        U[i, :] = U[i, :] - q * U[t, :]
                    dirty = dirty or A[i, t] != 0
            for j in range(t + 1, cols):
                if A[t, j] != 0:
                    q = A[t, j] // pivot
                    A[:, j] = A[:, j] - q * A[:, t]
                    if transforms:
                        V[:, j] = V[:, j] - q * V[:, t]
                    dirty = dirty or A[t, j] != 0
            if dirty:
                # a remainder smaller than the pivot is left in row or column t
                candidates = [(abs(A[i, t]), i, t) for i in range(t + 1, rows) if A[i, t] != 0]
                candidates += [(abs(A[t, j]), t, j) for j in range(t + 1, cols) if A[t, j] != 0]
                _, i, j = min(candidates)
                swap_rows(t, i)
                swap_cols(t, j)
                continue

            offending = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if A[i, j] % pivot != 0:
                        offending = i
                        break
                if offending is not None:
                    break
            if offending is None:
                break
            A[t, :] = A[t, :] + A[offending, :]
            if transforms:
                U[t, :] = U[t, :] + U[offending, :]

        if A[t, t] < 0:
            A[t, :] = -A[t, :]
            if transforms:
                U[t, :] = -U[t, :]
        factors.append(int(A[t, t]))
        t += 1

    return SNFResult((rows, cols), factors, U, V)


def integer_rank(M):
    """Rank over Q of an integer matrix"""
    A = _as_object_matrix(M)
    if A.size == 0:
        return 0
    return smith_normal_form(A, transforms=False).rank
