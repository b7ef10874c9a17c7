"""
Exact linear algebra over prime fields (galois) and the rationals (sympy).

Vectors are rows; subspaces are represented by matrices whose rows span them.
"""

from fractions import Fraction

import galois
import numpy as np
import sympy

from ..errors import ConfigError


def _empty_shape(M, ncols):
    """Shape of an empty matrix, keeping its row count"""
    rows = M.shape[0] if M.ndim == 2 else 0
    if ncols is None:
        ncols = M.shape[1] if M.ndim == 2 else 0
    return rows, ncols


class PrimeField:
    """Row-space arithmetic over GF(p)"""

    def __init__(self, p):
        if not sympy.isprime(p):
            raise ConfigError(f"{p} is not a prime")
        self.p = int(p)
        self.GF = galois.GF(self.p)

    def __repr__(self):
        return f"GF({self.p})"

    def array(self, rows, ncols=None):
        """Reduce an integer matrix mod p into an int64 array of the given width"""
        M = np.asarray(rows, dtype=np.int64)
        if M.size == 0:
            return np.zeros(_empty_shape(M, ncols), dtype=np.int64)
        if M.ndim == 1:
            M = M.reshape(1, -1)
        return M % self.p

    def _lift(self, M):
        return self.array(M).view(self.GF)

    def _lower(self, F):
        return np.asarray(F.view(np.ndarray), dtype=np.int64)

    def zeros(self, nrows, ncols):
        return np.zeros((nrows, ncols), dtype=np.int64)

    def identity(self, n):
        return np.eye(n, dtype=np.int64)

    def rank(self, M):
        M = self.array(M)
        if M.shape[0] == 0 or M.shape[1] == 0:
            return 0
        return int(np.linalg.matrix_rank(self._lift(M)))

    def row_basis(self, M, ncols=None):
        """Reduced echelon basis of the row space"""
        M = self.array(M, ncols)
        if M.shape[0] == 0 or M.shape[1] == 0:
            return self.zeros(0, M.shape[1])
        R = self._lower(self._lift(M).row_reduce())
        return R[np.any(R != 0, axis=1)]

    def null_space(self, M, ncols):
        """Rows x with M x = 0"""
        M = self.array(M, ncols)
        if ncols == 0:
            return self.zeros(0, 0)
        if M.shape[0] == 0:
            return self.identity(ncols)
        N = self._lower(self._lift(M).null_space())
        return N.reshape(-1, ncols)

    def matmul(self, A, B):
        A = self.array(A)
        B = self.array(B)
        if A.shape[1] == 0:
            return self.zeros(A.shape[0], B.shape[1])
        return (A @ B) % self.p

    def stack(self, blocks, ncols):
        blocks = [self.array(b, ncols) for b in blocks]
        return np.vstack(blocks) if blocks else self.zeros(0, ncols)


def _rational(x):
    if isinstance(x, Fraction):
        return sympy.Rational(x.numerator, x.denominator)
    return sympy.Rational(x)


class RationalField:
    """Row-space arithmetic over Q with sympy matrices"""

    p = 0

    def __repr__(self):
        return "QQ"

    def array(self, rows, ncols=None):
        M = np.asarray(rows, dtype=object)
        if M.size == 0:
            return self.zeros(*_empty_shape(M, ncols))
        if M.ndim == 1:
            M = M.reshape(1, -1)
        return np.vectorize(_rational, otypes=[object])(M)

    def zeros(self, nrows, ncols):
        return np.full((nrows, ncols), sympy.Integer(0), dtype=object)

    def identity(self, n):
        M = self.zeros(n, n)
        for i in range(n):
            M[i, i] = sympy.Integer(1)
        return M

    def _matrix(self, M):
        return sympy.Matrix(M.tolist())

    def rank(self, M):
        M = self.array(M)
        if M.shape[0] == 0 or M.shape[1] == 0:
            return 0
        return self._matrix(M).rank()

    def row_basis(self, M, ncols=None):
        M = self.array(M, ncols)
        if M.shape[0] == 0 or M.shape[1] == 0:
            return self.zeros(0, M.shape[1])
        R, pivots = self._matrix(M).rref()
        return np.array(R.tolist(), dtype=object)[:len(pivots)].reshape(len(pivots), M.shape[1])

    def null_space(self, M, ncols):
        M = self.array(M, ncols)
        if ncols == 0:
            return self.zeros(0, 0)
        if M.shape[0] == 0:
            return self.identity(ncols)
        vectors = self._matrix(M).nullspace()
        if not vectors:
            return self.zeros(0, ncols)
        return np.array([list(v) for v in vectors], dtype=object)

    def matmul(self, A, B):
        A = self.array(A)
        B = self.array(B)
        if A.shape[1] == 0:
            return self.zeros(A.shape[0], B.shape[1])
        return np.dot(A, B)

    def stack(self, blocks, ncols):
        blocks = [self.array(b, ncols) for b in blocks]
        return np.vstack(blocks) if blocks else self.zeros(0, ncols)


def field_for(p):
    """GF(p) for a prime p, the rationals for p == 0"""
    if p in (0, None):
        return RationalField()
    return PrimeField(p)
