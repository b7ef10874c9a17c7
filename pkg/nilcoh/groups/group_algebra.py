"""
Group algebra F_p[N] of a finite unipotent group: augmentation powers and PBW monomials.
"""

import logging
from dataclasses import dataclass
from itertools import product
from math import comb

import numpy as np

from ..data.settings import Settings
from ..errors import CapExceeded
from ..homology.fields import PrimeField

logger = logging.getLogger(__name__)


@dataclass
class PBWMonomialSet:
    """Exponent vectors j over the basis of gr N with sum j_k * height_k = weight"""
    weight: int
    heights: tuple
    monomials: list

    @property
    def count(self):
        return len(self.monomials)


def pbw_monomials(rs, d, n):
    """
    All PBW monomials of weight n for d slots of the positive roots.

    Parameters:
    rs (RootSystem): Root system
    d (int): Number of slots
    n (int): Weight

    Returns:
    PBWMonomialSet: Monomials in lexicographic order
    """
    heights = tuple(rs.heights) * d
    found = []

    def extend(prefix, remaining):
        position = len(prefix)
        if position == len(heights):
            if remaining == 0:
                found.append(tuple(prefix))
            return
        for e in range(remaining // heights[position] + 1):
            extend(prefix + [e], remaining - e * heights[position])

    extend([], n)
    return PBWMonomialSet(n, heights, sorted(found))


def pbw_weight_count(rs, d, n):
    """Coefficient of t^n in prod over positive roots of (1 - t^height)^(-d)"""
    series = [1] + [0] * n
    for h in list(rs.heights) * d:
        for m in range(h, n + 1):
            series[m] += series[m - h]
    return series[n]


class TruncGroupAlgebra:
    """
    F_p[G] for a finite unipotent group G with elements indexed in normal-form order.

    Right multiplication by a group element is a permutation of the basis,
    stored as an index table.
    """

    def __init__(self, group, cap=None):
        settings = Settings()
        cap = cap if cap is not None else settings.cap('group')
        if group.order > cap:
            raise CapExceeded(f"|G| = {group.order} exceeds the group cap of {cap}")
        self.group = group
        self.p = group.p
        self.field = PrimeField(group.p)
        self.coords = np.array(list(group.elements()), dtype=np.int64).reshape(group.order, group.length)
        self._right = {}
        self._annihilators = {}
        logger.info("Group algebra F_%d[G] of dimension %d", self.p, group.order)

    @property
    def dim(self):
        return self.group.order

    def right_table(self, x):
        """Index of h * x for every basis element h"""
        if x not in self._right:
            group = self.group
            self._right[x] = np.array([group.index_of(group.multiply(tuple(int(c) for c in row), x))
                                       for row in self.coords], dtype=np.int64)
        return self._right[x]

    def augmentation_dims_dense(self, n_max):
        """
        dim I^n / I^{n+1} by spanning I^n = I^{n-1} (x_k - 1) in F_p^|G|.

        Returns:
        list: Quotient dimensions for n = 0..n_max
        """
        F = self.field
        tables = [self.right_table(x) for x in self.group.generators()]
        current = F.identity(self.dim)
        dims = [self.dim]
        for n in range(1, n_max + 2):
            blocks = []
            for table in tables:
                moved = np.zeros_like(current)
                moved[:, table] = current
                blocks.append((moved - current) % self.p)
            current = F.row_basis(F.stack(blocks, self.dim), self.dim)
            dims.append(current.shape[0])
            logger.debug("dim I^%d = %d", n, dims[-1])
        return [dims[n] - dims[n + 1] for n in range(n_max + 1)]

    def exponent_vectors(self, n):
        """Exponent vectors j with sum(j) <= n and every j_k below p^k, by total degree"""
        q = self.group.modulus
        vectors = [j for j in product(range(min(n, q - 1) + 1), repeat=self.group.length) if sum(j) <= n]
        return sorted(vectors, key=lambda j: (sum(j), j))

    def binomial_functions(self, vectors):
        """Matrix of prod_k binom(c_k, j_k) mod p, rows group elements, columns vectors"""
        q = self.group.modulus
        top = max((max(j) for j in vectors), default=0)
        table = np.array([[comb(c, j) % self.p for j in range(top + 1)] for c in range(q)], dtype=np.int64)
        B = np.ones((self.dim, len(vectors)), dtype=np.int64)
        for col, j in enumerate(vectors):
            for k, e in enumerate(j):
                if e:
                    B[:, col] = (B[:, col] * table[self.coords[:, k], e]) % self.p
        return B

    def annihilator(self, n):
        """
        Functions on G killed by I^{n+1}, as coefficient rows over binomial functions.

        Such functions have degree at most n in the coordinates, so they are
        solved for inside span{prod binom(c_k, j_k) : sum j <= n}.

        Returns:
        tuple: (coefficient basis rows, exponent vectors)
        """
        if n in self._annihilators:
            return self._annihilators[n]
        F = self.field
        vectors = self.exponent_vectors(n)
        tables = [self.right_table(x) for x in self.group.generators()]

        derived = [self.binomial_functions(vectors)]
        for _ in range(n + 1):
            derived = [(M[table] - M) % self.p for M in derived for table in tables]
        conditions = F.row_basis(F.stack([F.row_basis(M, len(vectors)) for M in derived], len(vectors)),
                                 len(vectors))
        basis = F.null_space(conditions, len(vectors))
        self._annihilators[n] = (basis, vectors)
        logger.debug("Annihilator of I^%d has dimension %d", n + 1, basis.shape[0])
        return basis, vectors

    def augmentation_dims_dual(self, n_max):
        """dim I^n / I^{n+1} = dim ann(I^{n+1}) - dim ann(I^n)"""
        sizes = [self.annihilator(n)[0].shape[0] for n in range(n_max + 1)]
        return [sizes[0]] + [sizes[n] - sizes[n - 1] for n in range(1, n_max + 1)]


def augmentation_powers(group, n_max, method='auto'):
    """
    Dimensions of I^n / I^{n+1} for n <= n_max.

    Parameters:
    group (FiniteUnipotentGroup): Group
    n_max (int): Largest n
    method (str): 'dense', 'dual' or 'auto' (dense up to the 'algebra' cap)

    Returns:
    list: Quotient dimensions
    """
    algebra_cap = Settings().cap('algebra')
    if method == 'auto':
        method = 'dense' if group.order <= algebra_cap else 'dual'
    if method == 'dense' and group.order > algebra_cap:
        raise CapExceeded(f"|G| = {group.order} exceeds the dense group-algebra cap of {algebra_cap}")
    algebra = TruncGroupAlgebra(group)
    if method == 'dense':
        return algebra.augmentation_dims_dense(n_max)
    return algebra.augmentation_dims_dual(n_max)


def pbw_independence_check(group, n_max, algebra=None):
    """
    Check that v(j) = prod (x_k - 1)^{j_k}, mu(j) = n, lie in I^n and are independent mod I^{n+1}.

    The functional dual to v(j) reads the coefficient of the binomial
    function with exponent j, so both checks are rank conditions on the
    annihilator bases.

    Returns:
    dict: Report per degree with dims and PBW counts
    """
    algebra = algebra or TruncGroupAlgebra(group)
    F = algebra.field
    rs = group.root_system
    degrees = []
    passed = True
    for n in range(n_max + 1):
        monomials = pbw_monomials(rs, group.d, n).monomials
        basis, vectors = algebra.annihilator(n)
        position = {j: i for i, j in enumerate(vectors)}
        vanished = [j for j in monomials if j not in position]

        in_power = True
        if n > 0:
            lower, lower_vectors = algebra.annihilator(n - 1)
            lower_position = {j: i for i, j in enumerate(lower_vectors)}
            columns = [lower_position[j] for j in monomials if j in lower_position]
            in_power = not columns or not np.any(lower[:, columns])

        columns = [position[j] for j in monomials if j in position]
        rank = F.rank(basis[:, columns]) if columns else 0
        independent = not vanished and rank == len(monomials)

        previous = algebra.annihilator(n - 1)[0].shape[0] if n > 0 else 0
        dim = basis.shape[0] - previous
        count = pbw_weight_count(rs, group.d, n)
        passed = passed and independent and in_power
        degrees.append({
            'n': n,
            'monomials': len(monomials),
            'in_power': in_power,
            'independent': independent,
            'dim': dim,
            'pbw_count': count,
            'dim_equals_count': dim == count,
        })
        if dim != count:
            logger.info("n=%d: dim I^n/I^(n+1) = %d, PBW count %d", n, dim, count)
    return {'status': 'pass' if passed else 'fail', 'degrees': degrees}
