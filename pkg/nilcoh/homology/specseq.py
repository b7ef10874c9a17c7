"""
Spectral sequence of a filtered cochain complex over a field.

E_r^{s,t} with s the filtration degree and s + t the total degree:
Z_r^{s,q} = F^s C^q intersected with d^{-1}(F^{s+r} C^{q+1}),
E_r^{s,q-s} = Z_r^{s,q} / (Z_{r-1}^{s+1,q} + d Z_{r-1}^{s-r+1,q-1}).
"""

import logging
from dataclasses import dataclass, field

import numpy as np

from ..errors import ConfigError, InvalidFiltration
from .fields import field_for

logger = logging.getLogger(__name__)


@dataclass
class SSPage:
    """One page: entries[(s, t)] = dim E_r^{s,t}"""
    r: int
    entries: dict = field(default_factory=dict)

    def total(self, q):
        return sum(dim for (s, t), dim in self.entries.items() if s + t == q)

    def totals(self, top):
        return [self.total(q) for q in range(top + 1)]

    def to_dict(self):
        return {
            'r': self.r,
            'entries': [{'s': s, 't': t, 'dim': dim} for (s, t), dim in sorted(self.entries.items()) if dim],
        }


class FilteredComplex:
    """
    Cochain complex C^0 -> ... -> C^N with a bounded descending filtration.

    filtration[q][s] spans F^s C^q for s = 0..length-1; F^0 is everything
    and F^length = 0. Spanning sets are reduced to echelon bases.
    """

    def __init__(self, differentials, filtration, p, dims=None):
        self.field = field_for(p)
        self.p = p
        F = self.field

        if dims is None:
            if not differentials:
                raise ConfigError("dims are required for a complex without differentials")
            first = differentials[0]
            dims = [len(first[0]) if len(first) else 0] + [len(M) for M in differentials]
        self.dims = [int(n) for n in dims]
        self.top = len(self.dims) - 1
        if len(differentials) != self.top:
            raise ConfigError(f"{len(differentials)} matrices for {len(self.dims)} degrees")
        self.differentials = [self._matrix(M, self.dims[q + 1], self.dims[q], f"d_{q}")
                              for q, M in enumerate(differentials)]

        if len(filtration) != len(self.dims):
            raise InvalidFiltration(f"Filtration given for {len(filtration)} degrees, complex has {len(self.dims)}")
        self.length = max((len(levels) for levels in filtration), default=1)
        self.levels = []
        for q, levels in enumerate(filtration):
            bases = [F.row_basis(self._matrix(span, None, self.dims[q], f"F^{s} C^{q}"), self.dims[q])
                     for s, span in enumerate(levels)]
            bases += [F.zeros(0, self.dims[q])] * (self.length - len(bases))
            self.levels.append(bases)
        self._validate()

    @classmethod
    def from_json(cls, doc):
        """
        Build from {"p": int, "dims": [...], "matrices": [...], "filtration": [...]}.

        matrices[q] is d_q with dims[q+1] rows; filtration[q][s] is a list of
        vectors spanning F^s C^q.
        """
        if not isinstance(doc, dict):
            raise ConfigError("Filtered complex input must be a JSON object")
        try:
            return cls(doc['matrices'], doc['filtration'], int(doc.get('p', 0)), doc.get('dims'))
        except KeyError as exc:
            raise ConfigError(f"Filtered complex input is missing {exc}")
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"Malformed filtered complex input: {exc}")

    def _matrix(self, rows, nrows, ncols, name):
        """Field matrix of the given shape; nrows None accepts any number of rows"""
        try:
            M = self.field.array(rows, ncols)
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"{name} is not a rectangular integer matrix: {exc}")
        if M.size == 0 and nrows is not None and 0 in (nrows, ncols):
            return self.field.zeros(nrows, ncols)
        if M.shape[1] != ncols or (nrows is not None and M.shape[0] != nrows):
            expected = f"{nrows} x {ncols}" if nrows is not None else f"width {ncols}"
            raise ConfigError(f"{name} has shape {M.shape[0]} x {M.shape[1]}, expected {expected}")
        return M

    def _validate(self):
        F = self.field
        for q in range(self.top + 1):
            n = self.dims[q]
            if self.length and F.rank(self.levels[q][0]) != n:
                raise InvalidFiltration(f"F^0 C^{q} must be all of C^{q}")
            for s in range(self.length - 1):
                joint = F.rank(F.stack([self.levels[q][s], self.levels[q][s + 1]], n))
                if joint != self.levels[q][s].shape[0]:
                    raise InvalidFiltration(f"F^{s + 1} C^{q} is not contained in F^{s} C^{q}")
        for q in range(self.top):
            for s in range(self.length):
                image = self.apply(q, self.levels[q][s])
                target = self.levels[q + 1][s]
                joint = F.rank(F.stack([target, image], self.dims[q + 1]))
                if joint != target.shape[0]:
                    raise InvalidFiltration(f"d does not map F^{s} C^{q} into F^{s} C^{q + 1}")

    def level(self, s, q):
        """Basis of F^s C^q"""
        if s <= 0:
            return self.field.identity(self.dims[q])
        if s >= self.length:
            return self.field.zeros(0, self.dims[q])
        return self.levels[q][s]

    def apply(self, q, vectors):
        """Images d_q(v) of row vectors"""
        F = self.field
        if q >= self.top:
            return F.zeros(0, 0)
        vectors = F.array(vectors, self.dims[q])
        if vectors.shape[0] == 0:
            return F.zeros(0, self.dims[q + 1])
        return F.matmul(vectors, self.differentials[q].T)

    def cycles(self, r, s, q):
        """Z_r^{s,q}: x in F^s C^q with d x in F^{s+r} C^{q+1}"""
        F = self.field
        B = self.level(s, q)
        if q >= self.top or B.shape[0] == 0:
            return B
        target = self.level(s + r, q + 1)
        annihilator = F.null_space(target, self.dims[q + 1])
        if annihilator.shape[0] == 0:
            return B
        condition = F.matmul(annihilator, F.matmul(self.differentials[q], B.T))
        coeffs = F.null_space(condition, B.shape[0])
        if coeffs.shape[0] == 0:
            return F.zeros(0, self.dims[q])
        return F.row_basis(F.matmul(coeffs, B), self.dims[q])

    def entry(self, r, s, q):
        """dim E_r^{s, q-s}"""
        F = self.field
        Z = self.cycles(r, s, q)
        if Z.shape[0] == 0:
            return 0
        lower = self.cycles(r - 1, s + 1, q)
        boundaries = F.zeros(0, self.dims[q])
        if q > 0:
            boundaries = self.apply(q - 1, self.cycles(r - 1, s - r + 1, q - 1))
        denominator = F.rank(F.stack([lower, boundaries], self.dims[q]))
        return Z.shape[0] - denominator

    def cohomology_dims(self):
        F = self.field
        dims = []
        for q in range(self.top + 1):
            out_rank = F.rank(self.differentials[q]) if q < self.top else 0
            in_rank = F.rank(self.differentials[q - 1]) if q > 0 else 0
            dims.append(self.dims[q] - out_rank - in_rank)
        return dims


def page(C, r):
    entries = {}
    for q in range(C.top + 1):
        for s in range(C.length):
            dim = C.entry(r, s, q)
            if dim:
                entries[(s, q - s)] = dim
    return SSPage(r, entries)


def pages(C, up_to=None):
    """
    Pages E_0 .. E_R with R = max(up_to, length + 1); from page length + 1 on nothing changes.

    Parameters:
    C (FilteredComplex): Filtered complex
    up_to (int, optional): Last page wanted

    Returns:
    tuple: (list of SSPage, first page equal to E_infinity)
    """
    last = max(up_to or 0, C.length + 1)
    result = [page(C, r) for r in range(last + 1)]
    limit = result[-1].entries
    stable_from = next(r for r in range(1, last + 1)
                       if all(result[k].entries == limit for k in range(r, last + 1)))
    for earlier, later in zip(result[1:], result[2:]):
        for key, dim in later.entries.items():
            if dim > earlier.entries.get(key, 0):
                raise InvalidFiltration(f"Page {later.r} grew at {key}; filtration is not a valid input")
    logger.info("Computed %d pages, stable from page %d", len(result), stable_from)
    return result, stable_from


def gr_of_cohomology(C):
    """
    Graded dimensions of the filtration induced on H(C).

    Returns:
    dict: (s, t) -> dim F^s H^q / F^{s+1} H^q with q = s + t
    """
    F = C.field
    result = {}
    for q in range(C.top + 1):
        n = C.dims[q]
        boundaries = C.apply(q - 1, F.identity(C.dims[q - 1])) if q > 0 else F.zeros(0, n)
        sizes = []
        for s in range(C.length + 1):
            cycles = C.cycles(C.length + 1, s, q)
            sizes.append(F.rank(F.stack([cycles, boundaries], n)))
        for s in range(C.length):
            dim = sizes[s] - sizes[s + 1]
            if dim:
                result[(s, q - s)] = dim
    return result


def collapse_certificate(e1_total, target):
    """
    Certified iff the E_1 totals already equal the target per degree.

    Returns:
    dict: {certified, first_mismatch}
    """
    e1_total, target = list(e1_total), list(target)
    width = max(len(e1_total), len(target))
    e1_total += [0] * (width - len(e1_total))
    target += [0] * (width - len(target))
    for q, (a, b) in enumerate(zip(e1_total, target)):
        if a != b:
            return {'certified': False, 'first_mismatch': q}
    return {'certified': True, 'first_mismatch': None}


def weight_height_filtration(complex_, p):
    """
    Filter a CE complex by total height: F^s is spanned by monomials of height >= s.

    Parameters:
    complex_ (CochainComplex): CE complex
    p (int): Prime, or 0 for the rationals

    Returns:
    FilteredComplex: Filtered complex over the chosen field
    """
    grading = complex_.algebra.grading
    heights = [[sum(grading[i] for i in S) for S in basis] for basis in complex_.basis]
    length = max(max(h) for h in heights) + 1
    filtration = []
    for q, degree_heights in enumerate(heights):
        levels = []
        for s in range(length):
            rows = [[1 if j == i else 0 for j in range(len(degree_heights))]
                    for i, h in enumerate(degree_heights) if h >= s]
            levels.append(rows)
        filtration.append(levels)
    matrices = [D.toarray() for D in complex_.differentials]
    return FilteredComplex(matrices, filtration, p, dims=complex_.dims())


def random_filtered_complex(rng, p, max_degrees=5, max_dim=8, max_steps=3):
    """
    Random filtered complex with d^2 = 0 and a filtration preserved by d.

    d_{q+1} is a random combination of functionals vanishing on im d_q;
    F^s C^q is a random nested span plus d(F^s C^{q-1}).

    Parameters:
    rng (numpy.random.Generator): Source of randomness
    p (int): Prime
    max_degrees (int): Most degrees
    max_dim (int): Largest C^q
    max_steps (int): Most nontrivial filtration steps

    Returns:
    FilteredComplex: Valid filtered complex
    """
    F = field_for(p)
    degrees = int(rng.integers(1, max_degrees + 1))
    dims = [int(rng.integers(0, max_dim + 1)) for _ in range(degrees)]

    differentials = []
    for q in range(degrees - 1):
        if q == 0:
            M = rng.integers(0, p, size=(dims[1], dims[0]))
        else:
            previous = differentials[-1]
            left = F.null_space(previous.T, dims[q])
            mix = rng.integers(0, p, size=(dims[q + 1], left.shape[0]))
            M = F.matmul(mix, left) if left.shape[0] else np.zeros((dims[q + 1], dims[q]), dtype=np.int64)
        differentials.append(F.array(M, dims[q]).reshape(dims[q + 1], dims[q]))

    length = int(rng.integers(1, max_steps + 1)) + 1
    filtration = []
    for q in range(degrees):
        n = dims[q]
        spans = [F.identity(n)]
        chosen = F.zeros(0, n)
        nested = []
        for s in range(length - 1, 0, -1):
            extra = rng.integers(0, p, size=(int(rng.integers(0, 3)), n))
            chosen = F.stack([chosen, extra], n)
            nested.append(chosen)
        spans += list(reversed(nested))
        filtration.append(spans)

    for q in range(1, degrees):
        for s in range(1, length):
            image = F.matmul(filtration[q - 1][s], differentials[q - 1].T)
            filtration[q][s] = F.stack([filtration[q][s], image], dims[q])

    return FilteredComplex(differentials, filtration, p, dims=dims)
