"""
Truncated universal enveloping algebra of u with polynomial coefficients.

Used to expand group commutators [theta_a(s), theta_b(t)] of root elements
theta_a(s) = exp(s x_a) in the normal form given by the fixed root order.
"""

import logging
from fractions import Fraction
from math import factorial

from ..errors import NilcohError

logger = logging.getLogger(__name__)


def _poly_mul(p, q):
    result = {}
    for (a, b), c in p.items():
        for (e, f), g in q.items():
            key = (a + e, b + f)
            result[key] = result.get(key, 0) + c * g
    return {k: v for k, v in result.items() if v}


class TruncatedEnvelopingAlgebra:
    """
    PBW monomials of U(u) over Q[s, t], dropping everything above a height.

    Monomials are non-decreasing tuples of root indices; an element is a
    dict monomial -> polynomial, a polynomial a dict (deg_s, deg_t) -> Fraction.
    """

    def __init__(self, algebra, max_height=None):
        if algebra.d != 1:
            raise NilcohError("Enveloping algebra model expects a single slot")
        self.algebra = algebra
        self.heights = algebra.grading
        self.max_height = max_height if max_height is not None else max(self.heights)
        self._straight = {}

    def height(self, word):
        return sum(self.heights[i] for i in word)

    def straighten(self, word):
        """
        Rewrite a word in root vectors as a combination of ordered monomials.

        Parameters:
        word (tuple): Root indices

        Returns:
        dict: Ordered monomial -> integer coefficient
        """
        word = tuple(word)
        if self.height(word) > self.max_height:
            return {}
        if word in self._straight:
            return self._straight[word]

        result = {word: 1}
        for pos in range(len(word) - 1):
            a, b = word[pos], word[pos + 1]
            if a <= b:
                continue
            # x_a x_b = x_b x_a + [x_a, x_b]
            result = {}
            swapped = word[:pos] + (b, a) + word[pos + 2:]
            for mono, c in self.straighten(swapped).items():
                result[mono] = result.get(mono, 0) + c
            for k, n in self.algebra.bracket(a, b).items():
                shorter = word[:pos] + (k,) + word[pos + 2:]
                for mono, c in self.straighten(shorter).items():
                    result[mono] = result.get(mono, 0) + n * c
            result = {m: c for m, c in result.items() if c}
            break

        self._straight[word] = result
        return result

    def multiply(self, X, Y):
        result = {}
        for m1, p1 in X.items():
            for m2, p2 in Y.items():
                if self.height(m1) + self.height(m2) > self.max_height:
                    continue
                product = _poly_mul(p1, p2)
                for mono, c in self.straighten(m1 + m2).items():
                    target = result.setdefault(mono, {})
                    for key, value in product.items():
                        target[key] = target.get(key, 0) + c * value
        cleaned = {}
        for mono, poly in result.items():
            poly = {k: v for k, v in poly.items() if v}
            if poly:
                cleaned[mono] = poly
        return cleaned

    def exp(self, index, variable, sign=1):
        """exp(sign * variable * x_index), truncated; variable is 's' or 't'"""
        terms = {}
        n = 0
        while n * self.heights[index] <= self.max_height:
            degree = (n, 0) if variable == 's' else (0, n)
            terms[(index,) * n] = {degree: Fraction(sign ** n, factorial(n))}
            n += 1
        return terms

    def commutator_terms(self, a, b):
        """
        Normal form of [theta_a(s), theta_b(t)] = theta_a(-s) theta_b(-t) theta_a(s) theta_b(t).

        Parameters:
        a (int): Root index of the first element
        b (int): Root index of the second element

        Returns:
        list: (i, j, k, C) meaning a factor theta_k(C s^i t^j), ordered by k
        """
        g = self.multiply(self.exp(a, 's', -1), self.exp(b, 't', -1))
        g = self.multiply(g, self.exp(a, 's'))
        g = self.multiply(g, self.exp(b, 't'))

        rs = self.algebra.root_system
        alpha = rs.positive_roots[a].coords
        beta = rs.positive_roots[b].coords
        terms = []
        for mono, poly in sorted(g.items()):
            if len(mono) != 1:
                continue
            k = mono[0]
            if len(poly) != 1:
                raise NilcohError(f"Commutator coordinate on root {k} is not a monomial: {poly}")
            (i, j), C = next(iter(poly.items()))
            expected = tuple(i * x + j * y for x, y in zip(alpha, beta))
            if rs.positive_roots[k].coords != expected:
                raise NilcohError(f"Commutator term s^{i} t^{j} landed on root {k}, expected {expected}")
            if isinstance(C, Fraction) and C.denominator == 1:
                C = int(C)
            terms.append((i, j, k, C))
        logger.debug("Commutator of roots %d, %d: %s", a, b, terms)
        return terms
