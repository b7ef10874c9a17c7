"""
Kostant's description of H^*(u, Z) checked against computed cohomology.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field

import sympy

from ..homology.cochain import monomial_label
from ..lie.weyl import inversion_set

logger = logging.getLogger(__name__)


@dataclass
class KostantPrediction:
    """degrees[n] lists w.0 for every w of length n, in group order"""
    type_name: str
    degrees: dict = field(default_factory=dict)
    elements: dict = field(default_factory=dict)

    @property
    def total(self):
        return sum(len(weights) for weights in self.degrees.values())

    def drop(self, degree, weight):
        """Copy with one occurrence of weight removed from a degree (negative control)"""
        degrees = {n: list(weights) for n, weights in self.degrees.items()}
        degrees[degree].remove(tuple(weight))
        return KostantPrediction(self.type_name, degrees, dict(self.elements))

    def to_dict(self):
        return {str(n): [list(w) for w in weights] for n, weights in sorted(self.degrees.items())}


def kostant_predict(rs, W):
    """
    Bucket the weights w.0 by the length of w.

    Parameters:
    rs (RootSystem): Root system
    W (WeylGroup): Enumerated Weyl group

    Returns:
    KostantPrediction: Predicted weights per degree
    """
    prediction = KostantPrediction(rs.name)
    for n in sorted(W.by_length):
        prediction.degrees[n] = [W.dot_zero(i) for i in W.by_length[n]]
        prediction.elements[n] = [W[i].word_label() for i in W.by_length[n]]
    seen = Counter(w for weights in prediction.degrees.values() for w in weights)
    repeated = [w for w, count in seen.items() if count > 1]
    if repeated:
        logger.warning("w.0 is not injective on W(%s): %s", rs.name, repeated)
    return prediction


def verify_kostant(prediction, computed, coxeter):
    """
    Compare predicted weights with the weight decomposition of H^*(u, Z).

    Every degree must carry exactly the predicted weights, each of rank 1,
    and no torsion at primes >= the Coxeter number.

    Parameters:
    prediction (KostantPrediction): Output of kostant_predict
    computed (CohomologyResult): Cohomology with d = 1
    coxeter (int): Coxeter number h

    Returns:
    dict: {status, degrees, mismatches}
    """
    mismatches = []
    degrees = {}
    top = max(max(prediction.degrees, default=0), len(computed.degrees) - 1)
    for n in range(top + 1):
        expected = Counter(prediction.degrees.get(n, []))
        found = Counter()
        torsion = []
        if n < len(computed.degrees):
            deg = computed.degrees[n]
            for label, rank in deg.weights.items():
                if rank:
                    found[label[0]] += rank
            torsion = deg.torsion

        for weight in sorted(set(expected) | set(found)):
            if expected[weight] != found[weight]:
                mismatches.append({'degree': n, 'weight': list(weight),
                                   'predicted': expected[weight], 'computed': found[weight]})
        large = sorted({q for f in torsion for q in sympy.primefactors(f) if q >= coxeter})
        if large:
            mismatches.append({'degree': n, 'torsion_primes': large})
        degrees[str(n)] = {
            'predicted': sum(expected.values()),
            'free_rank': sum(found.values()),
            'torsion': list(torsion),
            'ok': expected == found and not large,
        }

    for mismatch in mismatches:
        logger.warning("Kostant mismatch for %s: %s", prediction.type_name, mismatch)
    return {
        'status': 'fail' if mismatches else 'pass',
        'degrees': degrees,
        'mismatches': mismatches,
    }


def highest_weight_check(C, W, result):
    """
    For each w: f_Phi(w) has weight w.0, that weight lives only in degree l(w),
    and its block of H^l(w) has rank 1.

    Parameters:
    C (CochainComplex): CE complex of the d = 1 algebra
    W (WeylGroup): Enumerated Weyl group
    result (CohomologyResult): Cohomology of C

    Returns:
    dict: {status, checked, failures}
    """
    rs = W.root_system
    degrees_of = {}
    for q, labels in enumerate(C.weight_labels):
        for label in set(labels):
            degrees_of.setdefault(label, set()).add(q)

    failures = []
    for w in W:
        subset = tuple(sorted(inversion_set(rs, w)))
        label = monomial_label(C.algebra, subset)
        target = (W.dot_zero(w.index),)
        problems = []
        if label != target:
            problems.append('monomial weight')
        if degrees_of.get(target) != {w.length}:
            problems.append('weight in other degrees')
        if result.degrees[w.length].weights.get(target, 0) != 1:
            problems.append('block rank')
        if problems:
            failures.append({'element': w.word_label(), 'weight': list(target), 'problems': problems})

    return {
        'status': 'fail' if failures else 'pass',
        'checked': W.order,
        'failures': failures,
    }
