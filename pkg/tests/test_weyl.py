import pytest

from nilcoh.data import supported_types
from nilcoh.errors import GroupTooLarge
from nilcoh.lie import (build_root_system, enumerate_weyl_group, inversion_set, dot_action, poincare_polynomial,
                        sum_of_subset)


@pytest.mark.parametrize('label, lengths', [
    ('A1', [0, 1]),
    ('A2', [0, 1, 1, 2, 2, 3]),
    ('B2', [0, 1, 1, 2, 2, 3, 3, 4]),
])
def test_enumeration_lengths(label, lengths):
    W = enumerate_weyl_group(build_root_system(label))
    assert sorted(w.length for w in W) == lengths
    assert W.identity.length == 0
    assert W.longest.length == lengths[-1]


def test_a2_inversion_sets():
    rs = build_root_system('A2')
    W = enumerate_weyl_group(rs)
    s1 = W.element_for_word([0])
    assert inversion_set(rs, W.identity) == frozenset()
    assert inversion_set(rs, s1) == frozenset({0})
    assert inversion_set(rs, W.longest) == frozenset({0, 1, 2})


def test_a2_dot_action():
    rs = build_root_system('A2')
    W = enumerate_weyl_group(rs)
    zero = (0, 0)
    assert dot_action(rs, W.identity, zero) == zero
    assert dot_action(rs, W.element_for_word([0]), zero) == (-2, 1)
    assert dot_action(rs, W.longest, zero) == (-2, -2)


def test_element_for_word_collapses_words():
    W = enumerate_weyl_group(build_root_system('A2'))
    assert W.element_for_word([0, 1, 0]).index == W.element_for_word([1, 0, 1]).index
    assert W.element_for_word([0, 0]).index == W.identity.index


@pytest.mark.parametrize('label, expected', [('A1', [1, 1]), ('A2', [1, 2, 2, 1]), ('B2', [1, 2, 2, 2, 1])])
def test_poincare_polynomial(label, expected):
    assert poincare_polynomial(enumerate_weyl_group(build_root_system(label))) == expected


@pytest.mark.parametrize('label', supported_types())
def test_inversion_set_properties(label):
    rs = build_root_system(label)
    W = enumerate_weyl_group(rs)
    seen = set()
    for w in W:
        phi = inversion_set(rs, w)
        assert len(phi) == w.length
        assert W.dot_zero(w.index) == tuple(-x for x in sum_of_subset(rs, phi))
        seen.add(phi)
    assert len(seen) == W.order

    poincare = poincare_polynomial(W)
    assert sum(poincare) == W.order
    assert len(poincare) == rs.num_positive + 1
    assert poincare[-1] == 1


def test_cap():
    with pytest.raises(GroupTooLarge):
        enumerate_weyl_group(build_root_system('B3'), cap=10)
