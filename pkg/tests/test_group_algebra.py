import pytest

from nilcoh.errors import CapExceeded
from nilcoh.groups import (TruncGroupAlgebra, make_group, pbw_monomials, pbw_weight_count, augmentation_powers,
                           pbw_independence_check, frattini_rank)


def test_pbw_counts(root_system):
    rs = root_system('A2')
    assert [pbw_monomials(rs, 1, n).count for n in range(3)] == [1, 2, 4]
    assert [pbw_weight_count(rs, 1, n) for n in range(4)] == [1, 2, 4, 6]
    assert pbw_monomials(rs, 1, 2).monomials == [(0, 0, 1), (0, 2, 0), (1, 1, 0), (2, 0, 0)]
    assert pbw_weight_count(root_system('A1'), 2, 3) == 4


def test_dense_augmentation_heisenberg(root_system):
    assert augmentation_powers(make_group(root_system('A2'), 5), 3, method='dense') == [1, 2, 4, 6]


def test_dense_augmentation_cyclic(root_system):
    assert augmentation_powers(make_group(root_system('A1'), 5), 5, method='dense') == [1, 1, 1, 1, 1, 0]


@pytest.mark.parametrize('label, p, n_max', [('A1', 7, 7), ('A2', 5, 3), ('B2', 5, 2)])
def test_dense_matches_dual(root_system, label, p, n_max):
    G = make_group(root_system(label), p)
    algebra = TruncGroupAlgebra(G)
    assert algebra.augmentation_dims_dense(n_max) == algebra.augmentation_dims_dual(n_max)


def test_pbw_independence(root_system):
    report = pbw_independence_check(make_group(root_system('A2'), 5), 3)
    assert report['status'] == 'pass'
    assert all(row['in_power'] and row['independent'] for row in report['degrees'])
    assert all(row['dim_equals_count'] for row in report['degrees'])


@pytest.mark.slow
def test_pbw_independence_mod_25(root_system, golden):
    report = pbw_independence_check(make_group(root_system('A2'), 5, k=2), 2)
    assert report['status'] == 'pass'
    assert report['degrees'][1]['dim'] == 2
    golden('pbw_a2_p5_k2', report['degrees'])


@pytest.mark.parametrize('label', ['A2', 'B2'])
def test_frattini_matches_first_quotient(root_system, label):
    G = make_group(root_system(label), 5)
    assert frattini_rank(G) == augmentation_powers(G, 1)[1]


def test_caps(root_system):
    G = make_group(root_system('A2'), 5, k=2)
    with pytest.raises(CapExceeded):
        augmentation_powers(G, 1, method='dense')
    with pytest.raises(CapExceeded):
        TruncGroupAlgebra(make_group(root_system('A2'), 5), cap=100)
