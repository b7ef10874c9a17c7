import pytest

from nilcoh.data import supported_types
from nilcoh.lie import (build_root_system, chevalley_structure_constants, weil_restrict, jacobi_check,
                        flip_bracket_sign, galois_permutation, lie_lower_central_series)


def test_a2_heisenberg(algebra):
    L = algebra('A2')
    assert L.dim == 3
    assert set(L.bracket_table) == {(0, 1), (1, 0)}
    assert abs(L.bracket(0, 1)[2]) == 1
    assert L.bracket(1, 0)[2] == -L.bracket(0, 1)[2]


def test_a1_abelian(algebra):
    assert algebra('A1').bracket_table == {}


def test_b2_constant_two(algebra):
    L = algebra('B2')
    # alpha_2 short: [x_a2, x_(a1+a2)] = +-2 x_(a1+2a2)
    assert abs(L.bracket(1, 2)[3]) == 2
    assert abs(L.bracket(0, 1)[2]) == 1
    assert L.bracket(0, 2) == {}


def test_g2_constants(algebra):
    L = algebra('G2')
    magnitudes = {abs(c) for terms in L.bracket_table.values() for c in terms.values()}
    assert magnitudes == {1, 2, 3}


@pytest.mark.parametrize('label, prime', [('A2', 5), ('A4', 5), ('B3', 7), ('G2', 7)])
def test_min_valid_prime(algebra, label, prime):
    assert algebra(label).min_valid_prime == prime


@pytest.mark.parametrize('label', supported_types())
def test_jacobi_and_grading(algebra, label):
    L = algebra(label)
    report = jacobi_check(L)
    assert report.passed, report.violation
    for (i, j), terms in L.bracket_table.items():
        for k in terms:
            assert L.grading[k] == L.grading[i] + L.grading[j]


def test_weil_restriction(algebra):
    L = algebra('A2')
    assert weil_restrict(L, 1) is L

    N = weil_restrict(L, 2)
    assert N.dim == 6
    assert N.bracket(3, 4) == {5: L.bracket(0, 1)[2]}
    assert N.bracket(0, 4) == {}
    assert N.bracket(3, 1) == {}
    assert jacobi_check(N).passed
    assert N.weight(4) == (1, (-1, 2))

    A = weil_restrict(algebra('A1'), 3)
    assert A.dim == 3
    assert A.bracket_table == {}


def test_galois_permutation(algebra):
    N = weil_restrict(algebra('A2'), 2)
    assert galois_permutation(N, 1) == [3, 4, 5, 0, 1, 2]
    assert galois_permutation(N, 2) == list(range(6))


def test_flipped_sign_fails_antisymmetry(algebra):
    broken = flip_bracket_sign(algebra('B2'), 1, 2, symmetric=False)
    report = jacobi_check(broken)
    assert not report.passed
    assert report.violation['kind'] == 'antisymmetry'
    assert report.violation['triple'] == [1, 2]


def test_flipped_sign_fails_jacobi(algebra):
    broken = flip_bracket_sign(algebra('A3'), 0, 1)
    report = jacobi_check(broken)
    assert not report.passed
    assert report.violation['kind'] == 'jacobi'
    assert len(report.violation['triple']) == 3


def test_lie_lower_central_series(algebra):
    levels = lie_lower_central_series(algebra('A2'))
    assert [level['dim'] for level in levels] == [3, 1, 0]
    assert all(level['matches'] for level in levels)

    assert all(level['matches'] for level in lie_lower_central_series(algebra('B2'), 5))
    # the constant 2 of B2 vanishes mod 2, so [u, u] misses the highest root
    assert not all(level['matches'] for level in lie_lower_central_series(algebra('B2'), 2))


def test_to_dict(algebra):
    data = algebra('A2').to_dict()
    assert data['dim'] == 3
    assert len(data['brackets']) == 1
    assert data['brackets'][0]['i'] == 0 and data['brackets'][0]['j'] == 1
