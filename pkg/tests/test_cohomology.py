import numpy as np
import pytest

from nilcoh.checks.multiplicity import arrangement_series
from nilcoh.errors import ConfigError, DimensionCap
from nilcoh.homology import build_ce_complex, cohomology, base_change_rank_check
from nilcoh.homology.cohomology import parse_ring_polynomial
from nilcoh.lie import weil_restrict


def test_abelian_complex_has_zero_differentials(algebra):
    C = build_ce_complex(algebra('A1'))
    assert C.dims() == [1, 1]
    assert all(D.nnz == 0 for D in C.differentials)


def test_heisenberg_differential(algebra):
    C = build_ce_complex(algebra('A2'))
    assert C.dims() == [1, 3, 3, 1]
    d1 = C.differential(1).toarray()
    assert np.linalg.matrix_rank(d1) == 1
    # f_(a1+a2) -> +-f_a1 ^ f_a2
    column = d1[:, C.index[1][(2,)]]
    assert abs(column[C.index[2][(0, 1)]]) == 1
    assert np.count_nonzero(column) == 1


@pytest.mark.parametrize('label', ['A1', 'A2', 'A3', 'B2', 'C3', 'G2', 'A4'])
def test_square_zero_and_weights(algebra, label):
    C = build_ce_complex(algebra(label))
    assert C.check_square_zero() is None
    assert C.check_weight_preserving() is None
    assert C.euler_characteristic() == 0


@pytest.mark.slow
def test_square_zero_d4(algebra):
    C = build_ce_complex(algebra('D4'))
    assert C.check_square_zero() is None


def test_cap(algebra):
    with pytest.raises(DimensionCap):
        build_ce_complex(algebra('A3'), cap=5)


@pytest.mark.parametrize('label, ranks', [('A1', [1, 1]), ('A2', [1, 2, 2, 1]), ('B2', [1, 2, 2, 2, 1])])
def test_ranks(algebra, label, ranks):
    result = cohomology(build_ce_complex(algebra(label)))
    assert result.ranks == ranks
    assert result.euler_characteristic() == 0


def test_a2_has_no_torsion(algebra):
    result = cohomology(build_ce_complex(algebra('A2')))
    assert result.torsion_primes() == []
    nonzero = {label: rank for label, rank in result.degrees[1].weights.items() if rank}
    assert nonzero == {((-2, 1),): 1, ((1, -2),): 1}


def test_small_prime_torsion_is_recorded(algebra):
    result = cohomology(build_ce_complex(algebra('G2')))
    assert all(p < 6 for p in result.torsion_primes())


def test_threads_give_same_answer(algebra):
    C = build_ce_complex(algebra('B2'))
    assert cohomology(C, jobs=1).to_dict() == cohomology(C, jobs=3).to_dict()


def test_specialize(algebra):
    result = cohomology(build_ce_complex(algebra('A2')))
    special = result.specialize(5)
    assert [special[n]['betti_mod_p'] for n in range(4)] == [1, 2, 2, 1]

    b2 = cohomology(build_ce_complex(algebra('B2')))
    for n, values in b2.specialize(2).items():
        assert values['betti_mod_p'] >= values['free_rank']


@pytest.mark.parametrize('label, d', [('A1', 1), ('A1', 2), ('A1', 3), ('A2', 2)])
def test_weil_restriction_rank_law(algebra, weyl, label, d):
    result = cohomology(build_ce_complex(weil_restrict(algebra(label), d)))
    assert result.ranks == arrangement_series(weyl(label), d)


def test_base_change_doubles_ranks(algebra):
    report = base_change_rank_check(algebra('A2'), 'x**2+x+1')
    assert report['status'] == 'pass'
    assert report['e'] == 2
    assert [row['rank_over_R_as_Z'] for row in report['degrees']] == [2, 4, 4, 2]


def test_base_change_trivial_cases(algebra):
    assert base_change_rank_check(algebra('A1'), [1, 0, -2])['status'] == 'pass'
    report = base_change_rank_check(algebra('A2'), 'x')
    assert report['e'] == 1
    assert [row['rank_over_R_as_Z'] for row in report['degrees']] == [1, 2, 2, 1]


@pytest.mark.parametrize('spec', ['2*x**2+1', 'x**2+y', '', [3, 1]])
def test_ring_polynomial_must_be_monic(spec):
    with pytest.raises(ConfigError):
        parse_ring_polynomial(spec)


def test_to_dict(algebra):
    data = cohomology(build_ce_complex(algebra('A2'))).to_dict()
    assert set(data) == {'0', '1', '2', '3'}
    assert data['3'] == {'free_rank': 1, 'torsion': [], 'weights': [{'weight': [-2, -2], 'rank': 1}]}
