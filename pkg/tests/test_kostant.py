import pytest

from nilcoh.checks import kostant_predict, verify_kostant, highest_weight_check
from nilcoh.homology import build_ce_complex, cohomology
from nilcoh.lie import build_root_system, coxeter_number, enumerate_weyl_group, chevalley_structure_constants


def _pipeline(label):
    rs = build_root_system(label)
    W = enumerate_weyl_group(rs)
    C = build_ce_complex(chevalley_structure_constants(rs))
    return rs, W, C, cohomology(C)


def test_a2_prediction():
    rs = build_root_system('A2')
    prediction = kostant_predict(rs, enumerate_weyl_group(rs))
    assert prediction.degrees[0] == [(0, 0)]
    assert sorted(prediction.degrees[1]) == [(-2, 1), (1, -2)]
    assert prediction.degrees[3] == [(-2, -2)]
    assert prediction.total == 6


@pytest.mark.parametrize('label', ['A1', 'A2', 'A3', 'B2', 'G2'])
def test_verify_kostant(label):
    rs, W, C, result = _pipeline(label)
    report = verify_kostant(kostant_predict(rs, W), result, coxeter_number(rs))
    assert report['status'] == 'pass', report['mismatches']
    assert [report['degrees'][str(n)]['free_rank'] for n in range(len(result.degrees))] == result.ranks


@pytest.mark.slow
@pytest.mark.parametrize('label', ['B3', 'C3'])
def test_verify_kostant_rank_three(label):
    rs, W, C, result = _pipeline(label)
    assert verify_kostant(kostant_predict(rs, W), result, coxeter_number(rs))['status'] == 'pass'


def test_a1_degrees():
    rs, W, C, result = _pipeline('A1')
    report = verify_kostant(kostant_predict(rs, W), result, coxeter_number(rs))
    assert report['degrees']['0']['free_rank'] == 1
    assert report['degrees']['1']['free_rank'] == 1
    assert kostant_predict(rs, W).degrees[1] == [(-2,)]


def test_corrupted_prediction_fails():
    rs, W, C, result = _pipeline('A2')
    corrupted = kostant_predict(rs, W).drop(1, (-2, 1))
    report = verify_kostant(corrupted, result, coxeter_number(rs))
    assert report['status'] == 'fail'
    assert report['mismatches'] == [{'degree': 1, 'weight': [-2, 1], 'predicted': 0, 'computed': 1}]
    assert not report['degrees']['1']['ok']
    assert report['degrees']['2']['ok']


@pytest.mark.parametrize('label', ['A2', 'B2', 'G2'])
def test_highest_weight_monomials(label):
    rs, W, C, result = _pipeline(label)
    report = highest_weight_check(C, W, result)
    assert report['status'] == 'pass', report['failures']
    assert report['checked'] == W.order
