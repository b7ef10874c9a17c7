import json

import pytest

from nilcoh import main
from nilcoh.main import run


def _report(capsys, argv):
    code = run(argv)
    return code, json.loads(capsys.readouterr().out)


def test_kostant_a2(capsys):
    code, report = _report(capsys, ['kostant', '--type', 'A2'])
    assert code == 0
    assert report['schema'] == 'nilcoh/1'
    assert report['status'] == 'pass'
    assert report['config']['type_label'] == 'A2'
    assert report['degrees']['1']['free_rank'] == 2
    assert report['provenance']['degrees'] == 'kostantcheck.verify_kostant'


def test_roots_a1(capsys):
    code, report = _report(capsys, ['roots', '--type', 'A1'])
    assert code == 0
    assert report['status'] == 'ok'
    assert len(report['root_system']['positive_roots']) == 1


@pytest.mark.parametrize('argv', [
    ['kostant', '--type', 'Z9'],
    ['kostant', '--type', 'A2', '--bogus'],
    ['roots'],
    ['unipotent', '--type', 'A2', '--p', '3'],
    ['unipotent', '--type', 'A2', '--verify', 'lcs,nonsense'],
    ['multiplicity', '--type', 'A1', '--d', '2', '--galois', 'perm:(0 1)', '--oracle', '3'],
    ['specseq'],
])
def test_usage_errors(capsys, argv):
    assert run(argv) == 2
    assert 'error' in capsys.readouterr().err


def test_failed_check_exits_one(capsys, monkeypatch):
    monkeypatch.setitem(main.ANALYZERS, 'roots', lambda config: ('fail', {}, {}, []))
    assert run(['roots', '--type', 'A1']) == 1
    assert json.loads(capsys.readouterr().out)['status'] == 'fail'


def test_tsv_sections(capsys):
    assert run(['kostant', '--type', 'A2', '--format', 'tsv']) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == '# section: degrees (kostantcheck.verify_kostant)'
    assert lines[1].split('\t')[0] == 'degree'
    assert len(lines) == 2 + 4


def test_output_is_deterministic(capsys):
    run(['cohomology', '--type', 'B2', '--jobs', '1'])
    first = capsys.readouterr().out
    run(['cohomology', '--type', 'B2', '--jobs', '1'])
    assert capsys.readouterr().out == first


def test_out_file(tmp_path):
    path = tmp_path / 'reports' / 'weyl.json'
    assert run(['weyl', '--type', 'A2', '--out', str(path)]) == 0
    report = json.loads(path.read_text())
    assert report['order'] == 6
    assert report['poincare'] == [1, 2, 2, 1]


def test_multiplicity_with_oracle(capsys):
    code, report = _report(capsys, ['multiplicity', '--type', 'A1', '--d', '2', '--degree', '1', '--oracle', '3'])
    assert code == 0
    result = report['multiplicity']
    assert result['cohomology_rank'] == 2
    assert result['characters'][0]['oracle_rank'] == 2


def test_specseq_weight_filtration(capsys):
    code, report = _report(capsys, ['specseq', '--from-weight-filtration', 'A2', '--p', '7'])
    assert code == 0
    assert report['e_infinity_total'] == [1, 2, 2, 1]
    assert report['collapse']['certified']


def test_specseq_input(capsys, tmp_path):
    doc = {'p': 5, 'matrices': [[[1]]], 'filtration': [[[[1]], []], [[[1]], [[1]]]]}
    path = tmp_path / 'complex.json'
    path.write_text(json.dumps(doc))
    code, report = _report(capsys, ['specseq', '--input', str(path)])
    assert code == 0
    assert report['homology'] == [0, 0]
    assert report['stable_from'] == 2
    assert not report['collapse']['certified']


def test_unipotent(capsys):
    code, report = _report(capsys, ['unipotent', '--type', 'A2'])
    assert code == 0
    assert [level['order'] for level in report['lcs']['levels']] == [125, 5, 1]
    assert report['pbw']['status'] == 'pass'


def test_kostant_golden(capsys, golden):
    code, report = _report(capsys, ['kostant', '--type', 'B2'])
    assert code == 0
    golden('kostant_b2', {'coxeter': report['coxeter'], 'degrees': report['degrees']})


def test_unwritable_out_is_a_usage_error(capsys, tmp_path):
    blocker = tmp_path / 'taken'
    blocker.write_text('')
    assert run(['weyl', '--type', 'A2', '--out', str(blocker / 'weyl.json')]) == 2
    assert capsys.readouterr().err.startswith('nilcoh: error:')
