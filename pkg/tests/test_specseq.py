import json

import numpy as np
import pytest

from nilcoh.errors import ConfigError, InvalidFiltration
from nilcoh.homology import (FilteredComplex, build_ce_complex, pages, gr_of_cohomology, collapse_certificate,
                             weight_height_filtration, random_filtered_complex)
from nilcoh.main import run


def _two_step():
    # C^0 = C^1 = F with d = 1, C^0 in filtration 0 and C^1 in filtration 1
    return FilteredComplex([[[1]]], [[[[1]], []], [[[1]], [[1]]]], 5)


def test_trivial_filtration_stabilizes_at_first_page():
    C = FilteredComplex([[[1, 0]], [[0]]], [[[[1, 0], [0, 1]]], [[[1]]], [[[1]]]], 5, dims=[2, 1, 1])
    result, stable_from = pages(C)
    assert stable_from == 1
    assert result[0].totals(C.top) == [2, 1, 1]
    assert result[1].totals(C.top) == C.cohomology_dims() == [1, 0, 1]


def test_differential_kills_on_second_page():
    C = _two_step()
    result, stable_from = pages(C, up_to=5)
    assert len(result) == 6
    assert result[1].entries == {(0, 0): 1, (1, 0): 1}
    assert result[2].entries == {}
    assert stable_from == 2
    assert gr_of_cohomology(C) == {}


def test_heisenberg_weight_filtration(algebra):
    C = weight_height_filtration(build_ce_complex(algebra('A2')), 7)
    result, stable_from = pages(C)
    assert result[-1].totals(C.top) == [1, 2, 2, 1]
    assert gr_of_cohomology(C) == result[-1].entries
    assert stable_from == 1


def test_random_complexes_converge():
    rng = np.random.default_rng(11)
    for _ in range(200):
        C = random_filtered_complex(rng, 5)
        result, stable_from = pages(C)
        assert result[-1].totals(C.top) == C.cohomology_dims()
        assert gr_of_cohomology(C) == result[-1].entries
        totals = [sum(page.entries.values()) for page in result]
        assert all(a >= b for a, b in zip(totals[1:], totals[2:]))
        assert 1 <= stable_from <= C.length + 1


def test_collapse_certificate():
    assert collapse_certificate([1, 2, 2, 1], [1, 2, 2, 1]) == {'certified': True, 'first_mismatch': None}
    assert collapse_certificate([1, 3, 3, 1], [1, 2, 2, 1]) == {'certified': False, 'first_mismatch': 1}
    assert collapse_certificate([1, 2], [1, 2, 0])['certified']


def test_filtration_must_start_with_everything():
    with pytest.raises(InvalidFiltration):
        FilteredComplex([], [[[[1, 0]]]], 5, dims=[2])


def test_filtration_must_be_nested():
    with pytest.raises(InvalidFiltration):
        FilteredComplex([], [[[[1, 0], [0, 1]], [[1, 0]], [[0, 1]]]], 5, dims=[2])


def test_differential_must_preserve_filtration():
    with pytest.raises(InvalidFiltration):
        FilteredComplex([[[1]]], [[[[1]], [[1]]], [[[1]], []]], 5)


def test_from_json_over_rationals():
    doc = {'p': 0, 'dims': [1, 1], 'matrices': [[[2]]], 'filtration': [[[[1]]], [[[1]]]]}
    C = FilteredComplex.from_json(doc)
    assert C.cohomology_dims() == [0, 0]
    result, _ = pages(C)
    assert result[-1].entries == {}


def test_from_json_missing_key():
    with pytest.raises(ConfigError):
        FilteredComplex.from_json({'matrices': []})


@pytest.mark.parametrize('doc', [
    {'p': 5, 'dims': [1, 1], 'matrices': [[[1, 2]]], 'filtration': [[[[1]]], [[[1]]]]},
    {'p': 5, 'matrices': [[[1], [1, 2]]], 'filtration': [[[[1]]], [[[1, 0], [0, 1]]]]},
    {'p': 5, 'dims': [1, 1], 'matrices': [[[1]]], 'filtration': [[[[1, 1]]], [[[1]]]]},
    {'p': 5, 'dims': [1, 1], 'matrices': [[['a']]], 'filtration': [[[[1]]], [[[1]]]]},
    [1, 2],
])
def test_from_json_malformed(doc):
    with pytest.raises(ConfigError):
        FilteredComplex.from_json(doc)


def test_malformed_input_is_a_usage_error(capsys, tmp_path):
    doc = {'p': 5, 'dims': [1, 1], 'matrices': [[[1, 2]]], 'filtration': [[[[1]]], [[[1]]]]}
    path = tmp_path / 'complex.json'
    path.write_text(json.dumps(doc))
    assert run(['specseq', '--input', str(path)]) == 2
    assert 'd_0 has shape 1 x 2' in capsys.readouterr().err


def test_page_to_dict():
    result, _ = pages(_two_step())
    assert result[0].to_dict() == {'r': 0, 'entries': [{'s': 0, 't': 0, 'dim': 1}, {'s': 1, 't': 0, 'dim': 1}]}
