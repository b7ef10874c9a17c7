import pytest

from nilcoh.data import Settings, supported_types
from nilcoh.errors import UnsupportedType
from nilcoh.lie import build_root_system, coxeter_number, sum_of_subset


def test_a2_positive_roots():
    rs = build_root_system('A2')
    assert [root.coords for root in rs.positive_roots] == [(1, 0), (0, 1), (1, 1)]
    assert rs.heights == (1, 1, 2)
    assert rs.rho == (1, 1)


def test_a1_single_root():
    rs = build_root_system('A1')
    assert rs.num_positive == 1
    assert rs.heights == (1,)


def test_b2_heights_and_lengths():
    rs = build_root_system('B2')
    assert [root.coords for root in rs.positive_roots] == [(1, 0), (0, 1), (1, 1), (1, 2)]
    assert rs.heights == (1, 1, 2, 3)
    # Bourbaki numbering: alpha_2 is the short simple root
    assert rs.root_length(0) == 4
    assert rs.root_length(1) == 2
    assert rs.highest_root.coords == (1, 2)


def test_bare_letter_with_rank():
    assert build_root_system('c', 3).name == 'C3'


@pytest.mark.parametrize('label, expected', [('A1', 2), ('A2', 3), ('B2', 4), ('B3', 6), ('C3', 6),
                                             ('D4', 6), ('G2', 6), ('A4', 5)])
def test_coxeter_number(label, expected):
    assert coxeter_number(build_root_system(label)) == expected


def test_sum_of_subset():
    rs = build_root_system('A2')
    assert sum_of_subset(rs, []) == (0, 0)
    assert sum_of_subset(rs, [0, 1, 2]) == (2, 2)
    assert sum_of_subset(rs, [0]) == (2, -1)


@pytest.mark.parametrize('label', supported_types())
def test_root_system_properties(label):
    rs = build_root_system(label)
    A = rs.cartan_matrix
    assert all(A[i, i] == 2 for i in range(rs.rank))
    assert all(A[i, j] <= 0 for i in range(rs.rank) for j in range(rs.rank) if i != j)

    everything = sum_of_subset(rs, range(rs.num_positive))
    assert everything == tuple(2 * x for x in rs.rho)

    for a in rs.positive_roots:
        for b in rs.positive_roots:
            total = tuple(x + y for x, y in zip(a.coords, b.coords))
            index = rs.root_index(total)
            if index is not None:
                assert rs.positive_roots[index].height == a.height + b.height

    assert coxeter_number(rs) == rs.highest_root.height + 1
    if rs.is_simply_laced:
        for root in rs.positive_roots:
            assert rs.coroot_pairing(root.coords, rs.rho) == root.height


@pytest.mark.parametrize('label', ['Z9', 'A9', 'B1', 'D3', 'G3', ''])
def test_unsupported_types(label):
    with pytest.raises(UnsupportedType):
        build_root_system(label)


def test_exceptional_types_need_opt_in(monkeypatch):
    with pytest.raises(UnsupportedType):
        build_root_system('F4')

    monkeypatch.setenv('NILCOH_ALLOW_EXCEPTIONAL', '1')
    Settings.reset()
    rs = build_root_system('F4')
    assert rs.num_positive == 24
    assert coxeter_number(rs) == 12


def test_to_dict():
    data = build_root_system('A2').to_dict()
    assert data['type'] == 'A'
    assert data['cartan'] == [[2, -1], [-1, 2]]
    assert data['coxeter'] == 3
    assert [r['height'] for r in data['positive_roots']] == [1, 1, 2]
