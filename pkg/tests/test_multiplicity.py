import pytest

from nilcoh.checks import (WeylMultiset, parse_galois, enumerate_multisets, orbit_count, corollary_report,
                           galois_invariants_oracle)
from nilcoh.checks.multiplicity import arrangement_series
from nilcoh.errors import ConfigError
from nilcoh.homology import build_ce_complex, cohomology
from nilcoh.lie import weil_restrict


def _multiset(W, entries):
    return next(m for m in enumerate_multisets(W, len(entries), sum(W[i].length for i in entries))
                if m.entries == tuple(entries))


def test_enumerate_multisets(weyl):
    W = weyl('A1')
    assert [m.entries for m in enumerate_multisets(W, 2, 0)] == [(0, 0)]
    assert [m.entries for m in enumerate_multisets(W, 2, 1)] == [(0, 1)]
    assert [m.entries for m in enumerate_multisets(W, 2, 2)] == [(1, 1)]
    assert enumerate_multisets(W, 2, 3) == []
    assert enumerate_multisets(W, 2, 1)[0].character == (-2,)

    assert len(enumerate_multisets(weyl('A2'), 2, 2)) == 5


def test_arrangements_of_multiset():
    m = WeylMultiset((0, 0, 1), 1, (-2,))
    assert sorted(m.arrangements()) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]


def test_orbit_counts(weyl):
    W = weyl('A1')
    c2 = parse_galois('cyclic', 2)

    report = orbit_count(_multiset(W, (0, 1)), c2)
    assert (report.arrangements, report.orbits, report.burnside) == (2, 1, 1)
    assert report.all_free

    report = orbit_count(_multiset(W, (1, 1)), c2)
    assert (report.arrangements, report.orbits) == (1, 1)
    assert not report.all_free

    report = orbit_count(_multiset(W, (0, 0, 1)), parse_galois('cyclic', 3))
    assert (report.arrangements, report.orbits, report.burnside) == (3, 1, 1)
    assert report.stabilizer_profile == [3]


def test_parse_galois():
    group = parse_galois('perm:(0 1)(2 3);(0 2)', 4)
    assert group.order() == 8
    assert parse_galois('cyclic', 1).order() == 1
    assert parse_galois(None, 3).order() == 3
    assert parse_galois('perm:()', 2).order() == 1


@pytest.mark.parametrize('spec', ['dihedral', 'perm:', 'perm:(0 5)', 'perm:(0 0)', 'perm:(a b)', 'perm:0 1'])
def test_parse_galois_rejects(spec):
    with pytest.raises(ConfigError):
        parse_galois(spec, 4)


def test_arrangement_series(weyl):
    assert arrangement_series(weyl('A1'), 2) == [1, 2, 1]
    assert arrangement_series(weyl('A2'), 2) == [1, 4, 8, 10, 8, 4, 1]


def test_corollary_a1(root_system, weyl):
    rs = root_system('A1')
    report = corollary_report(rs, weyl('A1'), 2, 1, cohomology_rank=2)
    assert report['status'] == 'pass'
    assert report['total_arrangements'] == 2
    assert report['galois_order'] == 2
    [entry] = report['characters']
    assert entry['character'] == [-2]
    assert entry['multiplicity'] == 1
    assert entry['all_free']


def test_corollary_a2(root_system, weyl):
    report = corollary_report(root_system('A2'), weyl('A2'), 2, 2)
    assert report['status'] == 'pass'
    assert report['total_arrangements'] == report['expected_arrangements'] == 8
    assert sum(len(entry['multisets']) for entry in report['characters']) == 5


@pytest.mark.parametrize('n', range(7))
def test_corollary_a2_against_cohomology_and_oracle(root_system, weyl, algebra, n):
    ranks = cohomology(build_ce_complex(weil_restrict(algebra('A2'), 2))).ranks
    report = corollary_report(root_system('A2'), weyl('A2'), 2, n, oracle=3, cohomology_rank=ranks[n])
    assert report['status'] == 'pass'
    assert report['total_arrangements'] == ranks[n]
    for entry in report['characters']:
        assert entry['agrees'] is (True if entry['all_free'] else None)
        if entry['all_free']:
            assert entry['oracle_rank'] == entry['orbit_rank'] == 2 * entry['multiplicity']


def test_corollary_reports_rank_mismatch(root_system, weyl):
    report = corollary_report(root_system('A1'), weyl('A1'), 2, 1, cohomology_rank=3)
    assert report['status'] == 'fail'
    assert report['failures'][0]['problem'] == 'cohomology rank'


def test_oracle_free_orbits(root_system, weyl):
    report = corollary_report(root_system('A1'), weyl('A1'), 2, 1, oracle=3)
    [entry] = report['characters']
    assert entry['oracle_rank'] == 2
    assert entry['orbit_rank'] == 2
    assert entry['agrees'] is True


def test_oracle_stabilised_arrangement(root_system, weyl):
    report = corollary_report(root_system('A1'), weyl('A1'), 2, 0, oracle=3)
    [entry] = report['characters']
    assert entry['oracle_rank'] == 1
    assert entry['orbit_rank'] == 2
    assert entry['agrees'] is None
    assert report['status'] == 'pass'


def test_oracle_needs_matching_totient(root_system, weyl):
    with pytest.raises(ConfigError):
        galois_invariants_oracle(root_system('A1'), weyl('A1'), 2, 1, 5)


def test_oracle_generator(root_system, weyl):
    result = galois_invariants_oracle(root_system('A1'), weyl('A1'), 2, 1, 4)
    assert result['e'] == 2
    assert result['generator'] == 3
