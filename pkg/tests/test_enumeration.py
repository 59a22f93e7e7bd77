import pytest

from groupcensus import (
    CapExceeded,
    count_groups,
    cyclic,
    dihedral,
    enumerate_groups,
    enumerate_groups_uncached,
    is_isomorphic,
    naive_count_groups,
    search_group_tables,
    symmetric,
    universe,
    validate_table,
)
from groupcensus.enumeration import _HAVE_KERNEL

# Class counts confirmed against the naive oracle (n <= 8) and by the
# uniform-cycle/labeled-count cross-checks; frozen here for regression.
EXPECTED_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5, 9: 2, 10: 2, 11: 1, 12: 5}


def test_count_groups_matches_expected():
    for n, expected in EXPECTED_COUNTS.items():
        assert count_groups(n) == expected, f"order {n}"


def test_counts_match_naive_oracle():
    for n in range(1, 9):
        assert count_groups(n) == naive_count_groups(n), f"order {n}"


def test_naive_oracle_rejects_out_of_range():
    with pytest.raises(CapExceeded):
        naive_count_groups(9)
    with pytest.raises(CapExceeded):
        naive_count_groups(0)


def test_enumeration_is_deterministic():
    # Orders 1..10 here; the acceptance suite re-checks through 12.
    for n in range(1, 11):
        first = enumerate_groups(n)
        second = enumerate_groups_uncached(n)
        assert [r.fingerprint for r in first] == [r.fingerprint for r in second]
        assert [r.representative.table for r in first] == [
            r.representative.table for r in second
        ]


def test_engines_agree():
    if not _HAVE_KERNEL:
        pytest.skip("compiled kernel unavailable")
    for n in range(1, 9):
        py = set(search_group_tables(n, engine="python"))
        fast = set(search_group_tables(n, engine="kernel"))
        assert py == fast, f"order {n}"
    for n in (4, 5, 6):
        py = set(search_group_tables(n, canonical=False, engine="python"))
        fast = set(search_group_tables(n, canonical=False, engine="kernel"))
        assert py == fast, f"order {n} (no canonical reduction)"


def test_representatives_are_valid_groups(universe12):
    for rec in universe12:
        g = validate_table(rec.representative.table)
        assert g.order == rec.order


def test_representatives_pairwise_non_isomorphic(universe12):
    by_order = {}
    for rec in universe12:
        by_order.setdefault(rec.order, []).append(rec.representative)
    for order, reps in by_order.items():
        for i in range(len(reps)):
            for j in range(i + 1, len(reps)):
                assert not is_isomorphic(reps[i], reps[j]), f"order {order}"


def test_known_classes_present():
    six = enumerate_groups(6)
    assert any(is_isomorphic(r.representative, cyclic(6)) for r in six)
    assert any(is_isomorphic(r.representative, symmetric(3)) for r in six)
    eight = enumerate_groups(8)
    star8 = [r for r in eight if r.census.deficiency == 1]
    assert len(star8) == 1
    assert is_isomorphic(star8[0].representative, dihedral(8))


def test_records_carry_census_and_recognition():
    for rec in enumerate_groups(8):
        assert rec.census.group_order == 8
        assert rec.census.deficiency == 8 - rec.census.total
    names = {r.recognized for r in enumerate_groups(8)}
    assert "cyclic(8)" in names
    assert "dihedral(8)" in names
    assert "generalized_quaternion(8)" in names
    assert "elementary_abelian_2(3)" in names


def test_cap_enforcement():
    with pytest.raises(CapExceeded):
        enumerate_groups(13)
    with pytest.raises(CapExceeded):
        enumerate_groups(0)
    with pytest.raises(CapExceeded):
        enumerate_groups(17, extended=True)
    with pytest.raises(CapExceeded):
        universe(13)
    assert count_groups(13, extended=True) == 1


def test_universe_is_concatenation(universe8):
    expected = [rec for n in range(1, 9) for rec in enumerate_groups(n)]
    assert universe8 == expected


def test_universe_jobs_order_independent(universe8):
    assert universe(8, jobs=2) == universe8
