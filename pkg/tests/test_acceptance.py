"""Acceptance suite: one test per criterion, each emitting a pass/fail line.

Criteria 2-6 quantify over the full enumerated universe of orders 1..12;
criterion 9 over orders 1..10.  All checks are exact (no tolerances).
"""
import math

from groupcensus import (
    build,
    census,
    check_star_identity,
    check_totient_identity,
    count_groups,
    cyclic,
    dihedral,
    direct_product,
    element_orders,
    enumerate_groups_uncached,
    euler_phi,
    is_elementary_abelian_2,
    is_isomorphic,
    is_p_group,
    naive_count_groups,
    parse_family_spec,
    symmetric,
    totient_preimage,
)


def _report(num: int, description: str, ok: bool) -> None:
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {description}")
    assert ok, f"criterion {num}: {description}"


def test_criterion_01_star_group_reproduction():
    totals = {
        "cyclic:3": census(build(parse_family_spec("cyclic:3"))).total,
        "cyclic:4": census(build(parse_family_spec("cyclic:4"))).total,
        "symmetric:3": census(build(parse_family_spec("symmetric:3"))).total,
        "dihedral:8": census(build(parse_family_spec("dihedral:8"))).total,
    }
    ok = totals == {"cyclic:3": 2, "cyclic:4": 3, "symmetric:3": 5, "dihedral:8": 7}
    _report(1, f"star-group census totals |G|-1: {totals}", ok)


def test_criterion_02_theorem1_on_universe(universe12):
    zero = [r for r in universe12 if r.census.deficiency == 0]
    elem = [r for r in universe12 if is_elementary_abelian_2(r.representative)]
    ok = (
        zero == elem
        and len(zero) == 4
        and [r.order for r in zero] == [1, 2, 4, 8]
    )
    _report(2, f"deficiency 0 exactly for elementary abelian 2-groups "
               f"(orders {[r.order for r in zero]})", ok)


def test_criterion_03_theorem2_on_universe(universe12):
    star = [r for r in universe12 if r.census.deficiency == 1]
    expected = [cyclic(3), cyclic(4), symmetric(3), dihedral(8)]
    ok = len(star) == 4 and all(
        any(is_isomorphic(r.representative, g) for r in star) for g in expected
    )
    _report(3, f"deficiency 1 for exactly 4 classes at orders "
               f"{[r.order for r in star]}", ok)


def test_criterion_04_corollary_on_universe(universe12):
    star = [r for r in universe12 if r.census.deficiency == 1]
    non_p = [r for r in star if is_p_group(r.representative) is None]
    ok = len(non_p) == 1 and is_isomorphic(non_p[0].representative, symmetric(3))
    _report(4, "unique non-p-group star class is isomorphic to symmetric(3)", ok)


def test_criterion_05_totient_identity(universe12):
    failures = [r for r in universe12 if not check_totient_identity(r.census)]
    _report(5, f"totient identity holds on all {len(universe12)} classes "
               f"({len(failures)} failures)", not failures)


def test_criterion_06_star_identity_equivalence(universe12):
    failures = [
        r for r in universe12
        if check_star_identity(r.census) != (r.census.deficiency == 1)
    ]
    _report(6, f"star identity <=> deficiency 1 on all {len(universe12)} classes "
               f"({len(failures)} failures)", not failures)


def test_criterion_07_enumeration_correctness():
    oracle_ok = all(count_groups(n) == naive_count_groups(n) for n in range(1, 9))
    determinism_ok = all(
        count_groups(n) == len(enumerate_groups_uncached(n)) for n in range(1, 13)
    )
    _report(7, f"counts match naive oracle (n<=8): {oracle_ok}; "
               f"re-run determinism (n<=12): {determinism_ok}",
            oracle_ok and determinism_ok)


def test_criterion_08_totient_case_split():
    two = totient_preimage(2, 1000)
    one = totient_preimage(1, 1000)
    ok = two == [3, 4, 6] and one == [1, 2]
    _report(8, f"phi preimages: phi(d)=2 -> {two}, phi(d)=1 -> {one}", ok)


def test_criterion_09_element_order_consistency(universe10):
    failures = 0
    for rec in universe10:
        tally = element_orders(rec.representative)
        for d, n_d in zip(rec.census.divisors, rec.census.counts):
            if tally.count(d) != n_d * euler_phi(d):
                failures += 1
    _report(9, f"element-order tallies equal n_d*phi(d) over universe(10) "
               f"({failures} failures)", failures == 0)


def test_criterion_10_coprime_multiplicativity():
    pool = [cyclic(2), cyclic(3), cyclic(4), cyclic(5), symmetric(3)]
    checked = 0
    ok = True
    for i, g in enumerate(pool):
        for h in pool[i + 1:]:
            if math.gcd(g.order, h.order) != 1:
                continue
            checked += 1
            prod = direct_product(g, h, max_order=30)
            if census(prod).total != census(g).total * census(h).total:
                ok = False
    _report(10, f"|C(GxH)| = |C(G)|*|C(H)| on {checked} coprime pairs", ok and checked > 0)
