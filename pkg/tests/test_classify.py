import pytest

from groupcensus import (
    TRIVIAL,
    StarWithoutIdentity,
    build,
    census,
    cyclic,
    deficiency_spectrum,
    dihedral,
    direct_product,
    elementary_abelian_2,
    generalized_quaternion,
    is_elementary_abelian_2,
    is_p_group,
    parse_family_spec,
    satisfies_star,
    symmetric,
    theorem1_holds,
    theorem2_verdict,
)


def test_is_elementary_abelian_2():
    for k in range(4):
        assert is_elementary_abelian_2(elementary_abelian_2(k))
    assert is_elementary_abelian_2(cyclic(1))
    assert is_elementary_abelian_2(cyclic(2))
    assert not is_elementary_abelian_2(cyclic(4))
    assert not is_elementary_abelian_2(dihedral(8))


def test_theorem1_bidirectional():
    groups = [cyclic(1), cyclic(2), cyclic(3), cyclic(4), cyclic(6), symmetric(3),
              dihedral(8), elementary_abelian_2(2), elementary_abelian_2(3),
              generalized_quaternion(8)]
    for g in groups:
        assert theorem1_holds(g)
    # Both directions seen concretely:
    assert census(elementary_abelian_2(3)).deficiency == 0
    assert census(cyclic(4)).deficiency != 0


def test_satisfies_star_exactly_four_families():
    assert satisfies_star(cyclic(3))
    assert satisfies_star(cyclic(4))
    assert satisfies_star(symmetric(3))
    assert satisfies_star(dihedral(8))
    for g in (cyclic(1), cyclic(2), cyclic(5), cyclic(6), cyclic(8),
              generalized_quaternion(8), elementary_abelian_2(3)):
        assert not satisfies_star(g)


def test_is_p_group():
    assert is_p_group(cyclic(1)) == TRIVIAL
    assert is_p_group(cyclic(2)) == 2
    assert is_p_group(cyclic(9)) == 3
    assert is_p_group(dihedral(8)) == 2
    assert is_p_group(cyclic(6)) is None
    assert is_p_group(symmetric(3)) is None


def test_theorem2_verdict_star_groups():
    v = theorem2_verdict(build(parse_family_spec("cyclic:4")))
    assert v.deficiency == 1
    assert v.star_identity == "cyclic(4)"
    assert v.p_group == 2
    v = theorem2_verdict(symmetric(3))
    assert v.star_identity == "symmetric(3)"
    assert v.p_group is None
    v = theorem2_verdict(dihedral(8))
    assert v.star_identity == "dihedral(8)"


def test_theorem2_verdict_non_star():
    v = theorem2_verdict(cyclic(5))
    assert v.total_cyclic == 2
    assert v.deficiency == 3
    assert v.star_identity is None
    assert not v.satisfies_star


def test_verdict_serialization_keys():
    d = theorem2_verdict(cyclic(4)).to_dict()
    assert list(d.keys()) == [
        "order", "total_cyclic", "deficiency", "elem_abelian_2", "star",
        "star_identity", "p_group",
    ]
    assert d["star"] is True
    assert d["star_identity"] == "cyclic(4)"


def test_deficiency_spectrum(universe12):
    star = deficiency_spectrum(universe12, 1)
    assert [rec.order for rec in star] == [3, 4, 6, 8]
    zero = deficiency_spectrum(universe12, 0)
    assert [rec.order for rec in zero] == [1, 2, 4, 8]
    with pytest.raises(ValueError):
        deficiency_spectrum(universe12, -1)


def test_theorem2_verdict_never_raises_on_universe(universe12):
    for rec in universe12:
        try:
            theorem2_verdict(rec.representative)
        except StarWithoutIdentity as err:  # pragma: no cover - counterexample path
            pytest.fail(f"unexpected star group: {err}")


def test_spectrum_two_members_at_low_order(universe8):
    two = deficiency_spectrum(universe8, 2)
    # Confirmed by brute force: cyclic(6) and Z2 x Z4.
    assert len(two) == 2
    fingerprints = {rec.recognized for rec in two}
    assert "cyclic(6)" in fingerprints
    z2z4 = direct_product(cyclic(2), cyclic(4))
    from groupcensus import is_isomorphic

    assert any(is_isomorphic(rec.representative, z2z4) for rec in two)
