import pytest

from groupcensus import (
    BadParameters,
    FamilySpec,
    NotAPermutation,
    OrderOverflow,
    build,
    census,
    cyclic,
    dihedral,
    direct_product,
    element_orders,
    elementary_abelian_2,
    from_permutations,
    generalized_quaternion,
    is_abelian,
    is_isomorphic,
    parse_family_spec,
    parse_permutations,
    recognize,
    symmetric,
)


def test_cyclic_orders():
    for n in (1, 2, 5, 12):
        g = cyclic(n)
        assert g.order == n
        assert is_abelian(g)
    with pytest.raises(BadParameters):
        cyclic(0)
    with pytest.raises(OrderOverflow):
        cyclic(25)


def test_dihedral_relations():
    # dihedral(N) is the dihedral group OF order N (N = 2m, m >= 1).
    g = dihedral(8)
    assert g.order == 8
    m = 4
    r, s = 1, m  # index layout: k < m is r^k, m + k is s r^k
    rm = 0
    for _ in range(m):
        rm = g.mul(rm, r)
    assert rm == 0  # r^m = e
    assert g.mul(s, s) == 0  # s^2 = e
    # s r s = r^-1
    assert g.mul(g.mul(s, r), s) == g.inverse(r)
    with pytest.raises(BadParameters):
        dihedral(5)
    with pytest.raises(BadParameters):
        dihedral(0)


def test_dihedral_involution_counts():
    # m odd: exactly m reflections of order 2; m even: m + 1 involutions.
    for order in (6, 10):
        m = order // 2
        invs = [o for o in element_orders(dihedral(order)) if o == 2]
        assert len(invs) == m
    for order in (4, 8, 12):
        m = order // 2
        invs = [o for o in element_orders(dihedral(order)) if o == 2]
        assert len(invs) == m + 1


def test_symmetric():
    assert symmetric(1).order == 1
    assert symmetric(2).order == 2
    assert symmetric(3).order == 6
    assert symmetric(4).order == 24
    assert not is_abelian(symmetric(3))
    assert is_isomorphic(symmetric(3), dihedral(6))
    with pytest.raises(OrderOverflow):
        symmetric(5)  # order 120 is far past the table cap


def test_generalized_quaternion():
    q8 = generalized_quaternion(8)
    assert q8.order == 8
    # Q8 has a unique involution and six elements of order 4.
    orders = sorted(element_orders(q8))
    assert orders == [1, 2, 4, 4, 4, 4, 4, 4]
    assert census(q8).counts == (1, 1, 3, 0)
    q12 = generalized_quaternion(12)
    assert sorted(element_orders(q12)).count(4) == 6
    with pytest.raises(BadParameters):
        generalized_quaternion(6)


def test_elementary_abelian_2():
    for k in (0, 1, 2, 3, 4):
        g = elementary_abelian_2(k)
        assert g.order == 2**k
        assert all(o <= 2 for o in element_orders(g))
        assert is_abelian(g)
    with pytest.raises(OrderOverflow):
        elementary_abelian_2(5)


def test_build_and_parse_family_spec():
    assert build(parse_family_spec("cyclic:4")).order == 4
    assert build(parse_family_spec("dihedral:8")).order == 8
    prod = build(parse_family_spec("product:cyclic:2,cyclic:4"))
    assert prod.order == 8
    assert is_isomorphic(prod, direct_product(cyclic(2), cyclic(4)))
    assert str(parse_family_spec("cyclic:4")) == "cyclic:4"
    for bad in ("frobnitz:3", "cyclic", "cyclic:x", "product:", "cyclic:1:2"):
        with pytest.raises(BadParameters):
            parse_family_spec(bad)


def test_from_permutations():
    four_cycle = from_permutations(4, [[1, 2, 3, 0]])
    assert four_cycle.order == 4
    assert is_isomorphic(four_cycle, cyclic(4))
    s3 = from_permutations(3, [[1, 0, 2], [1, 2, 0]])
    assert s3.order == 6
    assert is_isomorphic(s3, symmetric(3))
    with pytest.raises(NotAPermutation):
        from_permutations(3, [[0, 0, 1]])
    with pytest.raises(OrderOverflow):
        from_permutations(5, [[1, 2, 3, 4, 0], [1, 0, 2, 3, 4]])  # S5, order 120


def test_parse_permutations():
    degree, gens = parse_permutations("# S3 generators\n3\n1 0 2\n1 2 0\n")
    assert degree == 3
    assert gens == [[1, 0, 2], [1, 2, 0]]
    with pytest.raises(NotAPermutation):
        parse_permutations("")
    with pytest.raises(NotAPermutation):
        parse_permutations("x\n0 1\n")


def test_recognize_priority_and_labels():
    assert recognize(cyclic(2)) == "cyclic(2)"  # beats elementary_abelian_2(1)
    assert recognize(elementary_abelian_2(2)) == "elementary_abelian_2(2)"
    assert recognize(symmetric(3)) == "dihedral(6)"  # dihedral outranks symmetric
    assert recognize(direct_product(cyclic(2), cyclic(3))) == "cyclic(6)"
    assert recognize(generalized_quaternion(8)) == "generalized_quaternion(8)"
    assert recognize(direct_product(cyclic(2), cyclic(4))) is None


def test_build_unknown_family():
    with pytest.raises(BadParameters):
        build(FamilySpec("frobnitz", (3,)))
