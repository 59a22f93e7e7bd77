"""Constructors for the standard group families and permutation-group ingestion.

Naming convention: dihedral(N) is the dihedral group OF ORDER N, so the
order-8 dihedral group is dihedral(8).  generalized_quaternion(4m) is the
dicyclic group of order 4m (Q8 at 4m = 8).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import BadParameters, NotAPermutation, OrderOverflow
from .tables import MAX_GROUP_ORDER, GroupTable, direct_product, is_isomorphic, validate_table

FAMILY_NAMES = (
    "cyclic",
    "dihedral",
    "symmetric",
    "generalized_quaternion",
    "elementary_abelian_2",
    "product",
)

# Tie-break priority for recognize(): cyclic(2) and elementary_abelian_2(1)
# are the same group, so labels need a fixed order.
_RECOGNIZE_PRIORITY = (
    "cyclic",
    "elementary_abelian_2",
    "dihedral",
    "symmetric",
    "generalized_quaternion",
)


@dataclass(frozen=True)
class FamilySpec:
    """A named family member, e.g. cyclic(4) or a direct product of specs."""

    family: str
    parameters: tuple = ()

    def __str__(self) -> str:
        if self.family == "product":
            return "product:" + ",".join(str(p) for p in self.parameters)
        return f"{self.family}:{':'.join(str(p) for p in self.parameters)}"


def parse_family_spec(text: str) -> FamilySpec:
    """Parse CLI syntax like "cyclic:4", "dihedral:8", "product:cyclic:2,cyclic:4"."""
    text = text.strip()
    name, sep, rest = text.partition(":")
    if name not in FAMILY_NAMES:
        raise BadParameters(f"unknown family {name!r}; expected one of {', '.join(FAMILY_NAMES)}")
    if name == "product":
        if not rest:
            raise BadParameters("product needs comma-separated factor specs")
        factors = tuple(parse_family_spec(part) for part in rest.split(","))
        return FamilySpec("product", factors)
    if not sep or not rest:
        raise BadParameters(f"family {name!r} needs a parameter, e.g. {name}:4")
    try:
        params = tuple(int(tok) for tok in rest.split(":"))
    except ValueError:
        raise BadParameters(f"non-integer parameter in {text!r}") from None
    if len(params) != 1:
        raise BadParameters(f"family {name!r} takes exactly one parameter")
    return FamilySpec(name, params)


def build(spec: FamilySpec, max_order: int = MAX_GROUP_ORDER) -> GroupTable:
    """Construct a validated GroupTable for a family spec."""
    if spec.family == "cyclic":
        return cyclic(spec.parameters[0], max_order)
    if spec.family == "dihedral":
        return dihedral(spec.parameters[0], max_order)
    if spec.family == "symmetric":
        return symmetric(spec.parameters[0], max_order)
    if spec.family == "generalized_quaternion":
        return generalized_quaternion(spec.parameters[0], max_order)
    if spec.family == "elementary_abelian_2":
        return elementary_abelian_2(spec.parameters[0], max_order)
    if spec.family == "product":
        g = build(spec.parameters[0], max_order)
        for factor in spec.parameters[1:]:
            g = direct_product(g, build(factor, max_order), max_order)
        return g
    raise BadParameters(f"unknown family {spec.family!r}")


def cyclic(n: int, max_order: int = MAX_GROUP_ORDER) -> GroupTable:
    if n < 1:
        raise BadParameters(f"cyclic order must be >= 1, got {n}")
    _check_cap(n, max_order)
    table = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    return GroupTable(n, table)


def dihedral(order: int, max_order: int = MAX_GROUP_ORDER) -> GroupTable:
    """Dihedral group of the given (even) order: r^m = s^2 = 1, s r s = r^-1."""
    if order < 2 or order % 2:
        raise BadParameters(f"dihedral order must be even and >= 2, got {order}")
    _check_cap(order, max_order)
    m = order // 2
    # Index k < m is the rotation r^k; index m + k is the reflection s r^k.
    def mul(a, b):
        fa, ia = divmod(a, m)[0], a % m
        fb, ib = divmod(b, m)[0], b % m
        if fa == 0 and fb == 0:
            return (ia + ib) % m
        if fa == 0 and fb == 1:
            return m + (ib - ia) % m
        if fa == 1 and fb == 0:
            return m + (ia + ib) % m
        return (ib - ia) % m

    table = tuple(tuple(mul(a, b) for b in range(order)) for a in range(order))
    return GroupTable(order, table)


def symmetric(m: int, max_order: int = MAX_GROUP_ORDER) -> GroupTable:
    if m < 1:
        raise BadParameters(f"symmetric degree must be >= 1, got {m}")
    order = 1
    for i in range(2, m + 1):
        order *= i
    _check_cap(order, max_order)
    perms = [tuple(range(m))] + sorted(p for p in itertools.permutations(range(m)) if p != tuple(range(m)))
    index = {p: i for i, p in enumerate(perms)}
    table = tuple(
        tuple(index[tuple(pa[pb[i]] for i in range(m))] for pb in perms) for pa in perms
    )
    return GroupTable(order, table)


def generalized_quaternion(order: int, max_order: int = MAX_GROUP_ORDER) -> GroupTable:
    """Dicyclic group of order 4m: a^(2m) = 1, b^2 = a^m, b a b^-1 = a^-1."""
    if order < 8 or order % 4:
        raise BadParameters(
            f"generalized quaternion order must be a multiple of 4 and >= 8, got {order}"
        )
    _check_cap(order, max_order)
    m2 = order // 2  # order of <a>
    m = order // 4
    # Index i < m2 is a^i; index m2 + i is a^i b.
    def mul(a, b):
        fa, ia = divmod(a, m2)
        fb, ib = divmod(b, m2)
        if fa == 0 and fb == 0:
            return (ia + ib) % m2
        if fa == 0 and fb == 1:
            return m2 + (ia + ib) % m2
        if fa == 1 and fb == 0:
            return m2 + (ia - ib) % m2
        return (ia - ib + m) % m2

    table = tuple(tuple(mul(a, b) for b in range(order)) for a in range(order))
    return GroupTable(order, table)


def elementary_abelian_2(rank: int, max_order: int = MAX_GROUP_ORDER) -> GroupTable:
    if rank < 0:
        raise BadParameters(f"rank must be >= 0, got {rank}")
    n = 1 << rank
    _check_cap(n, max_order)
    table = tuple(tuple(a ^ b for b in range(n)) for a in range(n))
    return GroupTable(n, table)


def _check_cap(n: int, max_order: int) -> None:
    if n > max_order:
        raise OrderOverflow(f"order {n} exceeds maximum {max_order}")


def from_permutations(degree: int, generators: Sequence[Sequence[int]],
                      max_order: int = MAX_GROUP_ORDER) -> GroupTable:
    """Cayley table of the permutation group generated on 0..degree-1.

    The identity gets index 0; other elements are indexed in discovery order
    of the closure (breadth-first over generator products).
    """
    if degree < 1:
        raise NotAPermutation(f"degree must be >= 1, got {degree}")
    gens = []
    for p in generators:
        t = tuple(p)
        if sorted(t) != list(range(degree)):
            raise NotAPermutation(f"{list(p)} is not a permutation of 0..{degree - 1}")
        gens.append(t)

    ident = tuple(range(degree))
    elements = [ident]
    seen = {ident: 0}
    frontier = [ident]
    while frontier:
        p = frontier.pop(0)
        for q in gens:
            r = tuple(p[q[i]] for i in range(degree))
            if r not in seen:
                if len(elements) >= max_order:
                    raise OrderOverflow(
                        f"closure exceeds maximum order {max_order}"
                    )
                seen[r] = len(elements)
                elements.append(r)
                frontier.append(r)
    n = len(elements)
    table = tuple(
        tuple(seen[tuple(pa[pb[i]] for i in range(degree))] for pb in elements)
        for pa in elements
    )
    return validate_table(table, max_order)


def parse_permutations(text: str) -> tuple[int, list[list[int]]]:
    """Parse the generator text format: first line the degree, then one
    permutation per line as space-separated images.  '#' lines and blanks
    are ignored."""
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln and not ln.startswith("#")]
    if not lines:
        raise NotAPermutation("no data lines in permutation file")
    try:
        degree = int(lines[0])
    except ValueError:
        raise NotAPermutation(f"first line must be the degree, got {lines[0]!r}") from None
    gens = []
    for ln in lines[1:]:
        try:
            gens.append([int(tok) for tok in ln.split()])
        except ValueError:
            raise NotAPermutation(f"non-integer image in line {ln!r}") from None
    return degree, gens


def _candidate_specs(n: int) -> list[FamilySpec]:
    out = []
    for name in _RECOGNIZE_PRIORITY:
        if name == "cyclic":
            out.append(FamilySpec("cyclic", (n,)))
        elif name == "elementary_abelian_2" and n & (n - 1) == 0:
            out.append(FamilySpec("elementary_abelian_2", (n.bit_length() - 1,)))
        elif name == "dihedral" and n >= 2 and n % 2 == 0:
            out.append(FamilySpec("dihedral", (n,)))
        elif name == "symmetric" and n in (1, 2, 6, 24):
            m = {1: 1, 2: 2, 6: 3, 24: 4}[n]
            out.append(FamilySpec("symmetric", (m,)))
        elif name == "generalized_quaternion" and n >= 8 and n % 4 == 0:
            out.append(FamilySpec("generalized_quaternion", (n,)))
    return out


def recognize(g: GroupTable) -> Optional[str]:
    """Family label such as "dihedral(8)" if g matches a known family, else None.

    Ties broken in the fixed priority order cyclic > elementary_abelian_2 >
    dihedral > symmetric > generalized_quaternion.
    """
    for spec in _candidate_specs(g.order):
        if is_isomorphic(g, build(spec, max_order=max(g.order, MAX_GROUP_ORDER))):
            return f"{spec.family}({spec.parameters[0]})"
    return None
