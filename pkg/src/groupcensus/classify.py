"""Executable predicates for the classification results and the deficiency spectrum.

- deficiency 0 characterizes elementary abelian 2-groups;
- deficiency 1 holds exactly for cyclic(3), cyclic(4), symmetric(3), dihedral(8);
- symmetric(3) is the only one of those four that is not a p-group.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .census import census
from .errors import StarWithoutIdentity
from .families import FamilySpec, build
from .tables import GroupTable, is_isomorphic

# Distinguished is_p_group answer for the trivial group: its order is a
# power of every prime, so no single prime is meaningful.
TRIVIAL = "trivial"

# The four deficiency-1 groups, in a fixed report order.
STAR_GROUP_SPECS = (
    FamilySpec("cyclic", (3,)),
    FamilySpec("cyclic", (4,)),
    FamilySpec("symmetric", (3,)),
    FamilySpec("dihedral", (8,)),
)

_STAR_LABELS = ("cyclic(3)", "cyclic(4)", "symmetric(3)", "dihedral(8)")


@dataclass(frozen=True)
class ClassificationVerdict:
    order: int
    total_cyclic: int
    deficiency: int
    is_elem_abelian_2: bool
    satisfies_star: bool
    star_identity: Optional[str]
    p_group: Union[int, str, None]  # prime, TRIVIAL, or None

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "total_cyclic": self.total_cyclic,
            "deficiency": self.deficiency,
            "elem_abelian_2": self.is_elem_abelian_2,
            "star": self.satisfies_star,
            "star_identity": self.star_identity,
            "p_group": self.p_group,
        }


def is_elementary_abelian_2(g: GroupTable) -> bool:
    """True iff every element squares to the identity (rank-0 case included)."""
    t = g.table
    return all(t[x][x] == 0 for x in range(g.order))


def theorem1_holds(g: GroupTable) -> bool:
    """Elementary-abelian-2 iff deficiency 0; false only on an implementation bug."""
    return is_elementary_abelian_2(g) == (census(g).deficiency == 0)


def satisfies_star(g: GroupTable) -> bool:
    """True iff |C(G)| = |G| - 1."""
    c = census(g)
    return c.total == g.order - 1


def is_p_group(g: GroupTable) -> Union[int, str, None]:
    """The prime p when |G| is a power of p, TRIVIAL for order 1, else None."""
    n = g.order
    if n == 1:
        return TRIVIAL
    p = 2
    while n % p:
        p += 1
    while n % p == 0:
        n //= p
    return p if n == 1 else None


def theorem2_verdict(g: GroupTable) -> ClassificationVerdict:
    """Full verdict for one group; raises StarWithoutIdentity on the impossible
    case of a deficiency-1 group matching none of the four known groups."""
    c = census(g)
    star = c.total == g.order - 1
    identity_label = None
    if star:
        for spec, label in zip(STAR_GROUP_SPECS, _STAR_LABELS):
            if is_isomorphic(g, build(spec)):
                identity_label = label
                break
        if identity_label is None:
            raise StarWithoutIdentity(
                f"group of order {g.order} has |C(G)| = |G|-1 but matches none of "
                f"{', '.join(_STAR_LABELS)}"
            )
    return ClassificationVerdict(
        order=g.order,
        total_cyclic=c.total,
        deficiency=c.deficiency,
        is_elem_abelian_2=is_elementary_abelian_2(g),
        satisfies_star=star,
        star_identity=identity_label,
        p_group=is_p_group(g),
    )


def deficiency_spectrum(universe_records, r: int):
    """Records whose census deficiency equals r, sorted by (order, fingerprint)."""
    if r < 0:
        raise ValueError(f"deficiency must be >= 0, got {r}")
    matches = [rec for rec in universe_records if rec.census.deficiency == r]
    return sorted(matches, key=lambda rec: (rec.order, rec.fingerprint))
