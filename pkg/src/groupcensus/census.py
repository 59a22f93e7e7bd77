"""Enumeration of C(G), the set of cyclic subgroups, and its counting identities.

The census records, for each divisor d of |G|, the number n_d of cyclic
subgroups of order d.  Two identities drive everything downstream:

    sum over d of n_d * phi(d)       = |G|        (always)
    sum over d of n_d * (phi(d) - 1) = 1          (exactly when |C(G)| = |G| - 1)
"""
from __future__ import annotations

from dataclasses import dataclass

from .tables import ElementSet, GroupTable


def euler_phi(d: int) -> int:
    """Euler totient via trial-division factorization; arguments are tiny."""
    if d < 1:
        raise ValueError(f"euler_phi needs d >= 1, got {d}")
    result = d
    rest = d
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            result -= result // p
            while rest % p == 0:
                rest //= p
        p += 1
    if rest > 1:
        result -= result // rest
    return result


def totient_preimage(v: int, bound: int) -> list[int]:
    """All d <= bound with euler_phi(d) = v, ascending."""
    if v < 1 or bound < 1:
        raise ValueError("totient_preimage needs v >= 1 and bound >= 1")
    return [d for d in range(1, bound + 1) if euler_phi(d) == v]


def aut_order_cyclic(d: int) -> int:
    """Order of the automorphism group of the cyclic group of order d."""
    return euler_phi(d)


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@dataclass(frozen=True)
class CyclicSubgroup:
    """One member of C(G): its least generator, order, and member bitset."""

    generator: int
    subgroup_order: int
    members: ElementSet


@dataclass(frozen=True)
class CyclicCensus:
    group_order: int
    divisors: tuple[int, ...]
    counts: tuple[int, ...]
    total: int
    deficiency: int

    def to_dict(self) -> dict:
        return {
            "order": self.group_order,
            "divisors": list(self.divisors),
            "counts": list(self.counts),
            "total": self.total,
            "deficiency": self.deficiency,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CyclicCensus":
        return cls(
            group_order=d["order"],
            divisors=tuple(d["divisors"]),
            counts=tuple(d["counts"]),
            total=d["total"],
            deficiency=d["deficiency"],
        )


def cyclic_subgroups(g: GroupTable) -> list[CyclicSubgroup]:
    """All distinct cyclic subgroups of g, sorted by (order, generator).

    Deduplication is by member bitset; the stored generator is the least
    element index generating the subgroup (element indices are scanned in
    ascending order, so the first generator found is the least).
    """
    n = g.order
    table = g.table
    seen: dict[int, CyclicSubgroup] = {}
    for x in range(n):
        row = table[x]
        mask = 1  # identity
        y = x
        size = 1
        while y != 0:
            mask |= 1 << y
            y = row[y]
            size += 1
        if mask not in seen:
            seen[mask] = CyclicSubgroup(x, size, ElementSet(mask, n))
    return sorted(seen.values(), key=lambda s: (s.subgroup_order, s.generator))


def census(g: GroupTable) -> CyclicCensus:
    """Divisor-indexed counts of cyclic subgroups, |C(G)|, and deficiency r."""
    divs = divisors(g.order)
    counts = {d: 0 for d in divs}
    for sub in cyclic_subgroups(g):
        counts[sub.subgroup_order] += 1
    total = sum(counts.values())
    return CyclicCensus(
        group_order=g.order,
        divisors=tuple(divs),
        counts=tuple(counts[d] for d in divs),
        total=total,
        deficiency=g.order - total,
    )


def check_totient_identity(c: CyclicCensus) -> bool:
    """True iff sum n_i * phi(d_i) equals the group order."""
    return sum(n * euler_phi(d) for d, n in zip(c.divisors, c.counts)) == c.group_order


def check_star_identity(c: CyclicCensus) -> bool:
    """True iff sum n_i * (phi(d_i) - 1) = 1, i.e. |C(G)| = |G| - 1."""
    return sum(n * (euler_phi(d) - 1) for d, n in zip(c.divisors, c.counts)) == 1
