"""Finite groups as validated Cayley tables over element indices 0..n-1.

The identity is always pinned at index 0; ingested tables with the identity
elsewhere are re-indexed during validation.  Element subsets are bitsets.
All objects are immutable and all operations are pure.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .errors import BadEntry, NoIdentity, NonAssociative, NotLatin, OrderOverflow

# Tables and bitsets stay cheap up to this order; raise explicitly if you
# know what you are doing.
MAX_GROUP_ORDER = 24


@dataclass(frozen=True)
class ElementSet:
    """A subset of the elements of a group of order `parent_order`."""

    mask: int
    parent_order: int

    @classmethod
    def from_indices(cls, indices: Iterable[int], parent_order: int) -> "ElementSet":
        mask = 0
        for i in indices:
            if not 0 <= i < parent_order:
                raise BadEntry(f"element index {i} out of range 0..{parent_order - 1}")
            mask |= 1 << i
        return cls(mask, parent_order)

    @classmethod
    def empty(cls, parent_order: int) -> "ElementSet":
        return cls(0, parent_order)

    def indices(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.parent_order) if self.mask >> i & 1)

    def __contains__(self, i: int) -> bool:
        return 0 <= i < self.parent_order and bool(self.mask >> i & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices())

    def __len__(self) -> int:
        return self.mask.bit_count()


@dataclass(frozen=True)
class GroupTable:
    """A validated finite group: n x n Cayley table, identity at index 0."""

    order: int
    table: tuple[tuple[int, ...], ...]

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inverse(self, a: int) -> int:
        return self.table[a].index(0)

    def elements(self) -> range:
        return range(self.order)


def validate_table(raw, max_order: int = MAX_GROUP_ORDER) -> GroupTable:
    """Check the four group axioms on a raw index array and return a GroupTable.

    Raises BadEntry, NoIdentity, NotLatin, or NonAssociative (first failing
    triple), and OrderOverflow above `max_order`.  If the identity element is
    not at index 0, the table is re-indexed so that it is.
    """
    rows = [list(r) for r in raw]
    n = len(rows)
    if n == 0:
        raise BadEntry("empty table")
    if n > max_order:
        raise OrderOverflow(f"order {n} exceeds maximum {max_order}")
    for r in rows:
        if len(r) != n:
            raise BadEntry(f"table is not square: row of length {len(r)} in a {n}-row table")
        for v in r:
            if not isinstance(v, int) or not 0 <= v < n:
                raise BadEntry(f"entry {v!r} is not an index in 0..{n - 1}")

    e = _find_identity(rows, n)
    if e is None:
        raise NoIdentity("no element is a two-sided identity")
    if e != 0:
        rows = _reindex_identity(rows, n, e)

    full = set(range(n))
    for a in range(n):
        if set(rows[a]) != full:
            raise NotLatin(f"row {a} is not a permutation of 0..{n - 1}")
    for b in range(n):
        if {rows[a][b] for a in range(n)} != full:
            raise NotLatin(f"column {b} is not a permutation of 0..{n - 1}")

    for a in range(n):
        ra = rows[a]
        for b in range(n):
            rab = rows[ra[b]]
            rb = rows[b]
            for c in range(n):
                if rab[c] != ra[rb[c]]:
                    raise NonAssociative(a, b, c)

    # Implied by the above; asserted independently.
    for a in range(n):
        b = rows[a].index(0)
        if rows[b][a] != 0:
            raise NoIdentity(f"element {a} has no two-sided inverse")

    return GroupTable(n, tuple(tuple(r) for r in rows))


def _find_identity(rows, n) -> Optional[int]:
    for e in range(n):
        if all(rows[e][b] == b for b in range(n)) and all(rows[a][e] == a for a in range(n)):
            return e
    return None


def _reindex_identity(rows, n, e):
    # Swap labels 0 and e.
    swap = list(range(n))
    swap[0], swap[e] = e, 0
    return [[swap[rows[swap[a]][swap[b]]] for b in range(n)] for a in range(n)]


def parse_cayley_table(text: str) -> list[list[int]]:
    """Parse the Cayley table text format: first line n, then n rows of n indices.

    Blank lines and lines starting with '#' are ignored.  Returns the raw
    array; run validate_table on it.
    """
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln and not ln.startswith("#")]
    if not lines:
        raise BadEntry("no data lines in table file")
    try:
        n = int(lines[0])
    except ValueError:
        raise BadEntry(f"first line must be the order, got {lines[0]!r}") from None
    if len(lines) != n + 1:
        raise BadEntry(f"expected {n} table rows, found {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        try:
            row = [int(tok) for tok in ln.split()]
        except ValueError:
            raise BadEntry(f"non-integer entry in row {ln!r}") from None
        rows.append(row)
    return rows


def element_order(g: GroupTable, x: int) -> int:
    """Least m >= 1 with x^m = identity; divides the group order."""
    row = g.table[x]
    y = x
    m = 1
    while y != 0:
        y = row[y]
        m += 1
    return m


def element_orders(g: GroupTable) -> list[int]:
    return [element_order(g, x) for x in range(g.order)]


def generated_subgroup(g: GroupTable, seeds) -> ElementSet:
    """Closure of seeds (plus the identity) under the table product."""
    if isinstance(seeds, ElementSet):
        seed_list = list(seeds)
    else:
        seed_list = list(seeds)
    members = {0}
    frontier = [s for s in seed_list if s != 0]
    members.update(frontier)
    table = g.table
    while frontier:
        a = frontier.pop()
        for b in list(members):
            for p in (table[a][b], table[b][a]):
                if p not in members:
                    members.add(p)
                    frontier.append(p)
    return ElementSet.from_indices(members, g.order)


def centralizer(g: GroupTable, s: ElementSet) -> ElementSet:
    """Elements commuting with every member of s; always a subgroup."""
    hs = list(s)
    table = g.table
    members = [x for x in range(g.order) if all(table[x][h] == table[h][x] for h in hs)]
    return ElementSet.from_indices(members, g.order)


def center(g: GroupTable) -> ElementSet:
    return centralizer(g, ElementSet.from_indices(range(g.order), g.order))


def is_abelian(g: GroupTable) -> bool:
    t = g.table
    n = g.order
    return all(t[a][b] == t[b][a] for a in range(n) for b in range(a + 1, n))


def exponent(g: GroupTable) -> int:
    """lcm of all element orders; divides the group order."""
    return math.lcm(*element_orders(g))


def fingerprint(g: GroupTable) -> tuple:
    """Isomorphism-invariant tuple: (sorted element orders, abelian, |Z(G)|, exponent)."""
    orders = tuple(sorted(element_orders(g)))
    return (orders, is_abelian(g), len(center(g)), exponent(g))


def direct_product(g: GroupTable, h: GroupTable, max_order: int = MAX_GROUP_ORDER) -> GroupTable:
    """Componentwise product on pairs, indexed so (0,0) maps to 0."""
    n = g.order * h.order
    if n > max_order:
        raise OrderOverflow(f"product order {n} exceeds maximum {max_order}")
    m = h.order
    gt, ht = g.table, h.table
    table = tuple(
        tuple(gt[a1][b1] * m + ht[a2][b2] for b1 in range(g.order) for b2 in range(m))
        for a1 in range(g.order)
        for a2 in range(m)
    )
    return GroupTable(n, table)


def find_isomorphism(g: GroupTable, h: GroupTable) -> Optional[dict[int, int]]:
    """A product-preserving bijection g -> h as a dict, or None.

    Fingerprint pre-filter, then backtracking over generator images with
    eager closure of partial maps.
    """
    if g.order != h.order:
        return None
    if fingerprint(g) != fingerprint(h):
        return None
    n = g.order
    og = element_orders(g)
    oh = element_orders(h)
    gt, ht = g.table, h.table

    # Greedy generating chain: each generator is the least element outside
    # the closure of the previous ones.
    gens = []
    reach = generated_subgroup(g, ())
    while len(reach) < n:
        x = next(i for i in range(n) if i not in reach)
        gens.append(x)
        reach = generated_subgroup(g, gens)

    def extend(mapping: dict[int, int], x: int, y: int) -> Optional[dict[int, int]]:
        m = dict(mapping)
        used = set(m.values())
        pending = [(x, y)]
        while pending:
            a, b = pending.pop()
            cur = m.get(a)
            if cur is not None:
                if cur != b:
                    return None
                continue
            if b in used or og[a] != oh[b]:
                return None
            m[a] = b
            used.add(b)
            for c, d in list(m.items()):
                pending.append((gt[a][c], ht[b][d]))
                pending.append((gt[c][a], ht[d][b]))
        return m

    def search(mapping: dict[int, int], gi: int) -> Optional[dict[int, int]]:
        if gi == len(gens):
            return mapping
        x = gens[gi]
        if x in mapping:
            return search(mapping, gi + 1)
        taken = set(mapping.values())
        for y in range(n):
            if oh[y] != og[x] or y in taken:
                continue
            m2 = extend(mapping, x, y)
            if m2 is not None:
                result = search(m2, gi + 1)
                if result is not None:
                    return result
        return None

    return search({0: 0}, 0)


def is_isomorphic(g: GroupTable, h: GroupTable) -> bool:
    return find_isomorphism(g, h) is not None
