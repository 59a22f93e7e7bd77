"""Exhaustive enumeration of all groups of a given order, up to isomorphism.

Tables are found by depth-first completion of the Cayley table with the
identity row and column pre-filled.  Row 1 is branched first (its canonical
power-chain pattern prunes hardest), then whichever open cell has the
fewest admissible values under the Latin bitmask constraints.  Every placed
entry is propagated through associativity: each triple the new entry
participates in either checks out, forces another entry, or kills the
branch.  Cheap validity facts prune further: a non-identity row or column
has no fixed point (x*j = j forces x = e), rows and columns have uniform
cycle type (the cycle of 0 under left or right multiplication by x closes
after exactly ord(x) steps, so partial chains bound ord(x) from below),
and for even n element 1 is forced to be an involution (elements of order
> 2 pair off with their distinct inverses, so one always exists).

Two engines implement the identical algorithm: the pure-Python
``_TableSearch`` below (the reference) and a numba-compiled kernel in
``groupcensus._kernel`` used automatically for larger orders when numba
is importable.  The test suite checks they produce the same tables.

Symmetry reduction ("canonical mode", on by default) restricts the search
to one labeling scheme per isomorphism class:

  * element orders are non-decreasing in the element index (any group can
    be relabeled this way: sort elements by order, identity first);
  * the powers of element 1 occupy indices 0..p-1 in power order, where
    p = ord(element 1).  Sorted orders make element 1 an element of minimal
    nontrivial order, which is always prime, so its powers all share that
    minimal order and can be relabeled onto the leading indices.

Without the reduction (used by the independent oracle for n = 7, 8) the
search visits every labeled table with identity 0, i.e. (n-1)!/|Aut(G)|
tables per class.  Canonical mode still yields several tables per class;
completed tables are bucketed by fingerprint and deduplicated by pairwise
isomorphism, keeping the lexicographically least table found as the class
representative.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .census import CyclicCensus, census
from .errors import CapExceeded
from .families import recognize
from .tables import GroupTable, fingerprint, is_isomorphic, validate_table

try:
    from ._kernel import search_tables_fast

    _HAVE_KERNEL = True
except ImportError:  # pragma: no cover - numba is an optional accelerator
    _HAVE_KERNEL = False

DEFAULT_CAP = 12
EXTENDED_CAP = 16

UNKNOWN = -1

# Below this order the pure-Python engine finishes in milliseconds and is
# not worth a kernel dispatch.
_KERNEL_MIN_ORDER = 7


@dataclass(frozen=True)
class IsoClassRecord:
    """One isomorphism class: representative table plus derived data."""

    order: int
    representative: GroupTable
    fingerprint: tuple
    recognized: Optional[str]
    census: CyclicCensus


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            return False
        p += 1
    return True


class _TableSearch:
    """DFS completion of one Cayley table; collects every completed table."""

    def __init__(self, n: int, canonical: bool):
        self.n = n
        self.canonical = canonical
        self.t = [UNKNOWN] * (n * n)
        self.row_used = [0] * n
        self.col_used = [0] * n
        self.row_count = [0] * n
        self.col_count = [0] * n
        self.ord_of: list[Optional[int]] = [None] * n
        self.occ: list[list[tuple[int, int]]] = [[] for _ in range(n)]  # (row, col) per value
        self.trail: list[int] = []  # flat cell indices, most recent last
        self.ord_trail: list[int] = []  # elements whose order became known
        self.results: list[tuple[tuple[int, ...], ...]] = []
        # Pre-fill identity row and column.
        for b in range(n):
            self.t[b] = b
            self.row_used[0] |= 1 << b
            self.col_used[b] |= 1 << b
        for a in range(1, n):
            self.t[a * n] = a
            self.row_used[a] |= 1 << a
            self.col_used[0] |= 1 << a
        self.row_count[0] = n
        for a in range(1, n):
            self.row_count[a] = 1
        for b in range(1, n):
            self.col_count[b] = 1
        self.col_count[0] = n
        self.ord_of[0] = 1

    def run(self) -> list[tuple[tuple[int, ...], ...]]:
        if self.n == 1:
            return [((0,),)]
        if self.canonical and self.n % 2 == 0:
            # A group of even order contains an involution (elements of
            # order > 2 pair off with their distinct inverses), so under
            # the sorted-order labeling element 1 squares to the identity.
            if not self._place_all([(1, 1, 0)]):
                return self.results
        self._dfs()
        return self.results

    # -- propagation -----------------------------------------------------

    def _place_all(self, queue: list[tuple[int, int, int]]) -> bool:
        """Place queued entries plus everything associativity forces."""
        n = self.n
        t = self.t
        occ = self.occ
        row_used = self.row_used
        col_used = self.col_used
        trail = self.trail
        while queue:
            a, b, c = queue.pop()
            idx = a * n + b
            cur = t[idx]
            if cur != UNKNOWN:
                if cur != c:
                    return False
                continue
            if (row_used[a] | col_used[b]) >> c & 1:
                return False
            if c == b or c == a:
                # a*b = b forces a = e and a*b = a forces b = e; rows and
                # columns 1..n-1 only reach here.
                return False
            t[idx] = c
            row_used[a] |= 1 << c
            col_used[b] |= 1 << c
            self.row_count[a] += 1
            self.col_count[b] += 1
            occ[c].append((a, b))
            trail.append(idx)

            # Inverses pair up: a*b = e forces b*a = e.
            if c == 0:
                queue.append((b, a, 0))

            # Triples (a, b, z): (a*b)*z = a*(b*z).
            rb = b * n
            rc = c * n
            ra = a * n
            for z in range(1, n):
                w = t[rb + z]
                if w == UNKNOWN:
                    continue
                lhs = t[rc + z]
                rhs = t[ra + w]
                if lhs == UNKNOWN:
                    if rhs != UNKNOWN:
                        queue.append((c, z, rhs))
                elif rhs == UNKNOWN:
                    queue.append((a, w, lhs))
                elif lhs != rhs:
                    return False

            # Triples (x, a, b): (x*a)*b = x*(a*b).
            for x in range(1, n):
                u = t[x * n + a]
                if u == UNKNOWN:
                    continue
                lhs = t[u * n + b]
                rhs = t[x * n + c]
                if lhs == UNKNOWN:
                    if rhs != UNKNOWN:
                        queue.append((u, b, rhs))
                elif rhs == UNKNOWN:
                    queue.append((x, c, lhs))
                elif lhs != rhs:
                    return False

            # Triples (x, y, b) with x*y = a: a*b = x*(y*b).
            for x, y in occ[a]:
                w = t[y * n + b]
                if w != UNKNOWN:
                    v = t[x * n + w]
                    if v == UNKNOWN:
                        queue.append((x, w, c))
                    elif v != c:
                        return False

            # Triples (a, y, z) with y*z = b: (a*y)*z = a*b.
            for y, z in occ[b]:
                u = t[ra + y]
                if u != UNKNOWN:
                    v = t[u * n + z]
                    if v == UNKNOWN:
                        queue.append((u, z, c))
                    elif v != c:
                        return False

            if not self._row_checks(a) or not self._col_checks(b):
                return False
        return True

    def _row_checks(self, a: int) -> bool:
        """Order-chain and completion checks after a placement in row a."""
        n = self.n
        t = self.t
        base = a * n
        known = self.ord_of[a]
        # Walk the cycle of 0 under left multiplication by a as far as it
        # is known; its length is ord(a).
        cur = a
        length = 1
        closed = False
        while True:
            nxt = t[base + cur]
            if nxt == UNKNOWN:
                break
            length += 1
            if nxt == 0:
                closed = True
                break
            cur = nxt
        if closed:
            if known is not None:
                if length != known:
                    return False
            else:
                if n % length:
                    return False
                if self.canonical and not self._order_fits(a, length):
                    return False
                if self.canonical and a == 1 and not self._row1_closure_ok(length):
                    return False
                self.ord_of[a] = length
                self.ord_trail.append(a)
        else:
            # Chain still open: ord(a) >= length + 1.
            if known is not None:
                if length >= known:
                    return False
            elif self.canonical:
                for y in range(a + 1, n):
                    o = self.ord_of[y]
                    if o is not None and o < length + 1:
                        return False
        if self.row_count[a] == n and not self._uniform_cycles(a):
            return False
        return True

    def _col_checks(self, b: int) -> bool:
        """Mirror of _row_checks for right multiplication: the cycle of 0
        in column b also has length ord(b), and a complete column is a
        fixed-point-free permutation with uniform cycle length ord(b)."""
        n = self.n
        t = self.t
        known = self.ord_of[b]
        cur = b
        length = 1
        closed = False
        while True:
            nxt = t[cur * n + b]
            if nxt == UNKNOWN:
                break
            length += 1
            if nxt == 0:
                closed = True
                break
            cur = nxt
        if closed:
            if known is not None:
                if length != known:
                    return False
            else:
                if n % length:
                    return False
                if self.canonical and not self._order_fits(b, length):
                    return False
                if self.canonical and b == 1 and not self._row1_closure_ok(length):
                    return False
                self.ord_of[b] = length
                self.ord_trail.append(b)
        else:
            if known is not None:
                if length >= known:
                    return False
            elif self.canonical:
                for y in range(b + 1, n):
                    o = self.ord_of[y]
                    if o is not None and o < length + 1:
                        return False
        if self.col_count[b] == n and not self._uniform_col_cycles(b):
            return False
        return True

    def _order_fits(self, a: int, length: int) -> bool:
        for y in range(a):
            o = self.ord_of[y]
            if o is not None and o > length:
                return False
        for y in range(a + 1, self.n):
            o = self.ord_of[y]
            if o is not None and o < length:
                return False
        return True

    def _row1_closure_ok(self, p: int) -> bool:
        # Once ord(1) = p is known, every off-chain entry of row 1 must lie
        # outside <1> = {0..p-1}.
        n = self.n
        t = self.t
        for j in range(p, n):
            v = t[n + j]
            if v != UNKNOWN and v < p:
                return False
        return True

    def _uniform_cycles(self, a: int) -> bool:
        n = self.n
        t = self.t
        base = a * n
        target = self.ord_of[a]
        if target is None:
            return False  # complete row must have a closed 0-cycle
        seen = 0
        for start in range(n):
            if seen >> start & 1:
                continue
            length = 0
            j = start
            while not seen >> j & 1:
                seen |= 1 << j
                j = t[base + j]
                length += 1
            if length != target:
                return False
        return True

    def _uniform_col_cycles(self, b: int) -> bool:
        n = self.n
        t = self.t
        target = self.ord_of[b]
        if target is None:
            return False  # complete column must have a closed 0-cycle
        seen = 0
        for start in range(n):
            if seen >> start & 1:
                continue
            length = 0
            j = start
            while not seen >> j & 1:
                seen |= 1 << j
                j = t[j * n + b]
                length += 1
            if length != target:
                return False
        return True

    # -- canonical value filter for row 1 --------------------------------

    def _row1_allowed(self, j: int, c: int) -> bool:
        n = self.n
        t = self.t
        p = self.ord_of[1]
        if p is not None:
            # Powers of element 1 sit at indices 0..p-1 in exponent order,
            # so 1*j = j+1 mod p on the chain and lands outside <1> off it.
            if j < p - 1:
                return c == j + 1
            if j == p - 1:
                return c == 0
            return c >= p
        # Chain open; find its current end (always reads 0,1,2,...,L).
        length = 1
        while length < n and t[n + length] != UNKNOWN:
            nxt = t[n + length]
            if nxt == 0:
                break
            length = nxt
        end = length
        if j == end:
            if c == end + 1:
                return True
            return c == 0 and _is_prime(end + 1) and n % (end + 1) == 0
        if c == j + 1:
            return True
        if c == 0:
            return _is_prime(j + 1) and n % (j + 1) == 0
        # The chain closes at some p >= end + 1; off-chain entries need
        # c >= p, and Latin constraints rule out c = end + 1 if the chain
        # later claims it.
        return c >= end + 1

    # -- depth-first search ----------------------------------------------

    def _dfs(self) -> None:
        n = self.n
        t = self.t
        row_used = self.row_used
        col_used = self.col_used
        full = (1 << n) - 1
        # Fill row 1 left to right first: the canonical power-chain pattern
        # for element 1 prunes hardest when that row is decided early.
        best = -1
        best_forbidden = 0
        best_count = n + 1
        if self.row_count[1] < n:
            for b in range(1, n):
                if t[n + b] == UNKNOWN:
                    best = n + b
                    best_forbidden = (row_used[1] | col_used[b] | 2 | 1 << b) & full
                    best_count = n - best_forbidden.bit_count()
                    if best_count == 0:
                        return
                    break
        # Otherwise pick the open cell with the fewest admissible values;
        # ties go to the smallest flat index.  A zero-candidate cell fails
        # immediately.
        for a in range(1, n):
            if best != -1:
                break
            if self.row_count[a] == n:
                continue
            used_a = row_used[a]
            base = a * n
            for b in range(1, n):
                if t[base + b] != UNKNOWN:
                    continue
                forbidden = (used_a | col_used[b] | 1 << a | 1 << b) & full
                count = n - forbidden.bit_count()
                if count < best_count:
                    if count == 0:
                        return
                    best = base + b
                    best_forbidden = forbidden
                    best_count = count
                    if count == 1:
                        break
            if best_count == 1:
                break
        if best == -1:
            self.results.append(tuple(tuple(t[a * n : a * n + n]) for a in range(n)))
            return
        a, b = divmod(best, n)
        canonical1 = self.canonical and a == 1
        for c in range(n):
            if best_forbidden >> c & 1:
                continue
            if canonical1 and not self._row1_allowed(b, c):
                continue
            mark = len(self.trail)
            ord_mark = len(self.ord_trail)
            if self._place_all([(a, b, c)]):
                self._dfs()
            self._undo(mark, ord_mark)

    def _undo(self, mark: int, ord_mark: int) -> None:
        n = self.n
        t = self.t
        while len(self.trail) > mark:
            idx = self.trail.pop()
            c = t[idx]
            a, b = divmod(idx, n)
            t[idx] = UNKNOWN
            self.row_used[a] &= ~(1 << c)
            self.col_used[b] &= ~(1 << c)
            self.row_count[a] -= 1
            self.col_count[b] -= 1
            self.occ[c].pop()
        while len(self.ord_trail) > ord_mark:
            self.ord_of[self.ord_trail.pop()] = None


def search_group_tables(
    n: int, canonical: bool = True, engine: str = "auto"
) -> list[tuple[tuple[int, ...], ...]]:
    """All Cayley tables of order n (identity at 0) reachable by the search.

    canonical=True restricts to the canonical labeling scheme; False visits
    every labeled table.  engine is "auto" (compiled kernel when available
    and worthwhile), "kernel", or "python"."""
    if engine == "auto":
        engine = "kernel" if _HAVE_KERNEL and n >= _KERNEL_MIN_ORDER else "python"
    if engine == "kernel":
        if not _HAVE_KERNEL:
            raise RuntimeError("compiled kernel unavailable (numba not importable)")
        return search_tables_fast(n, canonical)
    if engine != "python":
        raise ValueError(f"unknown engine {engine!r}")
    return _TableSearch(n, canonical).run()


def _dedup_classes(n: int, tables) -> list[IsoClassRecord]:
    """Bucket by fingerprint, then pairwise isomorphism within buckets."""
    buckets: dict[tuple, list[GroupTable]] = {}
    for t in tables:
        g = GroupTable(n, t)
        buckets.setdefault(fingerprint(g), []).append(g)
    records = []
    for fp, groups in buckets.items():
        reps: list[GroupTable] = []
        for g in groups:
            for i, rep in enumerate(reps):
                if is_isomorphic(g, rep):
                    if g.table < rep.table:
                        reps[i] = g
                    break
            else:
                reps.append(g)
        for rep in reps:
            records.append(
                IsoClassRecord(
                    order=n,
                    representative=rep,
                    fingerprint=fp,
                    recognized=recognize(rep),
                    census=census(rep),
                )
            )
    records.sort(key=lambda r: (r.fingerprint, r.representative.table))
    return records


def _check_cap(n: int, extended: bool) -> None:
    cap = EXTENDED_CAP if extended else DEFAULT_CAP
    if not 1 <= n <= cap:
        raise CapExceeded(
            f"order {n} outside 1..{cap}"
            + ("" if extended else f" (pass the extended flag for up to {EXTENDED_CAP})")
        )


def enumerate_groups(n: int, extended: bool = False) -> list[IsoClassRecord]:
    """One record per isomorphism class of groups of order n, deterministically
    sorted by (fingerprint, representative table)."""
    _check_cap(n, extended)
    return list(_enumerate_cached(n))


@lru_cache(maxsize=None)
def _enumerate_cached(n: int) -> list[IsoClassRecord]:
    return _dedup_classes(n, search_group_tables(n, canonical=True))


def enumerate_groups_uncached(n: int, extended: bool = False) -> list[IsoClassRecord]:
    """Same as enumerate_groups but recomputed from scratch (determinism checks)."""
    _check_cap(n, extended)
    return _dedup_classes(n, search_group_tables(n, canonical=True))


def count_groups(n: int, extended: bool = False) -> int:
    return len(enumerate_groups(n, extended))


def universe(max_order: int, extended: bool = False, jobs: int = 1) -> list[IsoClassRecord]:
    """All isomorphism classes of orders 1..max_order, censuses attached."""
    _check_cap(max_order, extended)
    orders = range(1, max_order + 1)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            per_order = list(pool.map(enumerate_groups, orders, itertools.repeat(extended)))
    else:
        per_order = [enumerate_groups(n, extended) for n in orders]
    return [rec for recs in per_order for rec in recs]


@lru_cache(maxsize=None)
def naive_count_groups(n: int) -> int:
    """Independent oracle for class counts, n <= 8.

    For n <= 6: enumerate every Latin square with identity row and column
    fixed, filter by a full associativity check, then deduplicate.  For
    n = 7, 8 that space is too large, so the pure-Python reference engine
    runs with all canonical pruning disabled (visiting every labeled
    table)."""
    if n < 1 or n > 8:
        raise CapExceeded(f"naive oracle supports orders 1..8, got {n}")
    if n <= 6:
        tables = [t for t in _all_reduced_latin_squares(n) if _fully_associative(t, n)]
    else:
        tables = search_group_tables(n, canonical=False, engine="python")
    groups = [validate_table(t) for t in tables]
    reps: list[GroupTable] = []
    for g in groups:
        if not any(is_isomorphic(g, rep) for rep in reps):
            reps.append(g)
    return len(reps)


def _all_reduced_latin_squares(n: int):
    """Every n x n Latin square whose first row and column are 0..n-1."""
    if n == 1:
        return [((0,),)]
    rows = [list(range(n))] + [[-1] * n for _ in range(n - 1)]
    for i in range(1, n):
        rows[i][0] = i
    col_used = [1 << j for j in range(n)]
    col_used[0] = (1 << n) - 1

    out = []

    def fill(i: int, j: int, row_used: int) -> None:
        if j == n:
            if i == n - 1:
                out.append(tuple(tuple(r) for r in rows))
            else:
                fill(i + 1, 1, 1 << (i + 1))
            return
        mask = row_used | col_used[j]
        for v in range(n):
            if mask >> v & 1:
                continue
            rows[i][j] = v
            col_used[j] |= 1 << v
            fill(i, j + 1, row_used | 1 << v)
            col_used[j] &= ~(1 << v)

    fill(1, 1, 1 << 1)
    return out


def _fully_associative(t, n: int) -> bool:
    for a in range(n):
        for b in range(n):
            ab = t[a][b]
            for c in range(n):
                if t[ab][c] != t[a][t[b][c]]:
                    return False
    return True
