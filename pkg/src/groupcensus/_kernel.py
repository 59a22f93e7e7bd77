"""Compiled search kernel for the Cayley-table enumerator.

This is a numba port of the pure-Python ``_TableSearch`` in
:mod:`groupcensus.enumeration`; the two implement the same algorithm
(cell-level DFS with eager associativity propagation, order-chain checks
on rows and columns, and the canonical labeling filters) and are
cross-checked against each other in the test suite.  The recursion is
unrolled into an explicit stack because numba compiles loops far better
than deep recursion.

Conventions mirror the Python engine: tables are flat row-major arrays,
-1 marks an unknown cell, and ``ord_of`` uses 0 for "order not known yet"
(numba-friendly stand-in for None).
"""
from __future__ import annotations

import numpy as np
from numba import njit

_UNKNOWN = -1


@njit(cache=True)
def _is_prime(m):
    if m < 2:
        return False
    d = 2
    while d * d <= m:
        if m % d == 0:
            return False
        d += 1
    return True


@njit(cache=True)
def _popcount(x):
    count = 0
    while x:
        x &= x - 1
        count += 1
    return count


@njit(cache=True)
def _order_fits(n, ord_of, a, length):
    for y in range(a):
        o = ord_of[y]
        if o != 0 and o > length:
            return False
    for y in range(a + 1, n):
        o = ord_of[y]
        if o != 0 and o < length:
            return False
    return True


@njit(cache=True)
def _row1_closure_ok(n, t, p):
    for j in range(p, n):
        v = t[n + j]
        if v != _UNKNOWN and v < p:
            return False
    return True


@njit(cache=True)
def _uniform_row_cycles(n, t, a, target):
    if target == 0:
        return False
    base = a * n
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


@njit(cache=True)
def _uniform_col_cycles(n, t, b, target):
    if target == 0:
        return False
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


@njit(cache=True)
def _row_checks(n, canonical, t, ord_of, ord_trail, cnt, row_count, a):
    base = a * n
    known = ord_of[a]
    cur = a
    length = 1
    closed = False
    while True:
        nxt = t[base + cur]
        if nxt == _UNKNOWN:
            break
        length += 1
        if nxt == 0:
            closed = True
            break
        cur = nxt
    if closed:
        if known != 0:
            if length != known:
                return False
        else:
            if n % length != 0:
                return False
            if canonical:
                if not _order_fits(n, ord_of, a, length):
                    return False
                if a == 1 and not _row1_closure_ok(n, t, length):
                    return False
            ord_of[a] = length
            ord_trail[cnt[1]] = a
            cnt[1] += 1
    else:
        if known != 0:
            if length >= known:
                return False
        elif canonical:
            for y in range(a + 1, n):
                o = ord_of[y]
                if o != 0 and o < length + 1:
                    return False
    if row_count[a] == n and not _uniform_row_cycles(n, t, a, ord_of[a]):
        return False
    return True


@njit(cache=True)
def _col_checks(n, canonical, t, ord_of, ord_trail, cnt, col_count, b):
    known = ord_of[b]
    cur = b
    length = 1
    closed = False
    while True:
        nxt = t[cur * n + b]
        if nxt == _UNKNOWN:
            break
        length += 1
        if nxt == 0:
            closed = True
            break
        cur = nxt
    if closed:
        if known != 0:
            if length != known:
                return False
        else:
            if n % length != 0:
                return False
            if canonical:
                if not _order_fits(n, ord_of, b, length):
                    return False
                if b == 1 and not _row1_closure_ok(n, t, length):
                    return False
            ord_of[b] = length
            ord_trail[cnt[1]] = b
            cnt[1] += 1
    else:
        if known != 0:
            if length >= known:
                return False
        elif canonical:
            for y in range(b + 1, n):
                o = ord_of[y]
                if o != 0 and o < length + 1:
                    return False
    if col_count[b] == n and not _uniform_col_cycles(n, t, b, ord_of[b]):
        return False
    return True


@njit(cache=True)
def _row1_allowed(n, t, ord_of, j, c):
    p = ord_of[1]
    if p != 0:
        # Powers of element 1 sit at indices 0..p-1 in exponent order.
        if j < p - 1:
            return c == j + 1
        if j == p - 1:
            return c == 0
        return c >= p
    length = 1
    while length < n and t[n + length] != _UNKNOWN:
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
    return c >= end + 1


@njit(cache=True)
def _place_all(n, canonical, t, row_used, col_used, row_count, col_count,
               ord_of, occ_a, occ_b, occ_len, trail, ord_trail, cnt, queue,
               a0, b0, c0):
    queue[0, 0] = a0
    queue[0, 1] = b0
    queue[0, 2] = c0
    qlen = 1
    while qlen > 0:
        qlen -= 1
        a = queue[qlen, 0]
        b = queue[qlen, 1]
        c = queue[qlen, 2]
        idx = a * n + b
        cur = t[idx]
        if cur != _UNKNOWN:
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
        row_count[a] += 1
        col_count[b] += 1
        k = occ_len[c]
        occ_a[c, k] = a
        occ_b[c, k] = b
        occ_len[c] = k + 1
        trail[cnt[0]] = idx
        cnt[0] += 1

        # Inverses pair up: a*b = e forces b*a = e.
        if c == 0:
            queue[qlen, 0] = b
            queue[qlen, 1] = a
            queue[qlen, 2] = 0
            qlen += 1

        rb = b * n
        rc = c * n
        ra = a * n
        # Triples (a, b, z): (a*b)*z = a*(b*z).
        for z in range(1, n):
            w = t[rb + z]
            if w == _UNKNOWN:
                continue
            lhs = t[rc + z]
            rhs = t[ra + w]
            if lhs == _UNKNOWN:
                if rhs != _UNKNOWN:
                    queue[qlen, 0] = c
                    queue[qlen, 1] = z
                    queue[qlen, 2] = rhs
                    qlen += 1
            elif rhs == _UNKNOWN:
                queue[qlen, 0] = a
                queue[qlen, 1] = w
                queue[qlen, 2] = lhs
                qlen += 1
            elif lhs != rhs:
                return False

        # Triples (x, a, b): (x*a)*b = x*(a*b).
        for x in range(1, n):
            u = t[x * n + a]
            if u == _UNKNOWN:
                continue
            lhs = t[u * n + b]
            rhs = t[x * n + c]
            if lhs == _UNKNOWN:
                if rhs != _UNKNOWN:
                    queue[qlen, 0] = u
                    queue[qlen, 1] = b
                    queue[qlen, 2] = rhs
                    qlen += 1
            elif rhs == _UNKNOWN:
                queue[qlen, 0] = x
                queue[qlen, 1] = c
                queue[qlen, 2] = lhs
                qlen += 1
            elif lhs != rhs:
                return False

        # Triples (x, y, b) with x*y = a: a*b = x*(y*b).
        for k2 in range(occ_len[a]):
            x = occ_a[a, k2]
            y = occ_b[a, k2]
            w = t[y * n + b]
            if w != _UNKNOWN:
                v = t[x * n + w]
                if v == _UNKNOWN:
                    queue[qlen, 0] = x
                    queue[qlen, 1] = w
                    queue[qlen, 2] = c
                    qlen += 1
                elif v != c:
                    return False

        # Triples (a, y, z) with y*z = b: (a*y)*z = a*b.
        for k2 in range(occ_len[b]):
            y = occ_a[b, k2]
            z = occ_b[b, k2]
            u = t[ra + y]
            if u != _UNKNOWN:
                v = t[u * n + z]
                if v == _UNKNOWN:
                    queue[qlen, 0] = u
                    queue[qlen, 1] = z
                    queue[qlen, 2] = c
                    qlen += 1
                elif v != c:
                    return False

        if not _row_checks(n, canonical, t, ord_of, ord_trail, cnt, row_count, a):
            return False
        if not _col_checks(n, canonical, t, ord_of, ord_trail, cnt, col_count, b):
            return False
    return True


@njit(cache=True)
def _undo(n, t, row_used, col_used, row_count, col_count, ord_of, occ_len,
          trail, ord_trail, cnt, mark, ord_mark):
    while cnt[0] > mark:
        cnt[0] -= 1
        idx = trail[cnt[0]]
        c = t[idx]
        a = idx // n
        b = idx % n
        t[idx] = _UNKNOWN
        row_used[a] &= ~(1 << c)
        col_used[b] &= ~(1 << c)
        row_count[a] -= 1
        col_count[b] -= 1
        occ_len[c] -= 1
    while cnt[1] > ord_mark:
        cnt[1] -= 1
        ord_of[ord_trail[cnt[1]]] = 0


@njit(cache=True)
def _select(n, t, row_used, col_used, row_count):
    """Next branch cell: (flat index, forbidden mask), (-1, 0) when the
    table is complete, (-2, 0) when some open cell has no candidates."""
    full = (1 << n) - 1
    # Fill row 1 left to right first: the canonical power-chain pattern
    # for element 1 prunes hardest when that row is decided early.
    if row_count[1] < n:
        for b in range(1, n):
            if t[n + b] == _UNKNOWN:
                forbidden = (row_used[1] | col_used[b] | 2 | (1 << b)) & full
                if n - _popcount(forbidden) == 0:
                    return -2, 0
                return n + b, forbidden
    best = -1
    best_forbidden = 0
    best_count = n + 1
    for a in range(1, n):
        if row_count[a] == n:
            continue
        used_a = row_used[a]
        base = a * n
        for b in range(1, n):
            if t[base + b] != _UNKNOWN:
                continue
            forbidden = (used_a | col_used[b] | (1 << a) | (1 << b)) & full
            count = n - _popcount(forbidden)
            if count < best_count:
                if count == 0:
                    return -2, 0
                best = base + b
                best_forbidden = forbidden
                best_count = count
                if count == 1:
                    return best, best_forbidden
    if best == -1:
        return -1, 0
    return best, best_forbidden


@njit(cache=True)
def _search(n, canonical):
    nn = n * n
    t = np.full(nn, _UNKNOWN, np.int64)
    row_used = np.zeros(n, np.int64)
    col_used = np.zeros(n, np.int64)
    row_count = np.zeros(n, np.int64)
    col_count = np.zeros(n, np.int64)
    ord_of = np.zeros(n, np.int64)
    occ_a = np.zeros((n, n + 2), np.int64)
    occ_b = np.zeros((n, n + 2), np.int64)
    occ_len = np.zeros(n, np.int64)
    trail = np.zeros(nn + 2, np.int64)
    ord_trail = np.zeros(n + 2, np.int64)
    cnt = np.zeros(2, np.int64)
    queue = np.zeros((4 * n * nn + 16, 3), np.int64)

    res_cap = 256
    res = np.empty((res_cap, nn), np.int8)
    res_len = 0

    if n == 1:
        res[0, 0] = 0
        return res[:1]

    # Pre-fill identity row and column.
    for b in range(n):
        t[b] = b
        row_used[0] |= 1 << b
        col_used[b] |= 1 << b
    for a in range(1, n):
        t[a * n] = a
        row_used[a] |= 1 << a
        col_used[0] |= 1 << a
    row_count[0] = n
    for a in range(1, n):
        row_count[a] = 1
    col_count[0] = n
    for b in range(1, n):
        col_count[b] = 1
    ord_of[0] = 1

    if canonical and n % 2 == 0:
        # A group of even order contains an involution (elements of order
        # > 2 pair off with their distinct inverses), so under the
        # sorted-order labeling element 1 squares to the identity.
        if not _place_all(n, canonical, t, row_used, col_used, row_count,
                          col_count, ord_of, occ_a, occ_b, occ_len, trail,
                          ord_trail, cnt, queue, 1, 1, 0):
            return res[:0]

    max_depth = nn + 2
    st_cell = np.zeros(max_depth, np.int64)
    st_forbidden = np.zeros(max_depth, np.int64)
    st_c = np.zeros(max_depth, np.int64)
    st_mark = np.zeros(max_depth, np.int64)
    st_ord_mark = np.zeros(max_depth, np.int64)

    cell, forbidden = _select(n, t, row_used, col_used, row_count)
    if cell == -1:
        for k in range(nn):
            res[0, k] = t[k]
        return res[:1]
    if cell == -2:
        return res[:0]

    depth = 0
    st_cell[0] = cell
    st_forbidden[0] = forbidden
    st_c[0] = 0
    while depth >= 0:
        cell = st_cell[depth]
        forbidden = st_forbidden[depth]
        a = cell // n
        b = cell % n
        c = st_c[depth]
        descended = False
        while c < n:
            ok = not forbidden >> c & 1
            if ok and canonical and a == 1:
                ok = _row1_allowed(n, t, ord_of, b, c)
            if ok:
                st_c[depth] = c + 1
                mark = cnt[0]
                ord_mark = cnt[1]
                st_mark[depth] = mark
                st_ord_mark[depth] = ord_mark
                if _place_all(n, canonical, t, row_used, col_used, row_count,
                              col_count, ord_of, occ_a, occ_b, occ_len, trail,
                              ord_trail, cnt, queue, a, b, c):
                    ncell, nforbidden = _select(n, t, row_used, col_used, row_count)
                    if ncell == -1:
                        if res_len == res_cap:
                            res_cap *= 2
                            grown = np.empty((res_cap, nn), np.int8)
                            grown[:res_len] = res[:res_len]
                            res = grown
                        for k in range(nn):
                            res[res_len, k] = t[k]
                        res_len += 1
                        _undo(n, t, row_used, col_used, row_count, col_count,
                              ord_of, occ_len, trail, ord_trail, cnt, mark, ord_mark)
                    elif ncell == -2:
                        _undo(n, t, row_used, col_used, row_count, col_count,
                              ord_of, occ_len, trail, ord_trail, cnt, mark, ord_mark)
                    else:
                        depth += 1
                        st_cell[depth] = ncell
                        st_forbidden[depth] = nforbidden
                        st_c[depth] = 0
                        descended = True
                        break
                else:
                    _undo(n, t, row_used, col_used, row_count, col_count,
                          ord_of, occ_len, trail, ord_trail, cnt, mark, ord_mark)
            c += 1
        if descended:
            continue
        depth -= 1
        if depth >= 0:
            _undo(n, t, row_used, col_used, row_count, col_count, ord_of,
                  occ_len, trail, ord_trail, cnt, st_mark[depth], st_ord_mark[depth])
    return res[:res_len]


def search_tables_fast(n: int, canonical: bool = True) -> list:
    """All Cayley tables of order n found by the compiled search, as
    tuple-of-tuples rows (same shape the pure-Python engine returns)."""
    flat = _search(n, canonical)
    out = []
    for row in flat:
        out.append(tuple(tuple(int(row[a * n + b]) for b in range(n)) for a in range(n)))
    return out
