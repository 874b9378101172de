"""Compiled kernels for orderly generation of regular graphs.

A labelled graph is represented by its adjacency rows as ``uint64`` bitsets.
Graphs are built one adjacency row at a time.  A partial object at level
``k`` has rows ``0..k-1`` complete; the remaining vertices only carry edges
to those rows.  The accepted representative of every isomorphism class is
the labelling whose upper triangle, read row by row, is lexicographically
largest.  Every prefix of that labelling is itself maximal among the
relabellings that keep the completed rows in front, so non-maximal prefixes
can be discarded without losing any class, and the final test on complete
graphs leaves exactly one labelling per class.

The maximality test walks labellings position by position.  The vertex
placed at position ``i`` must come from the first cell of the ordered
partition of unplaced vertices; its row is then the best arrangement inside
each cell (neighbours first), which is compared against the candidate's own
row ``i``.  Automorphisms found on the way prune sibling branches the same
way nauty does: jump back to the first-path node and skip orbit-equivalent
candidates there.
"""

import numpy as np
from numba import njit

_U0 = np.uint64(0)
_U1 = np.uint64(1)
_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)

MAX_ORDER = 63
MAX_AUTS = 256
# int64 fraction-free elimination stays exact below this order (Hadamard bound)
MAX_FILTER_ORDER = 22

FILTER_NONE = 0
FILTER_NUT = 1


@njit(cache=True, inline="always")
def popcount(x):
    x = x - ((x >> _U1) & _M1)
    x = (x & _M2) + ((x >> np.uint64(2)) & _M2)
    x = (x + (x >> np.uint64(4))) & _M4
    return np.int64((x * _H01) >> np.uint64(56))


@njit(cache=True, inline="always")
def low_index(x):
    low = x & (~x + _U1)
    return popcount(low - _U1)


@njit(cache=True, inline="always")
def below(k):
    return (_U1 << np.uint64(k)) - _U1


@njit(cache=True)
def _orbit_pruned(u, explored, level, K, auts, aut_lcp, naut, parent):
    for p in range(K):
        parent[p] = p
    for a in range(naut):
        if aut_lcp[a] < level:
            continue
        for p in range(K):
            x = p
            while parent[x] != x:
                x = parent[x]
            y = auts[a, p]
            while parent[y] != y:
                y = parent[y]
            if x != y:
                if x < y:
                    parent[y] = x
                else:
                    parent[x] = y
    ru = u
    while parent[ru] != ru:
        ru = parent[ru]
    e = explored
    while e != _U0:
        v = low_index(e)
        e &= e - _U1
        rv = v
        while parent[rv] != rv:
            rv = parent[rv]
        if rv == ru:
            return True
    return False


@njit(cache=True)
def new_workspace(n):
    return (
        np.zeros((n + 1, n + 1), np.uint64),  # inside cells per level
        np.zeros(n + 1, np.int64),
        np.zeros((n + 1, n + 1), np.uint64),  # outside cells per level
        np.zeros(n + 1, np.int64),
        np.zeros(n + 1, np.uint64),  # candidates per level
        np.zeros(n + 1, np.uint64),  # explored candidates per level
        np.zeros(n + 1, np.int64),  # path
        np.zeros((MAX_AUTS, n + 1), np.int64),
        np.zeros(MAX_AUTS, np.int64),
        np.zeros(n + 1, np.int64),  # union-find scratch
    )


@njit(cache=True)
def is_maximal(adj, K, n, ws):
    """True iff ``adj`` with rows ``0..K-1`` complete is row-lex maximal.

    Only relabellings mapping ``{0..K-1}`` onto itself are considered;
    with ``K == n`` this is the exact canonicity test.
    """
    in_cells, n_in, out_cells, n_out, cand, explored, path, auts, aut_lcp, parent = ws
    full_in = below(K)
    in_cells[0, 0] = full_in
    n_in[0] = 1
    if K < n:
        out_cells[0, 0] = below(n) & ~full_in
        n_out[0] = 1
    else:
        n_out[0] = 0
    cand[0] = full_in
    explored[0] = _U0
    level = 0
    dev = K
    naut = 0
    while True:
        if cand[level] == _U0:
            if level == 0:
                return True
            level -= 1
            if dev >= level:
                dev = K
            continue
        c = cand[level]
        onpath = dev == K
        if onpath and (c >> np.uint64(level)) & _U1:
            u = level
        else:
            u = low_index(c)
        ubit = _U1 << np.uint64(u)
        cand[level] = c & ~ubit
        if onpath and u != level and naut > 0:
            if _orbit_pruned(u, explored[level], level, K, auts, aut_lcp, naut, parent):
                continue
        if onpath:
            explored[level] |= ubit
        path[level] = u
        newdev = dev
        if onpath and u != level:
            newdev = level
        nbr = adj[u]
        rowbits = _U0
        pos = level + 1
        nin = 0
        for ci in range(n_in[level]):
            C = in_cells[level, ci] & ~ubit
            if C == _U0:
                continue
            a = C & nbr
            b = C & ~nbr
            ca = popcount(a)
            if ca > 0:
                rowbits |= below(ca) << np.uint64(pos)
                in_cells[level + 1, nin] = a
                nin += 1
            if b != _U0:
                in_cells[level + 1, nin] = b
                nin += 1
            pos += popcount(C)
        pos = K
        nout = 0
        for co in range(n_out[level]):
            C = out_cells[level, co]
            a = C & nbr
            b = C & ~nbr
            ca = popcount(a)
            if ca > 0:
                rowbits |= below(ca) << np.uint64(pos)
                out_cells[level + 1, nout] = a
                nout += 1
            if b != _U0:
                out_cells[level + 1, nout] = b
                nout += 1
            pos += popcount(C)
        target = adj[level] & ~below(level + 1)
        x = rowbits ^ target
        if x != _U0:
            low = x & (~x + _U1)
            if rowbits & low:
                return False
            continue
        if level + 1 == K:
            if newdev == K:
                continue
            if naut < MAX_AUTS:
                for p in range(K):
                    auts[naut, p] = path[p]
                aut_lcp[naut] = newdev
                naut += 1
            level = newdev
            dev = K
            continue
        n_in[level + 1] = nin
        n_out[level + 1] = nout
        cand[level + 1] = in_cells[level + 1, 0]
        explored[level + 1] = _U0
        dev = newdev
        level += 1


@njit(cache=True)
def _graphic(res, m):
    """Erdos-Gallai test on the first ``m`` entries of ``res`` (sorted in place)."""
    total = 0
    for i in range(m):
        if res[i] < 0 or res[i] > m - 1:
            return False
        total += res[i]
    if total % 2 == 1:
        return False
    for i in range(1, m):
        v = res[i]
        j = i - 1
        while j >= 0 and res[j] < v:
            res[j + 1] = res[j]
            j -= 1
        res[j + 1] = v
    lhs = 0
    for r in range(1, m + 1):
        lhs += res[r - 1]
        rhs = r * (r - 1)
        for i in range(r, m):
            rhs += min(res[i], r)
        if lhs > rhs:
            return False
    return True


@njit(cache=True)
def _girth_ok(adj, k, mask, girth):
    """Adding edges k-j (j in mask, in order) keeps every cycle length >= girth."""
    m = mask
    added = _U0
    while m != _U0:
        j = low_index(m)
        m &= m - _U1
        reach = _U1 << np.uint64(k)
        frontier = reach
        for _ in range(girth - 2):
            nxt = _U0
            f = frontier
            while f != _U0:
                v = low_index(f)
                f &= f - _U1
                nv = adj[v]
                if v == k:
                    nv |= added
                elif (added >> np.uint64(v)) & _U1:
                    nv |= _U1 << np.uint64(k)
                nxt |= nv
            nxt &= ~reach
            reach |= nxt
            frontier = nxt
            if frontier == _U0:
                break
        if (reach >> np.uint64(j)) & _U1:
            return False
        added |= _U1 << np.uint64(j)
    return True


@njit(cache=True)
def is_connected_rows(adj, n):
    if n == 0:
        return True
    reach = _U1
    frontier = _U1
    while frontier != _U0:
        nxt = _U0
        f = frontier
        while f != _U0:
            v = low_index(f)
            f &= f - _U1
            nxt |= adj[v]
        nxt &= ~reach
        reach |= nxt
        frontier = nxt
    return reach == below(n)


@njit(cache=True)
def nut_filter_int64(adj, n, M, x, pivcol):
    """Exact nut test for n <= MAX_FILTER_ORDER using fraction-free Gauss-Jordan.

    Returns 1 for a nut, 0 for a non-nut, and -1 when the internal kernel
    check fails (the caller must then fall back to arbitrary precision).
    """
    if n < 2:
        return 0
    for i in range(n):
        r = adj[i]
        for j in range(n):
            M[i, j] = np.int64((r >> np.uint64(j)) & _U1)
    rank = 0
    prev = np.int64(1)
    for c in range(n):
        p = -1
        for i in range(rank, n):
            if M[i, c] != 0:
                p = i
                break
        if p < 0:
            if c + 1 - rank > 1:
                return 0
            continue
        if p != rank:
            for j in range(n):
                t = M[p, j]
                M[p, j] = M[rank, j]
                M[rank, j] = t
        piv = M[rank, c]
        for i in range(n):
            if i == rank:
                continue
            f = M[i, c]
            for j in range(n):
                M[i, j] = (piv * M[i, j] - f * M[rank, j]) // prev
        prev = piv
        pivcol[rank] = c
        rank += 1
    if n - rank != 1:
        return 0
    free = -1
    r = 0
    for c in range(n):
        if r < rank and pivcol[r] == c:
            r += 1
        else:
            free = c
            break
    for c in range(n):
        x[c] = 0
    x[free] = prev
    for i in range(rank):
        x[pivcol[i]] = -M[i, free]
    for i in range(n):
        s = np.int64(0)
        r2 = adj[i]
        while r2 != _U0:
            j = low_index(r2)
            r2 &= r2 - _U1
            s += x[j]
        if s != 0:
            return -1
    for i in range(n):
        if x[i] == 0:
            return 0
    return 1


@njit(cache=True)
def _row_candidates(adj, n, d, k, rows, blk_start, blk_cap, val, suf):
    """Write the semicanonical choices for row ``k`` into ``rows``; return count.

    Columns right of ``k`` with equal adjacency to the finished rows form a
    block; inside a block the new edges must take the leftmost columns, so a
    row is a choice of how many edges go into each block.  Choices come out
    in decreasing lexicographic order.
    """
    r = d - popcount(adj[k])
    if r < 0 or r > n - 1 - k:
        return 0
    if r == 0:
        rows[0] = _U0
        return 1
    nb = 0
    j = k + 1
    while j < n:
        key = adj[j]
        s = j
        while j < n and adj[j] == key:
            j += 1
        blk_start[nb] = s
        blk_cap[nb] = j - s if popcount(key) < d else 0
        nb += 1
    suf[nb] = 0
    for b in range(nb - 1, -1, -1):
        suf[b] = suf[b + 1] + blk_cap[b]
    if suf[0] < r:
        return 0
    amount = r
    for q in range(nb):
        v = min(blk_cap[q], amount)
        val[q] = v
        amount -= v
    cnt = 0
    while True:
        if cnt == rows.shape[0]:
            raise ValueError("row candidate buffer exhausted")
        m = _U0
        for q in range(nb):
            if val[q] > 0:
                m |= below(val[q]) << np.uint64(blk_start[q])
        rows[cnt] = m
        cnt += 1
        tail = 0
        b = nb - 1
        while b >= 0:
            if val[b] > 0 and suf[b + 1] >= tail + 1:
                break
            tail += val[b]
            b -= 1
        if b < 0:
            break
        val[b] -= 1
        amount = tail + 1
        for q in range(b + 1, nb):
            v = min(blk_cap[q], amount)
            val[q] = v
            amount -= v
    return cnt


@njit(cache=True)
def search(n, d, adj0, start, split, connected, girth, complement, filt, store, cap):
    """Depth-first orderly search below the partial graph ``adj0`` at level ``start``.

    Nodes reaching level ``split`` (when ``split < n - 1``) are emitted as
    prefixes instead of being expanded.  Returns ``(out, count, nodes, flag)``
    where ``out[:count]`` holds the emitted adjacency rows (only when
    ``store``) and ``flag`` is 1 if the compiled nut filter had to defer a
    graph (such graphs are emitted unfiltered).
    """
    ws = new_workspace(n)
    stack = np.zeros((n + 1, n), np.uint64)
    rows = np.zeros((n + 1, 4096), np.uint64)
    nrows = np.zeros(n + 1, np.int64)
    idx = np.zeros(n + 1, np.int64)
    blk_start = np.zeros(n + 1, np.int64)
    blk_cap = np.zeros(n + 1, np.int64)
    val = np.zeros(n + 1, np.int64)
    suf = np.zeros(n + 2, np.int64)
    res = np.zeros(n + 1, np.int64)
    child = np.zeros(n, np.uint64)
    final = np.zeros(n, np.uint64)
    M = np.zeros((n, n), np.int64)
    xv = np.zeros(n, np.int64)
    pivcol = np.zeros(n, np.int64)
    out = np.zeros((cap if store else 1, n), np.uint64)
    count = 0
    nodes = 0
    flag = 0
    full = below(n)

    for i in range(n):
        stack[start, i] = adj0[i]

    # the degenerate orders have no rows left to fill
    if start >= n - 1:
        last = n - 1
        ok = last < 0 or popcount(stack[start, last]) == d
        if ok and is_maximal(stack[start], n, n, ws):
            nodes += 1
            for i in range(n):
                final[i] = stack[start, i]
            if complement:
                for i in range(n):
                    final[i] = ~final[i] & full & ~(_U1 << np.uint64(i))
            keep = True
            if connected and not is_connected_rows(final, n):
                keep = False
            if keep and filt == FILTER_NUT and n <= MAX_FILTER_ORDER:
                verdict = nut_filter_int64(final, n, M, xv, pivcol)
                if verdict == 0:
                    keep = False
                elif verdict < 0:
                    flag = 1
            if keep:
                if store:
                    for i in range(n):
                        out[count, i] = final[i]
                count += 1
        return out, count, nodes, flag

    level = start
    nrows[level] = _row_candidates(stack[level], n, d, level, rows[level], blk_start, blk_cap, val, suf)
    idx[level] = 0
    while level >= start:
        if idx[level] >= nrows[level]:
            level -= 1
            continue
        mask = rows[level, idx[level]]
        idx[level] += 1
        k = level
        parent_rows = stack[level]
        if girth > 3 and mask != _U0:
            if not _girth_ok(parent_rows, k, mask, girth):
                continue
        for i in range(n):
            child[i] = parent_rows[i]
        child[k] |= mask
        m = mask
        kb = _U1 << np.uint64(k)
        while m != _U0:
            j = low_index(m)
            m &= m - _U1
            child[j] |= kb
        # residual degrees of the unfinished vertices must be graphic
        nr = 0
        for j in range(k + 1, n):
            res[nr] = d - popcount(child[j])
            nr += 1
        if not _graphic(res, nr):
            continue
        if connected and not complement and k + 1 < n:
            if child[k + 1] & below(k + 1) == _U0:
                continue
        nxt = k + 1
        if nxt == n - 1:
            if not is_maximal(child, n, n, ws):
                continue
            nodes += 1
            for i in range(n):
                final[i] = child[i]
            if complement:
                for i in range(n):
                    final[i] = ~final[i] & full & ~(_U1 << np.uint64(i))
            if connected and not is_connected_rows(final, n):
                continue
            if filt == FILTER_NUT and n <= MAX_FILTER_ORDER:
                verdict = nut_filter_int64(final, n, M, xv, pivcol)
                if verdict == 0:
                    continue
                if verdict < 0:
                    flag = 1
            if store:
                if count == out.shape[0]:
                    grown = np.zeros((2 * out.shape[0], n), np.uint64)
                    grown[:count] = out[:count]
                    out = grown
                for i in range(n):
                    out[count, i] = final[i]
            count += 1
            continue
        if not is_maximal(child, nxt, n, ws):
            continue
        nodes += 1
        if nxt == split:
            if store:
                if count == out.shape[0]:
                    grown = np.zeros((2 * out.shape[0], n), np.uint64)
                    grown[:count] = out[:count]
                    out = grown
                for i in range(n):
                    out[count, i] = child[i]
            count += 1
            continue
        level = nxt
        for i in range(n):
            stack[level, i] = child[i]
        nrows[level] = _row_candidates(stack[level], n, d, level, rows[level], blk_start, blk_cap, val, suf)
        idx[level] = 0
    return out, count, nodes, flag
