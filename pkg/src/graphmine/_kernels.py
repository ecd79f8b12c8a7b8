"""Numba kernels for the enumerators.

Private module. The kernels work on the CSR arrays of a StaticGraph and
report into a stats vector; solution/record capture uses a caller-sized
int32 buffer with a needed-length counter so wrappers can do an exact
two-pass allocation (kernels never reallocate, which keeps array
references stable across recursion).

Stats vector layout (int64[16]):
  0 solutions          4 dup-parity violations (case 3a)
  1 success leaves     5 peak frontier size
  2 failure leaves     6 output ints needed
  3 recursive calls    7 error flag
  8 linear switches    9 switch component-bound violations
"""

from __future__ import annotations

import numpy as np
from numba import njit

ST_SOLUTIONS = 0
ST_SUCCESS = 1
ST_FAILURE = 2
ST_CALLS = 3
ST_DUP_PARITY = 4
ST_MAX_FRONTIER = 5
ST_OUT_NEED = 6
ST_ERROR = 7
ST_SWITCHES = 8
ST_SWITCH_VIOL = 9

REC_C1 = 1
REC_C2 = 2
REC_C3 = 3
REC_C4 = 4


@njit(cache=True)
def _adjacent(indptr, nbrs, u, w):
    lo = indptr[u]
    hi = indptr[u + 1]
    while lo < hi:
        mid = (lo + hi) >> 1
        x = nbrs[mid]
        if x == w:
            return True
        if x < w:
            lo = mid + 1
        else:
            hi = mid
    return False


@njit(cache=True)
def _emit_row(out, out_top, stats, S, length):
    stats[ST_OUT_NEED] += length
    if out_top + length <= out.shape[0]:
        for i in range(length):
            out[out_top + i] = S[i]
        return out_top + length
    return out_top


@njit(cache=True)
def _base_case_count(indptr, nbrs, F, lo, hi, depth, v0, mark, numark, ep,
                     stats):
    """Count-only completion of S with `depth` more vertices.

    mark == 1 identifies exactly the current frontier segment, so the
    two-frontier case reduces to per-z intersection counts; N(u)
    membership is answered by stamping numark with a fresh epoch.
    Returns (count, next_epoch).
    """
    L = hi - lo
    if depth == 1:
        return np.int64(L), ep
    if depth == 2:
        local = np.int64(L) * (L - 1) // 2
        for ui in range(lo, hi):
            u = F[ui]
            for j in range(indptr[u], indptr[u + 1]):
                z = nbrs[j]
                if z > v0 and mark[z] == 0:
                    local += 1
        return local, ep
    local = np.int64(L) * (L - 1) * (L - 2) // 6
    duplicated = np.int64(0)
    for ui in range(lo, hi):
        u = F[ui]
        ep += 1
        for j in range(indptr[u], indptr[u + 1]):
            numark[nbrs[j]] = ep
        udeg = np.int64(0)
        for j in range(indptr[u], indptr[u + 1]):
            z = nbrs[j]
            if z <= v0 or mark[z] != 0:
                continue
            udeg += 1
            tz = np.int64(0)
            for j2 in range(indptr[z], indptr[z + 1]):
                w = nbrs[j2]
                if mark[w] == 1:
                    tz += 1  # frontier vertices adjacent to z (incl. u)
                elif w > v0 and mark[w] == 0 and numark[w] != ep:
                    local += 1  # case 4
            duplicated += tz - 1       # case 3a, double counted
            local += L - tz            # case 3b
        local += udeg * (udeg - 1) // 2  # case 2
    if duplicated & 1:
        stats[ST_DUP_PARITY] += 1
    local += duplicated // 2
    return local, ep


@njit(cache=True)
def _base_case(indptr, nbrs, F, lo, hi, depth, v0, mark, S, slen, zbuf,
               capture, out, out_top, stats):
    """Count the ways to finish S with `depth` more vertices; optionally
    emit one record per completion family. Returns (count, out_top)."""
    L = hi - lo
    local = np.int64(0)
    if depth == 1:
        local = L
        if capture == 2:
            need = 3 + slen + L
            stats[ST_OUT_NEED] += need
            if out_top + need <= out.shape[0]:
                out[out_top] = REC_C1
                out[out_top + 1] = slen
                for i in range(slen):
                    out[out_top + 2 + i] = S[i]
                out[out_top + 2 + slen] = L
                for i in range(L):
                    out[out_top + 3 + slen + i] = F[lo + i]
                out_top += need
        return local, out_top

    if depth == 2:
        local = L * (L - 1) // 2
        if capture == 2 and L >= 2:
            need = 3 + slen + L
            stats[ST_OUT_NEED] += need
            if out_top + need <= out.shape[0]:
                out[out_top] = REC_C1
                out[out_top + 1] = slen
                for i in range(slen):
                    out[out_top + 2 + i] = S[i]
                out[out_top + 2 + slen] = L
                for i in range(L):
                    out[out_top + 3 + slen + i] = F[lo + i]
                out_top += need
        for ui in range(lo, hi):
            u = F[ui]
            udeg = 0
            for j in range(indptr[u], indptr[u + 1]):
                z = nbrs[j]
                if z > v0 and mark[z] == 0:
                    zbuf[udeg] = z
                    udeg += 1
            local += udeg
            if capture == 2 and udeg >= 1:
                need = 4 + slen + udeg
                stats[ST_OUT_NEED] += need
                if out_top + need <= out.shape[0]:
                    out[out_top] = REC_C2
                    out[out_top + 1] = slen
                    for i in range(slen):
                        out[out_top + 2 + i] = S[i]
                    out[out_top + 2 + slen] = 1 + udeg
                    out[out_top + 3 + slen] = u
                    for i in range(udeg):
                        out[out_top + 4 + slen + i] = zbuf[i]
                    out_top += need
        return local, out_top

    # depth == 3: the four completion cases.
    local = L * (L - 1) * (L - 2) // 6
    if capture == 2 and L >= 3:
        need = 3 + slen + L
        stats[ST_OUT_NEED] += need
        if out_top + need <= out.shape[0]:
            out[out_top] = REC_C1
            out[out_top + 1] = slen
            for i in range(slen):
                out[out_top + 2 + i] = S[i]
            out[out_top + 2 + slen] = L
            for i in range(L):
                out[out_top + 3 + slen + i] = F[lo + i]
            out_top += need
    duplicated = np.int64(0)
    for ui in range(lo, hi):
        u = F[ui]
        udeg = 0
        for j in range(indptr[u], indptr[u + 1]):
            z = nbrs[j]
            if z <= v0 or mark[z] != 0:
                continue
            zbuf[udeg] = z
            udeg += 1
            # case 4: one more hop out of z, avoiding N(u).
            for j2 in range(indptr[z], indptr[z + 1]):
                w = nbrs[j2]
                if w <= v0 or mark[w] != 0:
                    continue
                if not _adjacent(indptr, nbrs, u, w):
                    local += 1
                    if capture == 2:
                        stats[ST_OUT_NEED] += 6 + slen
                        if out_top + 6 + slen <= out.shape[0]:
                            out[out_top] = REC_C4
                            out[out_top + 1] = slen
                            for i in range(slen):
                                out[out_top + 2 + i] = S[i]
                            out[out_top + 2 + slen] = 3
                            out[out_top + 3 + slen] = u
                            out[out_top + 4 + slen] = z
                            out[out_top + 5 + slen] = w
                            out_top += 6 + slen
            # case 3: a second frontier vertex next to S.
            for vi in range(lo, hi):
                if vi == ui:
                    continue
                v = F[vi]
                if _adjacent(indptr, nbrs, z, v):
                    duplicated += 1
                    if capture == 2 and u < v:
                        stats[ST_OUT_NEED] += 6 + slen
                        if out_top + 6 + slen <= out.shape[0]:
                            out[out_top] = REC_C3
                            out[out_top + 1] = slen
                            for i in range(slen):
                                out[out_top + 2 + i] = S[i]
                            out[out_top + 2 + slen] = 3
                            out[out_top + 3 + slen] = u
                            out[out_top + 4 + slen] = v
                            out[out_top + 5 + slen] = z
                            out_top += 6 + slen
                else:
                    local += 1
                    if capture == 2:
                        stats[ST_OUT_NEED] += 6 + slen
                        if out_top + 6 + slen <= out.shape[0]:
                            out[out_top] = REC_C3
                            out[out_top + 1] = slen
                            for i in range(slen):
                                out[out_top + 2 + i] = S[i]
                            out[out_top + 2 + slen] = 3
                            out[out_top + 3 + slen] = u
                            out[out_top + 4 + slen] = v
                            out[out_top + 5 + slen] = z
                            out_top += 6 + slen
        if udeg >= 2:
            local += udeg * (udeg - 1) // 2
            if capture == 2:
                need = 4 + slen + udeg
                stats[ST_OUT_NEED] += need
                if out_top + need <= out.shape[0]:
                    out[out_top] = REC_C2
                    out[out_top + 1] = slen
                    for i in range(slen):
                        out[out_top + 2 + i] = S[i]
                    out[out_top + 2 + slen] = 1 + udeg
                    out[out_top + 3 + slen] = u
                    for i in range(udeg):
                        out[out_top + 4 + slen + i] = zbuf[i]
                    out_top += need
    if duplicated & 1:
        stats[ST_DUP_PARITY] += 1
    local += duplicated // 2
    return local, out_top


@njit(cache=True)
def bp_kernel(n, indptr, nbrs, k, base_depth, capture, out, stats,
              deadline_calls):
    """Binary-partition enumeration over start vertices in ascending order.

    base_depth == 0 reproduces the plain recursion that emits at |S| = k;
    base_depth in 1..3 stops at |S| = k - base_depth and finishes each
    partial solution combinatorially. `capture`: 0 count, 1 solution rows
    (base_depth 0), 2 completion-family records (base_depth >= 1).
    A nonzero deadline_calls aborts once that many calls were made
    (error flag 2) so callers can time-box a run.
    """
    max_deg = 0
    for v in range(n):
        d = indptr[v + 1] - indptr[v]
        if d > max_deg:
            d64 = d
            max_deg = d64
    fcap = (k + 1) * max_deg + 4
    if fcap > n + 4:
        fcap = n + 4
    F = np.empty(fcap, np.int32)
    S = np.empty(k + 2, np.int32)
    zbuf = np.empty(max_deg + 2, np.int32)
    mark = np.zeros(n, np.uint8)
    numark = np.zeros(n, np.int64)
    ep = np.int64(0)
    fr_lo = np.empty(k + 2, np.int64)
    fr_hi = np.empty(k + 2, np.int64)
    fr_cur = np.empty(k + 2, np.int64)
    fr_found = np.empty(k + 2, np.uint8)
    out_top = np.int64(0)
    base_s = k - base_depth

    for v0 in range(n):
        stats[ST_CALLS] += 1
        if deadline_calls > 0 and stats[ST_CALLS] > deadline_calls:
            stats[ST_ERROR] = 2
            return
        S[0] = v0
        if k == 1:
            stats[ST_SOLUTIONS] += 1
            stats[ST_SUCCESS] += 1
            if capture == 1:
                out_top = _emit_row(out, out_top, stats, S, 1)
            continue
        mark[v0] = 2
        ftop = np.int64(0)
        for j in range(indptr[v0], indptr[v0 + 1]):
            w = nbrs[j]
            if w > v0 and mark[w] == 0:
                F[ftop] = w
                mark[w] = 1
                ftop += 1
        if ftop > stats[ST_MAX_FRONTIER]:
            stats[ST_MAX_FRONTIER] = ftop
        if ftop == 0:
            stats[ST_FAILURE] += 1
            mark[v0] = 0
            continue
        if base_s == 1 and base_depth >= 1:
            if capture == 2:
                local, out_top = _base_case(indptr, nbrs, F, 0, ftop,
                                            base_depth, v0, mark, S, 1,
                                            zbuf, capture, out, out_top,
                                            stats)
            else:
                local, ep = _base_case_count(indptr, nbrs, F, 0, ftop,
                                             base_depth, v0, mark, numark,
                                             ep, stats)
            stats[ST_SOLUTIONS] += local
            if local > 0:
                stats[ST_SUCCESS] += 1
            for i in range(ftop):
                mark[F[i]] = 0
            mark[v0] = 0
            continue
        # root frame
        d = 0
        fr_lo[0] = 0
        fr_hi[0] = ftop
        fr_cur[0] = 0
        fr_found[0] = 0
        have_ret = False
        retval = False
        while d >= 0:
            if have_ret:
                u = F[fr_cur[d]]
                mark[u] = 3
                if retval:
                    fr_found[d] = 1
                    fr_cur[d] += 1
                    have_ret = False
                    continue
                # child subtree empty: prune remaining siblings and pop.
                rv = fr_found[d] == 1
                ph = fr_hi[d - 1] if d > 0 else np.int64(0)
                for i in range(fr_lo[d], min(ph, fr_hi[d])):
                    mark[F[i]] = 1
                for i in range(max(ph, fr_lo[d]), fr_hi[d]):
                    mark[F[i]] = 0
                d -= 1
                retval = rv
                continue
            if fr_cur[d] >= fr_hi[d]:
                rv = fr_found[d] == 1
                ph = fr_hi[d - 1] if d > 0 else np.int64(0)
                for i in range(fr_lo[d], min(ph, fr_hi[d])):
                    mark[F[i]] = 1
                for i in range(max(ph, fr_lo[d]), fr_hi[d]):
                    mark[F[i]] = 0
                d -= 1
                retval = rv
                have_ret = True
                continue
            # spawn the child that includes u
            u = F[fr_cur[d]]
            s_child = d + 2
            stats[ST_CALLS] += 1
            if deadline_calls > 0 and stats[ST_CALLS] > deadline_calls:
                stats[ST_ERROR] = 2
                return
            S[d + 1] = u
            if s_child == k and base_depth == 0:
                stats[ST_SOLUTIONS] += 1
                stats[ST_SUCCESS] += 1
                if capture == 1:
                    out_top = _emit_row(out, out_top, stats, S, k)
                retval = True
                have_ret = True
                continue
            mark[u] = 2
            ph = fr_hi[d]
            nh = ph
            for j in range(indptr[u], indptr[u + 1]):
                w = nbrs[j]
                if w > v0 and mark[w] == 0:
                    F[nh] = w
                    mark[w] = 1
                    nh += 1
            if nh > stats[ST_MAX_FRONTIER]:
                stats[ST_MAX_FRONTIER] = nh
            child_lo = fr_cur[d] + 1
            if child_lo == nh:
                stats[ST_FAILURE] += 1
                for i in range(ph, nh):
                    mark[F[i]] = 0
                mark[u] = 1
                retval = False
                have_ret = True
                continue
            if s_child == base_s and base_depth >= 1:
                if capture == 2:
                    local, out_top = _base_case(indptr, nbrs, F, child_lo,
                                                nh, base_depth, v0, mark, S,
                                                s_child, zbuf, capture, out,
                                                out_top, stats)
                else:
                    local, ep = _base_case_count(indptr, nbrs, F, child_lo,
                                                 nh, base_depth, v0, mark,
                                                 numark, ep, stats)
                stats[ST_SOLUTIONS] += local
                if local > 0:
                    stats[ST_SUCCESS] += 1
                for i in range(ph, nh):
                    mark[F[i]] = 0
                mark[u] = 1
                retval = local > 0
                have_ret = True
                continue
            d += 1
            fr_lo[d] = child_lo
            fr_hi[d] = nh
            fr_cur[d] = child_lo
            fr_found[d] = 0
        mark[v0] = 0


# ---------------------------------------------------------------------------
# Amortized enumerator: array-backed doubly-linked adjacency with LIFO undo.
# ---------------------------------------------------------------------------

LOG_UNLINK = 0
LOG_ALLOC = 1
LOG_KILL = 2

R_POOL = 0
R_LOG = 1
R_SLEN = 2
R_BFS_EP = 3
R_NBR_EP = 4
R_MAND_EP = 5
R_OUT_TOP = 6


@njit(cache=True)
def _unlink(to, nxt, prv, head, tail, deg, lop, larg, reg, j, stats):
    u = to[j ^ 1]
    p = prv[j]
    nx = nxt[j]
    if p == -1:
        head[u] = nx
    else:
        nxt[p] = nx
    if nx == -1:
        tail[u] = p
    else:
        prv[nx] = p
    deg[u] -= 1
    i = reg[R_LOG]
    if i >= lop.shape[0]:
        stats[ST_ERROR] = 1
        return
    lop[i] = LOG_UNLINK
    larg[i] = j
    reg[R_LOG] = i + 1


@njit(cache=True)
def _relink(to, nxt, prv, head, tail, deg, j):
    u = to[j ^ 1]
    p = prv[j]
    nx = nxt[j]
    if p == -1:
        head[u] = j
    else:
        nxt[p] = j
    if nx == -1:
        tail[u] = j
    else:
        prv[nx] = j
    deg[u] += 1


@njit(cache=True)
def _link_tail(to, nxt, prv, head, tail, deg, u, j):
    t = tail[u]
    prv[j] = t
    nxt[j] = -1
    if t == -1:
        head[u] = j
    else:
        nxt[t] = j
    tail[u] = j
    deg[u] += 1


@njit(cache=True)
def _alloc_pair(to, nxt, prv, head, tail, deg, lop, larg, reg, u, w, stats):
    j = reg[R_POOL]
    if j + 2 > to.shape[0]:
        stats[ST_ERROR] = 1
        return
    to[j] = w
    to[j + 1] = u
    _link_tail(to, nxt, prv, head, tail, deg, u, j)
    _link_tail(to, nxt, prv, head, tail, deg, w, j + 1)
    reg[R_POOL] = j + 2
    i = reg[R_LOG]
    if i >= lop.shape[0]:
        stats[ST_ERROR] = 1
        return
    lop[i] = LOG_ALLOC
    larg[i] = j
    reg[R_LOG] = i + 1


@njit(cache=True)
def _rollback(to, nxt, prv, head, tail, deg, alive, lop, larg, reg, wm):
    while reg[R_LOG] > wm:
        i = reg[R_LOG] - 1
        reg[R_LOG] = i
        op = lop[i]
        a = larg[i]
        if op == LOG_UNLINK:
            _relink(to, nxt, prv, head, tail, deg, a)
        elif op == LOG_ALLOC:
            for off in range(1, -1, -1):
                j = a + off
                u = to[j ^ 1]
                p = prv[j]
                nx = nxt[j]
                if p == -1:
                    head[u] = nx
                else:
                    nxt[p] = nx
                if nx == -1:
                    tail[u] = p
                else:
                    prv[nx] = p
                deg[u] -= 1
            reg[R_POOL] = a
        else:
            alive[a] = 1


@njit(cache=True)
def _delete_vertex(to, nxt, prv, head, tail, deg, alive, lop, larg, reg, v,
                   stats):
    j = head[v]
    while j != -1:
        _unlink(to, nxt, prv, head, tail, deg, lop, larg, reg, j ^ 1, stats)
        j = nxt[j]
    alive[v] = 0
    i = reg[R_LOG]
    if i >= lop.shape[0]:
        stats[ST_ERROR] = 1
        return
    lop[i] = LOG_KILL
    larg[i] = v
    reg[R_LOG] = i + 1


@njit(cache=True)
def _contract(to, nxt, prv, head, tail, deg, alive, lop, larg, reg,
              nbr_stamp, r, v, stats):
    """Merge v into r, deduplicating the combined neighborhood."""
    reg[R_NBR_EP] += 1
    ep = reg[R_NBR_EP]
    j = head[r]
    while j != -1:
        nbr_stamp[to[j]] = ep
        j = nxt[j]
    j = head[v]
    while j != -1:
        w = to[j]
        _unlink(to, nxt, prv, head, tail, deg, lop, larg, reg, j ^ 1, stats)
        if w != r and nbr_stamp[w] != ep:
            nbr_stamp[w] = ep
            _alloc_pair(to, nxt, prv, head, tail, deg, lop, larg, reg, r, w,
                        stats)
        j = nxt[j]
    alive[v] = 0
    i = reg[R_LOG]
    if i >= lop.shape[0]:
        stats[ST_ERROR] = 1
        return
    lop[i] = LOG_KILL
    larg[i] = v
    reg[R_LOG] = i + 1


@njit(cache=True)
def _reach(to, nxt, head, reg, bfs_stamp, bfs_q, r, need, skip):
    """Truncated BFS: count reachable vertices (including r, ignoring
    skip) stopping at `need`."""
    reg[R_BFS_EP] += 1
    ep = reg[R_BFS_EP]
    bfs_stamp[r] = ep
    cnt = 1
    if cnt >= need:
        return cnt
    bfs_q[0] = r
    qh = 0
    qt = 1
    while qh < qt:
        v = bfs_q[qh]
        qh += 1
        j = head[v]
        while j != -1:
            w = to[j]
            if w != skip and bfs_stamp[w] != ep:
                bfs_stamp[w] = ep
                cnt += 1
                if cnt >= need:
                    return cnt
                bfs_q[qt] = w
                qt += 1
            j = nxt[j]
    return cnt


@njit(cache=True)
def _mark_mandatory(to, nxt, head, reg, mand_stamp, dfs_stamp, disc, low,
                    sz, cut, stk_v, stk_par, stk_arc, comp_buf, r, need,
                    stats):
    """Iterative lowpoint DFS from r. Marks every vertex (except r) whose
    removal leaves fewer than `need` vertices connected to r. Returns the
    component size."""
    reg[R_MAND_EP] += 1
    ep = reg[R_MAND_EP]
    cap = stk_v.shape[0]
    timer = 0
    top = 0
    stk_v[0] = r
    stk_par[0] = -1
    stk_arc[0] = head[r]
    dfs_stamp[r] = ep
    disc[r] = timer
    low[r] = timer
    sz[r] = 1
    cut[r] = 0
    timer += 1
    comp = 1
    comp_buf[0] = r
    while top >= 0:
        v = stk_v[top]
        j = stk_arc[top]
        if j != -1:
            stk_arc[top] = nxt[j]
            w = to[j]
            if dfs_stamp[w] != ep:
                if top + 1 >= cap or comp >= comp_buf.shape[0]:
                    stats[ST_ERROR] = 3
                    return comp
                dfs_stamp[w] = ep
                disc[w] = timer
                low[w] = timer
                sz[w] = 1
                cut[w] = 0
                timer += 1
                comp_buf[comp] = w
                comp += 1
                top += 1
                stk_v[top] = w
                stk_par[top] = v
                stk_arc[top] = head[w]
            elif w != stk_par[top]:
                if disc[w] < low[v]:
                    low[v] = disc[w]
        else:
            p = stk_par[top]
            if p != -1:
                sz[p] += sz[v]
                if low[v] < low[p]:
                    low[p] = low[v]
                if low[v] >= disc[p]:
                    cut[p] += sz[v]
            top -= 1
    for i in range(1, comp):
        v = comp_buf[i]
        if comp - 1 - cut[v] < need:
            mand_stamp[v] = ep
    return comp


@njit(cache=True)
def _am_emit(S, k0, capture, out, reg, stats):
    stats[ST_SOLUTIONS] += 1
    stats[ST_SUCCESS] += 1
    if capture == 1:
        stats[ST_OUT_NEED] += k0
        t = reg[R_OUT_TOP]
        if t + k0 <= out.shape[0]:
            for i in range(k0):
                out[t + i] = S[i]
            reg[R_OUT_TOP] = t + k0


@njit(cache=True)
def _am_linear(to, nxt, prv, head, tail, deg, alive, lop, larg, reg, stats,
               S, k0, bfs_stamp, bfs_q, nbr_stamp, mand_stamp, dfs_stamp,
               disc, low, sz, cut, stk_v, stk_par, stk_arc, comp_buf, out,
               capture, r, kr):
    """Mandatory-absorbing enumeration for small remainders; emits every
    completion of S, restores the graph before returning."""
    frame_wm = reg[R_LOG]
    frame_slen = reg[R_SLEN]
    while True:
        stats[ST_CALLS] += 1
        if stats[ST_ERROR] != 0:
            break
        if kr == 0:
            _am_emit(S, k0, capture, out, reg, stats)
            break
        comp = _mark_mandatory(to, nxt, head, reg, mand_stamp, dfs_stamp,
                               disc, low, sz, cut, stk_v, stk_par, stk_arc,
                               comp_buf, r, kr + 1, stats)
        if comp < kr + 1:
            stats[ST_ERROR] = 4
            break
        ep = reg[R_MAND_EP]
        emitted = False
        while True:
            cand = -1
            j = head[r]
            while j != -1:
                w = to[j]
                if mand_stamp[w] == ep:
                    cand = w
                    break
                j = nxt[j]
            if cand == -1:
                break
            S[reg[R_SLEN]] = cand
            reg[R_SLEN] += 1
            kr -= 1
            _contract(to, nxt, prv, head, tail, deg, alive, lop, larg, reg,
                      nbr_stamp, r, cand, stats)
            if kr == 0:
                _am_emit(S, k0, capture, out, reg, stats)
                emitted = True
                break
        if emitted or stats[ST_ERROR] != 0:
            break
        if deg[r] == 0:
            stats[ST_ERROR] = 4
            break
        z = to[head[r]]
        wm = reg[R_LOG]
        slen0 = reg[R_SLEN]
        S[slen0] = z
        reg[R_SLEN] = slen0 + 1
        _contract(to, nxt, prv, head, tail, deg, alive, lop, larg, reg,
                  nbr_stamp, r, z, stats)
        _am_linear(to, nxt, prv, head, tail, deg, alive, lop, larg, reg,
                   stats, S, k0, bfs_stamp, bfs_q, nbr_stamp, mand_stamp,
                   dfs_stamp, disc, low, sz, cut, stk_v, stk_par, stk_arc,
                   comp_buf, out, capture, r, kr - 1)
        _rollback(to, nxt, prv, head, tail, deg, alive, lop, larg, reg, wm)
        reg[R_SLEN] = slen0
        _delete_vertex(to, nxt, prv, head, tail, deg, alive, lop, larg, reg,
                       z, stats)
        # tail branch: same call without z.
    _rollback(to, nxt, prv, head, tail, deg, alive, lop, larg, reg, frame_wm)
    reg[R_SLEN] = frame_slen


@njit(cache=True)
def _am_enum(to, nxt, prv, head, tail, deg, alive, lop, larg, reg, stats,
             S, k0, bfs_stamp, bfs_q, nbr_stamp, mand_stamp, dfs_stamp,
             disc, low, sz, cut, stk_v, stk_par, stk_arc, comp_buf, out,
             capture, r, kr):
    """Fruitful-only recursion: follow forced chains, binary-partition on
    a removable neighbor, or hand off to the linear routine when the
    remaining component is small."""
    frame_wm = reg[R_LOG]
    frame_slen = reg[R_SLEN]
    while True:
        stats[ST_CALLS] += 1
        if stats[ST_ERROR] != 0:
            break
        if kr == 0:
            _am_emit(S, k0, capture, out, reg, stats)
            break
        emitted = False
        while deg[r] == 1:
            v = to[head[r]]
            S[reg[R_SLEN]] = v
            reg[R_SLEN] += 1
            kr -= 1
            _contract(to, nxt, prv, head, tail, deg, alive, lop, larg, reg,
                      nbr_stamp, r, v, stats)
            if kr == 0:
                _am_emit(S, k0, capture, out, reg, stats)
                emitted = True
                break
        if emitted or stats[ST_ERROR] != 0:
            break
        if deg[r] == 0:
            stats[ST_ERROR] = 5
            break
        x = to[head[r]]
        y = to[nxt[head[r]]]
        z = np.int32(-1)
        if _reach(to, nxt, head, reg, bfs_stamp, bfs_q, r, kr + 1, x) \
                == kr + 1:
            z = x
        elif _reach(to, nxt, head, reg, bfs_stamp, bfs_q, r, kr + 1, y) \
                == kr + 1:
            z = y
        if z == -1:
            stats[ST_SWITCHES] += 1
            comp = _reach(to, nxt, head, reg, bfs_stamp, bfs_q, r,
                          2 * kr + 2, -1)
            if comp >= 2 * kr:
                stats[ST_SWITCH_VIOL] += 1
            _am_linear(to, nxt, prv, head, tail, deg, alive, lop, larg, reg,
                       stats, S, k0, bfs_stamp, bfs_q, nbr_stamp, mand_stamp,
                       dfs_stamp, disc, low, sz, cut, stk_v, stk_par,
                       stk_arc, comp_buf, out, capture, r, kr)
            break
        wm = reg[R_LOG]
        slen0 = reg[R_SLEN]
        S[slen0] = z
        reg[R_SLEN] = slen0 + 1
        _contract(to, nxt, prv, head, tail, deg, alive, lop, larg, reg,
                  nbr_stamp, r, z, stats)
        _am_enum(to, nxt, prv, head, tail, deg, alive, lop, larg, reg,
                 stats, S, k0, bfs_stamp, bfs_q, nbr_stamp, mand_stamp,
                 dfs_stamp, disc, low, sz, cut, stk_v, stk_par, stk_arc,
                 comp_buf, out, capture, r, kr - 1)
        _rollback(to, nxt, prv, head, tail, deg, alive, lop, larg, reg, wm)
        reg[R_SLEN] = slen0
        _delete_vertex(to, nxt, prv, head, tail, deg, alive, lop, larg, reg,
                       z, stats)
        # tail branch: same call in the graph without z.
    _rollback(to, nxt, prv, head, tail, deg, alive, lop, larg, reg, frame_wm)
    reg[R_SLEN] = frame_slen


@njit(cache=True)
def amortized_kernel(n, m, indptr, nbrs, k, capture, out, stats):
    pool_cap = 4 * m + 8
    to = np.empty(pool_cap, np.int32)
    nxt = np.full(pool_cap, -1, np.int32)
    prv = np.full(pool_cap, -1, np.int32)
    head = np.full(n, -1, np.int32)
    tail = np.full(n, -1, np.int32)
    deg = np.zeros(n, np.int64)
    alive = np.ones(n, np.uint8)
    log_cap = 12 * m + 8 * n + 64
    lop = np.empty(log_cap, np.uint8)
    larg = np.empty(log_cap, np.int32)
    reg = np.zeros(8, np.int64)
    S = np.empty(k + 2, np.int32)
    bfs_stamp = np.zeros(n, np.int64)
    bfs_q = np.empty(2 * k + 8, np.int32)
    nbr_stamp = np.zeros(n, np.int64)
    mand_stamp = np.zeros(n, np.int64)
    dfs_stamp = np.zeros(n, np.int64)
    disc = np.zeros(n, np.int32)
    low = np.zeros(n, np.int32)
    sz = np.zeros(n, np.int32)
    cut = np.zeros(n, np.int32)
    stk_cap = 2 * k + 8
    stk_v = np.empty(stk_cap, np.int32)
    stk_par = np.empty(stk_cap, np.int32)
    stk_arc = np.empty(stk_cap, np.int32)
    comp_buf = np.empty(stk_cap, np.int32)

    # seed arc pairs from the CSR in sorted-edge order
    pos = np.int64(0)
    for u in range(n):
        for j in range(indptr[u], indptr[u + 1]):
            w = nbrs[j]
            if u < w:
                to[pos] = w
                to[pos + 1] = u
                _link_tail(to, nxt, prv, head, tail, deg, u, pos)
                _link_tail(to, nxt, prv, head, tail, deg, w, pos + 1)
                pos += 2
    reg[R_POOL] = pos

    for v0 in range(n):
        if _reach(to, nxt, head, reg, bfs_stamp, bfs_q, v0, k, -1) == k:
            S[0] = v0
            reg[R_SLEN] = 1
            _am_enum(to, nxt, prv, head, tail, deg, alive, lop, larg, reg,
                     stats, S, k, bfs_stamp, bfs_q, nbr_stamp, mand_stamp,
                     dfs_stamp, disc, low, sz, cut, stk_v, stk_par, stk_arc,
                     comp_buf, out, capture, v0, k - 1)
        if stats[ST_ERROR] != 0:
            return
        _delete_vertex(to, nxt, prv, head, tail, deg, alive, lop, larg, reg,
                       v0, stats)
        reg[R_LOG] = 0  # outer deletions are permanent; recycle the log
