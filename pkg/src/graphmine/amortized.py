"""Graph-size-independent amortized graphlet enumeration.

Every recursive call here is guaranteed to emit at least one solution:
start vertices are pre-checked with a truncated reachability test,
forced chains are contracted, and binary partition only splits on a
vertex whose removal provably leaves a solution. When neither candidate
is removable the live component has shrunk below 2k vertices and a
mandatory-vertex absorbing routine finishes the job.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels as K
from .baseline import EnumStats, _stats_from_vec
from .core import (MutableGraph, StaticGraph, VertexSet, line_graph,
                   truncated_bfs)
from .errors import UsageError


def fruitful(g, r: int, k: int) -> bool:
    """True iff at least k vertices (counting r) are reachable from r."""
    return truncated_bfs(g, r, k) == k


def removable(g, r: int, x: int, k: int) -> bool:
    """True iff a k-vertex connected set through r survives deleting x."""
    if x == r:
        raise UsageError("x must differ from r")
    return truncated_bfs(g, r, k, skip=x) == k


def mark_mandatory(g, r: int, k: int) -> VertexSet:
    """Vertices (other than r) whose removal leaves fewer than k vertices
    connected to r. One lowpoint DFS pass with subtree counts; when the
    component has exactly k vertices every one of them qualifies."""
    if not fruitful(g, r, k):
        raise UsageError(f"fewer than k={k} vertices reachable from {r}")
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    size: dict[int, int] = {}
    cut: dict[int, int] = {}
    order: list[int] = []
    timer = 0
    stack: list[tuple[int, int, object]] = [(r, -1, iter(g.neighbors(r)))]
    disc[r] = low[r] = timer
    size[r] = 1
    cut[r] = 0
    order.append(r)
    timer += 1
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            w = int(w)
            if w not in disc:
                disc[w] = low[w] = timer
                size[w] = 1
                cut[w] = 0
                order.append(w)
                timer += 1
                stack.append((w, v, iter(g.neighbors(w))))
                advanced = True
                break
            if w != parent:
                low[v] = min(low[v], disc[w])
        if not advanced:
            stack.pop()
            if parent != -1:
                size[parent] += size[v]
                low[parent] = min(low[parent], low[v])
                if low[v] >= disc[parent]:
                    cut[parent] += size[v]
    comp = len(order)
    result = VertexSet()
    for v in order:
        if v != r and comp - 1 - cut[v] < k:
            result.add(v)
    return result


@dataclass
class AmortizedContext:
    """State threaded through the enumeration: the mutable graph, the
    accumulation vertex r, the partial solution, and the number of
    vertices still to be added."""

    g: MutableGraph
    r: int
    S: VertexSet
    k_remaining: int
    stats: EnumStats


def linear_enum(ctx: AmortizedContext, sink) -> bool:
    """Emit every completion of ctx.S by absorbing mandatory vertices and
    binary-partitioning on an arbitrary (hence non-mandatory) neighbor.
    The graph is restored before returning. Always finds a solution."""
    g, r = ctx.g, ctx.r
    entry_kr = ctx.k_remaining
    kr = entry_kr
    frame = g.mark()
    slen = len(ctx.S.members)
    while True:
        ctx.stats.recursive_calls += 1
        if kr == 0:
            _emit(ctx, sink)
            break
        mand = mark_mandatory(g, r, kr + 1)
        emitted = False
        while True:
            cand = next((w for w in g.neighbors(r) if w in mand), None)
            if cand is None:
                break
            ctx.S.add(cand)
            kr -= 1
            g.contract_edge(r, cand)
            if kr == 0:
                _emit(ctx, sink)
                emitted = True
                break
        if emitted:
            break
        if g.degree(r) == 0:
            raise AssertionError("non-fruitful linear call")
        z = next(iter(g.neighbors(r)))
        inner = g.mark()
        ctx.S.add(z)
        g.contract_edge(r, z)
        ctx.k_remaining = kr - 1
        linear_enum(ctx, sink)
        g.rollback(inner)
        ctx.S.pop()
        g.delete_vertex(z)
        # tail branch: same call without z.
    g.rollback(frame)
    ctx.S.truncate(slen)
    ctx.k_remaining = entry_kr
    return True


def _emit(ctx: AmortizedContext, sink) -> None:
    ctx.stats.solutions += 1
    ctx.stats.success_leaves += 1
    if sink is not None:
        sink(ctx.S.as_sorted_tuple())


def amortized_enum(g: StaticGraph, k: int, sink=None) -> EnumStats:
    """Graph-size-independent enumeration of all k-graphlets; the
    solution set matches the baseline enumerator exactly."""
    if not 1 <= k <= max(g.n, 1):
        raise UsageError(f"k={k} out of range [1, {g.n}]")
    if g.n == 0:
        return EnumStats()
    capture = 1 if sink is not None else 0
    vec, out = _run_amortized(g, k, capture)
    stats = _stats_from_vec(vec)
    stats.extras = {
        "linear_switches": int(vec[K.ST_SWITCHES]),
        "switch_bound_violations": int(vec[K.ST_SWITCH_VIOL]),
    }
    if sink is not None:
        rows = np.sort(out.reshape(-1, k), axis=1)
        for row in rows:
            sink(tuple(int(x) for x in row))
    return stats


def _run_amortized(g: StaticGraph, k: int, capture: int):
    stats = np.zeros(16, np.int64)
    out = np.empty(0, np.int32)
    K.amortized_kernel(g.n, g.m, g.indptr, g.nbrs, k, capture, out, stats)
    _check_kernel_error(stats)
    if capture and stats[K.ST_OUT_NEED] > 0:
        out = np.empty(int(stats[K.ST_OUT_NEED]), np.int32)
        stats = np.zeros(16, np.int64)
        K.amortized_kernel(g.n, g.m, g.indptr, g.nbrs, k, capture, out,
                           stats)
        _check_kernel_error(stats)
    return stats, out


def _check_kernel_error(stats) -> None:
    code = int(stats[K.ST_ERROR])
    if code:
        raise AssertionError(f"amortized kernel failed (code {code})")


def amortized_rows(g: StaticGraph, k: int) -> np.ndarray:
    vec, out = _run_amortized(g, k, 1)
    return np.sort(out.reshape(-1, k), axis=1)


def enum_all_graphlets(g: StaticGraph, sink=None) -> int:
    """Emit every connected induced subgraph (any size >= 1) exactly
    once via accumulate-by-contraction: grow the start vertex until it is
    isolated, then output the accumulated set."""
    mg = MutableGraph(g)
    count = 0

    def enum(r: int, S: list[int]) -> None:
        nonlocal count
        frame = mg.mark()
        slen = len(S)
        while True:
            if mg.degree(r) == 0:
                count += 1
                if sink is not None:
                    sink(tuple(sorted(S)))
                break
            v = next(iter(mg.neighbors(r)))
            inner = mg.mark()
            S.append(v)
            mg.contract_edge(r, v)
            enum(r, S)
            mg.rollback(inner)
            S.pop()
            mg.delete_vertex(v)
            # tail branch: graphlets avoiding v.
        mg.rollback(frame)
        del S[slen:]

    for v in range(g.n):
        enum(v, [v])
        mg.delete_vertex(v)
    return count


def edge_graphlets(g: StaticGraph, k: int, sink=None) -> int:
    """Connected subgraphs of exactly k edges, via k-graphlets of the
    line graph mapped back to edge sets."""
    if not 1 <= k <= max(g.m, 1):
        raise UsageError(f"k={k} out of range [1, {g.m}]")
    if g.m == 0:
        return 0
    lg, edge_of = line_graph(g)
    if sink is None:
        return amortized_enum(lg, k).solutions
    count = 0

    def mapped(sol: tuple[int, ...]) -> None:
        nonlocal count
        count += 1
        sink(tuple(sorted(edge_of[i] for i in sol)))

    amortized_enum(lg, k, sink=mapped)
    return count
