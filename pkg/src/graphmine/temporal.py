"""Temporal graphs, snapshot aggregation, and (k,h,W)-core analysis.

Snapshots are pre-aggregated bottom-up into a heap-shaped implicit-array
tree whose nodes hold edge->multiplicity maps, so any interval [a,b] can
be folded from at most 2*ceil(log2 tau) nodes instead of b-a+1
snapshots. Multiplicities make one tree serve every h: keeping edges
with count >= h recovers anything from plain union (h=1) to full
intersection (h = window length).

Window indices are 0-based inclusive throughout.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Literal, NamedTuple

from .core import StaticGraph, TemporalEdges
from .errors import UsageError

Edge = tuple[int, int]


@dataclass
class TemporalGraph:
    """A sequence of per-snapshot simple edge sets over a shared vertex
    universe."""

    tau: int
    snapshots: list[set[Edge]]
    node_universe: int

    def snapshot_graph(self, i: int) -> StaticGraph:
        return StaticGraph.from_edges(self.node_universe, self.snapshots[i])


def bucket_snapshots(raw: TemporalEdges, bucket_width: int) -> TemporalGraph:
    """Group temporal edges into consecutive time buckets; each snapshot
    holds the deduplicated edges whose timestamp lands in its bucket."""
    if bucket_width <= 0:
        raise UsageError(f"bucket_width must be positive, got {bucket_width}")
    if not raw.triples:
        return TemporalGraph(0, [], raw.n)
    t0 = raw.t_min
    tau = (raw.t_max - t0) // bucket_width + 1
    snapshots: list[set[Edge]] = [set() for _ in range(tau)]
    for u, v, t in raw.triples:
        e = (u, v) if u < v else (v, u)
        snapshots[(t - t0) // bucket_width].add(e)
    return TemporalGraph(tau, snapshots, raw.n)


class SnapshotTree:
    """Implicit-array aggregation tree over the snapshots.

    Leaves (padded to a power of two) hold single snapshots with edge
    multiplicity 1; every internal node holds the multiset sum of its
    two children. 1-indexed heap layout: node i has children 2i, 2i+1.
    """

    def __init__(self, gt: TemporalGraph):
        if gt.tau < 1:
            raise UsageError("need at least one snapshot")
        self.tau = gt.tau
        self.node_universe = gt.node_universe
        size = 1 << max(0, (gt.tau - 1).bit_length())
        self.leaf_base = size
        self.depth = size.bit_length() - 1
        nodes: list[Counter] = [Counter() for _ in range(2 * size)]
        for i, snap in enumerate(gt.snapshots):
            nodes[size + i] = Counter(snap)
        for i in range(size - 1, 0, -1):
            nodes[i] = nodes[2 * i] + nodes[2 * i + 1]
        self.nodes = nodes

    def covered(self, node: int) -> tuple[int, int]:
        """Inclusive leaf interval [lo, hi] below a node, in snapshot
        indices (possibly reaching into the padding)."""
        lo = hi = node
        while lo < self.leaf_base:
            lo *= 2
            hi = 2 * hi + 1
        return lo - self.leaf_base, hi - self.leaf_base


def build_tree(gt: TemporalGraph) -> SnapshotTree:
    return SnapshotTree(gt)


def cover_nodes(tree: SnapshotTree, a: int, b: int) -> list[int]:
    """Topmost tree nodes whose leaf intervals exactly partition [a,b];
    at most two per level."""
    if not 0 <= a <= b < tree.tau:
        raise UsageError(f"window [{a},{b}] out of range tau={tree.tau}")
    left: list[int] = []
    right: list[int] = []
    lo = a + tree.leaf_base
    hi = b + tree.leaf_base + 1
    while lo < hi:
        if lo & 1:
            left.append(lo)
            lo += 1
        if hi & 1:
            hi -= 1
            right.append(hi)
        lo >>= 1
        hi >>= 1
    return left + right[::-1]


def window_graph(tree: SnapshotTree, a: int, b: int, h: int) -> StaticGraph:
    """Static graph of the edges appearing at least h times in [a,b].

    h = b-a+1 gives the intersection of the window's snapshots; h = 1
    the plain union.
    """
    width = b - a + 1
    if not 1 <= h <= width:
        raise UsageError(f"h={h} out of range [1,{width}]")
    counts: Counter = Counter()
    for node in cover_nodes(tree, a, b):
        counts.update(tree.nodes[node])
    edges = [e for e, c in counts.items() if c >= h]
    return StaticGraph.from_edges(tree.node_universe, edges)


def naive_window_graph(gt: TemporalGraph, a: int, b: int, h: int) -> StaticGraph:
    """Reference fold over the raw snapshots (test oracle for the tree)."""
    width = b - a + 1
    if not 1 <= h <= width:
        raise UsageError(f"h={h} out of range [1,{width}]")
    counts: Counter = Counter()
    for i in range(a, b + 1):
        counts.update(gt.snapshots[i])
    edges = [e for e, c in counts.items() if c >= h]
    return StaticGraph.from_edges(gt.node_universe, edges)


def coreness_fast(g: StaticGraph) -> dict[int, int]:
    """Coreness of every vertex by bucketed min-degree peeling, linear in
    the graph size. Matches the quadratic peeling oracle exactly."""
    n = g.n
    deg = [g.degree(v) for v in range(n)]
    if n == 0:
        return {}
    max_deg = max(deg)
    # counting-sort vertices by degree
    bin_start = [0] * (max_deg + 2)
    for d in deg:
        bin_start[d + 1] += 1
    for i in range(1, max_deg + 2):
        bin_start[i] += bin_start[i - 1]
    pos = [0] * n
    order = [0] * n
    fill = bin_start[:-1].copy()
    for v in range(n):
        p = fill[deg[v]]
        pos[v] = p
        order[p] = v
        fill[deg[v]] += 1
    start = bin_start[:-1]
    cur_deg = deg.copy()
    adj = [list(map(int, g.neighbors(v))) for v in range(n)]
    core = [0] * n
    for i in range(n):
        v = order[i]
        core[v] = cur_deg[v]
        for w in adj[v]:
            if cur_deg[w] > cur_deg[v]:
                dw = cur_deg[w]
                pw = pos[w]
                ps = start[dw]
                u = order[ps]
                if u != w:
                    order[ps], order[pw] = w, u
                    pos[w], pos[u] = ps, pw
                start[dw] += 1
                cur_deg[w] = dw - 1
    running = 0
    result = {}
    for i in range(n):
        v = order[i]
        running = max(running, core[v])
        core[v] = running
        result[v] = core[v]
    return result


def khd_cores(gt: TemporalGraph, k: int, h: int, window: int,
              tree: SnapshotTree | None = None
              ) -> list[tuple[tuple[int, int], set[int]]]:
    """For every length-`window` interval, the vertices of coreness >= k
    in the h-filtered window graph. Empty cores are included."""
    if not 1 <= window <= gt.tau:
        raise UsageError(f"window={window} out of range [1,{gt.tau}]")
    if not 1 <= h <= window:
        raise UsageError(f"h={h} out of range [1,{window}]")
    if k < 0:
        raise UsageError("k must be non-negative")
    if tree is None:
        tree = build_tree(gt)
    out = []
    for a in range(gt.tau - window + 1):
        b = a + window - 1
        wg = window_graph(tree, a, b, h)
        core = coreness_fast(wg)
        out.append(((a, b), {v for v, c in core.items() if c >= k}))
    return out


def rcd(coreness: int, degree: int) -> float:
    """Resilience signal for one node in one window."""
    if coreness < 0 or degree < 0:
        raise UsageError("coreness and degree must be non-negative")
    return math.sqrt(coreness * degree)


class ResilienceRow(NamedTuple):
    node: int
    window: int
    h: int
    arcd: float


def window_grid(tau: int) -> list[int]:
    """Window sizes 1, 2, 4, ... capped at tau-1, plus tau-1 itself."""
    if tau < 2:
        raise UsageError("need tau >= 2 for a resilience series")
    sizes = []
    w = 1
    while w < tau - 1:
        sizes.append(w)
        w *= 2
    sizes.append(tau - 1)
    return sizes


def resolve_h(policy: str, window: int) -> int:
    if policy == "one":
        return 1
    if policy == "half":
        return max(1, window // 2)
    if policy == "full":
        return window
    raise UsageError(f"unknown h policy {policy!r}")


def arcd_series(gt: TemporalGraph,
                h_policy: Literal["one", "half", "full"] = "half",
                tree: SnapshotTree | None = None) -> list[ResilienceRow]:
    """Average sqrt(coreness*degree) per node across all windows of each
    grid size; the temporal-resilience signal."""
    if tree is None:
        tree = build_tree(gt)
    n = gt.node_universe
    rows: list[ResilienceRow] = []
    for w in window_grid(gt.tau):
        h = resolve_h(h_policy, w)
        total = [0.0] * n
        n_windows = gt.tau - w + 1
        for a in range(n_windows):
            wg = window_graph(tree, a, a + w - 1, h)
            core = coreness_fast(wg)
            for v in range(n):
                d = wg.degree(v)
                if d:
                    total[v] += rcd(core[v], d)
        for v in range(n):
            rows.append(ResilienceRow(v, w, h, total[v] / n_windows))
    return rows


def falling_points(series: Iterable[ResilienceRow],
                   epsilon_zero: float = 1e-9) -> dict[int, float]:
    """Smallest grid window size at which a node's ARCD is (numerically)
    zero; nodes whose signal never falls map to infinity."""
    best: dict[int, float] = {}
    nodes = set()
    for row in series:
        nodes.add(row.node)
        if row.arcd <= epsilon_zero:
            cur = best.get(row.node, math.inf)
            if row.window < cur:
                best[row.node] = float(row.window)
    return {v: best.get(v, math.inf) for v in nodes}
