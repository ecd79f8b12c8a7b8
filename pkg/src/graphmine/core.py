"""Graph representations and shared primitives.

StaticGraph is an immutable CSR adjacency structure; MutableGraph supports
vertex deletion, restoration, and edge contraction with a LIFO undo log so
recursive enumerators can backtrack cheaply.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

import numpy as np

from .errors import EdgeListError, UsageError


class StaticGraph:
    """Immutable undirected simple graph with sorted adjacency lists.

    Vertices are dense ints 0..n-1. ``labels[v]`` preserves the original
    id from the input file; it equals ``v`` for programmatically built
    graphs unless labels are given.
    """

    __slots__ = ("n", "m", "indptr", "nbrs", "labels", "_max_degree")

    def __init__(self, n: int, indptr: np.ndarray, nbrs: np.ndarray,
                 labels: Optional[np.ndarray] = None):
        self.n = int(n)
        self.m = int(len(nbrs) // 2)
        self.indptr = indptr
        self.nbrs = nbrs
        if labels is None:
            labels = np.arange(n, dtype=np.int64)
        self.labels = labels
        self._max_degree = int((indptr[1:] - indptr[:-1]).max()) if n else 0

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]],
                   labels: Optional[np.ndarray] = None) -> "StaticGraph":
        """Build from undirected edges; drops self-loops and duplicates."""
        seen = set()
        for u, v in edges:
            if u == v:
                continue
            if not (0 <= u < n and 0 <= v < n):
                raise UsageError(f"edge ({u},{v}) out of range for n={n}")
            seen.add((u, v) if u < v else (v, u))
        return cls._from_unique_edges(n, sorted(seen), labels)

    @classmethod
    def _from_unique_edges(cls, n, uniq, labels=None):
        m = len(uniq)
        if m:
            e = np.asarray(uniq, dtype=np.int64)
            src = np.concatenate([e[:, 0], e[:, 1]])
            dst = np.concatenate([e[:, 1], e[:, 0]])
        else:
            src = np.empty(0, dtype=np.int64)
            dst = np.empty(0, dtype=np.int64)
        deg = np.bincount(src, minlength=n)
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(deg, out=indptr[1:])
        order = np.lexsort((dst, src))
        nbrs = dst[order].astype(np.int32)
        return cls(n, indptr, nbrs, labels)

    def degree(self, v: int) -> int:
        return int(self.indptr[v + 1] - self.indptr[v])

    @property
    def max_degree(self) -> int:
        return self._max_degree

    def neighbors(self, v: int) -> np.ndarray:
        return self.nbrs[self.indptr[v]:self.indptr[v + 1]]

    def has_edge(self, u: int, v: int) -> bool:
        row = self.neighbors(u)
        i = np.searchsorted(row, v)
        return i < len(row) and row[i] == v

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for w in self.neighbors(u):
                if u < w:
                    yield (u, int(w))

    def alive(self, v: int) -> bool:
        return 0 <= v < self.n

    def degree_sum(self) -> int:
        return int(len(self.nbrs))

    def __repr__(self):
        return f"StaticGraph(n={self.n}, m={self.m})"


@dataclass
class TemporalEdges:
    """Raw temporal edge stream: compacted-endpoint triples (u, v, t)."""

    n: int
    triples: list[tuple[int, int, int]]
    labels: np.ndarray

    @property
    def t_min(self) -> int:
        return min(t for _, _, t in self.triples) if self.triples else 0

    @property
    def t_max(self) -> int:
        return max(t for _, _, t in self.triples) if self.triples else 0


def parse_edge_list(text, temporal: bool = False):
    """Parse whitespace-separated edge-list text.

    Static lines are "u v"; temporal lines "u v t" with non-negative t.
    '#'-prefixed lines are comments. Self-loops are dropped; duplicate
    static edges are deduplicated. Vertex ids are compacted to 0..n-1 in
    first-seen order with the original ids kept as labels.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    if hasattr(text, "read"):
        text = text.read()
        if isinstance(text, bytes):
            text = text.decode("utf-8")

    id_of: dict[int, int] = {}
    labels: list[int] = []

    def compact(raw: int) -> int:
        v = id_of.get(raw)
        if v is None:
            v = len(labels)
            id_of[raw] = v
            labels.append(raw)
        return v

    static_edges: list[tuple[int, int]] = []
    triples: list[tuple[int, int, int]] = []
    for line_no, line in enumerate(io.StringIO(text), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = stripped.split()
        try:
            values = [int(tok) for tok in tokens]
        except ValueError:
            raise EdgeListError(f"non-integer token in {stripped!r}", line_no)
        if temporal:
            if len(values) != 3:
                raise EdgeListError(
                    f"expected 3 tokens 'u v t', got {len(values)}", line_no)
            u, v, t = values
            if t < 0:
                raise EdgeListError(f"negative timestamp {t}", line_no)
            if u == v:
                continue
            triples.append((compact(u), compact(v), t))
        else:
            if len(values) == 3:
                raise EdgeListError(
                    "3-token temporal line in static mode", line_no)
            if len(values) != 2:
                raise EdgeListError(
                    f"expected 2 tokens 'u v', got {len(values)}", line_no)
            u, v = values
            if u == v:
                continue
            static_edges.append((compact(u), compact(v)))

    label_arr = np.asarray(labels, dtype=np.int64)
    if temporal:
        return TemporalEdges(len(labels), triples, label_arr)
    return StaticGraph.from_edges(len(labels), static_edges, label_arr)


def read_edge_list(path, temporal: bool = False):
    """Parse an edge-list file; transparently handles .gz."""
    if str(path).endswith(".gz"):
        import gzip
        with gzip.open(path, "rt") as fh:
            return parse_edge_list(fh.read(), temporal=temporal)
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read(), temporal=temporal)


class LineGraphResult:
    """Line graph plus the edge-id map back to the source graph."""

    __slots__ = ("graph", "edge_of")

    def __init__(self, graph: StaticGraph, edge_of: list[tuple[int, int]]):
        self.graph = graph
        self.edge_of = edge_of

    def __iter__(self):
        return iter((self.graph, self.edge_of))


def line_graph(g: StaticGraph) -> LineGraphResult:
    """One vertex per edge of ``g``; vertices adjacent iff the source edges
    share an endpoint."""
    edge_of = list(g.edges())
    edge_id = {e: i for i, e in enumerate(edge_of)}
    ledges = []
    for v in range(g.n):
        row = g.neighbors(v)
        ids = [edge_id[(v, int(w)) if v < w else (int(w), v)] for w in row]
        d = len(ids)
        for i in range(d):
            for j in range(i + 1, d):
                a, b = ids[i], ids[j]
                ledges.append((a, b) if a < b else (b, a))
    lg = StaticGraph.from_edges(len(edge_of), ledges)
    return LineGraphResult(lg, edge_of)


def truncated_bfs(g, r: int, k: int, skip: Optional[int] = None) -> int:
    """Count vertices reachable from ``r`` ignoring ``skip``, stopping as
    soon as ``k`` are found. Works on StaticGraph and MutableGraph."""
    if k < 1:
        raise UsageError(f"k must be >= 1, got {k}")
    if not g.alive(r):
        raise UsageError(f"vertex {r} is not alive")
    if skip == r:
        raise UsageError("skip vertex must differ from the root")
    if k == 1:
        return 1
    count = 1
    seen = {r}
    queue = [r]
    qi = 0
    while qi < len(queue):
        v = queue[qi]
        qi += 1
        for w in g.neighbors(v):
            w = int(w)
            if w == skip or w in seen:
                continue
            seen.add(w)
            count += 1
            if count == k:
                return k
            queue.append(w)
    return count


class VertexSet:
    """Ordered vertex sequence with O(1) membership."""

    __slots__ = ("members", "_index")

    def __init__(self, members: Iterable[int] = ()):
        self.members: list[int] = []
        self._index: set[int] = set()
        for v in members:
            self.add(v)

    def add(self, v: int) -> None:
        if v in self._index:
            raise UsageError(f"vertex {v} already in set")
        self.members.append(v)
        self._index.add(v)

    def pop(self) -> int:
        v = self.members.pop()
        self._index.discard(v)
        return v

    def truncate(self, length: int) -> None:
        while len(self.members) > length:
            self.pop()

    def __contains__(self, v: int) -> bool:
        return v in self._index

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def as_sorted_tuple(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def __repr__(self):
        return f"VertexSet({self.members})"


# Undo-log opcodes for MutableGraph.
_OP_UNLINK = 0   # arg: arc id to relink
_OP_ALLOC = 1    # arg: base arc id of an allocated pair to retire
_OP_KILL = 2     # arg: vertex to revive
_OP_DELETE_END = 3   # arg: vertex whose delete record completed
_OP_CONTRACT_END = 4


class MutableGraph:
    """Doubly-linked adjacency with O(degree) delete/contract and exact
    LIFO undo.

    Arcs come in pairs: arc ``2i`` and ``2i+1`` are the two directions of
    one undirected edge; arc ``j`` lives in the list of ``tail(j)`` and
    points at ``arc_to[j]``. Unlinked arcs keep their prev/next fields so
    relinking restores them at the exact prior position.
    """

    def __init__(self, g: StaticGraph, slack: Optional[int] = None):
        n, m = g.n, g.m
        cap = 2 * m + 2 * (slack if slack is not None else m) + 2
        self.n = n
        self.arc_to = [0] * cap
        self.arc_next = [-1] * cap
        self.arc_prev = [-1] * cap
        self.head = [-1] * n
        self.tail = [-1] * n
        self.deg = [0] * n
        self.alive_flags = [True] * n
        self.pool_top = 2 * m
        self._log: list[tuple[int, int]] = []
        k = 0
        for u, v in g.edges():
            self.arc_to[k] = v
            self.arc_to[k + 1] = u
            self._link_tail(u, k)
            self._link_tail(v, k + 1)
            k += 2

    # -- low-level list surgery -------------------------------------------

    def _tail_of(self, j: int) -> int:
        return self.arc_to[j ^ 1]

    def _link_tail(self, u: int, j: int) -> None:
        t = self.tail[u]
        self.arc_prev[j] = t
        self.arc_next[j] = -1
        if t == -1:
            self.head[u] = j
        else:
            self.arc_next[t] = j
        self.tail[u] = j
        self.deg[u] += 1

    def _unlink(self, j: int) -> None:
        u = self._tail_of(j)
        p, nx = self.arc_prev[j], self.arc_next[j]
        if p == -1:
            self.head[u] = nx
        else:
            self.arc_next[p] = nx
        if nx == -1:
            self.tail[u] = p
        else:
            self.arc_prev[nx] = p
        self.deg[u] -= 1
        self._log.append((_OP_UNLINK, j))

    def _relink(self, j: int) -> None:
        u = self._tail_of(j)
        p, nx = self.arc_prev[j], self.arc_next[j]
        if p == -1:
            self.head[u] = j
        else:
            self.arc_next[p] = j
        if nx == -1:
            self.tail[u] = j
        else:
            self.arc_prev[nx] = j
        self.deg[u] += 1

    def _alloc_pair(self, u: int, w: int) -> None:
        j = self.pool_top
        if j + 2 > len(self.arc_to):
            grow = len(self.arc_to)
            self.arc_to.extend([0] * grow)
            self.arc_next.extend([-1] * grow)
            self.arc_prev.extend([-1] * grow)
        self.arc_to[j] = w
        self.arc_to[j + 1] = u
        self._link_tail(u, j)
        self._link_tail(w, j + 1)
        self.pool_top = j + 2
        self._log.append((_OP_ALLOC, j))

    # -- public surface -----------------------------------------------------

    def alive(self, v: int) -> bool:
        return self.alive_flags[v]

    def degree(self, v: int) -> int:
        return self.deg[v]

    def neighbors(self, v: int) -> Iterator[int]:
        j = self.head[v]
        while j != -1:
            yield self.arc_to[j]
            j = self.arc_next[j]

    def first_neighbors(self, v: int, count: int) -> list[int]:
        out = []
        j = self.head[v]
        while j != -1 and len(out) < count:
            out.append(self.arc_to[j])
            j = self.arc_next[j]
        return out

    def has_edge(self, u: int, v: int) -> bool:
        return any(w == v for w in self.neighbors(u))

    def live_vertices(self) -> Iterator[int]:
        return (v for v in range(self.n) if self.alive_flags[v])

    def delete_vertex(self, v: int) -> None:
        """Remove ``v`` from every neighbor's list and mark it dead; v's
        own list is kept intact for restoration."""
        if not self.alive_flags[v]:
            raise UsageError(f"vertex {v} is already dead")
        j = self.head[v]
        while j != -1:
            self._unlink(j ^ 1)
            j = self.arc_next[j]
        self.alive_flags[v] = False
        self._log.append((_OP_KILL, v))
        self._log.append((_OP_DELETE_END, v))

    def restore_vertex(self, v: int) -> None:
        """Undo the most recent deletion; raises unless that deletion was
        of ``v`` (strict LIFO discipline)."""
        if not self._log or self._log[-1] != (_OP_DELETE_END, v):
            raise UsageError(
                f"restore_vertex({v}) out of LIFO order")
        self._log.pop()
        self._rollback_one_group()

    def contract_edge(self, r: int, v: int) -> None:
        """Merge ``v`` into ``r``; r inherits v's neighbors, deduplicated,
        with no self-loop. Undoable via undo_last/rollback."""
        if not (self.alive_flags[r] and self.alive_flags[v]):
            raise UsageError("both endpoints must be alive")
        if not self.has_edge(r, v):
            raise UsageError(f"({r},{v}) is not an edge")
        r_nbrs = set(self.neighbors(r))
        j = self.head[v]
        to_add = []
        while j != -1:
            w = self.arc_to[j]
            self._unlink(j ^ 1)
            if w != r and w not in r_nbrs:
                to_add.append(w)
                r_nbrs.add(w)
            j = self.arc_next[j]
        for w in to_add:
            self._alloc_pair(r, w)
        self.alive_flags[v] = False
        self._log.append((_OP_KILL, v))
        self._log.append((_OP_CONTRACT_END, v))

    def undo_last(self) -> None:
        """Undo the most recent delete or contract."""
        if not self._log:
            raise UsageError("nothing to undo")
        op, _ = self._log[-1]
        if op not in (_OP_DELETE_END, _OP_CONTRACT_END):
            raise UsageError("log tail is not an operation boundary")
        self._log.pop()
        self._rollback_one_group()

    def _rollback_one_group(self) -> None:
        while self._log:
            op, arg = self._log[-1]
            if op in (_OP_DELETE_END, _OP_CONTRACT_END):
                return
            self._log.pop()
            if op == _OP_UNLINK:
                self._relink(arg)
            elif op == _OP_ALLOC:
                self._unlink_alloc(arg)
            elif op == _OP_KILL:
                self.alive_flags[arg] = True

    def _unlink_alloc(self, j: int) -> None:
        for a in (j + 1, j):
            u = self._tail_of(a)
            p, nx = self.arc_prev[a], self.arc_next[a]
            if p == -1:
                self.head[u] = nx
            else:
                self.arc_next[p] = nx
            if nx == -1:
                self.tail[u] = p
            else:
                self.arc_prev[nx] = p
            self.deg[u] -= 1
        self.pool_top = j

    def mark(self) -> int:
        """Watermark for rollback()."""
        return len(self._log)

    def rollback(self, mark: int) -> None:
        """Undo every operation logged after ``mark`` (LIFO)."""
        while len(self._log) > mark:
            op, _ = self._log[-1]
            if op in (_OP_DELETE_END, _OP_CONTRACT_END):
                self._log.pop()
                self._rollback_one_group()
            else:
                raise UsageError("rollback mark does not align with "
                                 "operation boundaries")

    def state_fingerprint(self):
        """Full structural snapshot; equal fingerprints mean the adjacency
        structure (including list order) is identical."""
        return (
            tuple(self.arc_to[: self.pool_top]),
            tuple(self.arc_next[: self.pool_top]),
            tuple(self.arc_prev[: self.pool_top]),
            tuple(self.head),
            tuple(self.tail),
            tuple(self.deg),
            tuple(self.alive_flags),
            self.pool_top,
        )

    def adjacency_lists(self) -> dict[int, list[int]]:
        return {v: list(self.neighbors(v))
                for v in range(self.n) if self.alive_flags[v]}
