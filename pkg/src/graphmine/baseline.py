"""Plain k-graphlet enumeration with recursion-tree instrumentation.

The enumerator scans start vertices in ascending id order; inside a call
the candidate loop stops at the first child that reports an empty
subtree, since no later sibling can succeed with the same partial
solution. A call entered with fewer than k vertices and no extendable
frontier is a failure leaf.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _kernels as K
from .core import StaticGraph
from .errors import UsageError


@dataclass
class EnumStats:
    """Recursion-tree statistics for one enumeration run."""

    solutions: int = 0
    success_leaves: int = 0
    failure_leaves: int = 0
    recursive_calls: int = 0
    extras: dict = field(default_factory=dict)

    @property
    def total_leaves(self) -> int:
        return self.success_leaves + self.failure_leaves


def _stats_from_vec(vec) -> EnumStats:
    return EnumStats(
        solutions=int(vec[K.ST_SOLUTIONS]),
        success_leaves=int(vec[K.ST_SUCCESS]),
        failure_leaves=int(vec[K.ST_FAILURE]),
        recursive_calls=int(vec[K.ST_CALLS]),
        extras={"max_frontier": int(vec[K.ST_MAX_FRONTIER])},
    )


def run_bp(g: StaticGraph, k: int, base_depth: int, capture: int,
           deadline_calls: int = 0):
    """Run the binary-partition kernel; two passes when capturing so the
    output buffer is sized exactly. Returns (stats_vec, out_array)."""
    stats = np.zeros(16, np.int64)
    out = np.empty(0, np.int32)
    K.bp_kernel(g.n, g.indptr, g.nbrs, k, base_depth, capture, out, stats,
                deadline_calls)
    if stats[K.ST_ERROR] == 2:
        raise TimeoutError("enumeration aborted by call deadline")
    if capture and stats[K.ST_OUT_NEED] > 0:
        out = np.empty(int(stats[K.ST_OUT_NEED]), np.int32)
        stats = np.zeros(16, np.int64)
        K.bp_kernel(g.n, g.indptr, g.nbrs, k, base_depth, capture, out,
                    stats, deadline_calls)
    return stats, out


def ks_enumerate(g: StaticGraph, k: int, sink=None,
                 deadline_calls: int = 0) -> EnumStats:
    """Enumerate every k-graphlet exactly once.

    ``sink``, if given, receives each solution as a sorted tuple of
    vertex ids. With no sink only counters are produced, which is much
    cheaper for large runs.
    """
    if not 1 <= k <= max(g.n, 1):
        raise UsageError(f"k={k} out of range [1, {g.n}]")
    if g.n == 0:
        return EnumStats()
    capture = 1 if sink is not None else 0
    vec, out = run_bp(g, k, 0, capture, deadline_calls)
    stats = _stats_from_vec(vec)
    if sink is not None:
        rows = out.reshape(-1, k)
        rows = np.sort(rows, axis=1)
        for row in rows:
            sink(tuple(int(x) for x in row))
    return stats


def solution_rows(g: StaticGraph, k: int) -> np.ndarray:
    """All k-graphlets as a (count, k) array of row-sorted vertex ids."""
    vec, out = run_bp(g, k, 0, 1)
    rows = out.reshape(-1, k)
    return np.sort(rows, axis=1)


def failure_leaf_report(stats: EnumStats) -> dict:
    """Summarize how much of the recursion tree was wasted work."""
    total = stats.success_leaves + stats.failure_leaves
    pct = 0.0 if total == 0 else round(100.0 * stats.failure_leaves / total, 2)
    return {
        "total_leaves": total,
        "failure_leaves": stats.failure_leaves,
        "failure_pct": pct,
    }
