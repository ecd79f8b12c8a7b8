"""Brute-force reference implementations.

These are the ground truth every enumerator and approximation in the
library is tested against; they are deliberately written as direct
restatements of the definitions (subset enumeration, min-degree peeling)
and share no code with the fast paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .core import StaticGraph
from .errors import UsageError

SUBSET_LIMIT = 20  # ~10^6 subsets; keeps brute force in test-suite budgets


@dataclass
class OracleResult:
    solutions: set[tuple[int, ...]]
    count: int


def _neighbor_masks(g: StaticGraph) -> list[int]:
    masks = [0] * g.n
    for u in range(g.n):
        acc = 0
        for w in g.neighbors(u):
            acc |= 1 << int(w)
        masks[u] = acc
    return masks


def _is_connected_subset(members: tuple[int, ...], masks: list[int]) -> bool:
    subset = 0
    for v in members:
        subset |= 1 << v
    frontier = 1 << members[0]
    reached = frontier
    while frontier:
        grow = 0
        f = frontier
        while f:
            low = f & -f
            grow |= masks[low.bit_length() - 1]
            f ^= low
        frontier = grow & subset & ~reached
        reached |= frontier
    return reached == subset


def brute_k_graphlets(g: StaticGraph, k: int,
                      max_n: int = SUBSET_LIMIT) -> OracleResult:
    """All connected induced k-vertex subgraphs, by checking every
    C(n, k) subset."""
    if not 1 <= k <= g.n:
        raise UsageError(f"k={k} out of range [1, {g.n}]")
    if g.n > max_n:
        raise UsageError(
            f"n={g.n} exceeds the brute-force limit {max_n}")
    masks = _neighbor_masks(g)
    solutions = {c for c in combinations(range(g.n), k)
                 if _is_connected_subset(c, masks)}
    return OracleResult(solutions, len(solutions))


def peel_coreness(g: StaticGraph) -> dict[int, int]:
    """Coreness by repeatedly removing a minimum-degree vertex; the
    removal degree, made monotone by a running maximum, is the coreness."""
    deg = {v: g.degree(v) for v in range(g.n)}
    adj = {v: set(int(w) for w in g.neighbors(v)) for v in range(g.n)}
    removed: set[int] = set()
    coreness: dict[int, int] = {}
    running_max = 0
    for _ in range(g.n):
        v = min((u for u in deg if u not in removed), key=lambda u: deg[u])
        running_max = max(running_max, deg[v])
        coreness[v] = running_max
        removed.add(v)
        for w in adj[v]:
            if w not in removed:
                deg[w] -= 1
    return coreness


def brute_densest(g: StaticGraph,
                  max_n: int = SUBSET_LIMIT) -> tuple[Fraction, tuple[int, ...]]:
    """Maximum |E(S)|/|S| over all non-empty subsets, with the witness.

    Ties prefer the smaller set, then the lexicographically smallest
    sorted vertex sequence.
    """
    if g.n == 0:
        raise UsageError("graph has no vertices")
    if g.n > max_n:
        raise UsageError(
            f"n={g.n} exceeds the brute-force limit {max_n}")
    masks = _neighbor_masks(g)
    n = g.n
    total = 1 << n
    # edges_in[m] counts edges induced by bitmask m, built incrementally
    # from m with its lowest vertex removed.
    edges_in = [0] * total
    low_vertex = [0] * total
    for v in range(n):
        low_vertex[1 << v] = v
    for m in range(1, total):
        low = m & -m
        rest = m ^ low
        if rest:
            v = low_vertex[low]
            edges_in[m] = edges_in[rest] + bin(masks[v] & rest).count("1")
    best_e, best_s, best_mask = 0, 1, 1  # subset {0}
    for m in range(1, total):
        e = edges_in[m]
        s = m.bit_count()
        diff = e * best_s - best_e * s
        if diff > 0:
            best_e, best_s, best_mask = e, s, m
        elif diff == 0:
            if s < best_s:
                best_e, best_s, best_mask = e, s, m
            elif s == best_s and _lex_less(m, best_mask):
                best_e, best_s, best_mask = e, s, m
    witness = tuple(v for v in range(n) if best_mask >> v & 1)
    return Fraction(best_e, best_s), witness


def _lex_less(a: int, b: int) -> bool:
    """True if bitmask a's sorted vertex tuple is lexicographically
    smaller than b's (assumes equal popcount)."""
    x = a ^ b
    if x == 0:
        return False
    low = x & -x
    return bool(a & low)


def brute_connected_subgraph_count(g: StaticGraph,
                                   max_n: int = 16) -> int:
    """Number of connected induced subgraphs of every size >= 1."""
    if g.n > max_n:
        raise UsageError(f"n={g.n} exceeds the brute-force limit {max_n}")
    masks = _neighbor_masks(g)
    count = 0
    for size in range(1, g.n + 1):
        for c in combinations(range(g.n), size):
            if _is_connected_subset(c, masks):
                count += 1
    return count
