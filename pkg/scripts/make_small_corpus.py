#!/usr/bin/env python3
"""Regenerate the bundled small-graph corpus under data/small/.

Deterministic synthetic stand-ins for the network families the failure
leaf analysis covers: mesh/road grids, preferential-attachment,
ring-with-chords, sparse random, and chained cliques.
"""

import itertools
from pathlib import Path

import numpy as np

OUT = Path(__file__).resolve().parent.parent / "data" / "small"


def grid(w, h):
    def idx(x, y):
        return x * h + y
    edges = []
    for x in range(w):
        for y in range(h):
            if x + 1 < w:
                edges.append((idx(x, y), idx(x + 1, y)))
            if y + 1 < h:
                edges.append((idx(x, y), idx(x, y + 1)))
    return edges


def pref_attach(n, m0, seed):
    rng = np.random.default_rng(seed)
    edges = list(itertools.combinations(range(m0), 2))
    repeated = [v for e in edges for v in e]
    for v in range(m0, n):
        chosen = set()
        while len(chosen) < m0:
            chosen.add(int(repeated[rng.integers(0, len(repeated))]))
        for t in chosen:
            edges.append((v, t))
            repeated.extend([v, t])
    return edges


def ring_chords(n, chords, seed):
    rng = np.random.default_rng(seed)
    edges = [(i, (i + 1) % n) for i in range(n)]
    for _ in range(chords):
        a, b = rng.integers(0, n, 2)
        if a != b:
            edges.append((int(min(a, b)), int(max(a, b))))
    return edges


def er(n, p, seed):
    rng = np.random.default_rng(seed)
    return [(i, j) for i in range(n) for j in range(i + 1, n)
            if rng.random() < p]


def clique_chain(cliques, size):
    edges = []
    base = 0
    prev_last = None
    for _ in range(cliques):
        ids = list(range(base, base + size))
        edges.extend(itertools.combinations(ids, 2))
        if prev_last is not None:
            edges.append((prev_last, ids[0]))
        prev_last = ids[-1]
        base += size
    return edges


CORPUS = {
    "grid8x8.txt": grid(8, 8),
    "grid12x5.txt": grid(12, 5),
    "pref60.txt": pref_attach(60, 2, 11),
    "pref80.txt": pref_attach(80, 3, 12),
    "ring40.txt": ring_chords(40, 12, 13),
    "er50.txt": er(50, 0.08, 15),
    "cliquechain.txt": clique_chain(8, 5),
}


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for name, edges in CORPUS.items():
        dedup = sorted({(min(u, v), max(u, v)) for u, v in edges if u != v})
        path = OUT / name
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(f"# {name[:-4]}: {len(dedup)} edges\n")
            for u, v in dedup:
                fh.write(f"{u} {v}\n")
        print(f"wrote {path} ({len(dedup)} edges)")


if __name__ == "__main__":
    main()
