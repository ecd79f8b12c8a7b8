#!/usr/bin/env python3
"""Temporal core analysis on a synthetic network with a planted story.

Three kinds of nodes share one timeline: a persistent backbone clique
that talks every week, a drifting crowd that keeps meeting new people,
and one ephemeral burst community. The resilience signal (average
sqrt(coreness*degree) per window size) separates them; falling points
recover the classes.
"""

import math

import numpy as np

import graphmine as gm
from graphmine.temporal import (arcd_series, bucket_snapshots, build_tree,
                                falling_points, khd_cores, window_grid)

rng = np.random.default_rng(9)
BACKBONE = list(range(0, 6))        # always-on clique
CROWD = list(range(6, 26))          # random weekly meetups
BURST = list(range(26, 32))         # active only in weeks 20-23

triples = []
for week in range(48):
    t = week * 7
    for i, u in enumerate(BACKBONE):
        for v in BACKBONE[i + 1:]:
            triples.append((u, v, t))
    for _ in range(30):
        u, v = rng.choice(CROWD, 2, replace=False)
        triples.append((int(u), int(v), t))
    if 20 <= week < 24:
        for i, u in enumerate(BURST):
            for v in BURST[i + 1:]:
                triples.append((u, v, t))

raw = gm.TemporalEdges(32, triples, np.arange(32))
gt = bucket_snapshots(raw, 7)
print(f"timeline: {gt.tau} weekly snapshots over {gt.node_universe} nodes")

tree = build_tree(gt)
print(f"aggregation tree: {len(tree.nodes)} slots, depth {tree.depth}")

print("\n(k=3, h=W, W=4)-cores, i.e. groups interacting every week of a "
      "4-week window:")
hits = khd_cores(gt, 3, 4, 4, tree=tree)
nonempty = [(win, sorted(m)) for win, m in hits if m]
print(f"  {len(nonempty)} of {len(hits)} windows have one; members always "
      f"the backbone:")
for win, members in nonempty[:3]:
    print(f"    window {win}: {members}")

print("\nresilience series (h = W/2):")
series = arcd_series(gt, "half", tree=tree)
grid = window_grid(gt.tau)
by_node = {}
for row in series:
    by_node.setdefault(row.node, {})[row.window] = row.arcd
for name, group in [("backbone", BACKBONE), ("crowd", CROWD),
                    ("burst", BURST)]:
    avg = {w: sum(by_node[v][w] for v in group) / len(group) for w in grid}
    line = "  ".join(f"W={w}:{avg[w]:5.2f}" for w in grid)
    print(f"  {name:9s} {line}")

classes = falling_points(series)
print("\nfalling points (first window size whose ARCD hits zero):")
for name, group in [("backbone", BACKBONE), ("crowd", CROWD),
                    ("burst", BURST)]:
    vals = sorted({classes[v] for v in group})
    pretty = ["inf" if math.isinf(v) else int(v) for v in vals]
    print(f"  {name:9s} {pretty}")
print("\nthe backbone never falls, the burst community falls as soon as")
print("windows outgrow its active stretch, and the crowd sits in between.")
