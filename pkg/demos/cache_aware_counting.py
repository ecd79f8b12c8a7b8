#!/usr/bin/env python3
"""Show what the truncated recursion buys and how compressed output
works.

The cache-aware enumerator stops three levels above the leaves and
counts the remaining completions combinatorially, which collapses the
three widest levels of the recursion tree. On graphs with any density
that is orders of magnitude fewer calls for the same exact count.
"""

import io
import time

import numpy as np

import graphmine as gm

rng = np.random.default_rng(8)
n = 400
p = 0.02
edges = [(i, j) for i in range(n) for j in range(i + 1, n)
         if rng.random() < p]
g = gm.StaticGraph.from_edges(n, edges)
print(f"random graph: n={g.n}, m={g.m}")

k = 6
print(f"\ncounting {k}-graphlets:")
rows = []
for depth in (1, 2, 3):
    t0 = time.perf_counter()
    st = gm.cage_enumerate(g, k, depth)
    dt = time.perf_counter() - t0
    rows.append((f"depth {depth}", st.solutions, st.recursive_calls, dt))
t0 = time.perf_counter()
st = gm.ks_enumerate(g, k)
rows.insert(0, ("full recursion", st.solutions, st.recursive_calls,
                time.perf_counter() - t0))
for name, sols, calls, dt in rows:
    print(f"  {name:15s} count={sols:>12,} calls={calls:>12,} "
          f"time={dt * 1000:8.1f} ms")

print("\ndeeper truncation strictly shrinks the tree: the depth-3 run")
print("makes the fewest calls, and every variant reports the same count.")

# compressed output on a toy graph
toy = gm.StaticGraph.from_edges(6, [(0, 1), (0, 2), (1, 2), (2, 3),
                                    (3, 4), (3, 5)])
buf = io.StringIO()
st = gm.cage_enumerate(toy, 4, 3, record_writer=buf)
print(f"\ncompressed stream for a 6-vertex toy ({st.solutions} graphlets):")
for line in buf.getvalue().splitlines():
    print("   ", line)
buf.seek(0)
expanded = sorted(gm.decompress_records(buf, 4))
print(f"decompressed back into {len(expanded)} explicit solutions:")
for sol in expanded:
    print("   ", sol)
assert set(expanded) == gm.brute_k_graphlets(toy, 4).solutions
