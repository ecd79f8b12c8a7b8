#!/usr/bin/env python3
"""Approximate the densest subgraph by orienting edges dynamically.

A dense core is planted inside a sparse halo; inserting each edge as b
balanced directed copies keeps every outdegree within a smooth local
bound, after which max-outdegree/b brackets the true density and the
outdegree ladder pulls the core back out. Brute force confirms both.
"""

import itertools

import numpy as np

import graphmine as gm
from graphmine.densest import (check_invariant_theta_prime, choose_params,
                               densest_subgraph, density_estimate,
                               density_ladder, orient_graph)

rng = np.random.default_rng(10)
CORE = list(range(6))
HALO = list(range(6, 18))

edges = list(itertools.combinations(CORE, 2))         # K6 core
for v in HALO:                                        # sparse halo
    edges.append((v, int(rng.integers(0, 6))))
    if rng.random() < 0.4:
        edges.append((v, int(rng.choice(HALO))))
g = gm.StaticGraph.from_edges(18, [(u, v) for u, v in edges if u != v])
print(f"planted graph: n={g.n}, m={g.m}")

rho, witness = gm.brute_densest(g)
print(f"brute force: densest density {rho} on {witness}")

for eps in (1.0, 0.5, 0.25):
    state, params = orient_graph(g, eps)
    est = density_estimate(state, params)
    res = densest_subgraph(state, params)
    bad = check_invariant_theta_prime(state, params)
    print(f"eps={eps:4}: b={params.b:4d}  estimate={est:6.4f} "
          f"(true {float(rho):.4f})  witness={sorted(res.vertices)} "
          f"density={res.density:.4f}  invariant violations={len(bad)}")

state, params = orient_graph(g, 0.25)
print(f"\noutdegree ladder (eps=0.25, b={params.b}):")
for i, (thr, tier) in enumerate(density_ladder(state, params)[:8]):
    print(f"  T_{i}: threshold {thr:7.2f}, {len(tier):2d} vertices")
print("the first tier whose growth stalls is the reported witness;")
print("here it is exactly the planted 6-clique.")
