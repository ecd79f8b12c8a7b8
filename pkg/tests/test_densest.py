import itertools
import warnings
from fractions import Fraction

import numpy as np
import pytest

from graphmine import StaticGraph, UsageError, brute_densest
from graphmine.densest import (OrientedMultigraph, bucket_index,
                               check_buckets, check_invariant_theta_prime,
                               choose_params, densest_subgraph,
                               density_estimate, density_estimate_exact,
                               density_ladder, induced_density, insert_edge,
                               orient_graph)
from conftest import complete_graph, path_graph, random_graph, star_graph

EPS_FR = {0.25: Fraction(1, 4), 0.5: Fraction(1, 2), 1.0: Fraction(1)}


class TestChooseParams:
    def test_benchmark_parameters(self):
        assert choose_params(1117, 0.5).b == 378
        assert choose_params(5242, 0.5).b == 461

    def test_tiny_graph(self):
        p = choose_params(2, 0.5)
        assert p.b == 38 and p.gamma == 0.25 and p.eta == 3

    def test_lambda_exact(self):
        p = choose_params(100, 0.5)
        assert p.lam == p.eta / (p.b * 64)

    def test_override(self):
        assert choose_params(1117, 0.5, b_override=50).b == 50
        with pytest.raises(UsageError):
            choose_params(1117, 0.5, b_override=1)

    def test_epsilon_validation(self):
        with pytest.raises(UsageError):
            choose_params(10, 0.0)
        with pytest.raises(UsageError):
            choose_params(10, 1.5)
        with pytest.raises(UsageError):
            choose_params(1, 0.5)


class TestInsertEdge:
    def test_two_vertex_balanced_split(self):
        p = choose_params(2, 0.5)
        st = OrientedMultigraph(2)
        insert_edge(st, p, 0, 1)
        assert sum(st.outdeg) == p.b
        assert max(st.outdeg) <= p.b // 2 + 1
        assert not check_invariant_theta_prime(st, p)

    def test_triangle_conservation(self):
        p = choose_params(3, 1.0, b_override=12)
        st = OrientedMultigraph(3)
        for e in [(0, 1), (1, 2), (0, 2)]:
            insert_edge(st, p, *e)
        assert sum(st.outdeg) == 36
        per_edge = {}
        for u, v, c in st.directed_edges():
            key = (min(u, v), max(u, v))
            per_edge[key] = per_edge.get(key, 0) + c
        assert set(per_edge.values()) == {12}

    def test_star_leaves_reach_quarter_share(self):
        p = choose_params(5, 1.0, b_override=20)
        st = OrientedMultigraph(5)
        for leaf in (1, 2, 3, 4):
            insert_edge(st, p, 0, leaf)
        assert min(st.outdeg[1:]) >= 20 // 4
        assert not check_invariant_theta_prime(st, p)

    def test_duplicate_edge_rejected(self):
        p = choose_params(3, 1.0, b_override=8)
        st = OrientedMultigraph(3)
        insert_edge(st, p, 0, 1)
        with pytest.raises(UsageError):
            insert_edge(st, p, 1, 0)

    def test_self_loop_rejected(self):
        p = choose_params(3, 1.0, b_override=8)
        with pytest.raises(UsageError):
            insert_edge(OrientedMultigraph(3), p, 1, 1)

    def test_invariant_after_every_insert(self, rng):
        # 200 insertion sequences on graphs up to n = 50
        trials = 0
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            while trials < 200:
                n = int(rng.integers(2, 51))
                g = random_graph(rng, n_lo=n, n_hi=n, p_lo=0.04, p_hi=0.2)
                if g.m == 0:
                    continue
                trials += 1
                p = choose_params(g.n, 1.0)
                st = OrientedMultigraph(g.n)
                for u, v in g.edges():
                    insert_edge(st, p, u, v)
                    assert not check_invariant_theta_prime(st, p)

    def test_bucket_consistency_under_churn(self, rng):
        for _ in range(20):
            g = random_graph(rng, n_lo=4, n_hi=20, p_lo=0.1, p_hi=0.5)
            if g.m == 0:
                continue
            p = choose_params(g.n, 0.5)
            st = OrientedMultigraph(g.n)
            for i, (u, v) in enumerate(g.edges()):
                insert_edge(st, p, u, v)
                if (i + 1) % 3 == 0:
                    assert not check_buckets(st, p)
            assert not check_buckets(st, p)

    def test_argmin_matches_linear_scan(self, rng):
        for _ in range(10):
            g = random_graph(rng, n_lo=4, n_hi=15, p_lo=0.2, p_hi=0.6)
            if g.m == 0:
                continue
            st, p = orient_graph(g, 0.5)
            for u in range(g.n):
                got = st.argmin_out_neighbor(u)
                if got is None:
                    assert not st.out[u]
                    continue
                best = min(st.outdeg[w] for w in st.out[u])
                assert st.outdeg[got] == best


class TestInvariantChecker:
    def test_fresh_state_clean(self):
        p = choose_params(4, 0.5, b_override=8)
        assert check_invariant_theta_prime(OrientedMultigraph(4), p) == []

    def test_constructed_violation(self):
        p = choose_params(4, 0.5, b_override=8)
        st = OrientedMultigraph(2)
        for _ in range(8):
            st._add_copy(0, 1, p.lam)
        violations = check_invariant_theta_prime(st, p)
        assert len(violations) == 1
        assert violations[0][:2] == (0, 1)

    def test_bucket_index_formula(self):
        p = choose_params(100, 0.5)
        assert bucket_index(0, p.lam) == -1
        import math
        for d in (1, 2, 5, 50, 377):
            assert bucket_index(d, p.lam) == math.floor(
                math.log(d) / math.log(1 + p.lam))


class TestDensityEstimate:
    def test_requires_edges(self):
        p = choose_params(4, 0.5, b_override=8)
        with pytest.raises(UsageError):
            density_estimate(OrientedMultigraph(4), p)

    def test_k4_sandwich(self):
        st, p = orient_graph(complete_graph(4), 0.5)
        est = density_estimate_exact(st, p)
        assert Fraction(3, 2) <= est <= Fraction(3, 2) * Fraction(3, 2)

    def test_single_edge_sandwich(self):
        st, p = orient_graph(path_graph(2), 0.5)
        est = density_estimate_exact(st, p)
        assert Fraction(1, 2) <= est <= Fraction(3, 4)


class TestLadderAndWitness:
    def test_tier0_is_argmax(self):
        st, p = orient_graph(star_graph(4), 0.5)
        thr, tier0 = density_ladder(st, p)[0]
        top = max(st.outdeg)
        assert tier0 == frozenset(v for v in range(st.n)
                                  if st.outdeg[v] == top)

    def test_regular_orientation_full_tiers(self):
        st, p = orient_graph(complete_graph(4), 0.5)
        if len(set(st.outdeg)) == 1:
            for _, tier in density_ladder(st, p):
                assert tier == frozenset(range(4))

    def test_ladder_nested(self, rng):
        for _ in range(10):
            g = random_graph(rng, n_lo=3, n_hi=15, p_lo=0.2, p_hi=0.6)
            if g.m == 0:
                continue
            st, p = orient_graph(g, 0.5)
            ladder = density_ladder(st, p)
            for (t1, a), (t2, b) in zip(ladder, ladder[1:]):
                assert t2 <= t1 and a <= b

    def test_k4_whole_graph(self):
        st, p = orient_graph(complete_graph(4), 0.5)
        res = densest_subgraph(st, p)
        assert res.vertices == frozenset(range(4))
        assert res.density_exact == Fraction(3, 2)
        assert not res.ladder_exhausted

    def test_triangle_with_pendant_path(self):
        g = StaticGraph.from_edges(
            8, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6),
                (6, 7)])
        rho, _ = brute_densest(g)
        st, p = orient_graph(g, 0.5)
        res = densest_subgraph(st, p)
        assert res.density_exact >= rho / Fraction(3, 2)

    def test_sandwich_and_witness_random(self, rng):
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            for _ in range(25):
                g = random_graph(rng, n_lo=2, n_hi=18, p_lo=0.1, p_hi=0.6)
                if g.m == 0:
                    continue
                rho, _ = brute_densest(g)
                for eps, f in EPS_FR.items():
                    st, p = orient_graph(g, eps)
                    est = density_estimate_exact(st, p)
                    assert rho <= est <= (1 + f) * rho
                    res = densest_subgraph(st, p)
                    assert res.density_exact >= rho / (1 + f)

    def test_induced_density_counts_simple_edges(self):
        st, p = orient_graph(complete_graph(4), 1.0)
        assert induced_density(st, frozenset({0, 1, 2})) == Fraction(1)
        assert induced_density(st, frozenset()) == Fraction(0)
