import numpy as np
import pytest

from graphmine import (EnumStats, UsageError, brute_k_graphlets,
                       failure_leaf_report, ks_enumerate)
from graphmine.baseline import solution_rows
from conftest import complete_graph, cycle_graph, path_graph, random_graph


def canonical(rows):
    return set(map(tuple, rows.tolist()))


class TestKsEnumerate:
    def test_triangle(self):
        st = ks_enumerate(complete_graph(3), 3)
        assert st.solutions == 1
        assert canonical(solution_rows(complete_graph(3), 3)) == {(0, 1, 2)}

    def test_k_range_validation(self):
        with pytest.raises(UsageError):
            ks_enumerate(path_graph(3), 0)
        with pytest.raises(UsageError):
            ks_enumerate(path_graph(3), 4)

    def test_sink_receives_sorted_tuples(self):
        got = []
        ks_enumerate(cycle_graph(5), 3, sink=got.append)
        assert len(got) == 5
        assert all(s == tuple(sorted(s)) for s in got)

    def test_matches_oracle_randomly(self, rng):
        for _ in range(25):
            g = random_graph(rng)
            for k in range(1, g.n + 1):
                want = brute_k_graphlets(g, k).solutions
                rows = solution_rows(g, k)
                assert canonical(rows) == want
                assert len(rows) == len(want)

    def test_no_solution_below_start_vertex(self, rng):
        # in each emitted set, the minimum vertex is the start vertex of
        # its subtree, so no set pairs a small outsider with a larger start
        sols = []
        g = random_graph(rng, n_lo=6, n_hi=10)
        ks_enumerate(g, 3, sink=sols.append)
        assert all(min(s) == s[0] for s in sols)

    def test_stats_invariants(self, rng):
        for _ in range(15):
            g = random_graph(rng)
            for k in range(1, g.n + 1):
                st = ks_enumerate(g, k)
                assert st.success_leaves == st.solutions
                assert st.failure_leaves + st.success_leaves \
                    <= st.recursive_calls
                assert st.recursive_calls >= st.success_leaves

    def test_frontier_space_bound(self, rng):
        for _ in range(10):
            g = random_graph(rng, n_hi=16)
            for k in (3, 5):
                if k > g.n:
                    continue
                st = ks_enumerate(g, k)
                assert st.extras["max_frontier"] <= min(
                    k * max(g.max_degree, 1), g.n)


class TestFailureLeafReport:
    def test_benchmark_ratio(self):
        st = EnumStats(solutions=270_204, success_leaves=270_204,
                       failure_leaves=2_082, recursive_calls=600_000)
        rep = failure_leaf_report(st)
        assert rep["total_leaves"] == 272_286
        assert rep["failure_pct"] == 0.76

    def test_single_success(self):
        rep = failure_leaf_report(EnumStats(1, 1, 0, 1))
        assert rep["failure_pct"] == 0.0

    def test_all_failures(self):
        rep = failure_leaf_report(EnumStats(0, 0, 5, 5))
        assert rep["failure_pct"] == 100.0

    def test_zero_leaves(self):
        rep = failure_leaf_report(EnumStats())
        assert rep["failure_pct"] == 0.0

    def test_isolated_vertices_all_failure(self):
        from graphmine import StaticGraph
        g = StaticGraph.from_edges(5, [])
        st = ks_enumerate(g, 2)
        assert st.solutions == 0
        assert st.failure_leaves == 5
        assert failure_leaf_report(st)["failure_pct"] == 100.0
