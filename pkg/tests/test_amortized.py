import numpy as np
import pytest

from graphmine import (AmortizedContext, EnumStats, MutableGraph, StaticGraph,
                       UsageError, VertexSet, amortized_enum,
                       brute_connected_subgraph_count, brute_k_graphlets,
                       edge_graphlets, enum_all_graphlets, fruitful,
                       ks_enumerate, line_graph, linear_enum, mark_mandatory,
                       removable)
from graphmine.amortized import amortized_rows
from graphmine.baseline import solution_rows
from conftest import complete_graph, cycle_graph, path_graph, random_graph, star_graph


class TestFruitfulRemovable:
    def test_fruitful_examples(self):
        assert fruitful(complete_graph(3), 0, 3)
        assert not fruitful(path_graph(2), 0, 3)
        assert fruitful(path_graph(5), 2, 5)

    def test_removable_examples(self):
        assert removable(complete_graph(3), 0, 1, 2)
        assert not removable(path_graph(3), 0, 1, 2)
        assert removable(star_graph(3), 0, 1, 2)

    def test_removable_needs_distinct_vertices(self):
        with pytest.raises(UsageError):
            removable(path_graph(3), 1, 1, 2)


class TestMarkMandatory:
    def test_triangle_all_mandatory(self):
        assert set(mark_mandatory(complete_graph(3), 0, 3)) == {1, 2}

    def test_path_interior_and_tip(self):
        assert set(mark_mandatory(path_graph(3), 0, 3)) == {1, 2}

    def test_star_none_needed(self):
        assert set(mark_mandatory(star_graph(3), 0, 2)) == set()

    def test_requires_fruitful(self):
        with pytest.raises(UsageError):
            mark_mandatory(path_graph(2), 0, 3)

    def test_matches_definition_exhaustively(self, rng):
        # v is mandatory iff deleting it kills fruitfulness
        for _ in range(20):
            g = random_graph(rng, n_lo=3, n_hi=9)
            mg = MutableGraph(g)
            for r in range(g.n):
                for k in range(1, g.n + 1):
                    if not fruitful(mg, r, k):
                        continue
                    marked = set(mark_mandatory(mg, r, k))
                    reachable = _reachable_set(mg, r)
                    for v in reachable - {r}:
                        assert (not removable(mg, r, v, k)) == (v in marked)


def _reachable_set(g, r):
    seen = {r}
    stack = [r]
    while stack:
        v = stack.pop()
        for w in g.neighbors(v):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


class TestLinearEnum:
    def run_linear(self, g, r, k):
        mg = MutableGraph(g)
        got = []
        ctx = AmortizedContext(mg, r, VertexSet([r]), k - 1, EnumStats())
        before = mg.state_fingerprint()
        assert linear_enum(ctx, got.append)
        assert mg.state_fingerprint() == before
        assert len(ctx.S) == 1 and ctx.k_remaining == k - 1
        return got, ctx.stats

    def test_forced_chain(self):
        got, _ = self.run_linear(path_graph(3), 0, 3)
        assert got == [(0, 1, 2)]

    def test_k4_contains_root(self):
        got, _ = self.run_linear(complete_graph(4), 0, 3)
        assert sorted(got) == [(0, 1, 2), (0, 1, 3), (0, 2, 3)]

    def test_triangle(self):
        got, _ = self.run_linear(complete_graph(3), 0, 3)
        assert got == [(0, 1, 2)]

    def test_matches_rooted_oracle(self, rng):
        for _ in range(15):
            g = random_graph(rng, n_lo=3, n_hi=9)
            for r in range(g.n):
                for k in range(1, g.n + 1):
                    if not fruitful(g, r, k):
                        continue
                    got, stats = self.run_linear(g, r, k)
                    want = {s for s in brute_k_graphlets(g, k).solutions
                            if r in s}
                    assert set(got) == want and len(got) == len(want)
                    assert stats.solutions == len(want) > 0


class TestAmortizedEnum:
    def test_five_cycle(self):
        assert amortized_enum(cycle_graph(5), 3).solutions == 5

    def test_k5(self):
        assert amortized_enum(complete_graph(5), 4).solutions == 5

    def test_k_range(self):
        with pytest.raises(UsageError):
            amortized_enum(path_graph(3), 5)

    def test_matches_oracle_and_baseline(self, rng):
        for _ in range(25):
            g = random_graph(rng)
            for k in range(1, g.n + 1):
                want = brute_k_graphlets(g, k).solutions
                rows = amortized_rows(g, k)
                got = set(map(tuple, rows.tolist()))
                assert got == want
                ks_rows = solution_rows(g, k)
                assert got == set(map(tuple, ks_rows.tolist()))

    def test_productivity_no_failure_leaves(self, rng):
        for _ in range(20):
            g = random_graph(rng)
            for k in range(1, g.n + 1):
                st = amortized_enum(g, k)
                assert st.failure_leaves == 0
                assert st.recursive_calls >= st.success_leaves

    def test_switch_component_bound(self, rng):
        # whenever the linear routine takes over, the live component held
        # fewer than 2 * k_remaining vertices
        total_switches = 0
        for _ in range(25):
            g = random_graph(rng)
            for k in range(1, g.n + 1):
                st = amortized_enum(g, k)
                total_switches += st.extras["linear_switches"]
                assert st.extras["switch_bound_violations"] == 0
        assert total_switches > 0

    def test_unreachable_sets_disjoint(self, rng):
        # removing distinct non-adjacent neighbors of r cuts off disjoint
        # vertex sets
        for _ in range(15):
            g = random_graph(rng, n_lo=4, n_hi=10)
            for r in range(g.n):
                nbrs = [int(w) for w in g.neighbors(r)]
                for i in range(len(nbrs)):
                    for j in range(i + 1, len(nbrs)):
                        x, y = nbrs[i], nbrs[j]
                        if g.has_edge(x, y):
                            continue
                        cut_x = _unreachable_after(g, r, x)
                        cut_y = _unreachable_after(g, r, y)
                        assert not (cut_x & cut_y)


def _unreachable_after(g, r, x):
    """Vertices reachable from r in g that stop being reachable once x
    is removed."""
    before = _reachable_set(g, r)
    seen = {r, x}
    stack = [r]
    while stack:
        v = stack.pop()
        for w in g.neighbors(v):
            w = int(w)
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return before - seen - {x}


class TestEnumAllGraphlets:
    def test_single_edge(self):
        assert enum_all_graphlets(path_graph(2)) == 3

    def test_triangle(self):
        assert enum_all_graphlets(complete_graph(3)) == 7

    def test_path3(self):
        got = []
        assert enum_all_graphlets(path_graph(3), sink=got.append) == 6
        assert set(got) == {(0,), (1,), (2,), (0, 1), (1, 2), (0, 1, 2)}

    def test_matches_subset_count(self, rng):
        for _ in range(12):
            g = random_graph(rng, n_lo=2, n_hi=10)
            got = []
            count = enum_all_graphlets(g, sink=got.append)
            assert count == brute_connected_subgraph_count(g)
            assert len(set(got)) == count


class TestEdgeGraphlets:
    def test_triangle_pairs(self):
        assert edge_graphlets(complete_graph(3), 2) == 3

    def test_path_single_pair(self):
        assert edge_graphlets(path_graph(3), 2) == 1

    def test_star_all_three(self):
        got = []
        assert edge_graphlets(star_graph(3), 3, sink=got.append) == 1
        assert got == [(((0, 1)), (0, 2), (0, 3))]

    def test_matches_line_graph_oracle(self, rng):
        for _ in range(10):
            g = random_graph(rng, n_lo=3, n_hi=8)
            if g.m == 0:
                continue
            lg, edge_of = line_graph(g)
            for k in range(1, min(g.m, 6) + 1):
                want = brute_k_graphlets(lg, k).count
                assert edge_graphlets(g, k) == want
