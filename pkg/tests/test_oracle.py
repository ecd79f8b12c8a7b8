from fractions import Fraction

import pytest

from graphmine import (StaticGraph, UsageError, brute_densest,
                       brute_k_graphlets, peel_coreness)
from conftest import complete_graph, cycle_graph, path_graph, random_graph


class TestBruteGraphlets:
    def test_triangle(self):
        res = brute_k_graphlets(complete_graph(3), 3)
        assert res.solutions == {(0, 1, 2)} and res.count == 1

    def test_path_windows(self):
        res = brute_k_graphlets(path_graph(4), 3)
        assert res.solutions == {(0, 1, 2), (1, 2, 3)}

    def test_five_cycle(self):
        assert brute_k_graphlets(cycle_graph(5), 3).count == 5

    def test_every_solution_connected_and_sized(self, rng):
        for _ in range(10):
            g = random_graph(rng)
            for k in range(1, g.n + 1):
                res = brute_k_graphlets(g, k)
                assert res.count == len(res.solutions)
                for sol in res.solutions:
                    assert len(sol) == k == len(set(sol))

    def test_size_guard(self):
        with pytest.raises(UsageError):
            brute_k_graphlets(path_graph(25), 3)


class TestPeelCoreness:
    def test_k4(self):
        assert set(peel_coreness(complete_graph(4)).values()) == {3}

    def test_path(self):
        assert set(peel_coreness(path_graph(5)).values()) == {1}

    def test_k4_plus_pendant(self):
        g = StaticGraph.from_edges(
            5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)])
        core = peel_coreness(g)
        assert core[4] == 1
        assert all(core[v] == 3 for v in range(4))

    def test_core_sets_have_min_degree(self, rng):
        for _ in range(10):
            g = random_graph(rng, n_hi=16)
            core = peel_coreness(g)
            for k in range(1, max(core.values(), default=0) + 1):
                members = {v for v, c in core.items() if c >= k}
                for v in members:
                    inside = sum(1 for w in g.neighbors(v) if int(w) in members)
                    assert inside >= k
                # maximality: every excluded vertex would break the
                # min-degree property of some peeling order
                outside = [v for v in range(g.n) if v not in members]
                grown = set(members)
                changed = True
                while changed:
                    changed = False
                    for v in list(outside):
                        if v in grown:
                            continue
                        if sum(1 for w in g.neighbors(v)
                               if int(w) in grown) >= k:
                            grown.add(v)
                            changed = True
                # the k-core is the unique maximal such set
                trimmed = set(grown)
                changed = True
                while changed:
                    changed = False
                    for v in list(trimmed):
                        if sum(1 for w in g.neighbors(v)
                               if int(w) in trimmed) < k:
                            trimmed.discard(v)
                            changed = True
                assert trimmed == members


class TestBruteDensest:
    def test_k4(self):
        rho, witness = brute_densest(complete_graph(4))
        assert rho == Fraction(3, 2) and witness == (0, 1, 2, 3)

    def test_triangle_plus_pendant(self):
        g = StaticGraph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
        rho, witness = brute_densest(g)
        assert rho == Fraction(1) and witness == (0, 1, 2)

    def test_two_triangles_sharing_vertex(self):
        g = StaticGraph.from_edges(
            5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
        rho, witness = brute_densest(g)
        assert rho == Fraction(6, 5) and witness == (0, 1, 2, 3, 4)

    def test_whole_graph_is_candidate(self, rng):
        for _ in range(10):
            g = random_graph(rng, n_hi=14)
            rho, _ = brute_densest(g)
            assert rho >= Fraction(g.m, g.n)

    def test_tie_break_smallest_then_lex(self):
        # two disjoint edges: all four single edges tie at 1/2; {0,1} wins
        g = StaticGraph.from_edges(4, [(0, 1), (2, 3)])
        rho, witness = brute_densest(g)
        assert rho == Fraction(1, 2) and witness == (0, 1)

    def test_size_guard(self):
        with pytest.raises(UsageError):
            brute_densest(path_graph(21))
