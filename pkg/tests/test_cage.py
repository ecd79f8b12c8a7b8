import io

import numpy as np
import pytest

from graphmine import (StaticGraph, UsageError, brute_k_graphlets,
                       cage_enumerate, cage_records, decompress_records,
                       emit_compressed, format_record, ks_enumerate,
                       parse_record)
from graphmine.cage import CompressedRecord, cage_rows
from conftest import complete_graph, cycle_graph, path_graph, random_graph


class TestCageCounts:
    def test_k5(self):
        assert cage_enumerate(complete_graph(5), 4, 3).solutions == 5

    def test_depth_validation(self):
        with pytest.raises(UsageError):
            cage_enumerate(complete_graph(5), 4, 4)
        with pytest.raises(UsageError):
            cage_enumerate(complete_graph(5), 4, 0)

    def test_small_k_falls_back(self):
        for k in (1, 2, 3):
            for d in (1, 2, 3):
                st = cage_enumerate(cycle_graph(6), k, d)
                assert st.solutions == ks_enumerate(cycle_graph(6), k).solutions

    def test_matches_oracle_all_depths(self, rng):
        for _ in range(25):
            g = random_graph(rng, n_lo=4)
            base = {k: brute_k_graphlets(g, k).solutions
                    for k in range(1, g.n + 1)}
            for k in range(1, g.n + 1):
                for d in (1, 2, 3):
                    sols = []
                    st = cage_enumerate(g, k, d, sink=sols.append)
                    assert st.solutions == len(base[k])
                    assert set(sols) == base[k]
                    assert len(sols) == len(base[k])

    def test_call_dominance(self, rng, toy_graphs):
        graphs = [g for _, g in toy_graphs] + [random_graph(rng)
                                               for _ in range(10)]
        for g in graphs:
            for k in range(4, g.n + 1):
                calls = [cage_enumerate(g, k, d).recursive_calls
                         for d in (1, 2, 3)]
                assert calls[2] <= calls[1] <= calls[0]

    def test_case3a_parity_never_violated(self, rng):
        for _ in range(20):
            g = random_graph(rng, n_lo=4)
            for k in range(4, g.n + 1):
                st = cage_enumerate(g, k, 3)
                assert st.extras["dup_parity_violations"] == 0

    def test_working_space_bound(self, rng):
        for _ in range(15):
            g = random_graph(rng, n_lo=4, n_hi=16)
            for k in range(4, min(g.n, 8) + 1):
                st = cage_enumerate(g, k, 3)
                assert st.extras["max_frontier"] <= min(
                    k * max(g.max_degree, 1), g.n)


class TestBaseCaseAttribution:
    def test_chain_plus_twig(self):
        # s-u1, s-u2, u1-z1, z1-w1: one case-3b and one case-4 family
        g = StaticGraph.from_edges(5, [(0, 1), (0, 2), (1, 3), (3, 4)])
        recs = cage_records(g, 4, 3)
        tags = sorted(r.tag for r in recs)
        assert tags == [3, 4]
        sols = {s for r in recs for s in r.expand(4)}
        assert sols == brute_k_graphlets(g, 4).solutions == {
            (0, 1, 2, 3), (0, 1, 3, 4)}

    def test_four_cycle_case3a_halved(self):
        g = StaticGraph.from_edges(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
        st = cage_enumerate(g, 4, 3)
        assert st.solutions == 1
        recs = cage_records(g, 4, 3)
        assert len(recs) == 1 and recs[0].tag == 3

    def test_pure_case1_on_clique(self):
        recs = cage_records(complete_graph(5), 4, 3)
        c1 = [r for r in recs if r.tag == 1]
        assert sum(r.solution_count(4) for r in c1) == 5
        assert all(r.tag == 1 for r in recs)

    def test_case_partition_equals_brute_completions(self, rng):
        # per base case, the four-way count equals the number of
        # connected 3-completions found by brute force
        for _ in range(12):
            g = random_graph(rng, n_lo=5, n_hi=10)
            for k in range(4, g.n + 1):
                recs = cage_records(g, k, 3)
                total = sum(r.solution_count(k) for r in recs)
                assert total == brute_k_graphlets(g, k).count


class TestCompressedFormat:
    def test_case1_record_text(self):
        rec = CompressedRecord((1, 2), 1, (5, 7, 9, 11))
        assert format_record(rec) == "F 1 2 | C1 5 7 9 11"
        assert rec.solution_count(5) == 4
        assert parse_record("F 1 2 | C1 5 7 9 11") == rec

    def test_case4_record_text(self):
        rec = CompressedRecord((0,), 4, (1, 2, 3))
        assert format_record(rec) == "F 0 | C4 1 2 3"
        assert list(rec.expand(4)) == [(0, 1, 2, 3)]

    def test_malformed_records_rejected(self):
        with pytest.raises(UsageError):
            parse_record("C1 1 2 3")
        with pytest.raises(UsageError):
            parse_record("F 1 2 | C9 3")

    def test_roundtrip_through_text(self, rng):
        for _ in range(15):
            g = random_graph(rng, n_lo=4)
            for k in range(4, g.n + 1):
                buf = io.StringIO()
                emit_compressed(cage_records(g, k, 3), buf)
                buf.seek(0)
                got = set(decompress_records(buf, k))
                assert got == brute_k_graphlets(g, k).solutions

    def test_roundtrip_all_depths(self, rng):
        for _ in range(8):
            g = random_graph(rng, n_lo=4, n_hi=10)
            for k in range(4, g.n + 1):
                want = brute_k_graphlets(g, k).solutions
                for d in (1, 2):
                    recs = cage_records(g, k, d)
                    sols = [s for r in recs for s in r.expand(k)]
                    assert set(sols) == want and len(sols) == len(want)

    def test_writer_stream(self):
        g = complete_graph(5)
        buf = io.StringIO()
        st = cage_enumerate(g, 4, 3, record_writer=buf)
        lines = buf.getvalue().strip().splitlines()
        assert len(lines) == sum(1 for _ in cage_records(g, 4, 3))
        assert set(decompress_records(lines, 4)) == \
            brute_k_graphlets(g, 4).solutions
