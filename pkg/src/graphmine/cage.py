"""Cache-aware graphlet counting.

The recursion stops `depth` levels above full solutions and finishes
each partial solution combinatorially from the frontier and its distance
1-3 neighborhoods. Solutions can be reported as a count, expanded
tuples, or compressed completion-family records, one line per family:

    F v1 ... v_s | C1 a1 ... ap     choose the missing vertices from the list
    F v1 ... v_s | C2 u z1 ... zq   u plus a choice of its outside neighbors
    F v1 ... v_s | C3 u v z         two frontier vertices and one beyond
    F v1 ... v_s | C4 u z w         a path reaching distance three

Decompression needs k to know how many vertices each record contributes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Iterator

import numpy as np

from . import _kernels as K
from .baseline import EnumStats, _stats_from_vec, run_bp
from .core import StaticGraph
from .errors import UsageError

_TAG_NAMES = {K.REC_C1: "C1", K.REC_C2: "C2", K.REC_C3: "C3", K.REC_C4: "C4"}
_TAG_IDS = {v: k for k, v in _TAG_NAMES.items()}


@dataclass
class CompressedRecord:
    """One completion family: a fixed vertex prefix plus a tagged choice."""

    fixed: tuple[int, ...]
    tag: int
    payload: tuple[int, ...]

    def solution_count(self, k: int) -> int:
        c = k - len(self.fixed)
        if self.tag == K.REC_C1:
            return comb(len(self.payload), c)
        if self.tag == K.REC_C2:
            return comb(len(self.payload) - 1, c - 1)
        return 1

    def expand(self, k: int) -> Iterator[tuple[int, ...]]:
        c = k - len(self.fixed)
        if self.tag == K.REC_C1:
            for extra in combinations(self.payload, c):
                yield tuple(sorted(self.fixed + extra))
        elif self.tag == K.REC_C2:
            u = self.payload[0]
            for extra in combinations(self.payload[1:], c - 1):
                yield tuple(sorted(self.fixed + (u,) + extra))
        else:
            yield tuple(sorted(self.fixed + self.payload))


def format_record(rec: CompressedRecord) -> str:
    fixed = " ".join(str(v) for v in rec.fixed)
    payload = " ".join(str(v) for v in rec.payload)
    return f"F {fixed} | {_TAG_NAMES[rec.tag]} {payload}"


def parse_record(line: str) -> CompressedRecord:
    line = line.strip()
    if not line.startswith("F ") or "|" not in line:
        raise UsageError(f"malformed record: {line!r}")
    fixed_part, choice_part = line[2:].split("|", 1)
    fixed = tuple(int(t) for t in fixed_part.split())
    tokens = choice_part.split()
    if not tokens or tokens[0] not in _TAG_IDS:
        raise UsageError(f"unknown case tag in record: {line!r}")
    tag = _TAG_IDS[tokens[0]]
    payload = tuple(int(t) for t in tokens[1:])
    return CompressedRecord(fixed, tag, payload)


def emit_compressed(records: Iterable[CompressedRecord], writer) -> None:
    """Write one text line per completion family."""
    for rec in records:
        writer.write(format_record(rec) + "\n")


def decompress_records(lines: Iterable[str], k: int) -> Iterator[tuple[int, ...]]:
    """Expand a compressed stream back into explicit sorted solutions."""
    for line in lines:
        if not line.strip():
            continue
        yield from parse_record(line).expand(k)


def _decode_records(buf: np.ndarray, labels=None) -> Iterator[CompressedRecord]:
    i = 0
    n = len(buf)
    while i < n:
        tag = int(buf[i])
        ns = int(buf[i + 1])
        fixed = buf[i + 2:i + 2 + ns]
        plen = int(buf[i + 2 + ns])
        payload = buf[i + 3 + ns:i + 3 + ns + plen]
        i += 3 + ns + plen
        if labels is not None:
            fixed = labels[fixed]
            payload = labels[payload]
        yield CompressedRecord(tuple(int(v) for v in fixed), tag,
                               tuple(int(v) for v in payload))


def cage_enumerate(g: StaticGraph, k: int, depth: int = 3, sink=None,
                   record_writer=None, deadline_calls: int = 0) -> EnumStats:
    """Count all k-graphlets with the recursion truncated `depth` levels
    early. For k <= 3 the plain enumerator runs instead. ``sink`` gets
    expanded sorted tuples; ``record_writer`` gets compressed text lines
    (original vertex labels)."""
    if depth not in (1, 2, 3):
        raise UsageError(f"depth must be 1, 2 or 3, got {depth}")
    if not 1 <= k <= max(g.n, 1):
        raise UsageError(f"k={k} out of range [1, {g.n}]")
    if g.n == 0:
        return EnumStats()
    base_depth = depth if k > 3 else 0
    capture = 0
    if sink is not None or record_writer is not None:
        capture = 2 if base_depth else 1
    vec, out = run_bp(g, k, base_depth, capture, deadline_calls)
    stats = _stats_from_vec(vec)
    stats.extras["dup_parity_violations"] = int(vec[K.ST_DUP_PARITY])
    stats.extras["depth"] = depth
    if capture == 1 and (sink is not None or record_writer is not None):
        rows = np.sort(out.reshape(-1, k), axis=1)
        for row in rows:
            sol = tuple(int(x) for x in row)
            if sink is not None:
                sink(sol)
            if record_writer is not None:
                record_writer.write(
                    format_record(CompressedRecord(sol, K.REC_C1, ())) + "\n")
    elif capture == 2:
        for rec in _decode_records(out):
            if record_writer is not None:
                record_writer.write(format_record(rec) + "\n")
            if sink is not None:
                for sol in rec.expand(k):
                    sink(sol)
    return stats


def cage_records(g: StaticGraph, k: int, depth: int = 3,
                 use_labels: bool = False) -> list[CompressedRecord]:
    """Compressed completion families for a whole run (k > 3)."""
    if depth not in (1, 2, 3):
        raise UsageError(f"depth must be 1, 2 or 3, got {depth}")
    if k <= 3:
        raise UsageError("compressed records need k > 3")
    vec, out = run_bp(g, k, depth, 2)
    labels = g.labels if use_labels else None
    return list(_decode_records(out, labels))


def cage_rows(g: StaticGraph, k: int, depth: int = 3) -> np.ndarray:
    """All k-graphlets via the truncated recursion, expanded to explicit
    row-sorted vertex arrays (test-scale use)."""
    sols: list[tuple[int, ...]] = []
    cage_enumerate(g, k, depth, sink=sols.append)
    if not sols:
        return np.empty((0, k), np.int32)
    return np.asarray(sols, np.int32)
