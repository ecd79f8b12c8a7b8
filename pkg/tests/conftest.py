import itertools
import os
from pathlib import Path

import numpy as np
import pytest

from graphmine import StaticGraph

DATA_DIR = Path(os.environ.get("GRAPHMINE_DATA",
                               Path(__file__).resolve().parent.parent / "data"))


def path_graph(n):
    return StaticGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return StaticGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return StaticGraph.from_edges(n, itertools.combinations(range(n), 2))


def star_graph(leaves):
    return StaticGraph.from_edges(leaves + 1, [(0, i + 1)
                                               for i in range(leaves)])


def random_graph(rng, n_lo=3, n_hi=12, p_lo=0.1, p_hi=0.8):
    n = int(rng.integers(n_lo, n_hi + 1))
    p = rng.uniform(p_lo, p_hi)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)
             if rng.random() < p]
    return StaticGraph.from_edges(n, edges)


@pytest.fixture
def rng():
    return np.random.default_rng(20240)


@pytest.fixture(scope="session")
def toy_graphs():
    graphs = []
    for n in range(2, 9):
        graphs.append(("path%d" % n, path_graph(n)))
    for n in range(3, 9):
        graphs.append(("cycle%d" % n, cycle_graph(n)))
    for n in range(2, 8):
        graphs.append(("K%d" % n, complete_graph(n)))
    for leaves in range(2, 8):
        graphs.append(("star%d" % leaves, star_graph(leaves)))
    return graphs


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Compile (or load from cache) the numba kernels once, outside any
    timed section."""
    from graphmine.baseline import ks_enumerate
    from graphmine.amortized import amortized_enum
    from graphmine.cage import cage_enumerate, cage_rows
    g = complete_graph(5)
    ks_enumerate(g, 4, sink=lambda s: None)
    amortized_enum(g, 4, sink=lambda s: None)
    for d in (1, 2, 3):
        cage_enumerate(g, 4, d)
    cage_rows(g, 4, 3)


def dataset(name):
    """Path of an optional real dataset; tests skip when absent."""
    for candidate in (DATA_DIR / name, DATA_DIR / (name + ".txt"),
                      DATA_DIR / (name + ".txt.gz")):
        if candidate.exists():
            return candidate
    pytest.skip(f"dataset {name!r} not present under {DATA_DIR} "
                f"(run scripts/fetch_datasets.py on a networked machine)")
