import itertools
import random

import pytest

from laman.graph import MultiGraph


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow reference tests")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running reference computations")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def random_multigraph(rng: random.Random, max_v: int = 7, max_e: int = 9, loops: bool = True) -> MultiGraph:
    n = rng.randint(1, max_v)
    m = rng.randint(0, max_e)
    pairs = []
    for _ in range(m):
        a = rng.randrange(n)
        b = a if loops and rng.random() < 0.1 else rng.randrange(n)
        pairs.append((a, b))
    return MultiGraph.from_edges(pairs, vertices=range(n))


def all_simple_graphs(n: int):
    """Every labeled simple graph on vertices 0..n-1 (use only for tiny n)."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield [p for i, p in enumerate(pairs) if mask >> i & 1]
