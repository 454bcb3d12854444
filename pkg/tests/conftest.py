"""Shared fixtures; puts src/ and the project root on sys.path."""
import os
import sys

ROOT = os.path.join(os.path.dirname(__file__), '..')
sys.path.insert(0, os.path.join(ROOT, 'src'))
sys.path.insert(0, ROOT)

import pytest

from two_sided_flg.core import HostGraph, Placement
from two_sided_flg.generators import ten_client_instance, three_client_instance, gen_lower_bound, gen_random


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running sweeps")


@pytest.fixture
def ten_clients():
    return ten_client_instance()


@pytest.fixture
def three_clients():
    return three_client_instance()


@pytest.fixture
def lower_bound():
    return gen_lower_bound(2, 4)


@pytest.fixture
def co_located():
    """Clients v (weight 1) and u (weight 2) with u -> v, two facilities on v."""
    g = HostGraph.from_edges([1, 2], [(1, 0)])
    return g, 2, Placement((0, 0))


def random_corpus(count, max_n, max_k, density=0.3, max_weight=4, base_seed=0):
    """Seeded (graph, placement) pairs with 1 <= n <= max_n and 1 <= k <= max_k."""
    import random

    corpus = []
    for seed in range(base_seed, base_seed + count):
        rng = random.Random(seed)
        n = rng.randint(1, max_n)
        k = rng.randint(1, max_k)
        g, _ = gen_random(n, density, max_weight, k, seed)
        placement = Placement(tuple(rng.randrange(n) for _ in range(k)))
        corpus.append((g, placement))
    return corpus
