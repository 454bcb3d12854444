"""Empirical growth of the exact load computation."""
import time

import numpy as np
import pytest

from two_sided_flg.core import Placement, compute_equilibrium_loads
from two_sided_flg.generators import gen_random


def _seconds(g, s, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        compute_equilibrium_loads(g, s)
        best = min(best, time.perf_counter() - start)
    return best


@pytest.mark.slow
def test_load_computation_grows_polynomially():
    sizes = [20, 40, 80, 160]
    k = 8
    timings = []
    for n in sizes:
        g, _ = gen_random(n, 4 / n, 5, k, seed=n)
        s = Placement(tuple(range(0, n, n // k)[:k]))
        timings.append(_seconds(g, s))
    slope = np.polyfit(np.log(sizes), np.log(timings), 1)[0]
    assert slope < 4
