"""Tests for best responses, SPE checks and improving dynamics."""
from fractions import Fraction

import pytest

from two_sided_flg.core.dynamics import (
    LoadCache,
    Ordering,
    best_response,
    find_spe,
    is_spe,
    lex_compare,
    potential_vector,
    random_placement,
)
from two_sided_flg.core.equilibrium import compute_equilibrium_loads
from two_sided_flg.core.model import HostGraph, Placement
from two_sided_flg.generators import gen_random
from two_sided_flg.utils.exceptions import MoveCapExceededError


def test_potential_and_lex_compare():
    assert potential_vector([3, 1, 2]) == (1, 2, 3)
    assert lex_compare((1, 2, 3), (1, 3, 3)) is Ordering.LESS
    assert lex_compare((1, 3, 3), (1, 2, 3)) is Ordering.GREATER
    assert lex_compare((1, 2), (1, 2)) is Ordering.EQUAL
    with pytest.raises(ValueError):
        lex_compare((1,), (1, 2))


def test_load_cache_shares_multisets(ten_clients):
    g, _, s = ten_clients
    cache = LoadCache(g)
    loads = cache.loads(s)
    swapped = Placement((s[0], s[2], s[1], s[3]))
    assert cache.loads(swapped) == compute_equilibrium_loads(g, swapped).loads
    assert cache.misses == 1 and cache.hits == 1
    assert loads[1] == loads[2] == Fraction(5, 2)


def test_best_response_lower_bound(lower_bound):
    g, _ = lower_bound
    response = best_response(g, Placement((0, 12)), 0)
    assert response.location == 12
    assert response.load == Fraction(9, 2)


def test_best_response_single_facility():
    g = HostGraph.from_edges([1, 1, 1, 1], [(0, 2), (1, 2), (3, 1)])
    response = best_response(g, Placement((0,)), 0)
    assert response.location == 2
    assert response.load == 3


def test_best_response_keeps_optimal_location(lower_bound):
    g, _ = lower_bound
    response = best_response(g, Placement((12, 12)), 1)
    assert response.location == 12
    assert response.load == Fraction(9, 2)


def test_best_response_prefers_current_on_ties():
    g = HostGraph.from_edges([1, 1, 1], [])
    response = best_response(g, Placement((2,)), 0)
    assert response.location == 2
    assert response.load == 1


def test_best_response_in_parallel(lower_bound):
    g, _ = lower_bound
    sequential = best_response(g, Placement((0, 12)), 0, workers=1)
    parallel = best_response(g, Placement((0, 12)), 0, workers=2)
    assert parallel == sequential


def test_is_spe(lower_bound):
    g, _ = lower_bound
    assert is_spe(g, Placement((12, 12))).holds
    check = is_spe(g, Placement((0, 12)))
    assert not check
    assert check.deviation.facility == 0
    assert check.deviation.location == 12
    assert check.deviation.load == Fraction(9, 2)


def test_is_spe_single_facility():
    g = HostGraph.from_edges([1, 1, 1, 1], [(0, 2), (1, 2), (3, 1)])
    assert is_spe(g, Placement((2,)))
    assert not is_spe(g, Placement((3,)))


def test_find_spe_lower_bound(lower_bound):
    g, k = lower_bound
    trace = find_spe(g, k, initial=Placement((0, 1)))
    assert trace.terminal == Placement((12, 12))
    assert trace.move_count >= 1
    assert is_spe(g, trace.terminal)


def test_find_spe_stable_start(lower_bound):
    g, k = lower_bound
    trace = find_spe(g, k, initial=(12, 12))
    assert trace.move_count == 0
    assert trace.terminal == trace.initial


def test_move_cap(lower_bound):
    g, k = lower_bound
    with pytest.raises(MoveCapExceededError):
        find_spe(g, k, initial=(0, 1), move_cap=1)


def test_random_placement_is_seeded(lower_bound):
    g, k = lower_bound
    assert random_placement(g, 3, 7) == random_placement(g, 3, 7)


def check_trace(trace):
    for move in trace.moves:
        assert move.new_load > move.old_load
        assert lex_compare(move.potential_after, move.potential_before) is Ordering.GREATER
        for before, after in zip(move.loads_before, move.loads_after):
            if after < before:
                assert after >= move.new_load


def dynamics_corpus():
    cases = []
    for seed in range(100):
        n = 3 + seed % 13
        k = 1 + seed % 4
        g, k = gen_random(n, 0.3, 3, k, seed)
        cases.append((seed, g, k))
    return cases


@pytest.mark.parametrize("seed, g, k", dynamics_corpus())
def test_dynamics_properties(seed, g, k):
    cache = LoadCache(g)
    for start in range(5):
        trace = find_spe(g, k, seed=seed * 10 + start, move_cap=100000, cache=cache)
        check_trace(trace)
        assert is_spe(g, trace.terminal, cache)
