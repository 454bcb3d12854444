"""Tests for exact client-equilibrium loads."""
from fractions import Fraction
from itertools import combinations

import pytest

from two_sided_flg.core import equilibrium
from two_sided_flg.core.equilibrium import (
    compute_equilibrium_loads,
    compute_mns,
    extract_client_equilibrium,
    is_client_equilibrium,
    possible_utilities,
)
from two_sided_flg.core.model import (
    HostGraph,
    LoadVector,
    Placement,
    WeightDistribution,
    attraction_range,
    facility_loads,
    social_welfare,
)
from two_sided_flg.utils.exceptions import InfeasibleDistributionError, UtilityGridTooLargeError

from .conftest import random_corpus

F = Fraction


def test_possible_utilities():
    assert possible_utilities(3, 2) == [0, F(1, 2), 1, F(3, 2), 2, F(5, 2), 3]
    assert possible_utilities(4, 1) == [0, 1, 2, 3, 4]
    assert possible_utilities(2, 3) == [0, F(1, 3), F(1, 2), F(2, 3), 1, F(4, 3), F(3, 2), F(5, 3), 2]
    with pytest.raises(UtilityGridTooLargeError):
        possible_utilities(100, 10, limit=50)


def test_utility_grid_is_rebuilt_per_call():
    first = possible_utilities(3, 2)
    first.clear()
    assert possible_utilities(3, 2) == [0, F(1, 2), 1, F(3, 2), 2, F(5, 2), 3]
    # no module-level memo keeps grids alive between load computations
    assert not any(hasattr(obj, "cache_info") for obj in vars(equilibrium).values())


def test_mns_three_clients(three_clients):
    g, k, s = three_clients
    mns = compute_mns(g, g.weights, range(k), s)
    assert mns.members == {1}
    assert mns.ratio == 1

    both = compute_mns(g, g.weights, range(k), Placement((0, 0)))
    assert both.members == {0, 1}
    assert both.ratio == 1


def test_mns_ten_clients(ten_clients):
    g, k, s = ten_clients
    mns = compute_mns(g, g.weights, range(k), s)
    assert mns.members == {0}
    assert mns.ratio == 2


def test_fixture_loads(ten_clients, three_clients):
    g, _, s = ten_clients
    assert compute_equilibrium_loads(g, s).loads == LoadVector((2, F(5, 2), F(5, 2), 3))
    g, _, s = three_clients
    assert compute_equilibrium_loads(g, s).loads == LoadVector((2, 1))


def test_trivial_loads():
    g = HostGraph.from_edges([5], [])
    assert compute_equilibrium_loads(g, Placement((0,))).loads == LoadVector((5,))
    assert compute_equilibrium_loads(g, Placement(())).loads == LoadVector(())


def test_empty_attraction_gets_zero():
    g = HostGraph.from_edges([0, 3], [])
    computation = compute_equilibrium_loads(g, Placement((0, 1)))
    assert computation.loads == LoadVector((0, 3))
    assert computation.ratios() == (0, 3)


def test_co_located_split(co_located):
    g, k, s = co_located
    computation = compute_equilibrium_loads(g, s)
    assert computation.loads == LoadVector((F(3, 2), F(3, 2)))
    sigma = extract_client_equilibrium(computation)
    assert is_client_equilibrium(g, s, sigma)


def test_three_client_equilibrium(three_clients):
    g, _, s = three_clients
    sigma = extract_client_equilibrium(compute_equilibrium_loads(g, s))
    assert sigma == WeightDistribution({0: {0: 1}, 1: {0: 1}, 2: {1: 1}})


def test_single_facility_takes_everything():
    g = HostGraph.from_edges([1, 2, 3, 4], [(1, 0), (2, 0)])
    sigma = extract_client_equilibrium(compute_equilibrium_loads(g, Placement((0,))))
    assert sigma == WeightDistribution({0: {0: 1}, 1: {0: 2}, 2: {0: 3}})


def test_certificate_examples():
    g = HostGraph.from_edges([1, 1], [(0, 1), (1, 0)])
    s = Placement((0, 1))
    assert not is_client_equilibrium(g, s, WeightDistribution({0: {0: 1}, 1: {0: 1}}))
    assert is_client_equilibrium(g, s, WeightDistribution({0: {0: 1}, 1: {1: 1}}))
    with pytest.raises(InfeasibleDistributionError):
        is_client_equilibrium(g, s, WeightDistribution({0: {0: 1}}))


def test_stern_brocot_fallback_matches_grid(ten_clients):
    g, k, s = ten_clients
    exact = compute_equilibrium_loads(g, s)
    fallback = compute_equilibrium_loads(g, s, grid_limit=1)
    assert fallback.loads == exact.loads
    assert fallback.ratios() == exact.ratios()


def brute_force_mnr(g, s, facilities):
    best = None
    for size in range(1, len(facilities) + 1):
        for subset in combinations(facilities, size):
            ratio = F(g.total_weight(attraction_range(g, s, subset)), size)
            best = ratio if best is None else min(best, ratio)
    return best


CORPUS = random_corpus(200, 12, 5)


@pytest.mark.parametrize("g, s", CORPUS)
def test_load_properties(g, s):
    computation = compute_equilibrium_loads(g, s)
    loads = computation.loads

    assert loads.total() == social_welfare(g, s)
    assert all(load.denominator <= s.k for load in loads)
    assert all(load <= g.total_weight() for load in loads)
    ratios = computation.ratios()
    assert list(ratios) == sorted(ratios)
    assert ratios[0] == brute_force_mnr(g, s, range(s.k))
    assigned = [j for r in computation.rounds for j in r.mns.members]
    assert sorted(assigned) == list(range(s.k))

    sigma = extract_client_equilibrium(computation)
    assert facility_loads(g, s, sigma) == loads
    assert is_client_equilibrium(g, s, sigma)
    for client in sigma.clients():
        patronized = sigma.patronized(client)
        assert len({loads[j] for j in patronized}) == 1
        assert any(patronized <= r.mns.members for r in computation.rounds)


@pytest.mark.parametrize("g, s", random_corpus(500, 15, 5, base_seed=1000))
def test_load_uniqueness(g, s):
    loads = compute_equilibrium_loads(g, s).loads
    assert compute_equilibrium_loads(g, s, order="reverse").loads == loads

    permutation = list(reversed(range(s.k)))
    permuted = Placement(tuple(s[j] for j in permutation))
    permuted_loads = compute_equilibrium_loads(g, permuted).loads
    assert tuple(permuted_loads[permutation.index(j)] for j in range(s.k)) == tuple(loads)
