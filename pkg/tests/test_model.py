"""Tests for the core game model."""
from fractions import Fraction

import pytest

from two_sided_flg.core.model import (
    HostGraph,
    LoadVector,
    Placement,
    WeightDistribution,
    attraction_range,
    client_cost,
    covered_clients,
    facilities_in_range,
    facility_loads,
    is_feasible_distribution,
    marginal_welfare,
    shopping_range,
    social_welfare,
    valid_utility_gap,
)
from two_sided_flg.generators import gen_basic_us_counterexample
from two_sided_flg.utils.exceptions import (
    DuplicateEdgeError,
    InfeasibleDistributionError,
    InvalidFacilityError,
    InvalidVertexError,
    NegativeWeightError,
    SelfLoopError,
    VertexRangeError,
)

from .conftest import random_corpus


def test_graph_validation():
    with pytest.raises(NegativeWeightError):
        HostGraph.from_edges([1, -1], [])
    with pytest.raises(SelfLoopError):
        HostGraph.from_edges([1, 1], [(0, 0)])
    with pytest.raises(VertexRangeError):
        HostGraph.from_edges([1, 1], [(0, 2)])
    with pytest.raises(DuplicateEdgeError):
        HostGraph.from_edges([1, 1], [(0, 1), (0, 1)])


def test_neighborhoods(three_clients):
    g, _, s = three_clients
    assert shopping_range(g, 2) == {1, 2}
    assert attraction_range(g, s, [0]) == {0, 1}
    assert attraction_range(g, s, [1]) == {2}
    assert attraction_range(g, s, [0, 1]) == {0, 1, 2}
    assert facilities_in_range(g, s, 1) == {0}
    with pytest.raises(InvalidVertexError):
        g.in_neighbors(3)


def test_placement_operations():
    s = Placement((3, 1, 3))
    assert s.k == 3
    assert s.multiset() == (1, 3, 3)
    assert s.relocate(1, 0) == Placement((3, 0, 3))
    assert s.without(0) == Placement((1, 3))
    with pytest.raises(InvalidFacilityError):
        s.relocate(3, 0)


def test_welfare_lower_bound(lower_bound):
    g, _ = lower_bound
    assert g.n == 13
    assert social_welfare(g, Placement((12, 12))) == 9
    assert social_welfare(g, Placement((0, 12))) == 13
    assert len(covered_clients(g, Placement((12, 12)))) == 9
    assert social_welfare(g, Placement(())) == 0


def test_basic_utility_system_counterexample():
    g, k, s = gen_basic_us_counterexample()
    assert social_welfare(g, s) == 2
    assert social_welfare(g, s.without(0)) == 2
    assert marginal_welfare(g, s, 0) == 0
    sigma = WeightDistribution({0: {0: 1}, 1: {1: 1}})
    loads = facility_loads(g, s, sigma)
    assert loads == LoadVector((1, 1))
    assert valid_utility_gap(g, s, loads) == 0


def test_distribution_feasibility(three_clients):
    g, _, s = three_clients
    feasible = WeightDistribution({0: {0: 1}, 1: {0: 1}, 2: {1: 1}})
    assert is_feasible_distribution(g, s, feasible)
    assert facility_loads(g, s, feasible) == LoadVector((2, 1))

    outside = WeightDistribution({0: {0: 1}, 1: {1: 1}, 2: {1: 1}})
    assert not is_feasible_distribution(g, s, outside)
    with pytest.raises(InfeasibleDistributionError):
        facility_loads(g, s, outside)

    partial = WeightDistribution({0: {0: Fraction(1, 2)}, 1: {0: 1}, 2: {1: 1}})
    assert not is_feasible_distribution(g, s, partial)


def test_zero_entries_are_dropped():
    sigma = WeightDistribution({0: {0: 0, 1: Fraction(1, 2)}, 1: {0: 0}})
    assert sigma.clients() == (0,)
    assert sigma.patronized(0) == {1}
    assert list(sigma.items()) == [(0, 1, Fraction(1, 2))]


def test_client_cost(co_located):
    g, _, s = co_located
    sigma = WeightDistribution({0: {0: 1}, 1: {0: Fraction(1, 2), 1: Fraction(3, 2)}})
    assert client_cost(g, s, sigma, 1) == Fraction(3, 2)
    assert client_cost(g, s, sigma, 0) == Fraction(3, 2)


def test_uncovered_client_cost_is_none(three_clients):
    g, _, _ = three_clients
    s = Placement((0, 0))
    sigma = WeightDistribution({0: {0: 1}, 1: {1: 1}})
    assert 2 not in covered_clients(g, s)
    assert client_cost(g, s, sigma, 2) is None
    assert client_cost(g, s, sigma, 1) == 1


def test_uncovered_client_may_not_distribute(three_clients):
    g, _, _ = three_clients
    s = Placement((0, 0))
    assert is_feasible_distribution(g, s, WeightDistribution({0: {0: 1}, 1: {1: 1}}))
    for amount in (Fraction(1, 3), 1, 5):
        sigma = WeightDistribution({0: {0: 1}, 1: {1: 1}, 2: {0: amount}})
        assert not is_feasible_distribution(g, s, sigma)


@pytest.mark.parametrize("g, s", random_corpus(40, 9, 4))
def test_coverage_agrees_with_attraction_ranges(g, s):
    everything = attraction_range(g, s, range(s.k))
    assert covered_clients(g, s) == everything
    assert social_welfare(g, s) == g.total_weight(everything)
    for j in range(s.k):
        assert attraction_range(g, s, [j]) <= everything
        assert attraction_range(g, s, [j]) <= attraction_range(g, s, range(j, s.k))
