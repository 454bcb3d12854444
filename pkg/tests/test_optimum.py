"""Tests for the social optimum search."""
import pytest

from two_sided_flg.core.model import HostGraph, Placement, social_welfare
from two_sided_flg.core.optimum import optimal_placement_exact, optimal_placement_greedy
from two_sided_flg.generators import two_clause_formula, gen_3sat, gen_random
from two_sided_flg.utils.exceptions import EnumerationBudgetError


def test_lower_bound_optimum(lower_bound):
    g, k = lower_bound
    exact = optimal_placement_exact(g, k)
    assert exact.welfare == 13
    assert exact.locations == (0, 12)
    assert exact.exact

    greedy = optimal_placement_greedy(g, k)
    assert greedy.placement == Placement((12, 0))
    assert greedy.welfare == 13
    assert not greedy.exact


def test_two_clause_full_coverage():
    g, k = gen_3sat(two_clause_formula())
    result = optimal_placement_exact(g, k)
    assert result.welfare == 8 == g.n
    assert social_welfare(g, result.placement) == 8


def test_more_facilities_than_vertices():
    g = HostGraph.from_edges([1, 2, 3], [])
    result = optimal_placement_exact(g, 5)
    assert result.welfare == 6
    assert result.placement.k == 5
    assert result.placement.multiset() == (0, 0, 0, 1, 2)


def test_no_facilities(lower_bound):
    g, _ = lower_bound
    assert optimal_placement_exact(g, 0).welfare == 0
    assert optimal_placement_greedy(g, 0).placement == Placement(())


def test_budget(lower_bound):
    g, k = lower_bound
    with pytest.raises(EnumerationBudgetError):
        optimal_placement_exact(g, k, budget=10)


def test_one_vertex_covers_everything():
    g = HostGraph.from_edges([1, 1, 1], [(1, 0), (2, 0)])
    result = optimal_placement_greedy(g, 1)
    assert result.locations == (0,)
    assert result.welfare == 3


@pytest.mark.parametrize("seed", range(30))
def test_greedy_never_beats_exact(seed):
    g, k = gen_random(9, 0.25, 5, 1 + seed % 4, seed)
    exact = optimal_placement_exact(g, k)
    greedy = optimal_placement_greedy(g, k)
    assert greedy.welfare <= exact.welfare
    assert social_welfare(g, exact.placement) == exact.welfare
    assert social_welfare(g, greedy.placement) == greedy.welfare
