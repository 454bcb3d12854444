"""Tests for SPE enumeration and the PoA workflow."""
from fractions import Fraction

import pytest

from two_sided_flg.core.analysis import empirical_poa, enumerate_spe, welfare_ratio
from two_sided_flg.core.model import HostGraph, Placement
from two_sided_flg.generators import gen_lower_bound, gen_random
from two_sided_flg.utils.exceptions import EnumerationBudgetError


def test_welfare_ratio():
    assert welfare_ratio(13, 9) == Fraction(13, 9)
    assert welfare_ratio(0, 0) == 1


@pytest.mark.parametrize("k, x", [(2, 4), (2, 6), (3, 4), pytest.param(3, 6, marks=pytest.mark.slow)])
def test_lower_bound_unique_spe(k, x):
    g, k = gen_lower_bound(k, x)
    v_k = (2 * k - 1) * x
    assert enumerate_spe(g, k) == [Placement((v_k,) * k)]


@pytest.mark.parametrize("k, x, expected", [
    (2, 4, Fraction(13, 9)),
    (3, 4, Fraction(21, 13)),
    (2, 6, Fraction(19, 13)),
])
def test_lower_bound_ratio(k, x, expected):
    g, k = gen_lower_bound(k, x)
    report = empirical_poa(g, k, seeds=[0, 1])
    assert report.poa == report.pos == expected
    assert expected == Fraction((2 * k - 1) * x + 1, k * x + 1)
    assert report.optimum_exact
    assert report.enumeration_exhaustive
    assert report.equilibria == ((((2 * k - 1) * x,) * k, k * x + 1),)


def test_enumeration_budget(lower_bound):
    g, k = lower_bound
    with pytest.raises(EnumerationBudgetError):
        enumerate_spe(g, k, budget=5)


def test_partial_report_when_budget_is_small(lower_bound):
    g, k = lower_bound
    report = empirical_poa(g, k, seeds=[0], budget=20)
    assert not report.optimum_exact
    assert not report.enumeration_exhaustive
    assert report.poa == Fraction(13, 9)


def test_optimum_is_spe_gives_pos_one():
    g = HostGraph.from_edges([1, 1, 1], [(1, 0), (2, 0)])
    report = empirical_poa(g, 1, seeds=[0, 1, 2])
    assert report.pos == 1
    assert report.ratios() == (1,)


@pytest.mark.parametrize("seed", range(25))
def test_ratios_are_at_most_two(seed):
    g, k = gen_random(6 + seed % 5, 0.3, 3, 1 + seed % 3, seed)
    report = empirical_poa(g, k, seeds=range(3))
    assert all(1 <= ratio <= 2 for ratio in report.ratios())
    assert report.pos <= report.poa


def test_visualize_workflow(capsys):
    from scripts.visualize_workflow import visualize_workflow

    visualize_workflow()
    out = capsys.readouterr().out
    assert "Discover Equilibria" in out
    assert "Workflow compiled successfully!" in out
