"""
Social optimum search.

Welfare depends only on the set of occupied locations. The exact search
enumerates location sets of size ``min(k, n)`` with bitmask coverage; the
greedy search is the standard max-coverage heuristic.
"""
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import List, Optional, Tuple

from ..utils.config import config
from ..utils.exceptions import EnumerationBudgetError
from ..utils.logger import logger
from .model import HostGraph, Placement


@dataclass(frozen=True)
class OptimumResult:
    """
    A welfare-maximizing (or greedy) choice of locations.

    Attributes:
        locations: Distinct occupied locations, ascending
        welfare: Weighted participation rate of the locations
        placement: A k-facility placement on them (extra facilities co-located)
        exact: Whether the search was exhaustive
    """
    locations: Tuple[int, ...]
    welfare: int
    placement: Placement
    exact: bool


def _coverage_masks(g: HostGraph) -> List[int]:
    """Bitmask of the clients a facility at each vertex attracts."""
    masks = []
    for v in range(g.n):
        mask = 1 << v
        for u in g.in_neighbors(v):
            mask |= 1 << u
        masks.append(mask)
    return masks


def _mask_weight(g: HostGraph, mask: int) -> int:
    total = 0
    while mask:
        low = mask & -mask
        total += g.weights[low.bit_length() - 1]
        mask ^= low
    return total


def _pad(locations: Tuple[int, ...], k: int) -> Placement:
    if not locations:
        return Placement(tuple([0] * k))
    return Placement(locations + (locations[0],) * (k - len(locations)))


def optimal_placement_exact(g: HostGraph, k: int, budget: Optional[int] = None) -> OptimumResult:
    """
    Exhaustive welfare maximization over location sets.

    Args:
        g: Host graph
        k: Number of facilities
        budget: Maximum number of location sets to examine (defaults to config)

    Returns:
        OptimumResult of the first maximizer in lexicographic order

    Raises:
        EnumerationBudgetError: If ``C(n, min(k, n))`` exceeds the budget;
            use ``optimal_placement_greedy`` instead
    """
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    budget = config.dynamics.enumeration_budget if budget is None else budget
    size = min(k, g.n)
    count = comb(g.n, size)
    if count > budget:
        raise EnumerationBudgetError(
            f"exact optimum needs {count} location sets, budget is {budget}; use the greedy search"
        )
    if k > 0 and g.n == 0:
        raise ValueError("cannot place facilities on an empty graph")

    masks = _coverage_masks(g)
    best_locations: Tuple[int, ...] = ()
    best_welfare = -1
    for locations in combinations(range(g.n), size):
        covered = 0
        for v in locations:
            covered |= masks[v]
        welfare = _mask_weight(g, covered)
        if welfare > best_welfare:
            best_locations, best_welfare = locations, welfare

    logger.debug(f"Exact optimum over {count} location sets: {best_locations} -> {best_welfare}")
    return OptimumResult(best_locations, best_welfare, _pad(best_locations, k), True)


def optimal_placement_greedy(g: HostGraph, k: int) -> OptimumResult:
    """
    Greedy max coverage: repeatedly add the location covering the most
    uncovered weight, ties broken by smallest vertex id.
    """
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    if k > 0 and g.n == 0:
        raise ValueError("cannot place facilities on an empty graph")

    masks = _coverage_masks(g)
    covered = 0
    chosen: List[int] = []
    for _ in range(min(k, g.n)):
        best_vertex, best_gain = None, -1
        for v in range(g.n):
            if v in chosen:
                continue
            gain = _mask_weight(g, masks[v] & ~covered)
            if gain > best_gain:
                best_vertex, best_gain = v, gain
        if best_gain <= 0 and chosen:
            break
        chosen.append(best_vertex)
        covered |= masks[best_vertex]

    locations = tuple(sorted(chosen))
    placement = _pad(tuple(chosen), k)
    return OptimumResult(locations, _mask_weight(g, covered), placement, False)
