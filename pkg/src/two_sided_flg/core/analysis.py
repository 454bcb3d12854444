"""
Empirical price of anarchy and stability.

The measurement runs as a LangGraph workflow:

    compute_optimum -> discover_equilibria -> summarize -> END

Each node reads and updates a shared ``PoaState``. Library errors are
caught into the state by the node that raised them and re-raised by
``empirical_poa`` once the graph has finished.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple, TypedDict

from langgraph.graph import END, StateGraph

from ..utils.config import config
from ..utils.constants import MSG_ENUMERATION_SKIPPED, MSG_OPT_FALLBACK
from ..utils.exceptions import EnumerationBudgetError, FLGError, InvariantViolationError
from ..utils.logger import logger
from .dynamics import LoadCache, find_spe, is_spe
from .model import HostGraph, Placement, social_welfare
from .optimum import OptimumResult, optimal_placement_exact, optimal_placement_greedy


def enumerate_spe(
    g: HostGraph,
    k: int,
    budget: Optional[int] = None,
    cache: Optional[LoadCache] = None,
) -> List[Placement]:
    """
    All SPE, one placement per location multiset.

    Args:
        g: Host graph
        k: Number of facilities
        budget: Maximum number of multisets to examine (defaults to config)
        cache: Optional shared load cache

    Returns:
        Sorted-location placements that are SPE, in lexicographic order

    Raises:
        EnumerationBudgetError: If ``C(n + k - 1, k)`` exceeds the budget
    """
    budget = config.dynamics.enumeration_budget if budget is None else budget
    count = comb(g.n + k - 1, k) if g.n > 0 else int(k == 0)
    if count > budget:
        raise EnumerationBudgetError(f"SPE enumeration needs {count} placements, budget is {budget}")
    cache = cache if cache is not None else LoadCache(g)
    found = []
    for locations in combinations_with_replacement(range(g.n), k):
        placement = Placement(locations)
        if is_spe(g, placement, cache):
            found.append(placement)
    logger.debug(f"SPE enumeration: {len(found)} of {count} placements are stable")
    return found


def welfare_ratio(optimum: int, welfare: int) -> Fraction:
    """``optimum / welfare``, defined as 1 when both are zero."""
    if welfare == 0:
        if optimum == 0:
            return Fraction(1)
        raise InvariantViolationError(f"stable placement has welfare 0 against optimum {optimum}")
    return Fraction(optimum, welfare)


@dataclass(frozen=True)
class PoaReport:
    """
    Result of an empirical PoA/PoS measurement.

    Attributes:
        optimum: Best placement found by the optimum search
        equilibria: ``(locations, welfare)`` of each distinct SPE found, ascending
        poa: Largest optimum / SPE welfare ratio
        pos: Smallest optimum / SPE welfare ratio
        optimum_exact: False if the greedy fallback was used
        enumeration_exhaustive: True if every SPE multiset was enumerated
    """
    optimum: OptimumResult
    equilibria: Tuple[Tuple[Tuple[int, ...], int], ...]
    poa: Fraction
    pos: Fraction
    optimum_exact: bool
    enumeration_exhaustive: bool

    def ratios(self) -> Tuple[Fraction, ...]:
        return tuple(welfare_ratio(self.optimum.welfare, w) for _, w in self.equilibria)


class PoaState(TypedDict):
    """
    State of the PoA workflow.

    Attributes:
        graph: Host graph
        k: Number of facilities
        seeds: Seeds of the random starting placements
        budget: Enumeration budget for the exact optimum and the SPE enumeration
        move_cap: Move cap of each dynamics run
        optimum: Optimum search result
        equilibria: Welfare per distinct SPE multiset
        enumeration_exhaustive: Whether SPE enumeration completed
        error: Library error raised by a node, if any
        report: Final report
    """
    graph: HostGraph
    k: int
    seeds: Tuple[int, ...]
    budget: int
    move_cap: int
    optimum: Optional[OptimumResult]
    equilibria: Dict[Tuple[int, ...], int]
    enumeration_exhaustive: bool
    error: Optional[FLGError]
    report: Optional[PoaReport]


def compute_optimum(state: PoaState) -> PoaState:
    """
    Node: exact optimum, or greedy when the exact search exceeds the budget.
    """
    g, k = state["graph"], state["k"]
    try:
        try:
            state["optimum"] = optimal_placement_exact(g, k, state["budget"])
        except EnumerationBudgetError as e:
            logger.warning(MSG_OPT_FALLBACK.format(error=e))
            state["optimum"] = optimal_placement_greedy(g, k)
    except FLGError as e:
        state["error"] = e
        logger.error(f"Optimum search failed: {e}")
    return state


def discover_equilibria(state: PoaState) -> PoaState:
    """
    Node: run the dynamics from every seed, then enumerate all SPE if affordable.
    """
    if state.get("error"):
        return state

    g, k = state["graph"], state["k"]
    cache = LoadCache(g)
    equilibria: Dict[Tuple[int, ...], int] = {}
    try:
        for seed in state["seeds"]:
            trace = find_spe(g, k, seed=seed, move_cap=state["move_cap"], cache=cache)
            equilibria[trace.terminal.multiset()] = social_welfare(g, trace.terminal)
        try:
            for placement in enumerate_spe(g, k, state["budget"], cache):
                equilibria[placement.multiset()] = social_welfare(g, placement)
            state["enumeration_exhaustive"] = True
        except EnumerationBudgetError as e:
            logger.info(MSG_ENUMERATION_SKIPPED.format(error=e))
    except FLGError as e:
        state["error"] = e
        logger.error(f"Equilibrium discovery failed: {e}")

    state["equilibria"] = equilibria
    logger.debug(f"Load cache: {cache.misses} computed, {cache.hits} reused")
    return state


def summarize(state: PoaState) -> PoaState:
    """
    Node: turn the optimum and the equilibria into a PoaReport.
    """
    if state.get("error"):
        return state

    optimum = state["optimum"]
    equilibria = tuple(sorted(state["equilibria"].items()))
    try:
        if not equilibria:
            raise InvariantViolationError("no SPE was found")
        ratios = [welfare_ratio(optimum.welfare, welfare) for _, welfare in equilibria]
        if max(ratios) > 2:
            raise InvariantViolationError(f"welfare ratio {max(ratios)} exceeds 2")
        state["report"] = PoaReport(
            optimum=optimum,
            equilibria=equilibria,
            poa=max(ratios),
            pos=min(ratios),
            optimum_exact=optimum.exact,
            enumeration_exhaustive=state["enumeration_exhaustive"],
        )
    except FLGError as e:
        state["error"] = e
        logger.error(f"PoA summary failed: {e}")
    return state


def create_poa_workflow():
    """
    Create the PoA measurement workflow.

    Returns:
        Compiled LangGraph workflow
    """
    workflow = StateGraph(PoaState)

    workflow.add_node("compute_optimum", compute_optimum)
    workflow.add_node("discover_equilibria", discover_equilibria)
    workflow.add_node("summarize", summarize)

    workflow.set_entry_point("compute_optimum")
    workflow.add_edge("compute_optimum", "discover_equilibria")
    workflow.add_edge("discover_equilibria", "summarize")
    workflow.add_edge("summarize", END)

    app = workflow.compile()
    logger.debug("PoA workflow created")
    return app


def empirical_poa(
    g: HostGraph,
    k: int,
    seeds: Optional[Sequence[int]] = None,
    budget: Optional[int] = None,
    move_cap: Optional[int] = None,
) -> PoaReport:
    """
    Measure the empirical PoA and PoS of an instance.

    SPE come from the dynamics started at every seed, plus exhaustive
    enumeration when ``C(n + k - 1, k)`` fits the budget.

    Args:
        g: Host graph
        k: Number of facilities
        seeds: Dynamics seeds (defaults to config)
        budget: Enumeration budget (defaults to config)
        move_cap: Dynamics move cap (defaults to config)

    Returns:
        PoaReport with exact ratios
    """
    initial_state: PoaState = {
        "graph": g,
        "k": k,
        "seeds": tuple(config.dynamics.seeds if seeds is None else seeds),
        "budget": config.dynamics.enumeration_budget if budget is None else budget,
        "move_cap": config.dynamics.move_cap if move_cap is None else move_cap,
        "optimum": None,
        "equilibria": {},
        "enumeration_exhaustive": False,
        "error": None,
        "report": None,
    }
    final_state = create_poa_workflow().invoke(initial_state)
    if final_state.get("error"):
        raise final_state["error"]
    return final_state["report"]
