"""
Exact client-equilibrium loads.

Loads are computed round by round: each round finds a minimum
neighborhood set (MNS) of the remaining facilities with a parametric
max-flow, assigns its minimum neighborhood ratio (MNR) to every member,
zeroes the weight of the clients the set attracts and continues with the
rest. The witness flows of the rounds give an explicit client
equilibrium.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from ..flow.network import (
    INFINITY,
    FlowNetwork,
    FlowState,
    build_network,
    edge_flows,
    has_augmenting_path,
    max_flow,
    scaled_to_rational,
)
from ..utils.config import config
from ..utils.constants import MSG_COMPUTING_LOADS, MSG_GRID_FALLBACK, MSG_MNS_ROUND, ORDER_FORWARD
from ..utils.exceptions import InvalidFacilityError, InvariantViolationError, UtilityGridTooLargeError
from ..utils.formatter import format_rational
from ..utils.logger import logger
from .model import (
    HostGraph,
    LoadVector,
    Placement,
    WeightDistribution,
    attraction_range,
    facilities_in_range,
    facility_loads,
)


@dataclass(frozen=True)
class MnsResult:
    """
    Minimum neighborhood set of one round.

    Attributes:
        members: Facility indices of the (maximal) MNS
        ratio: The MNR, equal to ``w(A_s(M)) / |M|``
        witness_flow: Maximum flow with every sink capacity set to ``ratio``
        network: The network ``witness_flow`` lives on
    """
    members: FrozenSet[int]
    ratio: Fraction
    witness_flow: FlowState
    network: FlowNetwork


@dataclass(frozen=True)
class ExtractionRound:
    """One round of the load computation and the clients it consumed."""
    mns: MnsResult
    removed_clients: FrozenSet[int]


@dataclass(frozen=True)
class LoadComputation:
    """Loads together with the rounds that produced them."""
    graph: HostGraph
    placement: Placement
    loads: LoadVector
    rounds: Tuple[ExtractionRound, ...]

    def ratios(self) -> Tuple[Fraction, ...]:
        return tuple(r.mns.ratio for r in self.rounds)


def possible_utilities(total_weight: int, k: int, limit: Optional[int] = None) -> List[Fraction]:
    """
    All candidate loads ``x / y`` with ``0 <= x <= total_weight`` and ``1 <= y <= k``.

    Args:
        total_weight: Upper bound on the numerator
        k: Upper bound on the denominator
        limit: Maximum grid size (defaults to the configured utility grid limit)

    Returns:
        Sorted, deduplicated list of fractions, starting at 0

    Raises:
        UtilityGridTooLargeError: If ``(total_weight + 1) * k`` exceeds the limit
    """
    if total_weight < 0 or k < 1:
        raise ValueError(f"need total_weight >= 0 and k >= 1, got ({total_weight}, {k})")
    limit = config.solver.utility_grid_limit if limit is None else limit
    size = (total_weight + 1) * k
    if size > limit:
        raise UtilityGridTooLargeError(f"utility grid of size {size} exceeds limit {limit}")
    return sorted({Fraction(x, y) for x in range(total_weight + 1) for y in range(1, k + 1)})


class _FeasibilityProbe:
    """Evaluates whether every facility can be given a candidate load at once."""

    def __init__(self, net: FlowNetwork, facility_count: int, order: str):
        self.net = net
        self.facility_count = facility_count
        self.order = order
        self.calls = 0

    def flow_at(self, candidate: Fraction) -> FlowState:
        self.net.set_sink_capacities(candidate)
        self.calls += 1
        return max_flow(self.net, self.order)

    def __call__(self, candidate: Fraction) -> bool:
        # scale equals the candidate's denominator, so the target is numerator * |F|
        state = self.flow_at(candidate)
        return state.value == candidate.numerator * self.facility_count


def _largest_feasible_on_grid(grid: Sequence[Fraction], feasible: Callable[[Fraction], bool]) -> Fraction:
    lo, hi = 0, len(grid) - 1
    if not feasible(grid[lo]):
        raise InvariantViolationError("zero load is infeasible")
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if feasible(grid[mid]):
            lo = mid
        else:
            hi = mid - 1
    return grid[lo]


def _gallop(holds: Callable[[int], bool], t_max: Optional[int]) -> int:
    """Largest ``t`` in ``[1, t_max]`` with ``holds(t)``, given ``holds(1)`` and monotonicity."""
    good, step = 1, 1
    bad = None
    while True:
        probe = good + step
        if t_max is not None and probe > t_max:
            bad = t_max + 1
            break
        if holds(probe):
            good = probe
            step *= 2
        else:
            bad = probe
            break
    while bad - good > 1:
        mid = (good + bad) // 2
        if holds(mid):
            good = mid
        else:
            bad = mid
    return good


def _largest_feasible_stern_brocot(max_den: int, feasible: Callable[[Fraction], bool]) -> Fraction:
    """
    Largest feasible fraction with denominator at most ``max_den``.

    Keeps ``a/b`` feasible and ``c/d`` infeasible (starting at 0/1 and 1/0)
    and walks the Stern-Brocot tree between them, galloping along runs of
    equal turns.
    """
    a, b, c, d = 0, 1, 1, 0
    while b + d <= max_den:
        if feasible(Fraction(a + c, b + d)):
            t_max = None if d == 0 else (max_den - b) // d
            t = _gallop(lambda t: feasible(Fraction(a + t * c, b + t * d)), t_max)
            a, b = a + t * c, b + t * d
        else:
            t_max = (max_den - d) // b
            t = _gallop(lambda t: not feasible(Fraction(c + t * a, d + t * b)), t_max)
            c, d = c + t * a, d + t * b
    return Fraction(a, b)


def compute_mns(
    g: HostGraph,
    weights: Sequence[int],
    facilities: Iterable[int],
    s: Placement,
    order: str = ORDER_FORWARD,
    grid_limit: Optional[int] = None,
) -> MnsResult:
    """
    Find the maximal minimum neighborhood set among ``facilities``.

    The MNR is the largest candidate load every facility can receive
    simultaneously in the flow network. A facility belongs to the MNS iff
    lifting its own sink capacity to infinity admits no augmenting path.

    Args:
        g: Host graph
        weights: Current client weights (zeroed for clients of earlier rounds)
        facilities: Nonempty facility index set F
        s: Placement
        order: Augmenting path scan order
        grid_limit: Utility grid size limit (defaults to the configured value)

    Returns:
        MnsResult with members, ratio and the witness flow at the ratio
    """
    facilities = sorted(set(facilities))
    if not facilities:
        raise InvalidFacilityError("cannot compute an MNS of an empty facility set")
    net = build_network(g, s, facilities, weights)
    attracted_weight = sum(weights[v] for v in attraction_range(g, s, facilities))
    feasible = _FeasibilityProbe(net, len(facilities), order)

    try:
        grid = possible_utilities(attracted_weight, len(facilities), grid_limit)
        ratio = _largest_feasible_on_grid(grid, feasible)
    except UtilityGridTooLargeError:
        limit = config.solver.utility_grid_limit if grid_limit is None else grid_limit
        logger.info(MSG_GRID_FALLBACK.format(size=(attracted_weight + 1) * len(facilities), limit=limit))
        ratio = _largest_feasible_stern_brocot(len(facilities), feasible)

    witness = feasible.flow_at(ratio)
    if witness.value != ratio.numerator * len(facilities):
        raise InvariantViolationError(f"ratio {ratio} is not feasible")

    members = []
    for j in facilities:
        for other in facilities:
            net.set_sink_capacity(other, ratio)
        net.set_sink_capacity(j, INFINITY)
        if not has_augmenting_path(net, witness, order):
            members.append(j)
    for other in facilities:
        net.set_sink_capacity(other, ratio)

    if not members:
        raise InvariantViolationError(f"no facility attains the ratio {ratio}")
    member_weight = sum(weights[v] for v in attraction_range(g, s, members))
    if Fraction(member_weight, len(members)) != ratio:
        raise InvariantViolationError(
            f"MNS {members} has ratio {Fraction(member_weight, len(members))}, expected {ratio}"
        )
    logger.debug(f"MNS search used {feasible.calls} max-flow computations")
    return MnsResult(frozenset(members), ratio, witness, net)


def compute_equilibrium_loads(
    g: HostGraph,
    s: Placement,
    order: str = ORDER_FORWARD,
    grid_limit: Optional[int] = None,
) -> LoadComputation:
    """
    Compute the (unique) client-equilibrium loads of a placement.

    Args:
        g: Host graph
        s: Placement of k >= 0 facilities
        order: Augmenting path scan order used in every round
        grid_limit: Utility grid size limit

    Returns:
        LoadComputation with the load vector and the extraction rounds
    """
    s.validate(g)
    logger.debug(MSG_COMPUTING_LOADS.format(placement=tuple(s)))
    weights = list(g.weights)
    loads: List[Fraction] = [Fraction(0)] * s.k
    remaining = set(range(s.k))
    rounds: List[ExtractionRound] = []

    while remaining:
        mns = compute_mns(g, weights, remaining, s, order, grid_limit)
        if rounds and mns.ratio < rounds[-1].mns.ratio:
            raise InvariantViolationError(
                f"round ratios decreased: {rounds[-1].mns.ratio} -> {mns.ratio}"
            )
        removed = frozenset(v for v in attraction_range(g, s, mns.members) if weights[v] > 0)
        for j in mns.members:
            loads[j] = mns.ratio
        for v in removed:
            weights[v] = 0
        remaining -= mns.members
        rounds.append(ExtractionRound(mns, removed))
        logger.debug(MSG_MNS_ROUND.format(
            round=len(rounds), members=sorted(mns.members), ratio=format_rational(mns.ratio)
        ))

    return LoadComputation(g, s, LoadVector(tuple(loads)), tuple(rounds))


def equilibrium_loads(g: HostGraph, s: Placement, order: str = ORDER_FORWARD) -> LoadVector:
    """Shorthand for the load vector of ``compute_equilibrium_loads``."""
    return compute_equilibrium_loads(g, s, order).loads


def extract_client_equilibrium(computation: LoadComputation) -> WeightDistribution:
    """
    Read a client equilibrium off the witness flows.

    Each client sends the flow of the round that removed it, divided by
    the network scale. Those clients send all of their weight to the
    round's MNS.

    Args:
        computation: Result of ``compute_equilibrium_loads``

    Returns:
        A feasible distribution inducing ``computation.loads``
    """
    entries = {}
    for extraction in computation.rounds:
        net = extraction.mns.network
        flows = edge_flows(net, extraction.mns.witness_flow)
        for (v, j), amount in flows.items():
            if v in extraction.removed_clients:
                entries.setdefault(v, {})[j] = scaled_to_rational(net, amount)
        for v in extraction.removed_clients:
            sent = sum(entries.get(v, {}).values(), Fraction(0))
            if sent != computation.graph.weights[v]:
                raise InvariantViolationError(
                    f"client {v} sends {sent} of its weight {computation.graph.weights[v]}"
                )

    sigma = WeightDistribution(entries)
    if facility_loads(computation.graph, computation.placement, sigma) != computation.loads:
        raise InvariantViolationError("extracted distribution does not reproduce the loads")
    return sigma


def is_client_equilibrium(g: HostGraph, s: Placement, sigma: WeightDistribution) -> bool:
    """
    Check the client-equilibrium condition of a feasible distribution.

    Every facility a client patronizes must carry the minimum load among
    the facilities in that client's range.

    Raises:
        InfeasibleDistributionError: If ``sigma`` is not feasible for ``s``
    """
    loads = facility_loads(g, s, sigma)
    for v in range(g.n):
        patronized = sigma.patronized(v)
        if not patronized:
            continue
        lowest = min(loads[j] for j in facilities_in_range(g, s, v))
        if any(loads[j] > lowest for j in patronized):
            return False
    return True
