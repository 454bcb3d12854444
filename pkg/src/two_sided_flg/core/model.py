"""
Core domain model for two-sided facility location games.

Host graphs, facility placements, client weight distributions and load
vectors, together with the coverage, feasibility and welfare computations
every other module builds on. All types are immutable; all functions are
pure.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, FrozenSet, Iterable, Iterator, Mapping, Optional, Tuple

from ..utils.exceptions import (
    DuplicateEdgeError,
    InfeasibleDistributionError,
    InvalidFacilityError,
    InvalidVertexError,
    NegativeWeightError,
    SelfLoopError,
    VertexRangeError,
)

Rational = Fraction
VertexId = int
Edge = Tuple[VertexId, VertexId]


@dataclass(frozen=True)
class HostGraph:
    """
    Directed vertex-weighted host graph.

    An edge ``(u, z)`` means ``z`` lies in the shopping range of ``u`` and,
    equivalently, that a facility on ``z`` attracts ``u``. Every vertex is
    implicitly in its own range, so self-loops are never stored.

    Attributes:
        weights: Spending capacity ``w(v)`` per vertex
        edges: Set of ordered pairs ``(u, z)``
    """
    weights: Tuple[int, ...]
    edges: FrozenSet[Edge]
    _out: Tuple[FrozenSet[VertexId], ...] = field(init=False, repr=False, compare=False)
    _in: Tuple[FrozenSet[VertexId], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        object.__setattr__(self, "edges", frozenset(self.edges))
        n = len(self.weights)

        for v, weight in enumerate(self.weights):
            if weight < 0:
                raise NegativeWeightError(f"vertex {v} has negative weight {weight}")

        out_sets = [set() for _ in range(n)]
        in_sets = [set() for _ in range(n)]
        for u, z in self.edges:
            if not (0 <= u < n and 0 <= z < n):
                raise VertexRangeError(f"edge ({u}, {z}) leaves vertex range [0, {n})")
            if u == z:
                raise SelfLoopError(f"self-loop on vertex {u}")
            out_sets[u].add(z)
            in_sets[z].add(u)

        object.__setattr__(self, "_out", tuple(frozenset(s) for s in out_sets))
        object.__setattr__(self, "_in", tuple(frozenset(s) for s in in_sets))

    @classmethod
    def from_edges(cls, weights: Iterable[int], edges: Iterable[Edge]) -> "HostGraph":
        """
        Build a host graph from an edge list, rejecting duplicate edges.

        Args:
            weights: Vertex weights in id order
            edges: Ordered pairs ``(u, z)``

        Returns:
            The validated host graph
        """
        seen = set()
        for edge in edges:
            edge = (int(edge[0]), int(edge[1]))
            if edge in seen:
                raise DuplicateEdgeError(f"duplicate edge {edge}")
            seen.add(edge)
        return cls(tuple(weights), frozenset(seen))

    @property
    def n(self) -> int:
        """Number of vertices."""
        return len(self.weights)

    @property
    def m(self) -> int:
        """Number of stored edges."""
        return len(self.edges)

    def check_vertex(self, v: VertexId) -> None:
        """Raise InvalidVertexError unless ``v`` is a vertex of the graph."""
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise InvalidVertexError(f"vertex {v} not in [0, {self.n})")

    def out_neighbors(self, v: VertexId) -> FrozenSet[VertexId]:
        self.check_vertex(v)
        return self._out[v]

    def in_neighbors(self, v: VertexId) -> FrozenSet[VertexId]:
        self.check_vertex(v)
        return self._in[v]

    def total_weight(self, vertices: Optional[Iterable[VertexId]] = None) -> int:
        """Total weight ``w(X)`` of a vertex set, or of the whole graph."""
        if vertices is None:
            return sum(self.weights)
        return sum(self.weights[v] for v in vertices)


@dataclass(frozen=True)
class Placement:
    """Facility placement profile: one location per facility agent."""
    locations: Tuple[VertexId, ...]

    def __post_init__(self):
        object.__setattr__(self, "locations", tuple(int(v) for v in self.locations))

    @property
    def k(self) -> int:
        return len(self.locations)

    def __len__(self) -> int:
        return len(self.locations)

    def __iter__(self) -> Iterator[VertexId]:
        return iter(self.locations)

    def __getitem__(self, j: int) -> VertexId:
        return self.locations[j]

    def check_facility(self, j: int) -> None:
        """Raise InvalidFacilityError unless ``j`` indexes a facility."""
        if not isinstance(j, int) or not 0 <= j < self.k:
            raise InvalidFacilityError(f"facility {j} not in [0, {self.k})")

    def validate(self, g: HostGraph) -> None:
        """Check that every location is a vertex of ``g``."""
        for v in self.locations:
            g.check_vertex(v)

    def relocate(self, j: int, v: VertexId) -> "Placement":
        """Return the placement with facility ``j`` moved to ``v``."""
        self.check_facility(j)
        locations = list(self.locations)
        locations[j] = v
        return Placement(tuple(locations))

    def without(self, j: int) -> "Placement":
        """Return the placement with facility ``j`` removed."""
        self.check_facility(j)
        return Placement(self.locations[:j] + self.locations[j + 1:])

    def multiset(self) -> Tuple[VertexId, ...]:
        """Occupied locations as a sorted tuple."""
        return tuple(sorted(self.locations))


@dataclass(frozen=True)
class WeightDistribution:
    """
    Client weight distribution: sparse client -> facility -> weight mapping.

    Clients without entries distribute nothing. Zero entries are dropped
    on construction so the support of a row is exactly its patronized set.
    """
    entries: Mapping[VertexId, Mapping[int, Fraction]]

    def __post_init__(self):
        frozen: Dict[VertexId, Mapping[int, Fraction]] = {}
        for client in sorted(self.entries):
            row = {
                int(j): Fraction(amount)
                for j, amount in sorted(self.entries[client].items())
                if Fraction(amount) != 0
            }
            if row:
                frozen[int(client)] = MappingProxyType(row)
        object.__setattr__(self, "entries", MappingProxyType(frozen))

    def row(self, client: VertexId) -> Mapping[int, Fraction]:
        return self.entries.get(client, MappingProxyType({}))

    def clients(self) -> Tuple[VertexId, ...]:
        return tuple(self.entries)

    def patronized(self, client: VertexId) -> FrozenSet[int]:
        """Facilities receiving positive weight from ``client``."""
        return frozenset(j for j, amount in self.row(client).items() if amount > 0)

    def items(self) -> Iterator[Tuple[VertexId, int, Fraction]]:
        for client, row in self.entries.items():
            for j, amount in row.items():
                yield client, j, amount


@dataclass(frozen=True)
class LoadVector:
    """Exact facility loads, one per facility index."""
    loads: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "loads", tuple(Fraction(x) for x in self.loads))

    def __len__(self) -> int:
        return len(self.loads)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.loads)

    def __getitem__(self, j: int) -> Fraction:
        return self.loads[j]

    def total(self) -> Fraction:
        return sum(self.loads, Fraction(0))

    def as_floats(self) -> Tuple[float, ...]:
        return tuple(float(x) for x in self.loads)


def shopping_range(g: HostGraph, v: VertexId) -> FrozenSet[VertexId]:
    """Closed out-neighborhood ``N(v)``: the locations client ``v`` may patronize."""
    return g.out_neighbors(v) | {v}


def attraction_range(g: HostGraph, s: Placement, facilities: Iterable[int]) -> FrozenSet[VertexId]:
    """
    Clients a set of facilities can draw.

    Args:
        g: Host graph
        s: Facility placement
        facilities: Facility indices

    Returns:
        Union of ``{s_j}`` and the in-neighbors of ``s_j`` over the facilities
    """
    attracted = set()
    for j in facilities:
        s.check_facility(j)
        location = s[j]
        attracted.add(location)
        attracted |= g.in_neighbors(location)
    return frozenset(attracted)


def facilities_in_range(g: HostGraph, s: Placement, v: VertexId) -> FrozenSet[int]:
    """Facilities ``N_s(v)`` located inside the shopping range of client ``v``."""
    reachable = shopping_range(g, v)
    return frozenset(j for j, location in enumerate(s) if location in reachable)


def covered_clients(g: HostGraph, s: Placement) -> FrozenSet[VertexId]:
    """Clients with at least one facility in their shopping range."""
    s.validate(g)
    occupied = set(s)
    return frozenset(
        v for v in range(g.n)
        if v in occupied or not occupied.isdisjoint(g.out_neighbors(v))
    )


def social_welfare(g: HostGraph, s: Placement) -> int:
    """Weighted participation rate ``W(s)``: total weight of covered clients."""
    return g.total_weight(covered_clients(g, s))


def marginal_welfare(g: HostGraph, s: Placement, j: int) -> int:
    """Welfare lost when facility ``j`` is removed from the placement."""
    return social_welfare(g, s) - social_welfare(g, s.without(j))


def valid_utility_gap(g: HostGraph, s: Placement, loads: LoadVector) -> Fraction:
    """``W(s)`` minus the sum of loads; zero for loads of any feasible distribution."""
    return Fraction(social_welfare(g, s)) - loads.total()


def infeasibility_reason(g: HostGraph, s: Placement, sigma: WeightDistribution) -> Optional[str]:
    """
    Explain why a distribution is infeasible.

    Returns:
        A human-readable reason, or None if ``sigma`` is feasible for ``s``
    """
    s.validate(g)
    for client in sigma.clients():
        if not 0 <= client < g.n:
            return f"client {client} is not a vertex"
        for j, amount in sigma.row(client).items():
            if not 0 <= j < s.k:
                return f"client {client} assigns weight to unknown facility {j}"
            if amount < 0:
                return f"client {client} assigns negative weight to facility {j}"

    for v in range(g.n):
        in_range = facilities_in_range(g, s, v)
        row = sigma.row(v)
        if not in_range:
            if row:
                return f"uncovered client {v} distributes weight"
            continue
        outside = set(row) - in_range
        if outside:
            return f"client {v} assigns weight outside its range to {sorted(outside)}"
        distributed = sum(row.values(), Fraction(0))
        if distributed != g.weights[v]:
            return f"client {v} distributes {distributed} instead of {g.weights[v]}"
    return None


def is_feasible_distribution(g: HostGraph, s: Placement, sigma: WeightDistribution) -> bool:
    """True iff ``sigma`` is feasible for placement ``s``."""
    return infeasibility_reason(g, s, sigma) is None


def require_feasible(g: HostGraph, s: Placement, sigma: WeightDistribution) -> None:
    """Raise InfeasibleDistributionError if ``sigma`` is infeasible for ``s``."""
    reason = infeasibility_reason(g, s, sigma)
    if reason is not None:
        raise InfeasibleDistributionError(reason)


def facility_loads(g: HostGraph, s: Placement, sigma: WeightDistribution) -> LoadVector:
    """Exact column sums of a feasible distribution."""
    require_feasible(g, s, sigma)
    loads = [Fraction(0)] * s.k
    for _, j, amount in sigma.items():
        loads[j] += amount
    return LoadVector(tuple(loads))


def client_cost(
    g: HostGraph,
    s: Placement,
    sigma: WeightDistribution,
    v: VertexId
) -> Optional[Fraction]:
    """
    Maximum load over the facilities client ``v`` patronizes.

    Returns:
        The incurred maximum load, or None if ``v`` patronizes nothing
    """
    g.check_vertex(v)
    loads = facility_loads(g, s, sigma)
    patronized = sigma.patronized(v)
    if not patronized:
        return None
    return max(loads[j] for j in patronized)
