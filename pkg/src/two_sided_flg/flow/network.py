"""
Integer max-flow over the client -> facility network.

The network has a source feeding every client with positive weight, an
edge from each client to every facility whose attraction range contains
it, and an edge from each facility to the sink. Rational sink capacities
are handled by rescaling the whole network to integers; the current
factor is kept in ``FlowNetwork.scale``.

Flows are found with shortest augmenting paths (BFS). A ``FlowState`` is
kept apart from the network so a flow found for one set of capacities can
be reused after capacities are raised.
"""
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

from ..utils.constants import ORDER_FORWARD, ORDER_REVERSE
from ..utils.exceptions import InvalidFacilityError, InvariantViolationError
from ..utils.logger import logger

if TYPE_CHECKING:
    from ..core.model import HostGraph, Placement

SOURCE = 0
SINK = 1

# Sentinel for an unbounded facility -> sink edge.
INFINITY = float("inf")

Capacity = Union[Fraction, int, float]


@dataclass
class FlowState:
    """
    A flow on a network.

    Attributes:
        flows: Skew-symmetric per-edge flow (edge ``e ^ 1`` is the reverse of ``e``)
        value: Total flow leaving the source
        scale: Network scale the flow was computed under
    """
    flows: List[int]
    value: int
    scale: int

    def copy(self) -> "FlowState":
        return FlowState(list(self.flows), self.value, self.scale)


class FlowNetwork:
    """Bipartite flow network of one load-computation round."""

    def __init__(
        self,
        client_weights: Sequence[Tuple[int, int]],
        facilities: Sequence[int],
        attachments: Sequence[Tuple[int, int]],
    ):
        """
        Initialize the network with zero facility -> sink capacities.

        Args:
            client_weights: ``(vertex, weight)`` pairs, weights positive
            facilities: Facility indices
            attachments: ``(vertex, facility)`` range edges
        """
        self.clients: Tuple[int, ...] = tuple(v for v, _ in client_weights)
        self.facilities: Tuple[int, ...] = tuple(facilities)
        self.weights: Dict[int, int] = dict(client_weights)
        self.scale = 1

        self.client_node = {v: 2 + i for i, v in enumerate(self.clients)}
        self.facility_node = {j: 2 + len(self.clients) + i for i, j in enumerate(self.facilities)}
        self.node_count = 2 + len(self.clients) + len(self.facilities)

        self._head: List[int] = []
        self._cap: List[int] = []
        self._adj: List[List[int]] = [[] for _ in range(self.node_count)]

        self.source_edges: Dict[int, int] = {}
        self.range_edges: Dict[Tuple[int, int], int] = {}
        self.sink_edges: Dict[int, int] = {}

        for v in self.clients:
            self.source_edges[v] = self._add_edge(SOURCE, self.client_node[v], self.weights[v])
        for v, j in attachments:
            self.range_edges[(v, j)] = self._add_edge(
                self.client_node[v], self.facility_node[j], self.weights[v]
            )
        for j in self.facilities:
            self.sink_edges[j] = self._add_edge(self.facility_node[j], SINK, 0)

    def _add_edge(self, tail: int, head: int, capacity: int) -> int:
        edge = len(self._head)
        self._head.extend([head, tail])
        self._cap.extend([capacity, 0])
        self._adj[tail].append(edge)
        self._adj[head].append(edge + 1)
        return edge

    @property
    def edge_count(self) -> int:
        """Number of forward edges."""
        return len(self._head) // 2

    def capacity(self, edge: int) -> int:
        return self._cap[edge]

    def tail(self, edge: int) -> int:
        return self._head[edge ^ 1]

    def head(self, edge: int) -> int:
        return self._head[edge]

    def scaled_client_total(self) -> int:
        return sum(self.weights.values()) * self.scale

    def infinite_capacity(self) -> int:
        """A finite stand-in for infinity that no cut can reach."""
        return self.scaled_client_total() + 1

    def _rescale(self, factor: int) -> None:
        if factor == 1:
            return
        self._cap = [c * factor for c in self._cap]
        self.scale *= factor

    def set_sink_capacities(self, cap: Capacity) -> None:
        """
        Set every facility -> sink capacity to ``cap``.

        The network is rescaled so the scale equals the denominator of
        ``cap``; client-side capacities become ``scale * w(v)``. Any flow
        state computed under a different scale is invalidated.
        """
        cap = Fraction(cap)
        if cap < 0:
            raise ValueError(f"capacity must be nonnegative, got {cap}")
        self.scale = cap.denominator
        for v, edge in self.source_edges.items():
            self._cap[edge] = self.weights[v] * self.scale
        for (v, _), edge in self.range_edges.items():
            self._cap[edge] = self.weights[v] * self.scale
        scaled = cap.numerator
        for edge in self.sink_edges.values():
            self._cap[edge] = scaled

    def set_sink_capacity(self, j: int, cap: Capacity) -> None:
        """
        Set the capacity of one facility -> sink edge.

        ``INFINITY`` becomes the scaled client total plus one. A rational
        capacity whose scaled value is not integral rescales the network.
        """
        if j not in self.sink_edges:
            raise InvalidFacilityError(f"facility {j} is not part of the network")
        if cap == INFINITY:
            self._cap[self.sink_edges[j]] = self.infinite_capacity()
            return
        cap = Fraction(cap)
        if cap < 0:
            raise ValueError(f"capacity must be nonnegative, got {cap}")
        self._rescale((cap * self.scale).denominator)
        self._cap[self.sink_edges[j]] = int(cap * self.scale)

    def sink_capacity(self, j: int) -> int:
        return self._cap[self.sink_edges[j]]

    def zero_state(self) -> FlowState:
        return FlowState([0] * len(self._head), 0, self.scale)


def build_network(
    g: "HostGraph",
    s: "Placement",
    facilities: Iterable[int],
    weights: Optional[Sequence[int]] = None,
) -> FlowNetwork:
    """
    Build the flow network for a facility set.

    Args:
        g: Host graph
        s: Facility placement
        facilities: Nonempty set of facility indices
        weights: Current client weights (defaults to the graph weights)

    Returns:
        FlowNetwork with zero sink capacities
    """
    facilities = sorted(set(facilities))
    if not facilities:
        raise InvalidFacilityError("cannot build a flow network for an empty facility set")
    for j in facilities:
        s.check_facility(j)
    weights = g.weights if weights is None else tuple(weights)

    clients = [(v, weights[v]) for v in range(g.n) if weights[v] > 0]
    ranges = {j: g.in_neighbors(s[j]) | {s[j]} for j in facilities}
    attachments = [
        (v, j)
        for v, _ in clients
        for j in facilities
        if v in ranges[j]
    ]
    logger.debug(
        f"Flow network: {len(clients)} clients, {len(facilities)} facilities, "
        f"{len(attachments)} range edges"
    )
    return FlowNetwork(clients, facilities, attachments)


def _neighbors(net: FlowNetwork, node: int, order: str) -> List[int]:
    edges = net._adj[node]
    if order == ORDER_REVERSE:
        return edges[::-1]
    if order != ORDER_FORWARD:
        raise ValueError(f"unknown augmenting order '{order}'")
    return edges


def _find_path(net: FlowNetwork, state: FlowState, order: str) -> Optional[List[int]]:
    """BFS in the residual graph; returns the edge list of a shortest s-t path."""
    parent_edge = [-1] * net.node_count
    visited = [False] * net.node_count
    visited[SOURCE] = True
    queue = deque([SOURCE])
    while queue:
        node = queue.popleft()
        for edge in _neighbors(net, node, order):
            head = net._head[edge]
            if visited[head] or net._cap[edge] - state.flows[edge] <= 0:
                continue
            visited[head] = True
            parent_edge[head] = edge
            if head == SINK:
                path = []
                while head != SOURCE:
                    edge = parent_edge[head]
                    path.append(edge)
                    head = net._head[edge ^ 1]
                path.reverse()
                return path
            queue.append(head)
    return None


def check_state(net: FlowNetwork, state: FlowState) -> None:
    """
    Verify that ``state`` is a feasible flow for the current capacities.

    Raises:
        InvariantViolationError: On scale mismatch, capacity or conservation violations
    """
    if state.scale != net.scale or len(state.flows) != len(net._head):
        raise InvariantViolationError(
            f"flow state (scale {state.scale}) does not match network (scale {net.scale})"
        )
    balance = [0] * net.node_count
    for edge in range(0, len(net._head), 2):
        flow = state.flows[edge]
        if flow < 0 or flow > net._cap[edge] or state.flows[edge + 1] != -flow:
            raise InvariantViolationError(f"edge {edge} carries infeasible flow {flow}")
        balance[net.tail(edge)] -= flow
        balance[net.head(edge)] += flow
    for node in range(2, net.node_count):
        if balance[node] != 0:
            raise InvariantViolationError(f"flow conservation fails at node {node}")
    if -balance[SOURCE] != state.value:
        raise InvariantViolationError("flow value disagrees with source outflow")


def augment(net: FlowNetwork, state: FlowState, order: str = ORDER_FORWARD) -> FlowState:
    """
    Augment ``state`` in place until no augmenting path remains.

    The state must be feasible for the current capacities, which holds
    whenever capacities were only raised since it was computed.

    Returns:
        The same state object, now a maximum flow
    """
    check_state(net, state)
    while True:
        path = _find_path(net, state, order)
        if path is None:
            return state
        bottleneck = min(net._cap[e] - state.flows[e] for e in path)
        for edge in path:
            state.flows[edge] += bottleneck
            state.flows[edge ^ 1] -= bottleneck
        state.value += bottleneck


def max_flow(net: FlowNetwork, order: str = ORDER_FORWARD) -> FlowState:
    """
    Compute a maximum flow from scratch.

    Args:
        net: Flow network with integer capacities
        order: Neighbor scan order of the BFS (``forward`` or ``reverse``)

    Returns:
        A maximum FlowState; deterministic for a fixed order
    """
    return augment(net, net.zero_state(), order)


def has_augmenting_path(net: FlowNetwork, state: FlowState, order: str = ORDER_FORWARD) -> bool:
    """True iff the residual graph of ``state`` has an s-t path; ``state`` is untouched."""
    check_state(net, state)
    return _find_path(net, state, order) is not None


def edge_flows(net: FlowNetwork, state: FlowState) -> Dict[Tuple[int, int], int]:
    """Positive scaled flow on each client -> facility edge."""
    return {
        key: state.flows[edge]
        for key, edge in net.range_edges.items()
        if state.flows[edge] > 0
    }


def facility_inflows(net: FlowNetwork, state: FlowState) -> Dict[int, int]:
    """Total scaled flow entering each facility node."""
    inflow = {j: 0 for j in net.facilities}
    for (_, j), edge in net.range_edges.items():
        inflow[j] += state.flows[edge]
    return inflow


def sink_flows(net: FlowNetwork, state: FlowState) -> Dict[int, int]:
    """Scaled flow on each facility -> sink edge."""
    return {j: state.flows[edge] for j, edge in net.sink_edges.items()}


def saturated_clients(net: FlowNetwork, state: FlowState) -> FrozenSet[int]:
    """Clients whose source edge is used to capacity."""
    return frozenset(
        v for v, edge in net.source_edges.items()
        if state.flows[edge] == net._cap[edge]
    )


def network_to_dot(net: FlowNetwork, state: Optional[FlowState] = None) -> str:
    """
    Render the network as Graphviz DOT.

    Edge labels show ``capacity`` or ``flow/capacity``, in scaled units.
    """
    names = {SOURCE: "s", SINK: "t"}
    names.update({node: f"v{v}" for v, node in net.client_node.items()})
    names.update({node: f"f{j}" for j, node in net.facility_node.items()})

    lines = ["digraph flow {", "  rankdir=LR;", f'  label="scale {net.scale}";']
    for edge in range(0, len(net._head), 2):
        cap = net._cap[edge]
        label = str(cap) if state is None else f"{state.flows[edge]}/{cap}"
        lines.append(f'  {names[net.tail(edge)]} -> {names[net.head(edge)]} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def scaled_to_rational(net: FlowNetwork, amount: int) -> Fraction:
    """Convert a scaled integer amount back to the original units."""
    return Fraction(amount, net.scale)

