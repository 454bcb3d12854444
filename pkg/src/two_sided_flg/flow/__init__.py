"""Max-flow network of the load computation."""
from .network import (
    INFINITY,
    FlowNetwork,
    FlowState,
    build_network,
    max_flow,
    augment,
    has_augmenting_path,
    check_state,
    edge_flows,
    facility_inflows,
    sink_flows,
    saturated_clients,
    network_to_dot,
    scaled_to_rational,
)

__all__ = [
    "INFINITY",
    "FlowNetwork",
    "FlowState",
    "build_network",
    "max_flow",
    "augment",
    "has_augmenting_path",
    "check_state",
    "edge_flows",
    "facility_inflows",
    "sink_flows",
    "saturated_clients",
    "network_to_dot",
    "scaled_to_rational",
]
