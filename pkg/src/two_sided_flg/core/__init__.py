"""Core game model, equilibrium computation and facility dynamics."""
from .model import (
    Rational,
    HostGraph,
    Placement,
    WeightDistribution,
    LoadVector,
    shopping_range,
    attraction_range,
    facilities_in_range,
    covered_clients,
    social_welfare,
    marginal_welfare,
    valid_utility_gap,
    is_feasible_distribution,
    facility_loads,
    client_cost,
)
from .equilibrium import (
    MnsResult,
    ExtractionRound,
    LoadComputation,
    possible_utilities,
    compute_mns,
    compute_equilibrium_loads,
    equilibrium_loads,
    extract_client_equilibrium,
    is_client_equilibrium,
)
from .oracle import eq_oracle_loads
from .dynamics import (
    Ordering,
    LoadCache,
    BestResponse,
    Deviation,
    SpeCheck,
    Move,
    DynamicsTrace,
    potential_vector,
    lex_compare,
    best_response,
    is_spe,
    random_placement,
    find_spe,
)
from .optimum import OptimumResult, optimal_placement_exact, optimal_placement_greedy
from .analysis import PoaReport, enumerate_spe, welfare_ratio, empirical_poa

__all__ = [
    "Rational",
    "HostGraph",
    "Placement",
    "WeightDistribution",
    "LoadVector",
    "shopping_range",
    "attraction_range",
    "facilities_in_range",
    "covered_clients",
    "social_welfare",
    "marginal_welfare",
    "valid_utility_gap",
    "is_feasible_distribution",
    "facility_loads",
    "client_cost",
    "MnsResult",
    "ExtractionRound",
    "LoadComputation",
    "possible_utilities",
    "compute_mns",
    "compute_equilibrium_loads",
    "equilibrium_loads",
    "extract_client_equilibrium",
    "is_client_equilibrium",
    "eq_oracle_loads",
    "Ordering",
    "LoadCache",
    "BestResponse",
    "Deviation",
    "SpeCheck",
    "Move",
    "DynamicsTrace",
    "potential_vector",
    "lex_compare",
    "best_response",
    "is_spe",
    "random_placement",
    "find_spe",
    "OptimumResult",
    "optimal_placement_exact",
    "optimal_placement_greedy",
    "PoaReport",
    "enumerate_spe",
    "welfare_ratio",
    "empirical_poa",
]
