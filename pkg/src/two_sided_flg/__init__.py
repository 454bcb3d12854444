"""
Two-Sided Facility Location Games

Exact client-equilibrium loads, facility best responses and improving
dynamics, social optimum search and instance generators.
"""
from .core import (
    HostGraph,
    Placement,
    WeightDistribution,
    LoadVector,
    social_welfare,
    compute_equilibrium_loads,
    extract_client_equilibrium,
    is_client_equilibrium,
    eq_oracle_loads,
    best_response,
    is_spe,
    find_spe,
    optimal_placement_exact,
    optimal_placement_greedy,
    enumerate_spe,
    empirical_poa,
)
from .formats import read_document, write_document
from .utils.formatter import OutputFormatter
from .utils.logger import logger
from .utils.config import config
from .utils.exceptions import (
    FLGError,
    InstanceFormatError,
    BudgetExceededError,
    InvariantViolationError,
)

__version__ = "1.0.0"

__all__ = [
    "HostGraph",
    "Placement",
    "WeightDistribution",
    "LoadVector",
    "social_welfare",
    "compute_equilibrium_loads",
    "extract_client_equilibrium",
    "is_client_equilibrium",
    "eq_oracle_loads",
    "best_response",
    "is_spe",
    "find_spe",
    "optimal_placement_exact",
    "optimal_placement_greedy",
    "enumerate_spe",
    "empirical_poa",
    "read_document",
    "write_document",
    "OutputFormatter",
    "logger",
    "config",
    "FLGError",
    "InstanceFormatError",
    "BudgetExceededError",
    "InvariantViolationError",
]
