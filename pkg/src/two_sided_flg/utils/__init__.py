"""Utility modules for the facility location toolkit."""
from .logger import logger, setup_logger, set_level
from .config import config, Config
from .constants import *
from .exceptions import (
    FLGError,
    ConfigurationError,
    InstanceFormatError,
    MalformedHeaderError,
    VertexRangeError,
    NegativeWeightError,
    SelfLoopError,
    DuplicateEdgeError,
    CnfFormatError,
    InvalidVertexError,
    InvalidFacilityError,
    InfeasibleDistributionError,
    BudgetExceededError,
    EnumerationBudgetError,
    UtilityGridTooLargeError,
    InvariantViolationError,
    MoveCapExceededError,
    ConvergenceError,
)
from .formatter import OutputFormatter, format_rational

__all__ = [
    "logger",
    "setup_logger",
    "set_level",
    "config",
    "Config",
    "FLGError",
    "ConfigurationError",
    "InstanceFormatError",
    "MalformedHeaderError",
    "VertexRangeError",
    "NegativeWeightError",
    "SelfLoopError",
    "DuplicateEdgeError",
    "CnfFormatError",
    "InvalidVertexError",
    "InvalidFacilityError",
    "InfeasibleDistributionError",
    "BudgetExceededError",
    "EnumerationBudgetError",
    "UtilityGridTooLargeError",
    "InvariantViolationError",
    "MoveCapExceededError",
    "ConvergenceError",
    "OutputFormatter",
    "format_rational",
]
