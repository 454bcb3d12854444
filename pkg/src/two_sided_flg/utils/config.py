"""
Configuration management for the facility location toolkit.

This module centralizes all solver budgets and runtime settings and
provides a clean interface for accessing them.
"""
import logging
import os
from dataclasses import dataclass
from typing import Optional, Tuple

from dotenv import load_dotenv

# Load environment variables
load_dotenv()


@dataclass(frozen=True)
class SolverConfig:
    """Load computation settings."""
    utility_grid_limit: int = 5_000_000
    workers: int = 1


@dataclass(frozen=True)
class DynamicsConfig:
    """Facility-side dynamics and search budgets."""
    move_cap: int = 100_000
    enumeration_budget: int = 200_000
    seeds: Tuple[int, ...] = (0, 1, 2, 3, 4)


@dataclass(frozen=True)
class OracleConfig:
    """Numeric equilibrium oracle settings."""
    tolerance: float = 1e-12
    max_iters: int = 200_000


@dataclass(frozen=True)
class LogConfig:
    """Logging settings."""
    level: str = "WARNING"
    log_file: Optional[str] = None


def _parse_seeds(raw: str) -> Tuple[int, ...]:
    return tuple(int(part) for part in raw.split(",") if part.strip())


class Config:
    """Main configuration class."""

    def __init__(self):
        """Initialize configuration from environment variables."""
        self.solver = SolverConfig(
            utility_grid_limit=int(os.getenv("FLG_UTILITY_GRID_LIMIT", "5000000")),
            workers=int(os.getenv("FLG_WORKERS", "1")),
        )

        self.dynamics = DynamicsConfig(
            move_cap=int(os.getenv("FLG_MOVE_CAP", "100000")),
            enumeration_budget=int(os.getenv("FLG_ENUMERATION_BUDGET", "200000")),
            seeds=_parse_seeds(os.getenv("FLG_SEEDS", "0,1,2,3,4")),
        )

        self.oracle = OracleConfig(
            tolerance=float(os.getenv("FLG_ORACLE_TOLERANCE", "1e-12")),
            max_iters=int(os.getenv("FLG_ORACLE_MAX_ITERS", "200000")),
        )

        self.log = LogConfig(
            level=os.getenv("FLG_LOG_LEVEL", "WARNING").upper(),
            log_file=os.getenv("FLG_LOG_FILE") or None,
        )

    def validate(self) -> bool:
        """
        Validate configuration settings.

        Returns:
            bool: True if configuration is valid, False otherwise.
        """
        if self.solver.utility_grid_limit <= 0 or self.solver.workers <= 0:
            return False

        if self.dynamics.move_cap <= 0 or self.dynamics.enumeration_budget <= 0:
            return False

        if not self.dynamics.seeds:
            return False

        if self.oracle.tolerance < 0 or self.oracle.max_iters <= 0:
            return False

        if not isinstance(logging.getLevelName(self.log.level), int):
            return False

        return True


# Global configuration instance
config = Config()
