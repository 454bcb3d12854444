"""
Numeric equilibrium oracle.

Minimizes the sum of squared facility loads over all feasible weight
distributions in floating point. Its minimizers are exactly the client
equilibria, so the loads it returns give an independent check of the
exact flow-based computation.
"""
from typing import List, Optional

import numpy as np

from ..utils.config import config
from ..utils.constants import ORACLE_BLOCK, ORACLE_FRANK_WOLFE
from ..utils.exceptions import ConvergenceError
from ..utils.logger import logger
from .model import HostGraph, Placement, facilities_in_range


class _Problem:
    """Clients with positive weight and a nonempty range, as dense arrays."""

    def __init__(self, g: HostGraph, s: Placement):
        s.validate(g)
        self.k = s.k
        self.ranges: List[np.ndarray] = []
        weights = []
        for v in range(g.n):
            in_range = sorted(facilities_in_range(g, s, v))
            if g.weights[v] > 0 and in_range:
                self.ranges.append(np.array(in_range, dtype=np.int64))
                weights.append(float(g.weights[v]))
        self.weights = np.array(weights, dtype=np.float64)
        self.mask = np.zeros((len(self.ranges), self.k), dtype=bool)
        for i, idx in enumerate(self.ranges):
            self.mask[i, idx] = True
        self.total = float(self.weights.sum()) if len(weights) else 0.0

    def uniform_start(self) -> np.ndarray:
        x = np.zeros((len(self.ranges), self.k), dtype=np.float64)
        for i, idx in enumerate(self.ranges):
            x[i, idx] = self.weights[i] / len(idx)
        return x

    def gap(self, x: np.ndarray, loads: np.ndarray) -> float:
        """Frank-Wolfe duality gap (halved gradient)."""
        if not len(self.ranges):
            return 0.0
        masked = np.where(self.mask, loads[None, :], np.inf)
        lowest = masked.min(axis=1)
        return float((x * (loads[None, :] - lowest[:, None])).sum())


def _water_fill(base: np.ndarray, weight: float) -> np.ndarray:
    """
    Minimize ``sum((base + x) ** 2)`` over ``x >= 0`` with ``sum(x) = weight``.

    The solution fills the lowest bases up to a common level.
    """
    order = np.argsort(base, kind="stable")
    sorted_base = base[order]
    levels = (weight + np.cumsum(sorted_base)) / np.arange(1, len(base) + 1)
    active = np.nonzero(levels > sorted_base)[0]
    level = levels[active[-1]] if len(active) else levels[0]
    return np.maximum(level - base, 0.0)


def _block_sweep(problem: _Problem, x: np.ndarray, loads: np.ndarray) -> None:
    for i, idx in enumerate(problem.ranges):
        base = loads[idx] - x[i, idx]
        share = _water_fill(base, problem.weights[i])
        loads[idx] = base + share
        x[i, idx] = share


def _frank_wolfe_step(problem: _Problem, x: np.ndarray, loads: np.ndarray, t: int) -> np.ndarray:
    masked = np.where(problem.mask, loads[None, :], np.inf)
    target = np.zeros_like(x)
    target[np.arange(len(problem.ranges)), masked.argmin(axis=1)] = problem.weights
    step = 2.0 / (t + 2.0)
    return x + step * (target - x)


def eq_oracle_loads(
    g: HostGraph,
    s: Placement,
    tolerance: Optional[float] = None,
    max_iters: Optional[int] = None,
    method: str = ORACLE_BLOCK,
) -> np.ndarray:
    """
    Approximate client-equilibrium loads by convex minimization.

    Args:
        g: Host graph
        s: Placement
        tolerance: Stop once the duality gap is at most this value
        max_iters: Maximum number of sweeps (block) or steps (Frank-Wolfe)
        method: ``"block"`` for exact per-client block minimization,
            ``"frank-wolfe"`` for conditional gradient with steps 2/(t+2)

    Returns:
        Float load vector of length k

    Raises:
        ConvergenceError: If the gap is still above tolerance after ``max_iters``
    """
    tolerance = config.oracle.tolerance if tolerance is None else tolerance
    max_iters = config.oracle.max_iters if max_iters is None else max_iters
    if tolerance <= 0:
        raise ValueError(f"tolerance must be positive, got {tolerance}")
    if method not in (ORACLE_BLOCK, ORACLE_FRANK_WOLFE):
        raise ValueError(f"unknown oracle method '{method}'")

    problem = _Problem(g, s)
    x = problem.uniform_start()
    loads = x.sum(axis=0) if len(problem.ranges) else np.zeros(s.k)
    stall = 1e-15 * (1.0 + problem.total)

    for t in range(max_iters):
        gap = problem.gap(x, loads)
        if gap <= tolerance:
            logger.debug(f"Oracle ({method}) converged after {t} iterations, gap {gap:.3e}")
            return loads
        previous = loads
        if method == ORACLE_BLOCK:
            loads = loads.copy()
            _block_sweep(problem, x, loads)
        else:
            x = _frank_wolfe_step(problem, x, loads, t)
        loads = x.sum(axis=0)
        if method == ORACLE_BLOCK and np.max(np.abs(loads - previous)) <= stall:
            logger.debug(f"Oracle ({method}) reached a fixed point after {t + 1} sweeps")
            return loads

    raise ConvergenceError(
        f"oracle ({method}) did not reach tolerance {tolerance} within {max_iters} iterations"
    )
