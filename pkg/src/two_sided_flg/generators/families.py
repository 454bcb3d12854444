"""
Instance families.

The PoA/PoS lower-bound stars, the 3SAT reduction and its assignment
codec, the valid-but-not-basic utility system counterexample and seeded
random instances.
"""
import random
from typing import Dict, List, Mapping, Optional, Tuple

from ..core.model import HostGraph, Placement, covered_clients
from ..utils.exceptions import ConfigurationError
from ..utils.logger import logger
from .cnf import CnfFormula, evaluate


def lower_bound_ids(k: int, x: int) -> Dict[str, int]:
    """Named vertex ids of the lower-bound instance: small-star centers, their first leaves and ``v_k``."""
    ids = {"v_k": (2 * k - 1) * x}
    for i in range(1, k):
        ids[f"v_{i}"] = (i - 1) * x
        ids[f"v_{i},1"] = (i - 1) * x + 1
    return ids


def gen_lower_bound(k: int, x: int) -> Tuple[HostGraph, int]:
    """
    Lower-bound instance with PoA = PoS = ((2k-1)x + 1) / (kx + 1).

    Layout: ``k - 1`` small stars (center ``(i-1)x``, leaves after it), the
    ``kx`` leaves of the big star, then the big-star center ``v_k``. Leaves
    point at their center, and the first leaf of small star ``i`` also
    points at big-star leaf ``i``.

    Args:
        k: Number of facilities, at least 2
        x: Star size parameter, at least 4

    Returns:
        (graph, k) with ``(2k-1)x + 1`` unit-weight vertices
    """
    if k < 2 or x < 4:
        raise ConfigurationError(f"lower-bound family needs k >= 2 and x >= 4, got k={k}, x={x}")
    n = (2 * k - 1) * x + 1
    center_big = (2 * k - 1) * x
    edges = []
    for i in range(1, k):
        center = (i - 1) * x
        edges.extend((center + leaf, center) for leaf in range(1, x))
        edges.append((center + 1, (k - 1) * x + i - 1))
    for i in range(1, k * x + 1):
        edges.append(((k - 1) * x + i - 1, center_big))
    logger.debug(f"Lower-bound instance k={k}, x={x}: {n} vertices, {len(edges)} edges")
    return HostGraph.from_edges([1] * n, edges), k


def literal_vertex(formula: CnfFormula, literal: int) -> int:
    """Vertex of a literal: ``2(i-1)`` for ``x_i`` and ``2(i-1) + 1`` for its negation."""
    variable = abs(literal)
    return 2 * (variable - 1) + (0 if literal > 0 else 1)


def clause_vertex(formula: CnfFormula, c: int) -> int:
    return 2 * formula.num_vars + c


def gen_3sat(formula: CnfFormula) -> Tuple[HostGraph, int]:
    """
    Host graph of the 3SAT reduction.

    Complementary literal vertices point at each other and every clause
    vertex points at its three literals, so a facility on a literal covers
    its complement and every clause containing it.

    Returns:
        (graph, number of variables)
    """
    n = 2 * formula.num_vars + len(formula.clauses)
    edges = []
    for variable in range(1, formula.num_vars + 1):
        positive, negative = literal_vertex(formula, variable), literal_vertex(formula, -variable)
        edges.extend([(positive, negative), (negative, positive)])
    for c, clause in enumerate(formula.clauses):
        edges.extend((clause_vertex(formula, c), literal_vertex(formula, literal)) for literal in clause)
    return HostGraph.from_edges([1] * n, edges), formula.num_vars


def encode_assignment(formula: CnfFormula, assignment: Mapping[int, bool]) -> Placement:
    """Placement with one facility per variable, on its true literal."""
    return Placement(tuple(
        literal_vertex(formula, variable if assignment[variable] else -variable)
        for variable in range(1, formula.num_vars + 1)
    ))


def decode_assignment(g: HostGraph, formula: CnfFormula, s: Placement) -> Optional[Dict[int, bool]]:
    """
    Read a satisfying assignment off a full-coverage placement.

    ``x_i`` is true if its positive literal vertex is occupied and false
    if only its negation is.

    Returns:
        The assignment, or None if ``s`` does not cover every client
    """
    if len(covered_clients(g, s)) != g.n:
        return None
    occupied = set(s)
    assignment = {}
    for variable in range(1, formula.num_vars + 1):
        if literal_vertex(formula, variable) in occupied:
            assignment[variable] = True
        elif literal_vertex(formula, -variable) in occupied:
            assignment[variable] = False
        else:
            return None
    return assignment if evaluate(formula, assignment) else None


def gen_basic_us_counterexample() -> Tuple[HostGraph, int, Placement]:
    """Two mutually adjacent unit clients with one facility on each."""
    g = HostGraph.from_edges([1, 1], [(0, 1), (1, 0)])
    return g, 2, Placement((0, 1))


def gen_random(
    n: int,
    edge_density: float,
    max_weight: int,
    k: int,
    seed: int = 0,
) -> Tuple[HostGraph, int]:
    """
    Seeded random instance.

    Every ordered pair of distinct vertices is an edge with probability
    ``edge_density``; weights are uniform in ``[1, max_weight]``.
    """
    if n < 0 or k < 0:
        raise ConfigurationError(f"n and k must be nonnegative, got n={n}, k={k}")
    if not 0 <= edge_density <= 1:
        raise ConfigurationError(f"edge density must lie in [0, 1], got {edge_density}")
    if max_weight < 1:
        raise ConfigurationError(f"max weight must be at least 1, got {max_weight}")
    rng = random.Random(seed)
    weights = [rng.randint(1, max_weight) for _ in range(n)]
    edges: List[Tuple[int, int]] = [
        (u, z)
        for u in range(n)
        for z in range(n)
        if u != z and rng.random() < edge_density
    ]
    return HostGraph.from_edges(weights, edges), k
