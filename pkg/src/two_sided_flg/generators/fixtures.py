"""
Small reference instances with hand-checked loads.
"""
from typing import Tuple

from ..core.model import HostGraph, Placement
from .cnf import CnfFormula


def ten_client_instance() -> Tuple[HostGraph, int, Placement]:
    """
    Ten unit clients and four facilities with loads (2, 5/2, 5/2, 3).

    Facility 0 sits alone on vertex 0, facilities 1 and 2 share the
    attraction of vertices 1-4, facility 3 on vertex 5 attracts vertices
    4, 5, 8 and 9.
    """
    edges = [(1, 0), (4, 5), (8, 5), (9, 5)]
    edges += [(u, 6) for u in (1, 2, 3, 4)]
    edges += [(u, 7) for u in (1, 2, 3, 4)]
    return HostGraph.from_edges([1] * 10, edges), 4, Placement((0, 6, 7, 5))


def three_client_instance() -> Tuple[HostGraph, int, Placement]:
    """Three unit clients and two facilities with loads (2, 1)."""
    g = HostGraph.from_edges([1, 1, 1], [(0, 1), (1, 0), (2, 1)])
    return g, 2, Placement((0, 2))


def two_clause_formula() -> CnfFormula:
    """(x or not y or z) and (not x or y or z)."""
    return CnfFormula(3, ((1, -2, 3), (-1, 2, 3)))
