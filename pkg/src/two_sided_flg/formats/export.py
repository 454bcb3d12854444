"""
Exports: Graphviz DOT for host graphs and CSV / log text for dynamics traces.
"""
import csv
import io
from typing import Dict, List, Optional

from ..core.dynamics import DynamicsTrace
from ..core.model import HostGraph, LoadVector, Placement
from ..utils.constants import TRACE_CSV_COLUMNS
from ..utils.formatter import OutputFormatter, format_rational


def instance_to_dot(
    g: HostGraph,
    s: Optional[Placement] = None,
    loads: Optional[LoadVector] = None,
) -> str:
    """
    Render a host graph as Graphviz DOT.

    Vertices are labelled ``id (weight)``. Occupied vertices are drawn as
    boxes listing their facilities and, when given, the facility loads.
    Edges point from a client to a location in its shopping range.
    """
    occupants: Dict[int, List[int]] = {}
    if s is not None:
        s.validate(g)
        for j, location in enumerate(s):
            occupants.setdefault(location, []).append(j)

    lines = ["digraph host {"]
    for v, weight in enumerate(g.weights):
        label = f"{v} ({weight})"
        attributes = ""
        if v in occupants:
            marks = []
            for j in occupants[v]:
                if loads is None:
                    marks.append(f"f{j}")
                else:
                    marks.append(f"f{j}={format_rational(loads[j])}")
            label += "\\n" + " ".join(marks)
            attributes = ", shape=box, style=bold"
        lines.append(f'  {v} [label="{label}"{attributes}];')
    for u, z in sorted(g.edges):
        lines.append(f"  {u} -> {z};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def trace_to_csv(trace: DynamicsTrace) -> str:
    """One CSV row per move; potentials are ``;``-joined fractions."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(TRACE_CSV_COLUMNS)
    for move in trace.moves:
        writer.writerow([
            move.index,
            move.mover,
            move.old_location,
            move.new_location,
            format_rational(move.old_load),
            format_rational(move.new_load),
            OutputFormatter.format_potential(move.potential_before),
            OutputFormatter.format_potential(move.potential_after),
        ])
    return buffer.getvalue()


def trace_to_log(trace: DynamicsTrace) -> str:
    lines = [
        f"move {move.index}: f{move.mover} {move.old_location} -> {move.new_location} "
        f"load {format_rational(move.old_load)} -> {format_rational(move.new_load)} "
        f"potential {OutputFormatter.format_potential(move.potential_before)} -> "
        f"{OutputFormatter.format_potential(move.potential_after)}"
        for move in trace.moves
    ]
    return "".join(line + "\n" for line in lines)
