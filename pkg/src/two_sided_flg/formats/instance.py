"""
Line-oriented text formats for instances, placements, distributions and loads.

Instance text::

    p flg <n> <m> <k>
    v <id> <weight>          (n lines)
    e <from> <to>            (m lines; <to> is in the shopping range of <from>)
    s <id_1> ... <id_k>      (optional trailing placement)

Lines starting with ``#`` are comments. Distribution files hold
``d <client> <facility> <num>/<den>`` lines and load output holds
``l <facility> <num>/<den>`` lines.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from ..core.model import HostGraph, LoadVector, Placement, WeightDistribution
from ..utils.constants import (
    COMMENT_CHAR,
    DISTRIBUTION_KEYWORD,
    EDGE_KEYWORD,
    HEADER_FORMAT,
    HEADER_KEYWORD,
    LOAD_KEYWORD,
    PLACEMENT_KEYWORD,
    VERTEX_KEYWORD,
)
from ..utils.exceptions import (
    DuplicateEdgeError,
    InstanceFormatError,
    MalformedHeaderError,
    NegativeWeightError,
    SelfLoopError,
    VertexRangeError,
)
from ..utils.formatter import format_rational


@dataclass(frozen=True)
class InstanceDocument:
    """A parsed instance stream: graph, facility count and optional placement."""
    graph: HostGraph
    k: int
    placement: Optional[Placement] = None


def _content_lines(text: str) -> Iterator[Tuple[int, List[str]]]:
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(COMMENT_CHAR):
            continue
        yield line_no, line.split()


def _int_field(token: str, what: str, line_no: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise InstanceFormatError(f"{what} '{token}' is not an integer", line_no)


def parse_rational(token: str, line_no: int = 0) -> Fraction:
    """
    Parse ``num/den`` or a plain integer into a reduced fraction.

    Raises:
        InstanceFormatError: If the token is not a fraction or has a zero denominator
    """
    try:
        if "/" in token:
            numerator, denominator = token.split("/", 1)
            return Fraction(int(numerator), int(denominator))
        return Fraction(int(token))
    except (ValueError, ZeroDivisionError):
        raise InstanceFormatError(f"'{token}' is not a fraction num/den", line_no)


def _placement_ids(fields: Sequence[str], n: int, line_no: int) -> Tuple[int, ...]:
    ids = tuple(_int_field(tok, "location", line_no) for tok in fields[1:])
    for v in ids:
        if not 0 <= v < n:
            raise VertexRangeError(f"location {v} not in [0, {n})", line_no)
    return ids


def read_document(text: str) -> InstanceDocument:
    """
    Parse an instance stream, including an optional trailing placement line.

    Args:
        text: Instance text

    Returns:
        InstanceDocument with graph, k and placement (None if absent)

    Raises:
        MalformedHeaderError, VertexRangeError, NegativeWeightError,
        SelfLoopError, DuplicateEdgeError, InstanceFormatError
    """
    lines = _content_lines(text)
    first = next(lines, None)
    if first is None:
        raise MalformedHeaderError("empty instance: missing 'p flg <n> <m> <k>' header")
    line_no, fields = first
    if len(fields) != 5 or fields[0] != HEADER_KEYWORD or fields[1] != HEADER_FORMAT:
        raise MalformedHeaderError(f"expected 'p flg <n> <m> <k>', got '{' '.join(fields)}'", line_no)
    try:
        n, m, k = (int(tok) for tok in fields[2:])
    except ValueError:
        raise MalformedHeaderError("header counts must be integers", line_no)
    if n < 0 or m < 0 or k < 0:
        raise MalformedHeaderError("header counts must be nonnegative", line_no)

    weights: Dict[int, int] = {}
    edges = set()
    placement: Optional[Placement] = None

    for line_no, fields in lines:
        keyword = fields[0]
        if keyword == VERTEX_KEYWORD:
            if len(fields) != 3:
                raise InstanceFormatError("expected 'v <id> <weight>'", line_no)
            v = _int_field(fields[1], "vertex id", line_no)
            weight = _int_field(fields[2], "weight", line_no)
            if not 0 <= v < n:
                raise VertexRangeError(f"vertex {v} not in [0, {n})", line_no)
            if weight < 0:
                raise NegativeWeightError(f"vertex {v} has negative weight {weight}", line_no)
            if v in weights:
                raise InstanceFormatError(f"vertex {v} listed twice", line_no)
            weights[v] = weight
        elif keyword == EDGE_KEYWORD:
            if len(fields) != 3:
                raise InstanceFormatError("expected 'e <from> <to>'", line_no)
            u = _int_field(fields[1], "edge tail", line_no)
            z = _int_field(fields[2], "edge head", line_no)
            if not (0 <= u < n and 0 <= z < n):
                raise VertexRangeError(f"edge ({u}, {z}) leaves vertex range [0, {n})", line_no)
            if u == z:
                raise SelfLoopError(f"self-loop on vertex {u}", line_no)
            if (u, z) in edges:
                raise DuplicateEdgeError(f"duplicate edge ({u}, {z})", line_no)
            edges.add((u, z))
        elif keyword == PLACEMENT_KEYWORD:
            if placement is not None:
                raise InstanceFormatError("more than one placement line", line_no)
            ids = _placement_ids(fields, n, line_no)
            if len(ids) != k:
                raise InstanceFormatError(f"placement lists {len(ids)} locations, header says k={k}", line_no)
            placement = Placement(ids)
        else:
            raise InstanceFormatError(f"unknown line kind '{keyword}'", line_no)

    if len(weights) != n:
        raise MalformedHeaderError(f"header declares {n} vertices, found {len(weights)}")
    if len(edges) != m:
        raise MalformedHeaderError(f"header declares {m} edges, found {len(edges)}")

    graph = HostGraph(tuple(weights[v] for v in range(n)), frozenset(edges))
    return InstanceDocument(graph=graph, k=k, placement=placement)


def parse_instance(text: str) -> Tuple[HostGraph, int]:
    """Parse instance text into ``(graph, k)``."""
    document = read_document(text)
    return document.graph, document.k


def serialize_instance(g: HostGraph, k: int) -> str:
    """Serialize a graph and facility count; edges are written in sorted order."""
    lines = [f"{HEADER_KEYWORD} {HEADER_FORMAT} {g.n} {g.m} {k}"]
    lines.extend(f"{VERTEX_KEYWORD} {v} {w}" for v, w in enumerate(g.weights))
    lines.extend(f"{EDGE_KEYWORD} {u} {z}" for u, z in sorted(g.edges))
    return "\n".join(lines) + "\n"


def serialize_placement(s: Placement) -> str:
    return " ".join([PLACEMENT_KEYWORD, *(str(v) for v in s)])


def write_document(g: HostGraph, k: int, placement: Optional[Placement] = None) -> str:
    """Serialize an instance with an optional trailing placement line."""
    text = serialize_instance(g, k)
    if placement is not None:
        text += serialize_placement(placement) + "\n"
    return text


def parse_placement(text: str, n: Optional[int] = None, k: Optional[int] = None) -> Placement:
    """
    Parse a placement file holding one ``s`` line.

    Args:
        text: Placement text
        n: Vertex count to range-check against (optional)
        k: Expected facility count (optional)

    Returns:
        The parsed placement
    """
    placement: Optional[Placement] = None
    for line_no, fields in _content_lines(text):
        if fields[0] != PLACEMENT_KEYWORD:
            raise InstanceFormatError(f"expected 's <id_1> ... <id_k>', got '{fields[0]}'", line_no)
        if placement is not None:
            raise InstanceFormatError("more than one placement line", line_no)
        ids = _placement_ids(fields, n if n is not None else 2 ** 63, line_no)
        if k is not None and len(ids) != k:
            raise InstanceFormatError(f"placement lists {len(ids)} locations, expected k={k}", line_no)
        placement = Placement(ids)
    if placement is None:
        raise InstanceFormatError("no placement line found")
    return placement


def parse_distribution(text: str) -> WeightDistribution:
    """Parse ``d <client> <facility> <num>/<den>`` lines."""
    entries: Dict[int, Dict[int, Fraction]] = {}
    for line_no, fields in _content_lines(text):
        if fields[0] != DISTRIBUTION_KEYWORD or len(fields) != 4:
            raise InstanceFormatError("expected 'd <client> <facility> <num>/<den>'", line_no)
        client = _int_field(fields[1], "client", line_no)
        facility = _int_field(fields[2], "facility", line_no)
        amount = parse_rational(fields[3], line_no)
        if amount < 0:
            raise InstanceFormatError(f"negative weight {amount} from client {client}", line_no)
        row = entries.setdefault(client, {})
        if facility in row:
            raise InstanceFormatError(f"client {client} lists facility {facility} twice", line_no)
        row[facility] = amount
    return WeightDistribution(entries)


def serialize_distribution(sigma: WeightDistribution) -> str:
    return "".join(
        f"{DISTRIBUTION_KEYWORD} {client} {j} {format_rational(amount)}\n"
        for client, j, amount in sigma.items()
    )


def serialize_loads(loads: LoadVector) -> str:
    return "".join(
        f"{LOAD_KEYWORD} {j} {format_rational(load)}\n"
        for j, load in enumerate(loads)
    )


def parse_loads(text: str) -> LoadVector:
    """Parse ``l <facility> <num>/<den>`` lines; facilities must be 0..k-1."""
    values: Dict[int, Fraction] = {}
    for line_no, fields in _content_lines(text):
        if fields[0] != LOAD_KEYWORD or len(fields) != 3:
            raise InstanceFormatError("expected 'l <facility> <num>/<den>'", line_no)
        values[_int_field(fields[1], "facility", line_no)] = parse_rational(fields[2], line_no)
    if sorted(values) != list(range(len(values))):
        raise InstanceFormatError("load lines must cover facilities 0..k-1 exactly once")
    return LoadVector(tuple(values[j] for j in range(len(values))))
