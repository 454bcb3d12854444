"""Text formats and exports."""
from .instance import (
    InstanceDocument,
    read_document,
    parse_instance,
    serialize_instance,
    serialize_placement,
    write_document,
    parse_placement,
    parse_rational,
    parse_distribution,
    serialize_distribution,
    serialize_loads,
    parse_loads,
)
from .export import instance_to_dot, trace_to_csv, trace_to_log

__all__ = [
    "InstanceDocument",
    "read_document",
    "parse_instance",
    "serialize_instance",
    "serialize_placement",
    "write_document",
    "parse_placement",
    "parse_rational",
    "parse_distribution",
    "serialize_distribution",
    "serialize_loads",
    "parse_loads",
    "instance_to_dot",
    "trace_to_csv",
    "trace_to_log",
]
