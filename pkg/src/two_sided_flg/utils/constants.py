"""
Constants used throughout the facility location toolkit.

This module centralizes the text-format keywords, export columns and
message templates to avoid magic strings across modules.
"""

# Instance text format keywords
COMMENT_CHAR = "#"
HEADER_KEYWORD = "p"
HEADER_FORMAT = "flg"
VERTEX_KEYWORD = "v"
EDGE_KEYWORD = "e"
PLACEMENT_KEYWORD = "s"
DISTRIBUTION_KEYWORD = "d"
LOAD_KEYWORD = "l"
WELFARE_KEYWORD = "w"
BEST_RESPONSE_KEYWORD = "b"
DEVIATION_KEYWORD = "x"

# DIMACS CNF keywords
DIMACS_COMMENT = "c"
DIMACS_HEADER = "p"
DIMACS_FORMAT = "cnf"

# Trace export
TRACE_CSV_COLUMNS = [
    "move",
    "mover",
    "old_location",
    "new_location",
    "old_load",
    "new_load",
    "potential_before",
    "potential_after",
]
POTENTIAL_SEPARATOR = ";"

# Oracle methods
ORACLE_BLOCK = "block"
ORACLE_FRANK_WOLFE = "frank-wolfe"

# Max-flow neighbor scan orders
ORDER_FORWARD = "forward"
ORDER_REVERSE = "reverse"

# Reference fixtures
FIXTURE_NAMES = ["ten-clients", "three-clients", "two-clauses", "basic-us"]

# Output Formatting
OUTPUT_SEPARATOR = "=" * 80
OUTPUT_SUBSEPARATOR = "-" * 80

# Log messages
MSG_COMPUTING_LOADS = "Computing equilibrium loads for placement {placement}"
MSG_MNS_ROUND = "Round {round}: MNS {members} with ratio {ratio}"
MSG_GRID_FALLBACK = "Utility grid of size {size} exceeds limit {limit}; using Stern-Brocot descent"
MSG_DYNAMICS_MOVE = "Move {index}: f_{mover} {old} -> {new} (load {old_load} -> {new_load})"
MSG_DYNAMICS_DONE = "Dynamics reached a stable placement after {moves} moves"
MSG_OPT_FALLBACK = "Exact optimum exceeds budget ({error}); falling back to greedy"
MSG_ENUMERATION_SKIPPED = "SPE enumeration skipped: {error}"

# CLI messages
CLI_DESCRIPTION = "Two-sided facility location games with load-balancing clients"
MSG_ERROR_PREFIX = "❌ "

# Error Messages
ERR_INVALID_CONFIG = "Invalid configuration: {error}"
ERR_NO_PLACEMENT = "No placement given: pass --placement or append an 's' line to the instance"
ERR_UNEXPECTED = "Unexpected error: {error}"
