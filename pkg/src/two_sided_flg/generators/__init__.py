"""Instance generators, reference fixtures and CNF tooling."""
from .cnf import (
    CnfFormula,
    read_dimacs,
    write_dimacs,
    gen_random_3cnf,
    evaluate,
    satisfying_assignment,
    is_satisfiable,
)
from .families import (
    lower_bound_ids,
    gen_lower_bound,
    literal_vertex,
    clause_vertex,
    gen_3sat,
    encode_assignment,
    decode_assignment,
    gen_basic_us_counterexample,
    gen_random,
)
from .fixtures import ten_client_instance, three_client_instance, two_clause_formula

__all__ = [
    "CnfFormula",
    "read_dimacs",
    "write_dimacs",
    "gen_random_3cnf",
    "evaluate",
    "satisfying_assignment",
    "is_satisfiable",
    "lower_bound_ids",
    "gen_lower_bound",
    "literal_vertex",
    "clause_vertex",
    "gen_3sat",
    "encode_assignment",
    "decode_assignment",
    "gen_basic_us_counterexample",
    "gen_random",
    "ten_client_instance",
    "three_client_instance",
    "two_clause_formula",
]
