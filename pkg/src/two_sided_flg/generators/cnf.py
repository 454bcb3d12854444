"""
3-CNF formulas: DIMACS text, random generation and brute-force satisfiability.

Literals are signed 1-based variable indices, as in DIMACS.
"""
import random
from dataclasses import dataclass
from itertools import product
from typing import Dict, Iterator, List, Mapping, Optional, Tuple

from ..utils.constants import DIMACS_COMMENT, DIMACS_FORMAT, DIMACS_HEADER
from ..utils.exceptions import CnfFormatError

Clause = Tuple[int, int, int]
Assignment = Dict[int, bool]


@dataclass(frozen=True)
class CnfFormula:
    """
    A 3-CNF formula.

    Attributes:
        num_vars: Number of variables (indices 1..num_vars)
        clauses: Clauses of exactly three literals over distinct variables
    """
    num_vars: int
    clauses: Tuple[Clause, ...]

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(tuple(int(l) for l in c) for c in self.clauses))
        if self.num_vars < 0:
            raise CnfFormatError(f"negative variable count {self.num_vars}")
        for index, clause in enumerate(self.clauses):
            if len(clause) != 3:
                raise CnfFormatError(f"clause {index} has {len(clause)} literals, expected 3")
            variables = [abs(literal) for literal in clause]
            if 0 in variables:
                raise CnfFormatError(f"clause {index} contains literal 0")
            if max(variables) > self.num_vars:
                raise CnfFormatError(f"clause {index} uses a variable above {self.num_vars}")
            if len(set(variables)) != 3:
                raise CnfFormatError(f"clause {index} repeats a variable")


def read_dimacs(text: str) -> CnfFormula:
    """
    Parse DIMACS CNF text.

    Clauses are terminated by ``0`` and may span lines.

    Raises:
        CnfFormatError: On a missing or malformed header, bad tokens,
            a clause count mismatch or a clause that is not 3-CNF
    """
    header: Optional[Tuple[int, int]] = None
    clauses: List[Clause] = []
    current: List[int] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        fields = raw.split()
        if not fields or fields[0] == DIMACS_COMMENT or fields[0] == "%":
            continue
        if fields[0] == DIMACS_HEADER:
            if header is not None:
                raise CnfFormatError("more than one header line", line_no)
            if len(fields) != 4 or fields[1] != DIMACS_FORMAT:
                raise CnfFormatError("expected 'p cnf <vars> <clauses>'", line_no)
            try:
                header = (int(fields[2]), int(fields[3]))
            except ValueError:
                raise CnfFormatError("header counts must be integers", line_no)
            continue
        if header is None:
            raise CnfFormatError("clause before the 'p cnf' header", line_no)
        for token in fields:
            try:
                literal = int(token)
            except ValueError:
                raise CnfFormatError(f"'{token}' is not a literal", line_no)
            if literal == 0:
                if len(current) != 3:
                    raise CnfFormatError(f"clause has {len(current)} literals, expected 3", line_no)
                clauses.append(tuple(current))
                current = []
            else:
                current.append(literal)

    if header is None:
        raise CnfFormatError("missing 'p cnf <vars> <clauses>' header")
    if current:
        raise CnfFormatError("last clause is not terminated by 0")
    num_vars, num_clauses = header
    if len(clauses) != num_clauses:
        raise CnfFormatError(f"header declares {num_clauses} clauses, found {len(clauses)}")
    return CnfFormula(num_vars, tuple(clauses))


def write_dimacs(formula: CnfFormula) -> str:
    lines = [f"{DIMACS_HEADER} {DIMACS_FORMAT} {formula.num_vars} {len(formula.clauses)}"]
    lines.extend(" ".join(str(literal) for literal in clause) + " 0" for clause in formula.clauses)
    return "\n".join(lines) + "\n"


def gen_random_3cnf(n_vars: int, n_clauses: int, seed: int = 0) -> CnfFormula:
    """Uniform random 3-CNF over distinct variables per clause, deterministic per seed."""
    if n_vars < 3:
        raise CnfFormatError(f"a 3-CNF clause needs at least 3 variables, got {n_vars}")
    if n_clauses < 0:
        raise CnfFormatError(f"negative clause count {n_clauses}")
    rng = random.Random(seed)
    clauses = []
    for _ in range(n_clauses):
        variables = rng.sample(range(1, n_vars + 1), 3)
        clauses.append(tuple(v if rng.random() < 0.5 else -v for v in variables))
    return CnfFormula(n_vars, tuple(clauses))


def evaluate(formula: CnfFormula, assignment: Mapping[int, bool]) -> bool:
    """True iff every clause has a literal made true by ``assignment``."""
    return all(
        any(assignment[abs(literal)] == (literal > 0) for literal in clause)
        for clause in formula.clauses
    )


def _assignments(num_vars: int) -> Iterator[Assignment]:
    for values in product((False, True), repeat=num_vars):
        yield {i + 1: value for i, value in enumerate(values)}


def satisfying_assignment(formula: CnfFormula) -> Optional[Assignment]:
    """First satisfying assignment in brute-force order, or None."""
    for assignment in _assignments(formula.num_vars):
        if evaluate(formula, assignment):
            return assignment
    return None


def is_satisfiable(formula: CnfFormula) -> bool:
    return satisfying_assignment(formula) is not None
