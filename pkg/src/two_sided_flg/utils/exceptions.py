"""
Custom exceptions for the two-sided facility location toolkit.

Every exception carries the process exit code the CLI reports for it,
so library errors translate directly into scriptable exit statuses.
"""


class FLGError(Exception):
    """Base exception for all facility location game errors."""
    exit_code = 1


class ConfigurationError(FLGError):
    """Raised when there's a configuration problem."""
    exit_code = 2


class InstanceFormatError(FLGError):
    """Raised when instance, placement or distribution text is malformed."""
    exit_code = 2

    def __init__(self, message: str, line_no: int = 0):
        if line_no:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class MalformedHeaderError(InstanceFormatError):
    """Raised when the `p flg` header is missing or unreadable."""
    pass


class VertexRangeError(InstanceFormatError):
    """Raised when a vertex id in the text lies outside [0, n)."""
    pass


class NegativeWeightError(InstanceFormatError):
    """Raised when a vertex weight is negative."""
    pass


class SelfLoopError(InstanceFormatError):
    """Raised when an edge starts and ends at the same vertex."""
    pass


class DuplicateEdgeError(InstanceFormatError):
    """Raised when the same edge is listed twice."""
    pass


class CnfFormatError(InstanceFormatError):
    """Raised when a DIMACS file or clause is malformed."""
    pass


class InvalidVertexError(FLGError, ValueError):
    """Raised when an API call names a vertex that does not exist."""
    exit_code = 2


class InvalidFacilityError(FLGError, ValueError):
    """Raised when an API call names a facility index that does not exist."""
    exit_code = 2


class InfeasibleDistributionError(FLGError):
    """Raised when a weight distribution is not feasible for a placement."""
    exit_code = 2


class BudgetExceededError(FLGError):
    """Raised when a computation would exceed a configured budget."""
    exit_code = 3


class EnumerationBudgetError(BudgetExceededError):
    """Raised when exhaustive enumeration exceeds the enumeration budget."""
    pass


class UtilityGridTooLargeError(BudgetExceededError):
    """Raised when the candidate utility grid is too large to materialize."""
    pass


class InvariantViolationError(FLGError):
    """Raised when an internal certificate does not hold."""
    exit_code = 4


class MoveCapExceededError(InvariantViolationError):
    """Raised when improving-response dynamics exceed the move cap."""
    pass


class ConvergenceError(FLGError):
    """Raised when the numeric equilibrium oracle does not converge."""
    exit_code = 4
