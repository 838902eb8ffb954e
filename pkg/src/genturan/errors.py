"""Exception types shared across the package."""


class ParameterError(ValueError):
    """A precondition on the arguments was violated.

    The message always names the offending parameter so callers (and the
    CLI) can report which hypothesis failed.
    """


class DisconnectedGraphError(ParameterError):
    """An operation that requires a connected graph received one that is not."""


class SizeLimitError(ParameterError):
    """Input exceeds the size an exact subroutine is willing to handle."""


class OracleSizeError(SizeLimitError):
    """The exhaustive oracle was asked for more vertices than it enumerates."""


class BudgetExceededError(RuntimeError):
    """A bounded exact search ran out of its node-expansion budget.

    Callers can fall back to a structural argument (e.g. per-block checks)
    or retry with a larger budget.
    """


class GraphFormatError(ValueError):
    """Malformed graph6 or edge-list input."""
