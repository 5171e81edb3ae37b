"""Shared exception types for the whole package."""


class DimensionMismatch(ValueError):
    """Operands live in polynomial rings with different variable counts."""


class DomainError(ValueError):
    """An operation was applied outside its mathematical domain.

    Typical causes: asking for the decomposition of the zero or unit ideal,
    the zeroth power of an ideal, or the cover ideal of a set that is not a
    strong vertex cover.
    """


class ResourceLimitExceeded(RuntimeError):
    """The instance exceeds a configured size limit.

    The message names the limit; pass a larger one explicitly to proceed.
    """


class FormatError(ValueError):
    """Malformed textual input (monomial, ideal, graph or constraint file)."""


class ConsistencyError(RuntimeError):
    """Two computations that must agree did not; indicates a bug."""
