"""Exception hierarchy shared across the package.

Every public boundary rejects bad input with one of these instead of
letting NaN or silent misbehavior propagate into training loops.
"""


class DirmixError(Exception):
    """Base class for all package-specific errors."""


class DomainError(DirmixError, ValueError):
    """Argument outside the mathematical domain of a function."""


class EmptyInputError(DirmixError, ValueError):
    """An operation received an empty sequence where values are required."""


class InvalidSimplexError(DirmixError, ValueError):
    """Vector is not a valid point on (or weight vector over) the simplex."""


class NonPositiveAlphaError(DirmixError, ValueError):
    """A concentration parameter is zero, negative, or non-finite."""


class DimensionMismatchError(DirmixError, ValueError):
    """Shapes of related arguments are inconsistent."""


class IndexOutOfRangeError(DirmixError, IndexError):
    """Class or component index outside the valid range."""


class ConvergenceFailureError(DirmixError, RuntimeError):
    """An iterative solver failed to reach its tolerance within its cap."""


class LengthMismatchError(DirmixError, ValueError):
    """Paired sequences have different lengths."""


class MissingGroundTruthError(DirmixError, ValueError):
    """A record lacks the stored true probability needed for evaluation."""


class ParseError(DirmixError, ValueError):
    """A dataset file is malformed; carries the offending line number."""

    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class NonPositiveApproxError(DirmixError, ValueError):
    """Approximating density vanished where the target has mass."""


class SingleLabelWarning(UserWarning):
    """Observation carries a single label; spread is weakly identified."""
