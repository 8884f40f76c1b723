"""Beta/Dirichlet mixture networks for intrinsic uncertainty quantification.

The package learns, for each input, a full mixture distribution over the
class-probability simplex from multi-labeled data, and turns it into point
estimates, variances, and credible intervals.
"""

from .errors import (
    ConvergenceFailureError,
    DimensionMismatchError,
    DirmixError,
    DomainError,
    EmptyInputError,
    IndexOutOfRangeError,
    InvalidSimplexError,
    LengthMismatchError,
    MissingGroundTruthError,
    NonPositiveAlphaError,
    NonPositiveApproxError,
    ParseError,
    SingleLabelWarning,
)

__version__ = "0.1.0"

__all__ = [
    "ConvergenceFailureError",
    "DimensionMismatchError",
    "DirmixError",
    "DomainError",
    "EmptyInputError",
    "IndexOutOfRangeError",
    "InvalidSimplexError",
    "LengthMismatchError",
    "MissingGroundTruthError",
    "NonPositiveAlphaError",
    "NonPositiveApproxError",
    "ParseError",
    "SingleLabelWarning",
    "__version__",
]
