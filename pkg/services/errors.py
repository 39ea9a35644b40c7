"""
Exception hierarchy for the decomposition pipeline
"""

from typing import Optional


class DecompositionError(Exception):
    """Base class for every error raised by the pipeline"""


class RotationFormatError(DecompositionError):
    """Raised when a rotation-format document cannot be parsed.

    Attributes:
        line: 1-based line number of the offending line, if known.
    """

    def __init__(self, message: str, line: Optional[int] = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class EmbeddingError(DecompositionError):
    """Raised on invalid queries or surgery on a RotationGraph"""


class TriangulationError(DecompositionError):
    """Raised when an operation requires a valid embedded triangulation.

    Attributes:
        diagnostics: the validation findings that caused the rejection.
    """

    def __init__(self, diagnostics) -> None:
        self.diagnostics = diagnostics
        summary = "; ".join(f.message for f in diagnostics.findings[:3])
        super().__init__(f"input is not a valid triangulation: {summary}")


class OrderingError(DecompositionError):
    """Raised when a DFS or triangle-ordering invariant is violated"""


class SplitError(DecompositionError):
    """Raised when incidence-list surgery hits an inconsistent state"""


class GeneratorError(DecompositionError):
    """Raised on bad generator arguments or unknown fixtures"""


class OracleLimitError(DecompositionError):
    """Raised when an instance is too large for the brute-force oracle"""
