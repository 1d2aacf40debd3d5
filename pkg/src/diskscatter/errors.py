"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class DiskScatterError(Exception):
    """Base class for library errors."""


class DomainError(DiskScatterError, ValueError):
    """Argument outside the supported or admissible range."""


class HypothesisError(DomainError):
    """Parameters violate a hypothesis of a checked statement.

    Parameters
    ----------
    hypothesis : str
        Human-readable description of the failed hypothesis.
    """

    def __init__(self, hypothesis: str):
        super().__init__(f"hypothesis violated: {hypothesis}")
        self.hypothesis = hypothesis


class PoleError(DiskScatterError, ArithmeticError):
    """Evaluation point too close to a pole of a quotient.

    Attributes
    ----------
    zero : float
        The Bessel zero responsible for the pole.
    """

    def __init__(self, message: str, zero: float):
        super().__init__(message)
        self.zero = zero


class DegeneracyError(DiskScatterError, ArithmeticError):
    """Division by a vanishing quantity outside a continuous-limit path."""


class PreconditionError(DiskScatterError, ValueError):
    """Input does not satisfy an operation's precondition."""


class ParameterError(DiskScatterError, ValueError):
    """Inconsistent or out-of-range schedule parameters."""


class NumericError(DiskScatterError, RuntimeError):
    """Root finding or refinement failed."""


class AccuracyError(DiskScatterError, RuntimeError):
    """A truncated series cannot be certified to the requested accuracy."""
