"""Exception types shared across the package."""


class TmReachError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(TmReachError):
    """An operand left the mathematical domain of an operation
    (division by an interval containing zero, log of a non-positive
    interval, sqrt of a negative radicand, non-finite endpoint)."""


class ShapeError(TmReachError):
    """Dimension mismatch between operands (interval boxes, polynomial
    variable counts, matrix/vector shapes, Taylor-model domains)."""


class ParseError(TmReachError):
    """Malformed input text. Carries a human-readable position."""

    def __init__(self, message, line=None, column=None):
        loc = ""
        if line is not None:
            loc = f" (line {line})" if column is None else f" (line {line}, col {column})"
        super().__init__(message + loc)
        self.line = line
        self.column = column


class GuardStraddle(TmReachError):
    """The enclosure of a set reaching a guarded module could not be
    proven to satisfy exactly one guard entirely."""


class RemainderDivergence(TmReachError):
    """The ODE integrator found no self-mapping remainder within the
    retry limit; the step size is too large or the dynamics too stiff."""


class ValidationError(TmReachError):
    """A model or configuration document violates its schema or an
    internal consistency rule."""
