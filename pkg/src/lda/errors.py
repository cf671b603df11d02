"""Exception hierarchy shared across the package."""


class LdaError(Exception):
    """Base class for all package-specific errors."""


class DivisionByZero(LdaError, ZeroDivisionError):
    """Division by an identically zero rational function."""


class NoLeadingTerm(LdaError):
    """The difference polynomial carries no non-constant term."""


class InconsistentSystem(LdaError):
    """A relation reduced to a nonzero constant, so 1 is a consequence."""


class CompletionLimitExceeded(LdaError):
    """Completion hit the configured safety cap before the queue emptied."""


class InfiniteResidueBasis(LdaError):
    """The complement of the staircase stays infinite after the boundary
    patterns are applied."""


class ParityError(LdaError):
    """Midpoint quadrature requested across an odd number of grid cells."""


class LinearityError(LdaError):
    """An expression is not linear in the unknown functions."""


class ParseError(LdaError):
    """Syntax or semantic error in an input expression."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"at position {position}: {message}"
        super().__init__(message)


class ArityError(ParseError):
    """Function applied to the wrong arguments for the declared variables."""


class NegativeShiftError(ParseError):
    """A negative shift appeared; inputs must be re-offset so all shifts
    are nonnegative."""


class UnknownSymbolError(ParseError):
    """An identifier is neither a declared symbol nor a declared function."""


class ValidationError(LdaError):
    """A system file violates the schema; the message carries the field path."""
