"""Exception hierarchy shared by the library and the command line."""


class MolienError(Exception):
    """Base class for every error raised by this package."""


class SpecError(MolienError, ValueError):
    """A group specification violates one of its structural invariants."""


class ClosureError(MolienError):
    """Closure enumeration exceeded its cap or met a non-invertible generator."""


class RoundingError(MolienError, ArithmeticError):
    """A series coefficient is not within tolerance of an integer."""


class ParseError(MolienError, ValueError):
    """Malformed spec or polynomial file; carries the offending line number."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
