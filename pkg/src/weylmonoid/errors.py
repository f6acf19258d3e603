"""Exception hierarchy shared by all modules."""


class WeylMonoidError(Exception):
    """Base class for every error raised by the package."""


class ValidationError(WeylMonoidError):
    """Input data violates a structural requirement."""


class DiagonalNotTwo(ValidationError):
    pass


class PositiveOffDiagonal(ValidationError):
    pass


class ZeroPairViolation(ValidationError):
    pass


class NotSymmetrizable(ValidationError):
    pass


class NotSpecial(ValidationError):
    pass


class NotARoot(ValidationError):
    pass


class SignMismatch(ValidationError):
    pass


class PointNotInCone(ValidationError):
    pass


class ResourceBudgetExceeded(WeylMonoidError):
    pass


class ParseError(WeylMonoidError):
    """Malformed textual input; ``position`` is a 0-based character offset."""

    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at position {position})")
        self.position = position
