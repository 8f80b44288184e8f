"""Exception hierarchy shared by every module."""


class JumpnumError(Exception):
    """Base class for all library errors."""


class ValidationError(JumpnumError):
    """Input data violates a structural invariant."""


class NotPositive(ValidationError):
    pass


class NotSimple(ValidationError):
    pass


class InconsistentProximity(ValidationError):
    pass


class Inconsistent(ValidationError):
    pass


class InvalidSequence(ValidationError):
    pass


class InvalidPairs(ValidationError):
    pass


class IndexOutOfRange(ValidationError):
    pass


class DimensionMismatch(ValidationError):
    pass


class ContextMismatch(ValidationError):
    pass


class NotAntinef(ValidationError):
    pass


class NegativeExponent(ValidationError):
    pass


class NonpositiveBound(ValidationError):
    pass


class NotInteger(ValidationError):
    pass


class MalformedJumpSet(JumpnumError):
    """A jump list cannot come from any simple complete ideal.

    ``step`` names the reconstruction stage that rejected it.
    """

    def __init__(self, step, message):
        super().__init__(f"{step}: {message}")
        self.step = step


class InternalError(JumpnumError):
    """An algorithm exceeded a budget that correct code never reaches."""
