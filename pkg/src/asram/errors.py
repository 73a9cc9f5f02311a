"""Exception types raised by asram."""


class AsramError(Exception):
    """Base class for all input-level errors (CLI exit code 2)."""


class DivisionByZero(AsramError, ZeroDivisionError):
    pass


class InvalidPrime(AsramError, ValueError):
    pass


class NotIrreducible(AsramError, ValueError):
    pass


class NotPositiveDegree(AsramError, ValueError):
    pass


class ZeroInput(AsramError, ValueError):
    pass


class NormNotOne(AsramError, ValueError):
    pass


class PreconditionViolated(AsramError, ValueError):
    pass


class SearchSpaceTooLarge(AsramError, ValueError):
    pass


class InvalidD(AsramError, ValueError):
    pass


class GammaNotNormOne(AsramError, ValueError):
    pass


class GammaIsOne(AsramError, ValueError):
    pass


class FieldMismatch(AsramError, TypeError):
    pass


class ExpressionSyntaxError(AsramError, ValueError):
    """Malformed expression; ``pos`` is the 0-based offset of the offending token."""

    def __init__(self, msg, pos):
        super().__init__(f'{msg} at position {pos}')
        self.pos = pos


class UnknownSymbol(ExpressionSyntaxError):
    pass


class InvariantViolation(Exception):
    """An internal consistency check failed (CLI exit code 3).

    Deliberately not an AsramError: it signals a bug, not bad input.
    """
