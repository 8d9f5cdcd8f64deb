"""Exception types shared by every module."""


class PastRevError(Exception):
    """Base class for all library errors."""


class DivisionByZero(PastRevError, ZeroDivisionError):
    pass


class IncompatibleField(PastRevError, TypeError):
    """Operands live in different fields."""


class DimensionMismatch(PastRevError, ValueError):
    pass


class CharacteristicTwo(PastRevError, ValueError):
    """Raised where 2 must be invertible (projectors, decompositions)."""

    def __init__(self, what="decomposition"):
        super().__init__(f"characteristic 2: {what} undefined")


class Singular(PastRevError, ValueError):
    pass


class IndexOutOfRange(PastRevError, IndexError):
    pass


class BudgetExceeded(PastRevError, RuntimeError):
    pass


class UnknownLaw(PastRevError, KeyError):
    def __str__(self):
        return f"unknown law: {self.args[0]}"


class ParseError(PastRevError, ValueError):
    """Malformed scalar, vector, matrix or field text."""
