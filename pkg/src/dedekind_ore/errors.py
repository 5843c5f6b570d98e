"""Exception hierarchy shared by every module."""


class DedekindOreError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(DedekindOreError, ValueError):
    """The input is well-typed but mathematically invalid."""


class UnsupportedError(DomainError):
    """The requested computation is outside the supported rings (e.g. real quadratic)."""


class ParseError(DomainError):
    """A text representation could not be parsed."""


class NotCoprimeError(DomainError):
    def __init__(self, i, j, first, second):
        self.pair = (i, j)
        super().__init__(
            f"moduli {i} and {j} are not coprime: {first} + {second} != (1)"
        )


class BudgetExceeded(DedekindOreError, RuntimeError):
    """A bounded search or fixed-point iteration ran out of budget."""
