"""Exception hierarchy shared by every module."""


class FrobPrimesError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(FrobPrimesError, ValueError):
    """Input rejected before any computation started."""


class NotCoprime(ValidationError):
    pass


class BadOrder(ValidationError):
    pass


class Overflow(ValidationError):
    pass


class IndexOutOfRange(ValidationError, IndexError):
    pass


class NotSorted(ValidationError):
    pass


class DomainError(ValidationError):
    pass


class DegenerateS(ValidationError):
    pass


class LimitTooLarge(FrobPrimesError):
    """A sieve would have to run past the configured ceiling."""

    def __init__(self, limit: int, ceiling: int):
        super().__init__(f"limit {limit} exceeds sieve ceiling {ceiling}")
        self.limit = limit
        self.ceiling = ceiling
