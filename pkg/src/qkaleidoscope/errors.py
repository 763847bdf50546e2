"""Exception types raised by the numerical kernels."""


class KaleidoscopeError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(KaleidoscopeError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class SeriesOverflowError(KaleidoscopeError, OverflowError):
    """The argument would overflow double precision."""


class UnsupportedOrderError(KaleidoscopeError, ValueError):
    """No closed form is available for the requested polygon order."""


class DimensionMismatchError(KaleidoscopeError, ValueError):
    pass


class DivergenceError(KaleidoscopeError, ZeroDivisionError):
    """A normalization constant diverges (zero denominator)."""


class NegativeRadicandError(KaleidoscopeError, ValueError):
    pass
