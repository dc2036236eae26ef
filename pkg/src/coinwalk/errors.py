"""Exception types shared across the package."""


class CoinwalkError(Exception):
    """Base class for package-specific errors."""


class DomainError(CoinwalkError, ValueError):
    """An argument lies outside an operation's documented domain."""


class CapExceeded(CoinwalkError):
    """Requested enumeration exceeds the configured path-count cap."""


class InexactDivision(CoinwalkError, ArithmeticError):
    """Polynomial or series division left a nonzero remainder.

    Every division in this package is backed by an identity that promises
    exactness, so a remainder means the identity (or its transcription) is
    broken.  The remainder is kept on the exception for diagnostics.
    """

    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class ValuationError(CoinwalkError, ArithmeticError):
    """Series division with numerator vanishing to lower z-order than denominator."""


class SqrtDomainError(CoinwalkError, ArithmeticError):
    """Series square root requires constant term exactly 1."""
