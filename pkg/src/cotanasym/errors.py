"""Exception types shared across the package."""


class CotanasymError(Exception):
    """Base class for all package errors."""


class InvalidArgumentError(CotanasymError, ValueError):
    """An argument violates a documented precondition."""


class DomainError(CotanasymError, ValueError):
    """A mathematically out-of-domain input (pole, sector violation, radius)."""


class InsufficientPrecisionError(CotanasymError, ArithmeticError):
    """The working precision cannot resolve the requested quantity."""


class AccuracyError(CotanasymError, ArithmeticError):
    """A quadrature or series failed to converge to the requested tolerance."""


class CacheFormatError(CotanasymError, ValueError):
    """An on-disk cache file is malformed; carries the offending line number."""

    def __init__(self, path, line_number, message):
        super().__init__(f"{path}:{line_number}: {message}")
        self.path = str(path)
        self.line_number = line_number
