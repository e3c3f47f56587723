"""Exceptions raised by the starcode library.

Every domain error derives from `StarcodeError`, which the command line maps to
exit status 1.  Outcomes that are ordinary results of a computation (a decoding
failure, a coalition too small to reconstruct) are returned as values instead.
"""

from typing import Optional, Tuple


class StarcodeError(Exception):
    """Base class for all domain errors."""


class NotPrime(StarcodeError, ValueError):
    pass


class OrderTooLarge(StarcodeError, ValueError):
    pass


class ReducibleModulus(StarcodeError, ValueError):
    pass


class NoIrreducibleFound(RuntimeError):
    """An irreducible polynomial of every degree exists; reaching this is a bug."""


class DivisionByZero(StarcodeError, ZeroDivisionError):
    pass


class ContextMismatch(StarcodeError, ValueError):
    pass


class ShapeMismatch(StarcodeError, ValueError):
    pass


class LengthMismatch(ShapeMismatch):
    pass


class NoSolution(StarcodeError, ArithmeticError):
    pass


class TooLargeToEnumerate(StarcodeError):
    pass


class ZeroCode(StarcodeError, ValueError):
    pass


class DegenerateSquare(StarcodeError):
    pass


class NotAnExtension(StarcodeError, ValueError):
    pass


class TooManyPoints(StarcodeError, ValueError):
    pass


class DuplicatePoints(StarcodeError, ValueError):
    pass


class DuplicateExponents(StarcodeError, ValueError):
    pass


class DuplicateProjectivePoints(StarcodeError, ValueError):
    pass


class BadDegree(StarcodeError, ValueError):
    pass


class RadiusTooLarge(StarcodeError, ValueError):
    pass


class GuaranteeViolation(StarcodeError):
    pass


class EmptyLocator(StarcodeError):
    pass


class SecretCoordinateDead(StarcodeError, ValueError):
    pass


class InconsistentShares(StarcodeError):
    pass


class CodeMismatch(StarcodeError, ValueError):
    pass


class DependentColumns(StarcodeError, ValueError):
    def __init__(self, pair: Tuple[int, int]) -> None:
        if pair[0] == pair[1]:
            message = 'generator column %d is zero' % (pair[0], )
        else:
            message = 'generator columns %d and %d are proportional' % pair
        super().__init__(message)
        self.pair = pair


class MatrixFormatError(StarcodeError, ValueError):
    def __init__(self, message: str, lineno: Optional[int] = None) -> None:
        if lineno is not None:
            message = 'line %d: %s' % (lineno, message)
        super().__init__(message)
        self.lineno = lineno


class SpecFormatError(StarcodeError, ValueError):
    pass
