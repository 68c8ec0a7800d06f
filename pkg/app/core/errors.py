"""Exceptions raised by the algebra, lattice and verification layers."""


class QCubesError(Exception):
    """Base class for every error raised by this package."""


class NonzeroRemainder(QCubesError, ArithmeticError):
    """The divisor does not divide the dividend in the Laurent-polynomial ring."""


class DivisionByZero(QCubesError, ArithmeticError):
    pass


class NotPolynomial(QCubesError):
    """A rational function whose reduced denominator is not 1."""


class InternalInconsistency(QCubesError):
    """Independent computation paths disagreed. Always a programming error."""


class UnknownIdentity(QCubesError, KeyError):
    def __str__(self) -> str:
        return f"unknown identity: {self.args[0]!r}" if self.args else "unknown identity"


class InvalidParams(QCubesError, ValueError):
    pass


class PointOutOfRange(QCubesError, ValueError):
    pass


class IndexOutOfRange(QCubesError, ValueError):
    pass
