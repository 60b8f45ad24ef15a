"""Exception types shared across the package."""

from __future__ import annotations


class QGaussError(Exception):
    """Base class for errors raised by :mod:`qgauss`."""


class PoleError(QGaussError, ZeroDivisionError):
    """A rational function was evaluated (numerically or exactly) at a pole.

    ``modulus`` carries ``|den(s0)|`` for numeric evaluation.
    """

    def __init__(self, message: str, modulus: float = 0.0) -> None:
        super().__init__(message)
        self.modulus = modulus


class DecompositionError(QGaussError, ValueError):
    """The value is not of the form ``A(q) + B(q) * i * s^-1`` with real A, B."""

    def __init__(self, message: str, monomial: tuple[int, object] | None = None) -> None:
        super().__init__(message)
        self.monomial = monomial


class UnsupportedOperation(QGaussError, ValueError):
    pass


class IndeterminateError(QGaussError, ValueError):
    pass


class ParseError(QGaussError, ValueError):
    pass
