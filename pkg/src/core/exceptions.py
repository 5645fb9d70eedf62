"""
Exception hierarchy for the q-series toolkit.

Every error raised on purpose by the library derives from QSeriesError,
so callers can catch the whole family at once. The concrete classes also
derive from the closest built-in exception so that generic handlers
(``except ValueError``) keep working.
"""

from typing import Optional


class QSeriesError(Exception):
    """Base class for all toolkit errors."""


class NotInvertible(QSeriesError, ArithmeticError):
    """A series cannot be inverted in the integer q-adic ring."""


class NonTruncating(QSeriesError, ValueError):
    """An infinite product whose factors never leave the truncation window."""


class NegativeAPower(QSeriesError, ValueError):
    """Setting a = 0 in a series that carries negative powers of a."""


class NonIntegerExponent(QSeriesError, ValueError):
    """A half-integer exponent that should have been integral."""


class UnsupportedParams(QSeriesError, ValueError):
    """A (d, k) pair or family index outside the implemented set."""


class NonTerminatingSum(QSeriesError, ValueError):
    """A summation whose terms cannot be shown to leave the window."""


class _PositionedError(QSeriesError, ValueError):
    """Error that may point at a line and column of DSL source text."""

    def __init__(
        self,
        message: str,
        line: Optional[int] = None,
        column: Optional[int] = None,
    ) -> None:
        self.message = message
        self.line = line
        self.column = column
        if line is not None and column is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


class ParseError(_PositionedError):
    """Identity text that does not match the grammar."""


class ValidationError(_PositionedError):
    """Identity text that parses but violates a structural rule."""


class CatalogError(QSeriesError, LookupError):
    """Unknown catalog entry or malformed catalog file."""
