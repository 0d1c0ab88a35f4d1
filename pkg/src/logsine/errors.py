"""Exception types shared across the exact and floating-point engines."""

from __future__ import annotations


class LogsineError(Exception):
    """Base class for all library errors."""


class DomainError(LogsineError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class CompositionError(LogsineError, ValueError):
    """Series composition requires the inner series to have zero constant term."""


class DivisionError(LogsineError, ZeroDivisionError):
    """Division by an identically zero series."""


class ValuationError(LogsineError, ValueError):
    """Series division where the numerator vanishes to lower order than the denominator."""


class BudgetExceededError(LogsineError, RuntimeError):
    """A summation hit its term budget before meeting the tail tolerance.

    The partially converged value is kept on ``partial`` so callers can
    inspect how far the sum got.
    """

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


class NumericalError(LogsineError, ArithmeticError):
    """A floating-point computation produced non-finite intermediate values."""
