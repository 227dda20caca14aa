"""Exception hierarchy shared across the package.

Everything raised on purpose derives from SquigError, so callers can catch
one base class.  Each subclass also derives from the closest builtin so that
generic handlers (ValueError for bad inputs, ArithmeticError for numeric
breakdown) keep working.
"""

from __future__ import annotations


class SquigError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(SquigError, ValueError):
    """Structural parameters out of range (p, m, n, orders, sizes, tolerances)."""


class DomainError(SquigError, ValueError):
    """Numeric argument outside the domain a routine is defined on."""


class PoleError(DomainError):
    """Evaluation requested at a pole of the target function."""


class ConvergenceError(SquigError, RuntimeError):
    """An iteration exhausted its budget before reaching its tolerance."""


class RootCountError(SquigError, RuntimeError):
    """Root isolation found a different number of roots than theory predicts."""


class ZeroDenominatorError(SquigError, ArithmeticError):
    """A continued-fraction denominator vanished at the evaluation point."""


class CostGuardError(SquigError, ValueError):
    """Requested combinatorial computation exceeds the supported problem size."""
