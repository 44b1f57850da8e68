"""Exception types shared across the package.

The CLI maps these onto distinct exit codes, so library code should
raise the most specific one that applies.
"""


class InvsemiError(Exception):
    """Base class for all errors raised by this package."""


class ContractViolation(InvsemiError, ValueError):
    """A caller broke a documented precondition (bad index, mismatched
    ground sets, incompatible join arguments, ...)."""


class ParseError(InvsemiError, ValueError):
    """An input file or expression could not be parsed or validated."""


class BudgetExceeded(InvsemiError, RuntimeError):
    """A resource budget was exhausted before the computation finished.

    The result is inconclusive rather than wrong; `budget` names the
    limit that was hit.
    """

    def __init__(self, message, budget):
        super().__init__(message)
        self.budget = budget


class InvariantViolation(InvsemiError, AssertionError):
    """An internal consistency check failed; indicates a bug, not bad input."""
