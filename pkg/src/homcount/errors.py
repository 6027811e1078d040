"""Shared exception types."""


class BudgetExceededError(RuntimeError):
    """A search exceeded its node-visit budget instead of returning an approximation."""


class SizeBudgetExceededError(BudgetExceededError):
    """An exact predicate was asked about a graph larger than it supports."""


class PatternNotInClassError(ValueError):
    """The pattern graph is not a member of the host class, so the exponent is undefined."""
