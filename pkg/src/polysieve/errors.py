"""Shared exception types."""


class BudgetError(RuntimeError):
    """Raised when a computation would exceed its configured resource budget."""
