"""Exceptions shared across the solver kernels."""


class BudgetExceeded(Exception):
    """Raised inside a kernel when the state or time budget runs out.

    Callers convert this into a distinct `budget_exceeded` outcome; it is
    never conflated with an `unsolvable` verdict.
    """
