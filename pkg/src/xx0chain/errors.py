"""Shared exception types."""


class EnumerationBudgetError(RuntimeError):
    """An enumeration would exceed its configured item budget."""


class DegenerateInputError(ValueError):
    """Coincident coordinates make a determinant formula 0/0.

    The message names the brute-force route that remains available.
    """


class ExactDivisionError(ArithmeticError):
    """A polynomial or integer division that must be exact is not."""
