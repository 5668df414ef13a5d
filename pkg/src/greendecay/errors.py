"""Exception types shared across the package."""

from __future__ import annotations


class ZeroPivotError(ArithmeticError):
    """Elimination hit a zero (or denormal-tiny) pivot.

    ``k`` is the 1-based elimination step; a matrix raising this is not
    strongly regular and admits no LU factorization without pivoting.
    """

    def __init__(self, k: int, value: float = 0.0):
        self.k = k
        self.value = value
        super().__init__(f"zero pivot at elimination step k={k} (value={value!r})")


class DominanceError(ValueError):
    """The strong column-dominance condition fails (mu >= 1 or zero diagonal)."""

    def __init__(self, mu: float, zero_diagonal_index: int | None = None):
        self.mu = mu
        self.zero_diagonal_index = zero_diagonal_index
        if zero_diagonal_index is not None:
            msg = f"zero diagonal entry at k={zero_diagonal_index}; dominance undefined"
        else:
            msg = f"strong dominance condition not satisfied: mu = {mu!r} >= 1"
        super().__init__(msg)


class HypothesisError(ValueError):
    """Hypotheses of a bound family are not satisfied by the given matrix."""


class RegionError(IndexError):
    """Requested entry lies outside the region covered by the representation."""


class MatrixMarketError(ValueError):
    """Malformed Matrix Market input; carries the offending 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"{message} (line {line})"
        super().__init__(message)
