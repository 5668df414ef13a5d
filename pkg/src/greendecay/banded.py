"""Banded matrix container, column-dominance metrics, and Matrix Market input.

Matrices are stored densely with the declared bandwidths enforced exactly:
every entry outside the band is bit-exact zero, not merely small. The public
API is 1-based (row/column indices i, j run from 1 to N), so
``A.entry(i, j) == A.data[i - 1, j - 1]``. All containers are immutable after
construction (backing arrays are marked read-only) and safe to share between
threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import MatrixMarketError

__all__ = [
    "BandedMatrix",
    "DominanceReport",
    "band_mask",
    "make_banded",
    "from_dense",
    "dominance_mu",
    "gershgorin_interval",
    "augment",
    "read_matrix_market",
]


def band_mask(n: int, r_lower: int, r_upper: int) -> np.ndarray:
    """Boolean (n, n) mask of the positions allowed inside the band."""
    d = np.subtract.outer(np.arange(n), np.arange(n))  # d[i, j] = i - j
    return (d <= r_lower) & (d >= -r_upper)


@dataclass(frozen=True)
class BandedMatrix:
    """Dense-backed real N x N matrix with declared lower/upper bandwidths.

    Entries A(i, j) with i - j > r_lower or j - i > r_upper are exactly zero.
    ``r_upper`` may be as large as N - 1 ("one-sided" matrices with an
    unrestricted upper part); ``r_lower`` must satisfy 1 <= r_lower < N.
    """

    n: int
    r_lower: int
    r_upper: int
    data: np.ndarray

    def __post_init__(self):
        data = np.array(self.data, dtype=float, copy=True, order="C")
        if data.shape != (self.n, self.n):
            raise ValueError(f"data shape {data.shape} does not match n={self.n}")
        if not (self.n > self.r_lower >= 1):
            raise ValueError(
                f"need N > r_lower >= 1, got N={self.n}, r_lower={self.r_lower}"
            )
        if not (0 <= self.r_upper <= self.n - 1):
            raise ValueError(
                f"need 0 <= r_upper <= N-1, got r_upper={self.r_upper}, N={self.n}"
            )
        if np.any(data[~band_mask(self.n, self.r_lower, self.r_upper)] != 0.0):
            raise ValueError("entries outside the declared band must be exactly zero")
        data.flags.writeable = False
        object.__setattr__(self, "data", data)

    def entry(self, i: int, j: int) -> float:
        """1-based entry access: A(i, j)."""
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"indices ({i}, {j}) outside 1..{self.n}")
        return float(self.data[i - 1, j - 1])

    def is_symmetric(self, rtol: float = 1e-12) -> bool:
        scale = max(1.0, float(np.abs(self.data).max()))
        return float(np.abs(self.data - self.data.T).max()) <= rtol * scale


def make_banded(
    n: int,
    r_lower: int,
    r_upper: int,
    entry_fn: Callable[[int, int], float],
) -> BandedMatrix:
    """Sample ``entry_fn(i, j)`` (1-based) inside the band, zeros outside."""
    if not (n > r_lower >= 1) or r_upper < 0:
        raise ValueError(
            f"invalid dimensions: n={n}, r_lower={r_lower}, r_upper={r_upper}"
        )
    data = np.zeros((n, n))
    for i in range(1, n + 1):
        lo = max(1, i - r_lower)
        hi = min(n, i + r_upper)
        for j in range(lo, hi + 1):
            data[i - 1, j - 1] = entry_fn(i, j)
    return BandedMatrix(n, r_lower, r_upper, data)


def from_dense(
    data: np.ndarray,
    r_lower: int | None = None,
    r_upper: int | None = None,
) -> BandedMatrix:
    """Wrap a dense square array, inferring the tightest bandwidths if not given.

    An empty lower part is reported as r_lower = 1 (bandwidths of order zero
    are not representable).
    """
    data = np.asarray(data, dtype=float)
    if data.ndim != 2 or data.shape[0] != data.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {data.shape}")
    n = data.shape[0]
    ii, jj = np.nonzero(data)
    if r_lower is None:
        r_lower = int(max(1, (ii - jj).max(initial=0)))
    if r_upper is None:
        r_upper = int(max(0, (jj - ii).max(initial=0)))
    return BandedMatrix(n, r_lower, r_upper, data)


@dataclass(frozen=True)
class DominanceReport:
    """Result of the strong column-dominance check.

    ``per_column_ratios[k-1]`` is the off-diagonal absolute column sum of
    column k (all rows above the diagonal plus the r_lower rows below it)
    divided by |A(k, k)|; ``mu`` is the largest such ratio, i.e. the smallest
    value for which the dominance inequality holds. ``satisfied`` requires
    mu < 1 and a nonzero diagonal.
    """

    mu: float
    min_diag: float
    satisfied: bool
    per_column_ratios: np.ndarray
    zero_diagonal_index: int | None = None

    def __post_init__(self):
        ratios = np.asarray(self.per_column_ratios, dtype=float)
        ratios.flags.writeable = False
        object.__setattr__(self, "per_column_ratios", ratios)


def dominance_mu(A: BandedMatrix) -> DominanceReport:
    """Smallest mu with mu*|A(k,k)| >= off-diagonal column sums, per column.

    The sum for column k runs over all rows i < k (the full upper part; for a
    two-sided matrix the out-of-band terms are zero, so restricting to the
    band gives the same value) and over rows i = k+1 .. k+r_lower. A zero
    diagonal entry makes the condition unsatisfiable; the report then carries
    the first offending 1-based index instead of raising.
    """
    W = np.abs(A.data)
    diag = W.diagonal()
    # Below-band entries are exactly zero, so full column sums minus the
    # diagonal equal the dominance sums.
    off = W.sum(axis=0) - diag
    zero_idx = None
    if np.any(diag == 0.0):
        zero_idx = int(np.flatnonzero(diag == 0.0)[0]) + 1
    with np.errstate(divide="ignore", invalid="ignore"):
        ratios = np.where(diag > 0.0, off / diag, np.inf)
    mu = float(ratios.max())
    min_diag = float(diag.min())
    satisfied = mu < 1.0 and min_diag > 0.0
    return DominanceReport(mu, min_diag, satisfied, ratios, zero_idx)


def gershgorin_interval(A: BandedMatrix) -> tuple[float, float]:
    """Column-disc spectral interval (a, b).

    a = min_k (|A(k,k)| - off-column-sum), b = max_k (|A(k,k)| + off-column-sum).
    For symmetric A with a > 0 the spectrum lies in [a, b]; a <= 0 is a valid
    return signalling that interval-based bounds are inapplicable.
    """
    W = np.abs(A.data)
    diag = W.diagonal()
    off = W.sum(axis=0) - diag
    return float((diag - off).min()), float((diag + off).max())


def augment(A: BandedMatrix) -> BandedMatrix:
    """Block-diagonal padding I_r (+) A (+) I_r with r = r_lower.

    The padded matrix satisfies the dominance condition with exactly the same
    mu as A; it is the device that converts block decay estimates into scalar
    ones.
    """
    r = A.r_lower
    m = A.n + 2 * r
    data = np.zeros((m, m))
    data[:r, :r] = np.eye(r)
    data[r : r + A.n, r : r + A.n] = A.data
    data[r + A.n :, r + A.n :] = np.eye(r)
    return BandedMatrix(m, A.r_lower, A.r_upper, data)


def _parse_header(line: str) -> tuple[str, str]:
    tokens = line.strip().lower().split()
    if len(tokens) < 5 or tokens[0] != "%%matrixmarket":
        raise MatrixMarketError("missing %%MatrixMarket header", line=1)
    obj, fmt, field, symmetry = tokens[1], tokens[2], tokens[3], tokens[4]
    if obj != "matrix" or fmt != "coordinate":
        raise MatrixMarketError(
            f"unsupported object/format {obj!r}/{fmt!r}; need matrix coordinate",
            line=1,
        )
    if field not in ("real", "integer"):
        raise MatrixMarketError(f"unsupported field {field!r}; need real", line=1)
    if symmetry not in ("general", "symmetric"):
        raise MatrixMarketError(
            f"unsupported symmetry {symmetry!r}; need general or symmetric", line=1
        )
    return field, symmetry


def read_matrix_market(path) -> BandedMatrix:
    """Read a real coordinate Matrix Market file into a BandedMatrix.

    Bandwidths are inferred as the tightest values containing all nonzeros
    (with r_lower floored at 1). General and symmetric storage are supported;
    duplicate coordinates are accumulated. Parse failures report the 1-based
    line number.
    """
    with open(path, "r", encoding="ascii") as fh:
        lines = fh.readlines()
    if not lines:
        raise MatrixMarketError("empty file", line=1)
    _, symmetry = _parse_header(lines[0])

    lineno = 1
    size_line = None
    for lineno, raw in enumerate(lines[1:], start=2):
        stripped = raw.strip()
        if not stripped or stripped.startswith("%"):
            continue
        size_line = stripped
        break
    if size_line is None:
        raise MatrixMarketError("missing size line", line=lineno)
    parts = size_line.split()
    if len(parts) != 3:
        raise MatrixMarketError(f"malformed size line {size_line!r}", line=lineno)
    try:
        nrows, ncols, nnz = (int(p) for p in parts)
    except ValueError:
        raise MatrixMarketError(f"malformed size line {size_line!r}", line=lineno)
    if nrows != ncols:
        raise MatrixMarketError(f"matrix is not square: {nrows} x {ncols}", line=lineno)

    data = np.zeros((nrows, ncols))
    seen = 0
    for entry_lineno, raw in enumerate(lines[lineno:], start=lineno + 1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("%"):
            continue
        parts = stripped.split()
        if len(parts) != 3:
            raise MatrixMarketError(f"malformed entry {stripped!r}", line=entry_lineno)
        try:
            i, j = int(parts[0]), int(parts[1])
            v = float(parts[2])
        except ValueError:
            raise MatrixMarketError(f"malformed entry {stripped!r}", line=entry_lineno)
        if not (1 <= i <= nrows and 1 <= j <= ncols):
            raise MatrixMarketError(
                f"index ({i}, {j}) outside 1..{nrows}", line=entry_lineno
            )
        data[i - 1, j - 1] += v
        if symmetry == "symmetric" and i != j:
            data[j - 1, i - 1] += v
        seen += 1
    if seen != nnz:
        raise MatrixMarketError(f"expected {nnz} entries, found {seen}")
    return from_dense(data)
