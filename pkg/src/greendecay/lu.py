"""Structured LU factorization of lower band matrices and Green generators
of their inverses.

For a strongly regular lower band matrix A of order r the factorization
A = L R (L unit lower triangular, R upper triangular) can be computed with a
rolling window of r working rows: at step k the window holds the partially
eliminated rows k .. k+r-1, the pivot row leaves (becoming row k of R), the
fresh band row k+r enters, and a single rank-one update performs the
elimination. Column k of L holds the multipliers f_k (length r, shrinking to
N-k in the trailing block). The inverse of L is the product of the
elementary elimination matrices; partitioning each (r+1) x (r+1) elimination
block

    L_k = [[1, 0], [-f_k, I_r]]

row/column-wise yields the Green generators of L^{-1}: a_L(k) = -f_k e_1^T + J
(J the upper-shift matrix), q_L(k) = e_r, p_L(k) = e_1^T, d_L(k) = 0. A short
backward recursion through the rows of R then assembles the Green generators
of A^{-1} itself.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .banded import BandedMatrix
from .errors import ZeroPivotError
from .green import GreenGenerators, block_scheme

__all__ = [
    "StructuredLU",
    "LInvGenerators",
    "structured_lu",
    "linv_generators",
    "inverse_green_generators",
    "p_tail_cross_check",
    "schur_complement",
]

# Pivots below this magnitude abort the factorization instead of being
# perturbed; under strong dominance they are bounded well away from zero.
PIVOT_FLOOR = 1e-300


@dataclass(frozen=True)
class StructuredLU:
    """Per-step elimination data of the banded no-pivot LU factorization.

    ``gamma[k-1]`` is the k-th pivot R(k, k); ``f[k-1]`` holds the
    elimination multipliers of step k (length r for k <= N-r, length N-k
    afterwards); ``R`` is the full upper triangular factor. The subrow
    X_k = R(k, k+1:N) is exposed through :meth:`X`.
    """

    n: int
    r: int
    gamma: np.ndarray
    f: tuple[np.ndarray, ...]
    R: np.ndarray

    def __post_init__(self):
        gamma = np.array(self.gamma, dtype=float, copy=True)
        R = np.array(self.R, dtype=float, copy=True)
        gamma.flags.writeable = False
        R.flags.writeable = False
        fs = tuple(np.array(v, dtype=float, copy=True) for v in self.f)
        for v in fs:
            v.flags.writeable = False
        object.__setattr__(self, "gamma", gamma)
        object.__setattr__(self, "R", R)
        object.__setattr__(self, "f", fs)

    def X(self, k: int) -> np.ndarray:
        """Subrow R(k, k+1:N) for k = 1 .. N-1."""
        if not 1 <= k <= self.n - 1:
            raise IndexError(f"X index {k} outside 1..{self.n - 1}")
        return self.R[k - 1, k:]

    def lower_factor(self) -> np.ndarray:
        """Reassemble the dense unit lower triangular factor L from the f_k."""
        L = np.eye(self.n)
        for k, fk in enumerate(self.f, start=1):
            L[k : k + fk.size, k - 1] = fk
        return L


def structured_lu(A: BandedMatrix) -> StructuredLU:
    """No-pivot LU factorization of a lower band matrix via a rolling window.

    Parameters
    ----------
    A : BandedMatrix
        Strongly regular (all leading principal minors nonzero), lower banded
        of order ``A.r_lower``; the upper part may be full.

    Returns
    -------
    StructuredLU
        Factor data with L @ R == A, where L is reassembled from the
        multiplier columns f_k.

    Raises
    ------
    ZeroPivotError
        If a pivot smaller than ``PIVOT_FLOOR`` in magnitude is met; the
        error carries the 1-based step index.
    """
    n, r = A.n, A.r_lower
    src = A.data
    R = np.zeros((n, n))
    gamma = np.zeros(n)
    fs: list[np.ndarray] = []

    # Window of the partially eliminated rows k .. k+r-1 (full width; columns
    # left of k are never read once column k-1 has been eliminated).
    Y = src[:r, :].copy()

    def pivot(k: int) -> float:
        g = Y[0, k - 1]
        if abs(g) < PIVOT_FLOOR:
            raise ZeroPivotError(k, float(g))
        return float(g)

    for k in range(1, n - r + 1):
        ki = k - 1
        g = pivot(k)
        gamma[ki] = g
        R[ki, ki] = g
        R[ki, ki + 1 :] = Y[0, ki + 1 :]
        x = R[ki, ki + 1 :]
        f = np.empty(r)
        f[: r - 1] = Y[1:, ki]
        f[r - 1] = src[ki + r, ki]
        f /= g
        fs.append(f)
        Z = np.empty((r, n))
        Z[: r - 1] = Y[1:]
        Z[r - 1] = src[ki + r]
        Z[:, ki + 1 :] -= np.outer(f, x)
        Y = Z

    for k in range(n - r + 1, n):
        ki = k - 1
        g = pivot(k)
        gamma[ki] = g
        R[ki, ki] = g
        R[ki, ki + 1 :] = Y[0, ki + 1 :]
        x = R[ki, ki + 1 :]
        f = Y[1:, ki] / g
        fs.append(f)
        Y = Y[1:].copy()
        Y[:, ki + 1 :] -= np.outer(f, x)

    g = Y[0, n - 1]
    if abs(g) < PIVOT_FLOOR:
        raise ZeroPivotError(n, float(g))
    gamma[n - 1] = g
    R[n - 1, n - 1] = g
    return StructuredLU(n, r, gamma, tuple(fs), R)


@dataclass(frozen=True)
class LInvGenerators:
    """Green generators of L^{-1} extracted from the elimination blocks.

    For k = 1 .. N-r the partition of L_k = [[1, 0], [-f_k, I_r]] gives
    p_L(k) = e_1^T, d_L(k) = 0, a_L(k) = -f_k e_1^T + J, q_L(k) = e_r. The
    trailing steps i = N-r+1 .. N-1 contribute shrinking partitions
    L_i = [p_L(i); a_L(i)] with p_L(i) of shape (1, N-i+1) and a_L(i) of
    shape (N-i, N-i+1). ``corner`` is the r x r product of the embedded
    trailing elimination blocks: the bottom-right Green generator of L^{-1}.
    """

    n: int
    r: int
    a_l: tuple[np.ndarray, ...]
    tail_p_l: tuple[np.ndarray, ...]
    tail_a_l: tuple[np.ndarray, ...]
    corner: np.ndarray

    def __post_init__(self):
        a_l = tuple(np.array(m, dtype=float, copy=True) for m in self.a_l)
        tp = tuple(np.array(m, dtype=float, copy=True) for m in self.tail_p_l)
        ta = tuple(np.array(m, dtype=float, copy=True) for m in self.tail_a_l)
        corner = np.array(self.corner, dtype=float, copy=True)
        for m in (*a_l, *tp, *ta, corner):
            m.flags.writeable = False
        object.__setattr__(self, "a_l", a_l)
        object.__setattr__(self, "tail_p_l", tp)
        object.__setattr__(self, "tail_a_l", ta)
        object.__setattr__(self, "corner", corner)

    def p(self, k: int) -> np.ndarray:
        """p_L(k) = e_1^T, shape (1, r), for k = 1 .. N-r."""
        self._check_main(k)
        out = np.zeros((1, self.r))
        out[0, 0] = 1.0
        return out

    def q(self, k: int) -> np.ndarray:
        """q_L(k) = e_r, shape (r, 1), for k = 1 .. N-r."""
        self._check_main(k)
        out = np.zeros((self.r, 1))
        out[self.r - 1, 0] = 1.0
        return out

    def d(self, k: int) -> float:
        """Block-diagonal entry d_L(k); identically zero."""
        self._check_main(k)
        return 0.0

    def a(self, k: int) -> np.ndarray:
        """a_L(k) = -f_k e_1^T + J, shape (r, r), for k = 1 .. N-r."""
        self._check_main(k)
        return self.a_l[k - 1]

    def tail_p(self, i: int) -> np.ndarray:
        """First row of the trailing block L_i, shape (1, N-i+1)."""
        self._check_tail(i)
        return self.tail_p_l[i - (self.n - self.r + 1)]

    def tail_a(self, i: int) -> np.ndarray:
        """Remaining rows of the trailing block L_i, shape (N-i, N-i+1)."""
        self._check_tail(i)
        return self.tail_a_l[i - (self.n - self.r + 1)]

    def as_green(self) -> GreenGenerators:
        """View L^{-1} itself as a lower Green matrix of order r.

        Together with zeros on the non-represented upper region this
        reconstructs L^{-1} exactly (L^{-1} is unit lower triangular, so all
        entries with j > i vanish, including the block-diagonal d_L ones).
        """
        n, r = self.n, self.r
        e1 = np.zeros((1, r))
        e1[0, 0] = 1.0
        er = np.zeros((r, 1))
        er[r - 1, 0] = 1.0
        p = [e1] * (n - r) + [self.corner]
        q = [np.eye(r)] + [er] * (n - r)
        return GreenGenerators(block_scheme(n, r), tuple(p), tuple(q), self.a_l)

    def _check_main(self, k: int) -> None:
        if not 1 <= k <= self.n - self.r:
            raise IndexError(f"generator index {k} outside 1..{self.n - self.r}")

    def _check_tail(self, i: int) -> None:
        if not self.n - self.r + 1 <= i <= self.n - 1:
            raise IndexError(
                f"tail index {i} outside {self.n - self.r + 1}..{self.n - 1}"
            )


def linv_generators(slu: StructuredLU) -> LInvGenerators:
    """Extract the Green generators of L^{-1} from the elimination data."""
    n, r = slu.n, slu.r
    J = np.eye(r, k=1)
    a_l = []
    for k in range(1, n - r + 1):
        ak = J.copy()
        ak[:, 0] -= slu.f[k - 1]
        a_l.append(ak)

    tail_p, tail_a = [], []
    corner = np.eye(r)
    for i in range(n - r + 1, n):
        s = n - i + 1
        fi = slu.f[i - 1]
        p = np.zeros((1, s))
        p[0, 0] = 1.0
        tail_p.append(p)
        tail_a.append(np.hstack([-fi.reshape(-1, 1), np.eye(s - 1)]))
        emb = np.eye(r)
        idx = i - (n - r + 1)
        emb[idx + 1 :, idx] = -fi
        corner = emb @ corner
    return LInvGenerators(n, r, tuple(a_l), tuple(tail_p), tuple(tail_a), corner)


def inverse_green_generators(A: BandedMatrix) -> GreenGenerators:
    """Green generators of A^{-1} for a strongly regular lower band matrix.

    The transition and column generators of A^{-1} coincide with those of
    L^{-1}; the row generators satisfy the backward recursion

        p(N) = 1 / gamma_N,
        p(k) = (p_L(k) - X_k P_{k+1} a(k)) / gamma_k,
        P_k  = [p(k); P_{k+1} a(k)],

    run first through the shrinking trailing partitions (k = N-1 .. N-r+1,
    producing the r x r bottom generator) and then through the band steps
    (k = N-r .. 1).
    """
    slu = structured_lu(A)
    lg = linv_generators(slu)
    n, r = slu.n, slu.r

    P = np.array([[1.0 / slu.gamma[n - 1]]])
    for k in range(n - 1, n - r, -1):
        x = slu.X(k).reshape(1, -1)
        pk = (lg.tail_p(k) - x @ P @ lg.tail_a(k)) / slu.gamma[k - 1]
        P = np.vstack([pk, P @ lg.tail_a(k)])
    p_bottom = P

    p_rows: list[np.ndarray] = [np.empty(0)] * (n - r)
    for k in range(n - r, 0, -1):
        ak = lg.a(k)
        x = slu.X(k).reshape(1, -1)
        pk = (lg.p(k) - x @ P @ ak) / slu.gamma[k - 1]
        p_rows[k - 1] = pk
        P = np.vstack([pk, P @ ak])

    e_r = np.zeros((r, 1))
    e_r[r - 1, 0] = 1.0
    q = [np.eye(r)] + [e_r] * (n - r)
    return GreenGenerators(
        block_scheme(n, r),
        tuple(p_rows) + (p_bottom,),
        tuple(q),
        lg.a_l,
    )


def p_tail_cross_check(slu: StructuredLU) -> np.ndarray:
    """Bottom Green generator via the trailing R block: R_tail^{-1} L_tail.

    Independent of the backward recursion in :func:`inverse_green_generators`;
    the two must agree to roundoff. L_tail is the composite r x r product of
    the trailing elimination blocks (``LInvGenerators.corner``).
    """
    n, r = slu.n, slu.r
    corner = linv_generators(slu).corner
    r_block = slu.R[n - r :, n - r :]
    return np.linalg.solve(r_block, corner)


def schur_complement(A: BandedMatrix, ell: int) -> np.ndarray:
    """Trailing (N-ell) x (N-ell) matrix after ell elimination steps.

    The result is again lower banded of order r (elimination of a band
    column touches only the r rows below the pivot) and inherits the strong
    dominance condition of A with the same mu. Returned as a plain dense
    array: for ell = N - r the trailing block is r x r, too small to carry
    the order-r band declaration.
    """
    n, r = A.n, A.r_lower
    if not 1 <= ell <= n - r:
        raise ValueError(f"need 1 <= ell <= N - r = {n - r}, got {ell}")
    W = A.data.copy()
    for k in range(ell):
        g = W[k, k]
        if abs(g) < PIVOT_FLOOR:
            raise ZeroPivotError(k + 1, float(g))
        rows = slice(k + 1, min(k + r + 1, n))
        m = W[rows, k] / g
        W[rows, k + 1 :] -= np.outer(m, W[k, k + 1 :])
        W[rows, k] = 0.0
    return W[ell:, ell:].copy()
