"""Independent dense reference computations used to validate structured results.

These routines deliberately avoid the band-structured code paths: the LU
oracle is classical full-matrix elimination, the inverse is LAPACK-backed,
the eigensolver is a cyclic Jacobi iteration, and the determinant oracle runs
fraction-free elimination in exact rational arithmetic.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .errors import ZeroPivotError

__all__ = [
    "dense_lu_no_pivot",
    "dense_inverse",
    "jacobi_eigensystem",
    "symmetric_spectrum",
    "determinant_fraction_free",
]

_PIVOT_FLOOR = 1e-300


def dense_lu_no_pivot(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Classical Doolittle factorization A = L R without pivoting.

    Requires all leading principal minors nonzero (guaranteed under strong
    column dominance). Raises ZeroPivotError with the 1-based step index
    otherwise. L is unit lower triangular, R upper triangular.
    """
    U = np.array(a, dtype=float, copy=True)
    if U.ndim != 2 or U.shape[0] != U.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {U.shape}")
    n = U.shape[0]
    L = np.eye(n)
    for k in range(n - 1):
        p = U[k, k]
        if abs(p) < _PIVOT_FLOOR:
            raise ZeroPivotError(k + 1, float(p))
        m = U[k + 1 :, k] / p
        L[k + 1 :, k] = m
        U[k + 1 :, k + 1 :] -= np.outer(m, U[k, k + 1 :])
        U[k + 1 :, k] = 0.0
    if abs(U[n - 1, n - 1]) < _PIVOT_FLOOR:
        raise ZeroPivotError(n, float(U[n - 1, n - 1]))
    return L, U


def dense_inverse(a: np.ndarray) -> np.ndarray:
    """Reference inverse with a residual guard.

    Computed by LAPACK (partial pivoting); rejects matrices whose inverse is
    meaningless at working precision by checking the 1-norm residual
    ||A X - I||_1 against the condition-scaled roundoff level.
    """
    A = np.asarray(a, dtype=float)
    X = np.linalg.inv(A)
    n = A.shape[0]
    resid = np.abs(A @ X - np.eye(n)).sum(axis=0).max()
    cond = np.abs(A).sum(axis=0).max() * np.abs(X).sum(axis=0).max()
    if resid > 1e-8 * max(1.0, cond):
        raise np.linalg.LinAlgError(
            f"matrix is singular to working precision (residual {resid:.3e})"
        )
    return X


def jacobi_eigensystem(
    a: np.ndarray,
    tol: float = 1e-12,
    max_sweeps: int = 60,
) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic Jacobi rotations for a dense symmetric matrix.

    Sweeps over all strictly upper positions, rotating each away, until the
    off-diagonal Frobenius norm drops below ``tol`` times the Frobenius norm
    of the input. Returns ``(w, V)`` with eigenvalues ascending and
    orthonormal eigenvector columns satisfying A V = V diag(w).
    """
    A = np.array(a, dtype=float, copy=True)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {A.shape}")
    n = A.shape[0]
    scale = np.linalg.norm(A, "fro")
    if np.abs(A - A.T).max() > 1e-12 * max(1.0, float(np.abs(A).max())):
        raise ValueError("matrix is not symmetric to 1e-12")
    A = 0.5 * (A + A.T)
    V = np.eye(n)
    if n == 1:
        return A.diagonal().copy(), V
    target = tol * max(scale, np.finfo(float).tiny)
    off_mask = ~np.eye(n, dtype=bool)

    def off_norm() -> float:
        # summed directly; the difference ||A||_F^2 - sum(diag^2) would lose
        # the target digits to cancellation
        return float(np.sqrt((A[off_mask] ** 2).sum()))

    for _ in range(max_sweeps):
        if off_norm() <= target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if abs(apq) <= 0.1 * target / n:
                    continue
                tau = (A[q, q] - A[p, p]) / (2.0 * apq)
                t = np.sign(tau) / (abs(tau) + np.hypot(1.0, tau)) if tau != 0 else 1.0
                c = 1.0 / np.hypot(1.0, t)
                s = t * c
                # similarity rotation in the (p, q) plane
                col_p = A[:, p].copy()
                col_q = A[:, q].copy()
                A[:, p] = c * col_p - s * col_q
                A[:, q] = s * col_p + c * col_q
                row_p = A[p, :].copy()
                row_q = A[q, :].copy()
                A[p, :] = c * row_p - s * row_q
                A[q, :] = s * row_p + c * row_q
                A[p, q] = 0.0
                A[q, p] = 0.0
                vc_p = V[:, p].copy()
                V[:, p] = c * vc_p - s * V[:, q]
                V[:, q] = s * vc_p + c * V[:, q]
    if off_norm() > target:
        raise ArithmeticError(
            f"Jacobi iteration did not converge in {max_sweeps} sweeps"
        )
    w = A.diagonal().copy()
    order = np.argsort(w, kind="stable")
    return w[order], V[:, order]


def symmetric_spectrum(a: np.ndarray) -> np.ndarray:
    """All eigenvalues of a symmetric matrix, ascending (Jacobi iteration)."""
    return jacobi_eigensystem(a)[0]


def determinant_fraction_free(a: np.ndarray) -> Fraction:
    """Exact determinant via fraction-free (Bareiss) elimination.

    Floating inputs are binary rationals, so the result is the exact
    determinant of the stored matrix. Intended for small N only; entry sizes
    grow quickly.
    """
    A = np.asarray(a, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {A.shape}")
    n = A.shape[0]
    M = [[Fraction(A[i, j]) for j in range(n)] for i in range(n)]
    prev = Fraction(1)
    for k in range(n - 1):
        if M[k][k] == 0:
            # Bareiss needs nonzero leading minors; fall back to expansion
            # along column k to keep exactness.
            return _determinant_expansion(M)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev
            M[i][k] = Fraction(0)
        prev = M[k][k]
    return M[n - 1][n - 1]


def _determinant_expansion(M: list[list[Fraction]]) -> Fraction:
    n = len(M)
    if n == 1:
        return M[0][0]
    total = Fraction(0)
    for c in range(n):
        if M[0][c] == 0:
            continue
        minor = [row[:c] + row[c + 1 :] for row in M[1:]]
        term = M[0][c] * _determinant_expansion(minor)
        total += term if c % 2 == 0 else -term
    return total
