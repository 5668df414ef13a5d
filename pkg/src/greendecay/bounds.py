"""Computable exponential decay bounds for entries of banded-matrix inverses.

All bound families share one evaluable shape: a pair (M, gamma) with a region
predicate, yielding a geometric envelope on |A^{-1}(i, j)|.

LU family (from the strong dominance condition, mu < 1, bandwidth r):

    |A^{-1}(i, j)| <= M * gamma^(i-j)  for i >= j,
    gamma = mu^(1/r),
    M = (1 + mu^2) / ((1 - mu) (1 - mu^2) min_k |A(k, k)|).

QR family (from a 2-norm dominance constant K):

    delta = 2/K,  mu = delta / sqrt(1 + delta^2),
    M = 2 mu + 1,  gamma = (mu r sqrt(r))^(1/r),  region i >= j.

Varah:       ||A^{-1}||_1 <= 1 / ((1 - mu) min_k |A(k, k)|) — a flat
             entrywise envelope.
DMS:         rate lambda0 = ((sqrt(b/a)-1)/(sqrt(b/a)+1))^(1/r) for SPD
             spectrum in [a, b]; lambda1 = ((b/a-1)/(b/a+1))^(1/2r) for
             symmetric indefinite spectrum in [-b,-a] u [a,b]. The
             multiplicative constant is advisory (default 1/a); these bounds
             are rate-authoritative only.
Frommer:     C = 2/lambda_1, q1 = (sqrt(ke)-1)/(sqrt(ke)+1) with effective
             condition number ke = lambda_{N-1}/lambda_1; value
             C * q1^(|i-j|/r - 1) on |i-j| >= r.
Chui-Hasson: rate ((b-a)/(b+a))^(1/2r), no computable constant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .banded import BandedMatrix, dominance_mu
from .errors import DominanceError, HypothesisError

__all__ = [
    "DecayBound",
    "QRHypothesisReport",
    "lu_bound",
    "eval_bound",
    "varah_bound",
    "qr_bound",
    "dms_rate",
    "frommer_bound",
    "chui_hasson_rate",
]

KINDS = ("LU", "QR", "DMS-SPD", "DMS-indefinite", "Frommer", "ChuiHasson", "Varah")


@dataclass(frozen=True)
class DecayBound:
    """A geometric envelope (M, gamma) on |A^{-1}(i, j)| over a region.

    ``M`` is absent for constant-free families (Chui-Hasson);
    ``rate_authoritative`` marks families whose constant is advisory (DMS).
    Evaluate with :func:`eval_bound`.
    """

    kind: str
    gamma: float
    r: int
    M: float | None = None
    region: str = "i >= j"
    rate_authoritative: bool = False
    constant_free: bool = False

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown bound kind {self.kind!r}")
        if not 0.0 <= self.gamma < 1.0:
            raise ValueError(f"decay rate must satisfy 0 <= gamma < 1, got {self.gamma}")
        if self.M is not None and not self.M > 0.0:
            raise ValueError(f"constant must be positive, got {self.M}")


def eval_bound(bound: DecayBound, i: int, j: int) -> float | None:
    """Value of the bound at 1-based (i, j), or None outside its region.

    Chui-Hasson returns the bare rate power gamma^|i-j| (constant-free).
    """
    d = i - j
    if bound.kind in ("LU", "QR"):
        if d < 0:
            return None
    elif bound.kind == "Frommer":
        d = abs(d)
        if d < bound.r:
            return None
        d -= bound.r  # M * gamma^(|i-j| - r) == C * q1^(|i-j|/r - 1)
    elif bound.kind == "Varah":
        d = 0
    else:  # DMS-SPD, DMS-indefinite, ChuiHasson: symmetric region
        d = abs(d)
    base = 1.0 if bound.M is None else bound.M
    return base if d == 0 else base * bound.gamma**d


def lu_bound(A: BandedMatrix) -> DecayBound:
    """LU-based envelope M * gamma^(i-j) on the lower part i >= j.

    Requires the strong dominance condition with mu < 1 (checked via
    :func:`dominance_mu`); raises DominanceError carrying the computed mu
    otherwise. The degenerate mu = 0 (diagonal matrix) yields gamma = 0 and
    M = 1/min|A(k,k)|, exact on the diagonal.
    """
    rep = dominance_mu(A)
    if not rep.satisfied:
        raise DominanceError(rep.mu, rep.zero_diagonal_index)
    mu = rep.mu
    r = A.r_lower
    gamma = mu ** (1.0 / r)
    M = (1.0 + mu**2) / ((1.0 - mu) * (1.0 - mu**2) * rep.min_diag)
    return DecayBound("LU", gamma, r, M=M, region="i >= j")


def varah_bound(A: BandedMatrix) -> float:
    """Bound 1/((1-mu) min|A(k,k)|) on ||A^{-1}||_1 (hence on every entry)."""
    rep = dominance_mu(A)
    if not rep.satisfied:
        raise DominanceError(rep.mu, rep.zero_diagonal_index)
    return 1.0 / ((1.0 - rep.mu) * rep.min_diag)


@dataclass(frozen=True)
class QRHypothesisReport:
    """Derived constants and hypothesis status of the QR-based bound.

    ``k_threshold_met`` checks K against the two computable threshold terms
    4(3 + 2 C0 r sqrt(r)) and 2 sqrt(r^3 ((sqrt(3)+1)/2)^(2r) - 1); the third
    term depends on an undefined constant and is excluded, which
    ``x0_term_unchecked`` records.
    """

    C0: float
    K: float
    delta: float
    mu: float
    M: float
    gamma: float
    k_threshold_met: bool
    x0_term_unchecked: bool = True


def _qr_row_energy(A: BandedMatrix) -> float:
    """max over k = 1..N-r of sum_{i<k} sum_{j>k} A(i, j)^2."""
    n = A.n
    W2 = A.data**2
    row_tot = W2.sum(axis=1)
    row_pref = np.cumsum(row_tot)
    cum_cols = np.cumsum(W2, axis=1)  # cum_cols[i, j] = sum_{c <= j} W2[i, c]
    cum_both = np.cumsum(cum_cols, axis=0)
    best = 0.0
    for k in range(2, n - A.r_lower + 1):  # k = 1 contributes an empty sum
        s = row_pref[k - 2] - cum_both[k - 2, k - 1]
        best = max(best, float(s))
    return best


def qr_bound(
    A: BandedMatrix,
    c0: float | None = None,
    k_const: float | None = None,
) -> tuple[QRHypothesisReport, DecayBound]:
    """QR-based envelope with hypothesis report.

    Parameters
    ----------
    A : BandedMatrix
    c0 : float, optional
        Row-block energy constant; computed from A when omitted.
    k_const : float, optional
        Dominance constant K in |A(k,k)| >= K * s_k + 1, where s_k is the
        2-norm of the off-diagonal column segment (full upper part plus the
        r rows below the diagonal). When omitted, the largest feasible K is
        used. Supplying an infeasible K raises HypothesisError.

    Raises
    ------
    HypothesisError
        If no positive K is feasible, or the resulting rate
        (mu r sqrt(r))^(1/r) is >= 1 (rate-degenerate).
    """
    n, r = A.n, A.r_lower
    diag = np.abs(A.data.diagonal())
    W2 = A.data**2
    col_tot = W2.sum(axis=0)
    # below-band entries are exactly zero, so the hypothesis sum is the full
    # column sum of squares minus the diagonal term
    s = np.sqrt(np.maximum(col_tot - A.data.diagonal() ** 2, 0.0))

    if c0 is None:
        c0 = _qr_row_energy(A)
    if k_const is None:
        if np.any(diag <= 1.0):
            worst = int(np.argmin(diag)) + 1
            raise HypothesisError(
                f"|A(k,k)| must exceed 1 for a feasible K; column {worst} has "
                f"|A(k,k)| = {diag[worst - 1]!r}"
            )
        active = s > 0.0
        k_const = float(((diag - 1.0)[active] / s[active]).min()) if active.any() else math.inf
    else:
        slack = diag - k_const * s - 1.0
        if np.any(slack < -1e-12 * np.maximum(1.0, diag)):
            worst = int(np.argmin(slack)) + 1
            raise HypothesisError(
                f"supplied K = {k_const} violates |A(k,k)| >= K*s_k + 1 at column {worst}"
            )
    if k_const <= 0.0:
        raise HypothesisError(f"dominance constant K must be positive, got {k_const}")

    delta = 0.0 if math.isinf(k_const) else 2.0 / k_const
    mu = delta / math.sqrt(1.0 + delta**2)
    M = 2.0 * mu + 1.0
    gamma_pow = mu * r * math.sqrt(r)
    if gamma_pow >= 1.0:
        raise HypothesisError(
            f"rate degenerate: (mu r sqrt(r))^(1/r) = {gamma_pow ** (1.0 / r):.6g} >= 1"
        )
    gamma = gamma_pow ** (1.0 / r)
    t_energy = 4.0 * (3.0 + 2.0 * c0 * r * math.sqrt(r))
    t_band = 2.0 * math.sqrt(r**3 * ((math.sqrt(3.0) + 1.0) / 2.0) ** (2 * r) - 1.0)
    report = QRHypothesisReport(
        C0=float(c0),
        K=float(k_const),
        delta=delta,
        mu=mu,
        M=M,
        gamma=gamma,
        k_threshold_met=bool(k_const >= max(t_energy, t_band)),
    )
    return report, DecayBound("QR", gamma, r, M=M, region="i >= j")


def dms_rate(
    a: float,
    b: float,
    r: int,
    definite: bool = True,
    constant: float | None = None,
) -> DecayBound:
    """Polynomial-approximation decay rate for symmetric spectra.

    ``definite=True``: spectrum in [a, b], 0 < a <= b, rate
    ((sqrt(b/a)-1)/(sqrt(b/a)+1))^(1/r). ``definite=False``: spectrum in
    [-b, -a] u [a, b], rate ((b/a-1)/(b/a+1))^(1/2r). The literature's
    multiplicative constant lives outside this rate; the returned bound uses
    max(1/a, constant) (default 1/a) and is flagged rate-authoritative.
    """
    if not 0.0 < a <= b:
        raise ValueError(f"need spectrum endpoints 0 < a <= b, got a={a}, b={b}")
    kappa = b / a
    if definite:
        root = math.sqrt(kappa)
        rate = ((root - 1.0) / (root + 1.0)) ** (1.0 / r)
        kind = "DMS-SPD"
    else:
        rate = ((kappa - 1.0) / (kappa + 1.0)) ** (1.0 / (2 * r))
        kind = "DMS-indefinite"
    C = 1.0 / a if constant is None else max(1.0 / a, constant)
    return DecayBound(kind, rate, r, M=C, region="all", rate_authoritative=True)


def frommer_bound(lambda1: float, lambda_nm1: float, r: int) -> DecayBound:
    """Effective-condition-number envelope C * q1^(|i-j|/r - 1) on |i-j| >= r.

    ``lambda1`` is the smallest and ``lambda_nm1`` the second-largest
    eigenvalue (so one large outlier does not spoil the rate);
    C = 2/lambda1 and q1 = (sqrt(ke)-1)/(sqrt(ke)+1), ke = lambda_nm1/lambda1.
    """
    if not 0.0 < lambda1 <= lambda_nm1:
        raise ValueError(
            f"need 0 < lambda1 <= lambda_(N-1), got {lambda1}, {lambda_nm1}"
        )
    ke = lambda_nm1 / lambda1
    root = math.sqrt(ke)
    q1 = (root - 1.0) / (root + 1.0)
    return DecayBound(
        "Frommer",
        q1 ** (1.0 / r),
        r,
        M=2.0 / lambda1,
        region=f"|i-j| >= {r}",
    )


def chui_hasson_rate(a: float, b: float, r: int) -> DecayBound:
    """Rate-only envelope ((b-a)/(b+a))^(1/2r) for spectra in [-b,-a] u [a,b].

    No computable constant exists for this family; :func:`eval_bound`
    returns the bare rate power.
    """
    if not 0.0 < a <= b:
        raise ValueError(f"need spectrum endpoints 0 < a <= b, got a={a}, b={b}")
    rate = ((b - a) / (b + a)) ** (1.0 / (2 * r))
    return DecayBound("ChuiHasson", rate, r, M=None, region="all", constant_free=True)
