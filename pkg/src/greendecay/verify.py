"""Self-contained invariant sweep behind ``greendecay verify``.

Runs the library's structural identities on a random strongly dominant
ensemble and prints one pass/fail line per check. The pytest suite covers
the same ground (and more) with frozen expected values; this entry point
exists so an installed CLI can re-validate itself without the test tree.
"""

from __future__ import annotations

import numpy as np

from .banded import dominance_mu, from_dense
from .bounds import lu_bound, varah_bound
from .ensembles import dominant_ensemble
from .green import reconstruct_lower
from .lu import inverse_green_generators, p_tail_cross_check, schur_complement, structured_lu
from .oracle import dense_inverse, dense_lu_no_pivot

__all__ = ["run_all"]


def _sample_steps(n: int, r: int) -> list[int]:
    steps = {1, max(1, (n - r) // 2), n - r - 1}
    return sorted(s for s in steps if 1 <= s <= n - r - 1)


def run_all(trials: int = 20, seed: int = 20260810, verbose: bool = True) -> bool:
    """Run every invariant check; returns True when all pass."""
    mats = dominant_ensemble(trials, seed, n_max=80, r_max=6)
    ctx = []
    for A in mats:
        slu = structured_lu(A)
        gens = inverse_green_generators(A)
        inv = dense_inverse(A.data)
        rep = dominance_mu(A)
        ctx.append((A, slu, gens, inv, rep))

    checks = []

    def check(name: str, worst: float, limit: float) -> None:
        ok = worst <= limit
        checks.append(ok)
        if verbose:
            tag = "PASS" if ok else "FAIL"
            print(f"{tag} {name}: worst {worst:.3e} (limit {limit:.1e})")

    worst = 0.0
    for A, slu, _, _, _ in ctx:
        resid = np.abs(slu.lower_factor() @ slu.R - A.data).sum(axis=0).max()
        worst = max(worst, resid / np.abs(A.data).sum(axis=0).max())
    check("factorization residual |LR - A|_1 / |A|_1", worst, 1e-11)

    worst = 0.0
    for A, slu, _, _, _ in ctx:
        _, R_ref = dense_lu_no_pivot(A.data)
        scale = np.abs(A.data).sum(axis=0).max()
        worst = max(worst, np.abs(slu.R - R_ref).max() / scale)
    check("structured R vs dense elimination", worst, 1e-10)

    worst = 0.0
    for A, slu, _, _, rep in ctx:
        for k in range(1, A.n - A.r_lower + 1):
            worst = max(worst, np.abs(slu.f[k - 1]).sum() - rep.mu)
    check("multiplier norms |f_k|_1 - mu", worst, 1e-12)

    worst = 0.0
    for A, slu, _, _, rep in ctx:
        lower = (1.0 - rep.mu**2) * np.abs(A.data.diagonal())
        worst = max(worst, float((lower - np.abs(slu.gamma)).max()))
    check("pivot floor (1-mu^2)|A(k,k)| - |gamma_k|", worst, 1e-12)

    worst = 0.0
    for A, slu, _, _, rep in ctx:
        for ell in _sample_steps(A.n, A.r_lower):
            T = schur_complement(A, ell)
            m = A.n - ell
            S = from_dense(
                T,
                r_lower=min(A.r_lower, m - 1),
                r_upper=min(A.r_upper, m - 1),
            )
            worst = max(worst, dominance_mu(S).mu - rep.mu)
    check("Schur complement mu inheritance", worst, 1e-12)

    worst = 0.0
    for A, slu, gens, _, _ in ctx:
        n, r = A.n, A.r_lower
        for ell in _sample_steps(n, r):
            if n - ell <= r:
                continue
            T = from_dense(
                schur_complement(A, ell), r_lower=r, r_upper=min(A.r_upper, n - ell - 1)
            )
            sub = inverse_green_generators(T)
            diffs = [np.abs(sub.p(i) - gens.p(i + ell)).max() for i in range(1, n - ell - r + 1)]
            diffs += [np.abs(sub.a(i) - gens.a(i + ell)).max() for i in range(1, n - ell - r + 1)]
            diffs.append(np.abs(sub.p(n - ell - r + 1) - gens.p(n - r + 1)).max())
            worst = max(worst, max(diffs))
    check("generator suffix property", worst, 1e-10)

    worst = 0.0
    for A, _, gens, inv, _ in ctx:
        values, mask = reconstruct_lower(gens)
        err = np.abs(values - inv)[mask].max()
        worst = max(worst, err / np.abs(inv).sum(axis=0).max())
    check("inverse reconstruction on represented region", worst, 1e-10)

    worst = 0.0
    for A, slu, gens, _, _ in ctx:
        alt = p_tail_cross_check(slu)
        ref = gens.p(A.n - A.r_lower + 1)
        worst = max(worst, np.abs(alt - ref).max() / max(1.0, np.abs(ref).max()))
    check("trailing generator cross-check", worst, 1e-12)

    worst = 0.0
    for A, _, _, inv, _ in ctx:
        b = lu_bound(A)
        d = np.subtract.outer(np.arange(A.n), np.arange(A.n))
        envelope = b.M * np.where(d == 0, 1.0, b.gamma ** np.maximum(d, 0))
        lower = d >= 0
        excess = (np.abs(inv) - envelope * (1.0 + 1e-12))[lower].max()
        worst = max(worst, excess)
    check("LU bound soundness on the lower part", worst, 0.0)

    worst = 0.0
    for A, _, _, inv, _ in ctx:
        v = varah_bound(A)
        worst = max(worst, np.abs(inv).sum(axis=0).max() - v * (1.0 + 1e-12))
    check("Varah bound vs reference inverse 1-norm", worst, 0.0)

    ok = all(checks)
    if verbose:
        print(f"{'ALL CHECKS PASSED' if ok else 'CHECK FAILURES PRESENT'} "
              f"({sum(checks)}/{len(checks)})")
    return ok
