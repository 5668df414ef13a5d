import math

import numpy as np
import pytest

import greendecay as gd


def one_norm(M):
    return np.abs(M).sum(axis=0).max()


class TestLuBound:
    def test_ex1a_constants(self, ex1a_matrix):
        b = gd.lu_bound(ex1a_matrix)
        assert b.gamma == pytest.approx(0.24 ** (1.0 / 3.0), abs=1e-15)
        want_M = (1.0 + 0.24**2) / ((1.0 - 0.24) * (1.0 - 0.24**2) * 6.25)
        assert b.M == pytest.approx(want_M, rel=1e-15)
        assert b.M == pytest.approx(0.23626, abs=5e-6)

    def test_tridiagonal_constants(self):
        A = gd.make_banded(6, 1, 1, lambda i, j: 4.0 if i == j else -1.0)
        b = gd.lu_bound(A)
        assert b.gamma == 0.5
        assert b.M == pytest.approx(1.25 / (0.5 * 0.75 * 4.0), rel=1e-15)

    def test_diagonal_degenerate_case(self):
        A = gd.from_dense(2.0 * np.eye(5))
        b = gd.lu_bound(A)
        assert b.gamma == 0.0
        assert b.M == 0.5
        assert gd.eval_bound(b, 3, 3) == 0.5  # equals the exact inverse entry
        assert gd.eval_bound(b, 4, 3) == 0.0

    def test_rejects_non_dominant_and_carries_mu(self):
        A = gd.make_banded(4, 1, 1, lambda i, j: 1.0)
        with pytest.raises(gd.DominanceError) as err:
            gd.lu_bound(A)
        assert err.value.mu == 2.0


class TestEvalBound:
    def test_ex1a_value_at_distance_three(self, ex1a_matrix):
        b = gd.lu_bound(ex1a_matrix)
        # gamma^3 == mu, so the value is M * mu
        assert gd.eval_bound(b, 4, 1) == pytest.approx(b.M * 0.24, rel=1e-12)
        assert gd.eval_bound(b, 4, 1) == pytest.approx(0.0567035, abs=1e-6)

    def test_value_on_diagonal_is_m(self, ex1a_matrix):
        b = gd.lu_bound(ex1a_matrix)
        assert gd.eval_bound(b, 7, 7) == b.M

    def test_not_applicable_above_diagonal(self, ex1a_matrix):
        b = gd.lu_bound(ex1a_matrix)
        assert gd.eval_bound(b, 1, 2) is None

    def test_frommer_exponent_convention(self):
        b = gd.frommer_bound(1.0, 4.0, 1)
        # C q1^(|i-j|/r - 1) with C = 2, q1 = 1/3
        assert gd.eval_bound(b, 2, 1) == pytest.approx(2.0, rel=1e-15)
        assert gd.eval_bound(b, 4, 1) == pytest.approx(2.0 / 9.0, rel=1e-12)

    def test_nonincreasing_in_distance(self, ex1a_matrix):
        b = gd.lu_bound(ex1a_matrix)
        values = [gd.eval_bound(b, i, 1) for i in range(1, 51)]
        assert all(x >= y for x, y in zip(values, values[1:]))
        f = gd.frommer_bound(2.0, 9.0, 2)
        fv = [gd.eval_bound(f, i, 1) for i in range(3, 40)]
        assert all(x >= y for x, y in zip(fv, fv[1:]))


class TestVarah:
    def test_ex1a_value(self, ex1a_matrix):
        assert gd.varah_bound(ex1a_matrix) == pytest.approx(1.0 / (0.76 * 6.25), rel=1e-15)

    def test_diagonal_is_tight(self):
        A = gd.from_dense(2.0 * np.eye(4))
        assert gd.varah_bound(A) == 0.5  # equals ||A^{-1}||_1 exactly

    def test_dominates_reference_inverse_norm(self):
        A = gd.make_banded(10, 1, 1, lambda i, j: 4.0 if i == j else -1.0)
        v = gd.varah_bound(A)
        assert v == 0.5
        assert one_norm(gd.dense_inverse(A.data)) <= v

    def test_rejects_non_dominant(self):
        A = gd.make_banded(4, 1, 1, lambda i, j: 1.0)
        with pytest.raises(gd.DominanceError):
            gd.varah_bound(A)


class TestQrBound:
    def test_supplied_k_order_one(self):
        A = gd.from_dense(30.0 * np.eye(4) + np.eye(4, k=-1))
        report, bound = gd.qr_bound(A, k_const=20.0)
        assert report.delta == pytest.approx(0.1, rel=1e-15)
        assert report.mu == pytest.approx(0.09950371902099893, rel=1e-12)
        assert report.M == pytest.approx(1.199007438041998, rel=1e-12)
        assert bound.gamma == pytest.approx(report.mu, rel=1e-15)  # r = 1

    def test_large_k_limit(self):
        A = gd.from_dense(1e13 * np.eye(3) + np.eye(3, k=-1))
        report, bound = gd.qr_bound(A, k_const=1e12)
        assert report.mu == pytest.approx(0.0, abs=2e-12)
        assert report.M == pytest.approx(1.0, abs=5e-12)
        assert bound.gamma == pytest.approx(0.0, abs=2e-12)

    def test_supplied_k_order_two(self):
        W = 30.0 * np.eye(5) + 0.1 * np.eye(5, k=-2)
        A = gd.from_dense(W, r_lower=2, r_upper=0)
        report, bound = gd.qr_bound(A, k_const=10.0)
        assert report.mu == pytest.approx(0.19611613513818402, rel=1e-12)
        assert bound.gamma == pytest.approx(0.7447819789879647, rel=1e-12)

    def test_auto_k_is_largest_feasible(self):
        W = np.array([[5.0, 0.0], [2.0, 5.0]])
        A = gd.from_dense(W)
        report, _ = gd.qr_bound(A)
        # |A(1,1)| = 5 >= K * 2 + 1  =>  K = 2
        assert report.K == pytest.approx(2.0, rel=1e-15)

    def test_infeasible_supplied_k_rejected(self):
        A = gd.from_dense(np.array([[5.0, 0.0], [2.0, 5.0]]))
        with pytest.raises(gd.HypothesisError, match="violates"):
            gd.qr_bound(A, k_const=3.0)

    def test_small_diagonal_rejected(self):
        A = gd.from_dense(np.array([[1.0, 0.0], [0.5, 1.0]]))
        with pytest.raises(gd.HypothesisError, match="exceed 1"):
            gd.qr_bound(A)

    def test_degenerate_rate_rejected(self, ex1a_matrix):
        with pytest.raises(gd.HypothesisError, match="degenerate"):
            gd.qr_bound(ex1a_matrix)

    def test_threshold_flag_and_x0_marker(self):
        A = gd.from_dense(1e4 * np.eye(4) + np.eye(4, k=-1))
        report, _ = gd.qr_bound(A)
        assert report.x0_term_unchecked
        c0 = report.C0
        t_energy = 4.0 * (3.0 + 2.0 * c0)
        t_band = 2.0 * math.sqrt(((math.sqrt(3.0) + 1.0) / 2.0) ** 2 - 1.0)
        assert report.k_threshold_met == (report.K >= max(t_energy, t_band))
        assert report.k_threshold_met  # K ~ 1e4 clears both terms

    def test_c0_matches_direct_double_sum(self):
        rng = np.random.default_rng(8)
        for _ in range(4):
            n = int(rng.integers(6, 30))
            W = rng.uniform(-1.0, 1.0, (n, n))
            W = np.where(np.subtract.outer(np.arange(n), np.arange(n)) <= 2, W, W * 0)
            np.fill_diagonal(W, 50.0)
            A = gd.from_dense(W, r_lower=2, r_upper=n - 1)
            report, _ = gd.qr_bound(A)
            W2 = A.data**2
            want = 0.0
            for k in range(1, n - 2 + 1):
                want = max(want, W2[: k - 1, k:].sum())
            assert report.C0 == pytest.approx(want, rel=1e-12, abs=1e-15)


class TestDmsRate:
    def test_perfectly_conditioned(self):
        assert gd.dms_rate(2.0, 2.0, 3).gamma == 0.0

    def test_definite_rate(self):
        b = gd.dms_rate(1.0, 9.0, 1, definite=True)
        assert b.gamma == pytest.approx(0.5, rel=1e-15)
        assert b.kind == "DMS-SPD"
        assert b.rate_authoritative

    def test_indefinite_rate(self):
        b = gd.dms_rate(1.0, 9.0, 1, definite=False)
        assert b.gamma == pytest.approx(math.sqrt(0.8), rel=1e-15)
        assert b.kind == "DMS-indefinite"

    def test_default_constant_is_reciprocal_lower_endpoint(self):
        b = gd.dms_rate(4.0, 8.0, 2)
        assert b.M == 0.25
        assert gd.dms_rate(4.0, 8.0, 2, constant=1.0).M == 1.0
        assert gd.dms_rate(4.0, 8.0, 2, constant=0.01).M == 0.25  # never below 1/a

    @pytest.mark.parametrize("a,b", [(0.0, 1.0), (-1.0, 2.0), (3.0, 2.0)])
    def test_rejects_bad_interval(self, a, b):
        with pytest.raises(ValueError):
            gd.dms_rate(a, b, 1)


class TestFrommer:
    def test_equal_eigenvalues_collapse(self):
        b = gd.frommer_bound(2.0, 2.0, 1)
        assert b.gamma == 0.0
        assert gd.eval_bound(b, 2, 1) == b.M  # |i-j| = r
        assert gd.eval_bound(b, 3, 1) == 0.0

    def test_reference_constants(self):
        b = gd.frommer_bound(1.0, 4.0, 1)
        assert b.M == 2.0
        assert b.gamma == pytest.approx(1.0 / 3.0, rel=1e-15)

    def test_inside_band_not_applicable(self):
        b = gd.frommer_bound(1.0, 4.0, 3)
        assert gd.eval_bound(b, 2, 1) is None
        assert gd.eval_bound(b, 4, 1) is not None

    def test_rejects_nonpositive_smallest_eigenvalue(self):
        with pytest.raises(ValueError):
            gd.frommer_bound(0.0, 4.0, 1)
        with pytest.raises(ValueError):
            gd.frommer_bound(-1.0, 4.0, 1)


class TestChuiHasson:
    def test_equal_endpoints(self):
        assert gd.chui_hasson_rate(3.0, 3.0, 2).gamma == 0.0

    def test_reference_rate(self):
        b = gd.chui_hasson_rate(1.0, 3.0, 1)
        assert b.gamma == pytest.approx(math.sqrt(0.5), rel=1e-15)
        assert b.M is None and b.constant_free
        assert gd.eval_bound(b, 3, 1) == pytest.approx(0.5, rel=1e-12)

    def test_matches_indefinite_rate_for_unit_interval(self):
        # spectrum [-(1+mu), -(1-mu)] u [1-mu, 1+mu]: both rates reduce to mu^(1/2r)
        for r in (1, 2, 3):
            for mu in (0.1, 0.5, 0.9):
                ch = gd.chui_hasson_rate(1.0 - mu, 1.0 + mu, r).gamma
                dms = gd.dms_rate(1.0 - mu, 1.0 + mu, r, definite=False).gamma
                assert ch == pytest.approx(dms, abs=1e-12)
                assert ch == pytest.approx(mu ** (1.0 / (2 * r)), rel=1e-12)

    def test_rejects_bad_interval(self):
        with pytest.raises(ValueError):
            gd.chui_hasson_rate(0.0, 1.0, 1)


class TestRateComparisons:
    MUS = np.arange(0.05, 0.96, 0.05)

    def test_definite_rate_beats_dominance_rate(self):
        # ((1 - sqrt(1-mu^2))/mu)^(1/r) <= mu^(1/r) on the whole grid
        for mu in self.MUS:
            lam0_pow = (1.0 - math.sqrt(1.0 - mu**2)) / mu
            assert lam0_pow <= mu + 1e-15

    def test_indefinite_rate_loses_to_dominance_rate(self):
        for mu in self.MUS:
            assert math.sqrt(mu) >= mu

    def test_rates_from_gershgorin_interval(self):
        # with spectrum bounds a = 1 - mu, b = 1 + mu the formulas reduce to
        # closed forms in mu alone
        for r in (1, 2, 3):
            for mu in self.MUS:
                lam0 = gd.dms_rate(1.0 - mu, 1.0 + mu, r, definite=True).gamma
                want = ((1.0 - math.sqrt(1.0 - mu**2)) / mu) ** (1.0 / r)
                assert lam0 == pytest.approx(want, rel=1e-12)
                assert lam0 <= mu ** (1.0 / r) + 1e-12


class TestSoundness:
    def test_lu_bound_never_violated(self):
        # mixed-sign, one- and two-sided dominant matrices
        mats = gd.dominant_ensemble(100, seed=31337, n_max=150, r_max=6)
        for A in mats:
            inv = gd.dense_inverse(A.data)
            b = gd.lu_bound(A)
            d = np.subtract.outer(np.arange(A.n), np.arange(A.n))
            with np.errstate(over="ignore"):
                envelope = b.M * np.where(d == 0, 1.0, b.gamma ** np.maximum(d, 0))
            lower = d >= 0
            assert np.all(np.abs(inv)[lower] <= envelope[lower] * (1.0 + 1e-12))
            assert one_norm(inv) <= gd.varah_bound(A) * (1.0 + 1e-12)
