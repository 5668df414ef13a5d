import numpy as np
import pytest

import greendecay as gd


def one_norm(M):
    return np.abs(M).sum(axis=0).max()


class TestFactorization:
    def test_two_by_two(self, lower2x2):
        slu = gd.structured_lu(lower2x2)
        np.testing.assert_array_equal(slu.gamma, [2.0, 2.0])
        np.testing.assert_array_equal(slu.f[0], [0.5])
        np.testing.assert_array_equal(slu.R, [[2.0, 0.0], [0.0, 2.0]])

    def test_tridiagonal(self, tridiag3):
        slu = gd.structured_lu(tridiag3)
        np.testing.assert_allclose(slu.gamma, [4.0, 3.75, 56.0 / 15.0], rtol=1e-15)
        np.testing.assert_allclose(slu.f[0], [-0.25], rtol=1e-15)
        np.testing.assert_allclose(slu.f[1], [-1.0 / 3.75], rtol=1e-15)

    def test_identity(self):
        slu = gd.structured_lu(gd.from_dense(np.eye(5)))
        np.testing.assert_array_equal(slu.gamma, np.ones(5))
        assert all(np.all(f == 0.0) for f in slu.f)
        np.testing.assert_array_equal(slu.R, np.eye(5))

    def test_zero_pivot_raises_with_index(self):
        A = gd.from_dense(np.array([[0.0, 1.0], [1.0, 0.0]]))
        with pytest.raises(gd.ZeroPivotError) as err:
            gd.structured_lu(A)
        assert err.value.k == 1

    def test_matches_dense_oracle_on_ensemble(self, small_ensemble):
        for A in small_ensemble:
            slu = gd.structured_lu(A)
            scale = one_norm(A.data)
            assert one_norm(slu.lower_factor() @ slu.R - A.data) <= 1e-11 * scale
            _, R_ref = gd.dense_lu_no_pivot(A.data)
            assert np.abs(slu.R - R_ref).max() <= 1e-10 * scale

    def test_lower_factor_band_structure(self, small_ensemble):
        # column k of L is nonzero only in rows k .. k+r
        for A in small_ensemble[:6]:
            L = gd.structured_lu(A).lower_factor()
            d = np.subtract.outer(np.arange(A.n), np.arange(A.n))
            assert np.all(L[d > A.r_lower] == 0.0)
            assert np.all(np.tril(L, -1)[d < 0] == 0.0)

    def test_r_is_upper_triangular(self, small_ensemble):
        for A in small_ensemble[:6]:
            R = gd.structured_lu(A).R
            assert np.all(np.tril(R, -1) == 0.0)


class TestLInverseGenerators:
    def test_two_by_two_partition(self, lower2x2):
        lg = gd.linv_generators(gd.structured_lu(lower2x2))
        np.testing.assert_array_equal(lg.p(1), [[1.0]])
        assert lg.d(1) == 0.0
        np.testing.assert_array_equal(lg.a(1), [[-0.5]])
        np.testing.assert_array_equal(lg.q(1), [[1.0]])

    def test_identity_gives_pure_shift(self):
        A = gd.from_dense(np.eye(6))
        lg = gd.linv_generators(gd.structured_lu(A))
        # with zero multipliers the transition matrix is the upper shift
        np.testing.assert_array_equal(lg.a(1), np.eye(1, 1, 1))

    def test_identity_order_three_shift(self):
        W = np.eye(7)
        A = gd.BandedMatrix(7, 3, 0, W)
        lg = gd.linv_generators(gd.structured_lu(A))
        np.testing.assert_array_equal(lg.a(2), np.eye(3, k=1))
        np.testing.assert_array_equal(lg.corner, np.eye(3))

    def test_tridiagonal_a_value(self, tridiag3):
        lg = gd.linv_generators(gd.structured_lu(tridiag3))
        np.testing.assert_allclose(lg.a(1), [[0.25]], rtol=1e-15)

    def test_structural_shapes(self, small_ensemble):
        A = small_ensemble[0]
        n, r = A.n, A.r_lower
        lg = gd.linv_generators(gd.structured_lu(A))
        e1 = np.zeros((1, r))
        e1[0, 0] = 1.0
        np.testing.assert_array_equal(lg.p(1), e1)
        er = np.zeros((r, 1))
        er[-1, 0] = 1.0
        np.testing.assert_array_equal(lg.q(n - r), er)
        for i in range(n - r + 1, n):
            s = n - i + 1
            assert lg.tail_p(i).shape == (1, s)
            assert lg.tail_a(i).shape == (s - 1, s)

    def test_a_blocks_have_multiplier_column_plus_shift(self, small_ensemble):
        for A in small_ensemble[:5]:
            slu = gd.structured_lu(A)
            lg = gd.linv_generators(slu)
            r = A.r_lower
            J = np.eye(r, k=1)
            for k in range(1, A.n - r + 1):
                want = J.copy()
                want[:, 0] -= slu.f[k - 1]
                np.testing.assert_array_equal(lg.a(k), want)

    def test_green_view_reconstructs_l_inverse(self, small_ensemble):
        for A in small_ensemble[:8]:
            slu = gd.structured_lu(A)
            values, mask = gd.reconstruct_lower(gd.linv_generators(slu).as_green())
            Linv = np.where(mask, values, 0.0)
            resid = np.abs(slu.lower_factor() @ Linv - np.eye(A.n)).max()
            assert resid <= 1e-12


class TestInverseGenerators:
    def test_two_by_two_values(self, lower2x2):
        gens = gd.inverse_green_generators(lower2x2)
        np.testing.assert_allclose(gens.p(1), [[0.5]], rtol=1e-15)
        np.testing.assert_allclose(gens.q(1), [[1.0]], rtol=1e-15)
        np.testing.assert_allclose(gens.a(1), [[-0.5]], rtol=1e-15)
        np.testing.assert_allclose(gens.p(2), [[0.5]], rtol=1e-15)

    def test_scaled_identity(self):
        A = gd.from_dense(2.0 * np.eye(7))
        gens = gd.inverse_green_generators(A)
        for i in range(1, 7):
            np.testing.assert_array_equal(gens.p(i), [[0.5]])
            np.testing.assert_array_equal(gens.a(i), [[0.0]])
        values, _ = gd.reconstruct_lower(gens)
        np.testing.assert_allclose(np.diag(values), 0.5 * np.ones(7), rtol=1e-15)

    def test_ex1a_region_agreement(self, ex1a_matrix):
        gens = gd.inverse_green_generators(ex1a_matrix)
        values, mask = gd.reconstruct_lower(gens)
        inv = gd.dense_inverse(ex1a_matrix.data)
        assert np.abs(values - inv)[mask].max() <= 1e-10 * one_norm(inv)

    def test_ensemble_region_agreement(self, small_ensemble):
        for A in small_ensemble:
            gens = gd.inverse_green_generators(A)
            values, mask = gd.reconstruct_lower(gens)
            inv = gd.dense_inverse(A.data)
            assert np.abs(values - inv)[mask].max() <= 1e-10 * one_norm(inv)

    def test_row_generators_bounded_by_decay_constant(self, small_ensemble):
        for A in small_ensemble[:10]:
            gens = gd.inverse_green_generators(A)
            M = gd.lu_bound(A).M
            for i in range(1, A.n - A.r_lower + 2):
                assert np.abs(gens.p(i)).max() <= M + 1e-12


class TestTailCrossCheck:
    def test_two_by_two(self, lower2x2):
        slu = gd.structured_lu(lower2x2)
        np.testing.assert_allclose(gd.p_tail_cross_check(slu), [[0.5]], rtol=1e-15)

    def test_identity(self):
        A = gd.BandedMatrix(6, 2, 0, np.eye(6))
        slu = gd.structured_lu(A)
        np.testing.assert_allclose(gd.p_tail_cross_check(slu), np.eye(2), atol=1e-15)

    def test_agrees_with_recursion_on_ensemble(self, small_ensemble):
        for A in small_ensemble:
            slu = gd.structured_lu(A)
            gens = gd.inverse_green_generators(A)
            ref = gens.p(A.n - A.r_lower + 1)
            alt = gd.p_tail_cross_check(slu)
            assert np.abs(alt - ref).max() <= 1e-12 * max(1.0, np.abs(ref).max())


class TestSchurComplement:
    def test_two_by_two(self, lower2x2):
        np.testing.assert_array_equal(gd.schur_complement(lower2x2, 1), [[2.0]])

    def test_tridiagonal(self, tridiag3):
        np.testing.assert_allclose(
            gd.schur_complement(tridiag3, 1), [[3.75, -1.0], [-1.0, 4.0]], rtol=1e-15
        )

    def test_diagonal_matrix_unchanged(self):
        A = gd.from_dense(np.diag([2.0, 3.0, 4.0, 5.0]))
        np.testing.assert_array_equal(gd.schur_complement(A, 2), np.diag([4.0, 5.0]))

    @pytest.mark.parametrize("ell", [0, -1, 100])
    def test_rejects_bad_step_counts(self, ell, tridiag3):
        with pytest.raises(ValueError):
            gd.schur_complement(tridiag3, ell)

    def test_keeps_band_structure_exactly(self, small_ensemble):
        for A in small_ensemble[:6]:
            n, r = A.n, A.r_lower
            ell = (n - r) // 2
            if ell < 1:
                continue
            T = gd.schur_complement(A, ell)
            m = n - ell
            d = np.subtract.outer(np.arange(m), np.arange(m))
            assert np.all(T[d > r] == 0.0)
            assert np.all(T[-d > A.r_upper] == 0.0)

    def test_mu_never_increases_full_sweep(self, small_ensemble):
        # every elimination step, on instances small enough to sweep fully
        for A in small_ensemble[:6]:
            n, r = A.n, A.r_lower
            mu = gd.dominance_mu(A).mu
            for ell in range(1, n - r):
                S = gd.from_dense(
                    gd.schur_complement(A, ell),
                    r_lower=min(r, n - ell - 1),
                    r_upper=min(A.r_upper, n - ell - 1),
                )
                assert gd.dominance_mu(S).mu <= mu * (1.0 + 1e-12)

    def test_pivot_growth_sandwich(self, small_ensemble):
        # (1-mu^2)|A(k,k)| <= |gamma_k| and (1+mu^2)|T(j,j)| >= |gamma_(ell+j)|
        for A in small_ensemble[:8]:
            n, r = A.n, A.r_lower
            mu = gd.dominance_mu(A).mu
            slu = gd.structured_lu(A)
            diag = np.abs(A.data.diagonal())
            assert np.all((1.0 - mu**2) * diag <= np.abs(slu.gamma) * (1.0 + 1e-12))
            for ell in (1, max(1, (n - r) // 2)):
                T = gd.schur_complement(A, ell)
                lhs = (1.0 + mu**2) * np.abs(T.diagonal())
                assert np.all(lhs * (1.0 + 1e-12) >= np.abs(slu.gamma[ell:]))

    def test_multiplier_norms_bounded_by_mu(self, small_ensemble):
        for A in small_ensemble:
            mu = gd.dominance_mu(A).mu
            slu = gd.structured_lu(A)
            for k in range(1, A.n - A.r_lower + 1):
                assert np.abs(slu.f[k - 1]).sum() <= mu * (1.0 + 1e-12)


class TestGeneratorSuffix:
    def test_full_sweep_on_small_instances(self, small_ensemble):
        for A in small_ensemble[:5]:
            n, r = A.n, A.r_lower
            gens = gd.inverse_green_generators(A)
            for ell in range(1, n - r):
                T = gd.from_dense(
                    gd.schur_complement(A, ell),
                    r_lower=r,
                    r_upper=min(A.r_upper, n - ell - 1),
                )
                sub = gd.inverse_green_generators(T)
                for i in range(1, n - ell - r + 1):
                    np.testing.assert_allclose(
                        sub.p(i), gens.p(i + ell), rtol=1e-10, atol=1e-12
                    )
                    np.testing.assert_allclose(
                        sub.a(i), gens.a(i + ell), rtol=1e-10, atol=1e-12
                    )
                    np.testing.assert_allclose(
                        sub.q(i), gens.q(i + ell), rtol=1e-10, atol=1e-12
                    )
                np.testing.assert_allclose(
                    sub.p(n - ell - r + 1), gens.p(n - r + 1), rtol=1e-10, atol=1e-12
                )

    def test_final_block_is_inverse_of_trailing_schur(self, small_ensemble):
        # after N-r steps the trailing r x r block's inverse is the bottom generator
        for A in small_ensemble[:8]:
            n, r = A.n, A.r_lower
            gens = gd.inverse_green_generators(A)
            T = gd.schur_complement(A, n - r)
            np.testing.assert_allclose(
                np.linalg.inv(T), gens.p(n - r + 1), rtol=1e-9, atol=1e-12
            )
