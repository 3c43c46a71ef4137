import numpy as np
import pytest

from kqp import (
    InvalidInputError,
    NotPositiveDefiniteError,
    SingularPivotError,
    cholesky,
    d_cholesky,
    rank_p_diag_update,
    solve_triangular,
    thin_sym_evd,
)


def random_symmetric(rng, n):
    a = rng.standard_normal((n, n))
    return 0.5 * (a + a.T)


class TestThinSymEvd:
    def test_identity(self):
        evd = thin_sym_evd(np.eye(3), rel_tol=1e-9)
        assert np.allclose(np.sort(evd.values), np.ones(3))
        assert evd.null_basis.shape == (3, 0)

    def test_rank_one(self):
        evd = thin_sym_evd(np.array([[1.0, 1.0], [1.0, 1.0]]), rel_tol=1e-9)
        assert evd.values.shape == (1,)
        assert np.isclose(evd.values[0], 2.0)
        null = evd.null_basis[:, 0]
        expect = np.array([1.0, -1.0]) / np.sqrt(2.0)
        assert min(np.linalg.norm(null - expect), np.linalg.norm(null + expect)) < 1e-12

    def test_reconstruction_matches_full_solver(self):
        rng = np.random.default_rng(42)
        m = random_symmetric(rng, 8)
        evd = thin_sym_evd(m, rel_tol=1e-12)
        assert np.linalg.norm(evd.reconstruct() - m) <= 1e-10
        # eigenvalues agree with the generic dense eigensolver as multisets
        oracle = np.sort(np.linalg.eigvalsh(m))
        assert np.allclose(np.sort(evd.values), oracle, atol=1e-10)

    def test_reconstruction_residual_bound(self):
        rng = np.random.default_rng(7)
        for seed in range(20):
            m = random_symmetric(np.random.default_rng(seed), 6)
            rel_tol = 1e-9
            evd = thin_sym_evd(m, rel_tol)
            resid = np.linalg.norm(evd.reconstruct() - m)
            assert resid <= 10.0 * rel_tol * np.linalg.norm(m)

    def test_columns_orthonormal(self):
        rng = np.random.default_rng(3)
        m = random_symmetric(rng, 7)
        evd = thin_sym_evd(m)
        full = np.hstack([evd.vectors, evd.null_basis])
        assert np.max(np.abs(full.T @ full - np.eye(7))) < 1e-10

    def test_null_basis_annihilated(self):
        rng = np.random.default_rng(11)
        base = rng.standard_normal((6, 3))
        m = base @ base.T  # rank 3 in dimension 6
        evd = thin_sym_evd(m, rel_tol=1e-9)
        assert evd.rank == 3
        assert np.max(np.abs(m @ evd.null_basis)) < 1e-10

    def test_scale_equivariance(self):
        for seed in range(10):
            rng = np.random.default_rng(seed)
            m = random_symmetric(rng, 6)
            c = 3.7
            a, b = thin_sym_evd(m), thin_sym_evd(c * m)
            assert a.rank == b.rank
            assert np.allclose(c * a.values, b.values, atol=1e-10 * np.abs(c * a.values[0]))

    def test_ordering_by_magnitude(self):
        m = np.diag([1.0, -5.0, 3.0])
        evd = thin_sym_evd(m)
        assert np.all(np.diff(np.abs(evd.values)) <= 1e-15)
        assert np.isclose(evd.values[0], -5.0)

    def test_rejects_nonsymmetric(self):
        with pytest.raises(InvalidInputError):
            thin_sym_evd(np.array([[1.0, 2.0], [0.0, 1.0]]))

    def test_rejects_nan(self):
        with pytest.raises(InvalidInputError):
            thin_sym_evd(np.array([[np.nan, 0.0], [0.0, 1.0]]))


class TestCholesky:
    def test_identity(self):
        assert np.allclose(cholesky(np.eye(4)), np.eye(4))

    def test_hand_checkable(self):
        low = cholesky(np.array([[4.0, 2.0], [2.0, 2.0]]))
        assert np.allclose(low, np.array([[2.0, 0.0], [1.0, 1.0]]))

    def test_reconstruction_spd(self):
        rng = np.random.default_rng(5)
        a = rng.standard_normal((10, 10))
        m = a @ a.T + np.eye(10)
        low = cholesky(m)
        assert np.linalg.norm(low @ low.T - m) <= 1e-12 * np.linalg.norm(m) * 10
        assert np.allclose(np.triu(low, 1), 0.0)

    def test_failing_pivot_index(self):
        m = np.diag([1.0, 1.0, -1.0, 1.0])
        with pytest.raises(NotPositiveDefiniteError) as err:
            cholesky(m)
        assert err.value.pivot == 2


class TestDCholesky:
    def test_negative_identity(self):
        low, signs = d_cholesky(-np.eye(3))
        assert np.allclose(low, np.eye(3))
        assert np.allclose(signs, -np.ones(3))

    def test_identity(self):
        low, signs = d_cholesky(np.eye(2))
        assert np.allclose(low, np.eye(2))
        assert np.allclose(signs, np.ones(2))

    def test_indefinite_reconstruction(self):
        rng = np.random.default_rng(17)
        m = random_symmetric(rng, 6) + np.diag([3.0, -3.0, 2.0, -2.0, 4.0, -4.0])
        low, signs = d_cholesky(m)
        assert np.linalg.norm((low * signs) @ low.T - m) <= 1e-10 * np.linalg.norm(m)

    def test_spd_matches_cholesky(self):
        rng = np.random.default_rng(23)
        a = rng.standard_normal((6, 6))
        m = a @ a.T + np.eye(6)
        low, signs = d_cholesky(m)
        assert np.all(signs > 0)
        assert np.max(np.abs(low - cholesky(m))) < 1e-10

    def test_singular_pivot(self):
        with pytest.raises(SingularPivotError):
            d_cholesky(np.array([[0.0, 1.0], [1.0, 0.0]]))


class TestRankPDiagUpdate:
    def test_rank_one_from_zero(self):
        evd = rank_p_diag_update(np.zeros(2), 1.0, np.array([[1.0], [0.0]]))
        assert np.allclose(evd.values, [1.0])
        assert np.allclose(np.abs(evd.vectors[:, 0]), [1.0, 0.0])

    def test_zero_weight_update(self):
        evd = rank_p_diag_update(np.array([2.0, 1.0]), 0.0, np.array([[0.3], [0.7]]))
        assert np.allclose(evd.values, [2.0, 1.0])
        assert np.allclose(np.abs(evd.vectors), np.eye(2))

    def test_matches_explicit_formation(self):
        rng = np.random.default_rng(29)
        d = rng.standard_normal(6)
        m = rng.standard_normal((6, 2))
        alpha = 0.8
        evd = rank_p_diag_update(d, alpha, m, rel_tol=1e-12)
        explicit = np.diag(d) + alpha * m @ m.T
        assert np.linalg.norm(evd.reconstruct() - explicit) <= 1e-10

    def test_dimension_mismatch(self):
        with pytest.raises(InvalidInputError):
            rank_p_diag_update(np.zeros(3), 1.0, np.zeros((2, 1)))


class TestSolveTriangular:
    def test_identity(self):
        b = np.arange(6.0).reshape(3, 2)
        assert np.allclose(solve_triangular(np.eye(3), b), b)

    def test_hand_checkable(self):
        low = np.array([[2.0, 0.0], [1.0, 1.0]])
        x = solve_triangular(low, np.array([2.0, 2.0]))
        assert np.allclose(x, [1.0, 1.0])

    def test_residuals_all_modes(self):
        rng = np.random.default_rng(31)
        low = np.tril(rng.standard_normal((8, 8))) + 3.0 * np.eye(8)
        b = rng.standard_normal((8, 8))
        for trans in (False, True):
            x = solve_triangular(low, b, trans=trans)
            op = low.T if trans else low
            assert np.linalg.norm(op @ x - b) <= 1e-12 * np.linalg.norm(b) * 100
            x = solve_triangular(low, b, trans=trans, side="right")
            assert np.linalg.norm(x @ op - b) <= 1e-12 * np.linalg.norm(b) * 100

    def test_zero_diagonal(self):
        low = np.array([[1.0, 0.0], [1.0, 0.0]])
        with pytest.raises(SingularPivotError):
            solve_triangular(low, np.ones(2))
