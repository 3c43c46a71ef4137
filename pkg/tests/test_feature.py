import numpy as np
import pytest

from kqp import FeatureMatrix, InvalidInputError, KernelSpec

LINEAR = KernelSpec()
GAUSS = KernelSpec("gaussian", bandwidth=1.5)


class TestKernelSpec:
    def test_gaussian_needs_bandwidth(self):
        with pytest.raises(InvalidInputError):
            KernelSpec("gaussian")
        with pytest.raises(InvalidInputError):
            KernelSpec("gaussian", bandwidth=-1.0)

    def test_unknown_kind(self):
        with pytest.raises(InvalidInputError):
            KernelSpec("polynomial")


class TestGram:
    def test_linear_basis_vectors(self):
        x = FeatureMatrix(np.eye(2), LINEAR)
        assert np.allclose(x.gram(), np.eye(2))

    def test_gaussian_self_similarity(self):
        x = FeatureMatrix(np.array([[0.3, -1.2, 0.5]]), GAUSS)
        assert np.allclose(x.gram(), [[1.0]])

    def test_linear_matches_coordinate_product(self):
        rng = np.random.default_rng(1)
        v = rng.standard_normal((5, 3))
        x = FeatureMatrix(v, LINEAR)
        assert np.max(np.abs(x.gram() - v @ v.T)) < 1e-14

    def test_psd(self):
        for seed in range(10):
            rng = np.random.default_rng(seed)
            for kernel in (LINEAR, GAUSS):
                x = FeatureMatrix(rng.standard_normal((6, 4)), kernel)
                gram = x.gram()
                trace = np.trace(gram)
                assert np.min(np.linalg.eigvalsh(gram)) >= -1e-10 * trace


class TestCrossGram:
    def test_self_equals_gram(self):
        rng = np.random.default_rng(2)
        x = FeatureMatrix(rng.standard_normal((4, 3)), GAUSS)
        assert np.allclose(x.cross_gram(x), x.gram())

    def test_orthogonal_vectors(self):
        x = FeatureMatrix(np.array([[1.0, 0.0]]), LINEAR)
        u = FeatureMatrix(np.array([[0.0, 1.0]]), LINEAR)
        assert np.allclose(x.cross_gram(u), [[0.0]])

    def test_matches_coordinate_oracle(self):
        rng = np.random.default_rng(3)
        a = rng.standard_normal((3, 4))
        b = rng.standard_normal((4, 4))
        x, u = FeatureMatrix(a, LINEAR), FeatureMatrix(b, LINEAR)
        assert np.max(np.abs(x.cross_gram(u) - a @ b.T)) < 1e-14

    def test_transpose_symmetry(self):
        rng = np.random.default_rng(4)
        x = FeatureMatrix(rng.standard_normal((3, 2)), GAUSS)
        u = FeatureMatrix(rng.standard_normal((5, 2)), GAUSS)
        assert np.max(np.abs(x.cross_gram(u) - u.cross_gram(x).T)) < 1e-14

    def test_kernel_mismatch(self):
        x = FeatureMatrix(np.eye(2), LINEAR)
        u = FeatureMatrix(np.eye(2), GAUSS)
        with pytest.raises(InvalidInputError):
            x.cross_gram(u)


class TestConcatSubset:
    def test_concat_empty(self):
        rng = np.random.default_rng(5)
        x = FeatureMatrix(rng.standard_normal((3, 2)), LINEAR)
        empty = FeatureMatrix.empty(2, LINEAR)
        assert np.allclose(x.concat(empty).vectors, x.vectors)

    def test_concat_basis(self):
        x = FeatureMatrix(np.array([[1.0, 0.0]]), LINEAR)
        u = FeatureMatrix(np.array([[0.0, 1.0]]), LINEAR)
        assert np.allclose(x.concat(u).gram(), np.eye(2))

    def test_block_gram_identity(self):
        rng = np.random.default_rng(6)
        x = FeatureMatrix(rng.standard_normal((3, 4)), LINEAR)
        u = FeatureMatrix(rng.standard_normal((2, 4)), LINEAR)
        combined = x.concat(u).gram()
        expect = np.block(
            [[x.gram(), x.cross_gram(u)], [x.cross_gram(u).T, u.gram()]]
        )
        assert np.max(np.abs(combined - expect)) < 1e-14

    def test_subset_all_and_none(self):
        rng = np.random.default_rng(7)
        x = FeatureMatrix(rng.standard_normal((4, 3)), LINEAR)
        assert np.allclose(x.subset(range(4)).vectors, x.vectors)
        assert x.subset([]).count == 0

    def test_subset_gram_restriction(self):
        rng = np.random.default_rng(8)
        x = FeatureMatrix(rng.standard_normal((4, 3)), GAUSS)
        keep = [0, 2]
        restricted = x.gram()[np.ix_(keep, keep)]
        assert np.max(np.abs(x.subset(keep).gram() - restricted)) < 1e-14

    def test_subset_rejects_bad_indices(self):
        x = FeatureMatrix(np.eye(3), LINEAR)
        with pytest.raises(InvalidInputError):
            x.subset([0, 0])
        with pytest.raises(InvalidInputError):
            x.subset([2, 1])
        with pytest.raises(InvalidInputError):
            x.subset([3])
