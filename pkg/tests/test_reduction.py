from itertools import combinations

import numpy as np
import pytest

from kqp import (
    FeatureMatrix,
    InvalidInputError,
    KernelOperator,
    QpReductionParams,
    nullspace_reduce,
    operator_distance,
    qp_reduce,
    remove_unused,
    select_lambda,
)
from conftest import LINEAR, materialize, random_operator, rel_fro


def duplicate_preimage_operator():
    x = np.array([[0.6, 0.8, 0.0], [0.6, 0.8, 0.0]])
    return KernelOperator(FeatureMatrix(x, LINEAR), np.eye(2), np.ones(2))


def span_deficient_operator(rng, n_pre=5, span=3, dim=6, rank=2):
    """Pre-images whose tail rows are linear combinations of the first `span`."""
    base = rng.standard_normal((span, dim))
    combos = rng.standard_normal((n_pre - span, span)) @ base
    x = FeatureMatrix(np.vstack([base, combos]), LINEAR)
    y = rng.standard_normal((n_pre, rank))
    d = rng.uniform(0.5, 1.5, size=rank)
    return KernelOperator(x, y, d)


class TestRemoveUnused:
    def test_explicit_zero_row(self, rng):
        vecs = rng.standard_normal((4, 5))
        y = rng.standard_normal((4, 2))
        y[2] = 0.0
        op = KernelOperator(FeatureMatrix(vecs, LINEAR), y, np.ones(2))
        out, report = remove_unused(op)
        assert report.removed_indices == [2]
        assert out.preimage_count == 3
        assert rel_fro(materialize(op), materialize(out)) < 1e-12

    def test_no_null_rows(self, rng):
        op = random_operator(rng, 4, 2, n_pre=3)
        out, report = remove_unused(op)
        assert report.removed_indices == []
        assert out is op

    def test_seeded_two_zero_rows(self):
        for seed in range(10):
            gen = np.random.default_rng(seed)
            vecs = gen.standard_normal((6, 4))
            y = gen.standard_normal((6, 3))
            y[1] = 0.0
            y[4] = 0.0
            op = KernelOperator(FeatureMatrix(vecs, LINEAR), y, gen.uniform(0.5, 1.0, 3))
            out, report = remove_unused(op)
            assert report.removed_indices == [1, 4]
            assert report.residual <= 1e-12


class TestNullspaceReduce:
    def test_duplicate_preimage(self):
        op = duplicate_preimage_operator()
        out, report = nullspace_reduce(op)
        assert out.preimage_count == 1
        assert len(report.removed_indices) == 1
        assert rel_fro(materialize(op), materialize(out)) < 1e-10

    def test_full_rank_untouched(self, rng):
        op = random_operator(rng, 6, 2, n_pre=4)
        out, report = nullspace_reduce(op)
        assert report.removed_indices == []
        assert out.preimage_count == 4

    def test_seeded_rank_deficient(self):
        for seed in range(10):
            gen = np.random.default_rng(seed)
            op = span_deficient_operator(gen)
            out, report = nullspace_reduce(op)
            assert len(report.removed_indices) == 2
            assert report.residual <= 1e-8
            assert rel_fro(materialize(op), materialize(out)) <= 1e-8

    def test_output_gram_full_rank(self):
        for seed in range(10):
            gen = np.random.default_rng(100 + seed)
            op = span_deficient_operator(gen, n_pre=6, span=3)
            out, _ = nullspace_reduce(op, delta=0.5)
            gram = out.X.gram()
            assert np.min(np.linalg.eigvalsh(gram)) > 1e-10 * np.trace(gram)

    def test_rejects_bad_delta(self, rng):
        op = random_operator(rng, 3, 1)
        with pytest.raises(InvalidInputError):
            nullspace_reduce(op, delta=0.0)


class TestSelectLambda:
    def test_all_tied_rows_finite(self):
        # symmetric configuration: every pre-image is used identically
        x = FeatureMatrix(np.eye(3), LINEAR)
        op = KernelOperator(x, np.eye(3), np.ones(3), orthonormal=True)
        lam = select_lambda(op, m=2)
        assert np.isfinite(lam) and lam > 0

    def test_near_zero_row_selected_first(self, rng):
        op = random_operator(rng, 6, 2, n_pre=4).orthonormalize()
        y = np.array(op.Y)
        y[1] *= 1e-9
        tweaked = KernelOperator(op.X, y, op.D)
        lam_op = tweaked.orthonormalize()
        # the nearly-unused row must carry the smallest removal score
        k = lam_op.X.gram()
        sigma = np.sqrt(np.abs(lam_op.D))
        quad = np.einsum("ij,ij->j", lam_op.Y, k @ lam_op.Y)
        scores = (np.diag(k) ** 2) * ((lam_op.Y**2) @ (sigma**3 * quad))
        assert np.argmin(scores) == 1

    def test_end_to_end_removal(self):
        removed_enough = 0
        for seed in range(5):
            gen = np.random.default_rng(500 + seed)
            op = span_deficient_operator(gen, n_pre=6, span=3, dim=8, rank=3).orthonormalize()
            lam = select_lambda(op, m=2)
            out, report = qp_reduce(op, QpReductionParams(lambda_=lam))
            if len(report.removed_indices) >= 2:
                removed_enough += 1
        assert removed_enough == 5

    def test_rejects_bad_m(self, rng):
        op = random_operator(rng, 4, 2, n_pre=3).orthonormalize()
        with pytest.raises(InvalidInputError):
            select_lambda(op, m=3)


class TestQpReduce:
    def test_lambda_zero_identity(self):
        for seed in range(5):
            gen = np.random.default_rng(seed)
            op = random_operator(gen, 6, 2, n_pre=4).orthonormalize()
            out, report = qp_reduce(op, QpReductionParams(lambda_=0.0))
            assert report.removed_indices == []
            assert report.residual <= 1e-8
            assert out.preimage_count == 4

    def test_duplicate_removed_at_zero_cost(self):
        op = duplicate_preimage_operator().orthonormalize()
        lam = select_lambda(op, m=1)
        out, report = qp_reduce(op, QpReductionParams(lambda_=lam))
        assert len(report.removed_indices) == 1
        assert report.residual <= 1e-6
        assert out.preimage_count == 1

    def test_auto_lambda_vs_exhaustive_subsets(self):
        for seed in range(3):
            gen = np.random.default_rng(700 + seed)
            op = span_deficient_operator(gen, n_pre=6, span=3, dim=8, rank=3).orthonormalize()
            out, report = qp_reduce(op, QpReductionParams(target_removals=3))
            best = min(
                operator_distance(op, _least_squares_subset(op, keep))
                for keep in combinations(range(6), 3)
            )
            assert report.residual <= 2.0 * best + 1e-9

    def test_residual_monotone_in_lambda(self):
        for seed in range(5):
            gen = np.random.default_rng(900 + seed)
            op = span_deficient_operator(gen, n_pre=6, span=4, dim=8, rank=3).orthonormalize()
            lam = select_lambda(op, m=2)
            residuals = []
            for factor in (0.0, 1.0, 2.0):
                _, report = qp_reduce(op, QpReductionParams(lambda_=lam * factor))
                residuals.append(report.residual)
            assert residuals[0] <= residuals[1] + 1e-9
            assert residuals[1] <= residuals[2] + 1e-9

    def test_never_grows_and_keeps_kernel(self):
        for seed in range(5):
            gen = np.random.default_rng(1100 + seed)
            op = span_deficient_operator(gen, n_pre=5, span=3, dim=6, rank=2).orthonormalize()
            out, _ = qp_reduce(op, QpReductionParams(target_removals=1))
            assert out.preimage_count <= op.preimage_count
            assert out.X.kernel == op.X.kernel
            if out.rank:
                gram = out.Y.T @ out.X.gram() @ out.Y
                assert np.max(np.abs(gram - np.eye(out.rank))) < 1e-8

    def test_requires_two_preimages(self, rng):
        op = random_operator(rng, 3, 1, n_pre=1).orthonormalize()
        with pytest.raises(InvalidInputError):
            qp_reduce(op, QpReductionParams(lambda_=0.1))


def _least_squares_subset(op: KernelOperator, keep) -> KernelOperator:
    """Gram-metric least-squares re-fit of op onto a fixed pre-image subset."""
    keep = np.asarray(keep, dtype=int)
    k = op.X.gram()
    kk = k[np.ix_(keep, keep)]
    ridge = 1e-12 * np.trace(k)
    coeff = np.linalg.solve(kk + ridge * np.eye(keep.size), k[keep, :] @ op.Y)
    return KernelOperator(op.X.subset(keep), coeff, op.D)
