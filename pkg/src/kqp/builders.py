"""Construction and maintenance of orthonormal kernel eigendecompositions.

``accumulator_build`` concatenates a batch of weighted low-rank terms and
orthonormalizes once. ``IncrementalBuilder`` folds terms in one at a time,
splitting each update into its projection onto the current basis and the
out-of-span remainder, re-diagonalizing a small core matrix, and enforcing
error/rank/pre-image budgets.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .exceptions import InvalidInputError, KqpError
from .feature import FeatureMatrix, KernelSpec
from .linalg import DEFAULT_REL_TOL, positive_thin_evd, rank_p_diag_update
from .operators import KernelOperator
from .reduction import QpReductionParams, nullspace_reduce, qp_reduce, remove_unused

# rank decisions inside a single update keep everything real; the error
# budget below governs what actually gets dropped
_UPDATE_REL_TOL = 1e-14
_GV_REL_TOL = 1e-10


@dataclass(frozen=True)
class BuilderConfig:
    """Budgets: relative Frobenius error ``eta``, maximum rank ``r_max``
    (``None`` = unbounded), and pre-image count at most
    ``preimage_ratio * rank``."""

    eta: float = 1e-10
    r_max: int | None = None
    preimage_ratio: float = 2.0

    def __post_init__(self):
        if not 0.0 < self.eta <= 1.0:
            raise InvalidInputError("eta must lie in (0, 1]")
        if self.r_max is not None and self.r_max < 1:
            raise InvalidInputError("r_max must be at least 1")
        if self.preimage_ratio < 1.0:
            raise InvalidInputError("preimage_ratio must be at least 1")


@dataclass(frozen=True)
class UpdateTerm:
    """One weighted low-rank term ``alpha * (U A)(U A)^T``."""

    U: FeatureMatrix
    A: np.ndarray
    alpha: float = 1.0

    def __post_init__(self):
        a = np.asarray(self.A, dtype=float)
        if a.ndim != 2:
            raise InvalidInputError("A must be 2-d")
        if self.U.count == 0:
            raise InvalidInputError("update term needs at least one pre-image")
        if a.shape[0] != self.U.count:
            raise InvalidInputError("A rows must match the pre-image count")
        if a.shape[1] < 1:
            raise InvalidInputError("A needs at least one column")
        if not np.all(np.isfinite(a)) or not np.isfinite(self.alpha):
            raise InvalidInputError("update term contains NaN or Inf")
        object.__setattr__(self, "A", a)

    @classmethod
    def rank_one(cls, vector, kernel: KernelSpec | None = None, alpha: float = 1.0) -> "UpdateTerm":
        v = np.asarray(vector, dtype=float).ravel()
        return cls(FeatureMatrix(v[None, :], kernel or KernelSpec()), np.ones((1, 1)), alpha)


def accumulator_build(terms, rel_tol: float = DEFAULT_REL_TOL) -> KernelOperator:
    """Orthonormal decomposition of ``sum_i alpha_i (U_i A_i)(U_i A_i)^T``.

    All pre-images are concatenated, the combination coefficients form a
    block-diagonal matrix whose blocks carry their term's weight, and a single
    orthonormalization pass diagonalizes the lot (the indefinite path engages
    automatically for mixed-sign weights).
    """
    terms = list(terms)
    if not terms:
        raise InvalidInputError("accumulator needs at least one term")
    x = terms[0].U
    for term in terms[1:]:
        x = x.concat(term.U)
    blocks = scipy.linalg.block_diag(*[term.A for term in terms])
    weights = np.concatenate([np.full(term.A.shape[1], term.alpha) for term in terms])
    raw = KernelOperator(x, blocks, weights)
    return raw.orthonormalize(rel_tol)


class IncrementalBuilder:
    """Maintains an orthonormal decomposition under a stream of update terms.

    The carried operator is ``X Y Z diag(D) Z^T Y^T X^T`` where ``X Y`` is
    orthonormal and ``Z`` is square unitary; in-span updates only rotate
    ``Z``, so the larger ``Y`` is untouched until new directions appear.
    Exclusively-owned mutable state: one writer at a time.
    """

    def __init__(self, config: BuilderConfig | None = None):
        self.config = config or BuilderConfig()
        self._x: FeatureMatrix | None = None
        self._y = np.zeros((0, 0))
        self._z = np.zeros((0, 0))
        self._d = np.zeros(0)

    @property
    def rank(self) -> int:
        return int(self._d.size)

    @property
    def preimage_count(self) -> int:
        return 0 if self._x is None else self._x.count

    def add(self, term: UpdateTerm) -> None:
        """Fold ``alpha * (U A)(U A)^T`` into the maintained operator."""
        u, a, alpha = term.U, term.A, term.alpha
        if self._x is None:
            self._x = FeatureMatrix.empty(u.dim, u.kernel)
        x, y, z, d = self._x, self._y, self._z, self._d
        r, p = d.size, a.shape[1]

        w = y.T @ x.cross_gram(u) @ a  # projection onto the current basis
        full_gram = a.T @ u.gram() @ a
        gv = full_gram - w.T @ w  # Gram of the out-of-span remainder
        evd_v = positive_thin_evd(
            0.5 * (gv + gv.T), _GV_REL_TOL, scale_floor=float(np.trace(full_gram))
        )
        q = evd_v.vectors / np.sqrt(evd_v.values) if evd_v.rank else np.zeros((p, 0))
        q0 = evd_v.null_basis
        dv_sqrt = np.sqrt(evd_v.values)
        k = evd_v.rank

        # small core update over the orthonormal basis (X Y | V Q)
        zw = z.T @ w
        top = np.hstack([(zw @ q) * dv_sqrt[None, :], zw @ q0])
        bottom = np.hstack([np.diag(dv_sqrt), np.zeros((k, p - k))])
        core_factor = np.vstack([top, bottom])
        d_ext = np.concatenate([d, np.zeros(k)])
        evd = rank_p_diag_update(d_ext, alpha, core_factor, rel_tol=_UPDATE_REL_TOL)
        vals, vecs = self._truncate(evd.values, evd.vectors)
        keep_n = vals.size

        if k > 0:
            # rewrite the basis over (X U): (X V)(Y 0; 0 Q) = (X U)(Y, -Y W Q; 0, A Q)
            basis = np.vstack(
                [
                    np.hstack([y, -(y @ w) @ q]),
                    np.hstack([np.zeros((u.count, r)), a @ q]),
                ]
            )
            rot = np.vstack([z @ vecs[:r], vecs[r:]])
            self._x = x.concat(u)
            self._y = basis @ rot
            self._z = np.eye(keep_n)
            self._d = vals
        else:
            rot = z @ vecs
            if keep_n == r:
                self._z = rot  # pure in-span rotation, Y untouched
            else:
                self._y = y @ rot
                self._z = np.eye(keep_n)
            self._d = vals
        self._enforce_preimage_budget()

    def get_decomposition(self) -> KernelOperator:
        """Immutable snapshot (X, Y Z, D) with the orthonormal flag set."""
        if self._x is None:
            return KernelOperator(
                FeatureMatrix.empty(0), np.zeros((0, 0)), np.zeros(0), orthonormal=True
            )
        return KernelOperator(self._x, self._y @ self._z, self._d, orthonormal=True)

    def _truncate(self, vals: np.ndarray, vecs: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Drop trailing eigenvalues within the error budget, then cap the rank.

        Values arrive ordered by decreasing magnitude; the dropped tail keeps
        its cumulative squared sum within (eta ||operator||_F)^2.
        """
        if vals.size == 0:
            return vals, vecs
        budget = (self.config.eta**2) * float(np.sum(vals**2))
        tail = np.cumsum(vals[::-1] ** 2)
        droppable = int(np.searchsorted(tail, budget, side="right"))
        keep = vals.size - droppable
        if self.config.r_max is not None:
            keep = min(keep, self.config.r_max)
        return vals[:keep], vecs[:, :keep]

    def _enforce_preimage_budget(self) -> None:
        if self._x is None or self.rank == 0:
            if self._x is not None and self._x.count:
                self._x = FeatureMatrix.empty(self._x.dim, self._x.kernel)
                self._y = np.zeros((0, 0))
                self._z = np.zeros((0, 0))
                self._d = np.zeros(0)
            return
        budget = max(int(np.floor(self.config.preimage_ratio * self.rank + 1e-9)), self.rank, 1)
        if self.preimage_count <= budget:
            return
        op = self.get_decomposition()
        op, _ = remove_unused(op)
        if op.preimage_count > budget:
            op, _ = nullspace_reduce(op)
        if op.preimage_count > budget and op.preimage_count >= 2:
            try:
                op, _ = qp_reduce(
                    op, QpReductionParams(target_removals=op.preimage_count - budget)
                )
            except KqpError:
                pass  # lossy pass is best effort; the budget allows slack of one term
        self._x = op.X
        self._y = np.array(op.Y)
        self._z = np.eye(op.rank)
        self._d = np.array(op.D)
