"""Dense symmetric kernels: thin EVD with null-space extraction, plain and
signed Cholesky, triangular solves, and diagonal-plus-low-rank updates."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .exceptions import (
    InvalidInputError,
    NotPositiveDefiniteError,
    NumericalBreakdownError,
    SingularPivotError,
)

# threshold for deciding whether an eigenvalue counts toward the rank,
# relative to the largest magnitude
DEFAULT_REL_TOL = 1e-9

_SYM_TOL = 1e-12


def _as_finite_array(m, name: str = "matrix") -> np.ndarray:
    a = np.asarray(m, dtype=float)
    if not np.all(np.isfinite(a)):
        raise InvalidInputError(f"{name} contains NaN or Inf entries")
    return a


def _check_symmetric(m, name: str = "matrix") -> np.ndarray:
    """Validate symmetry (1e-12 relative) and return the symmetrized matrix."""
    a = _as_finite_array(m, name)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InvalidInputError(f"{name} must be square, got shape {a.shape}")
    scale = np.linalg.norm(a)
    if np.linalg.norm(a - a.T) > _SYM_TOL * scale:
        raise InvalidInputError(f"{name} is not symmetric")
    return 0.5 * (a + a.T)


@dataclass(frozen=True)
class ThinEvd:
    """Thin eigendecomposition of a symmetric matrix.

    ``vectors`` (d x k) holds orthonormal eigenvectors of the retained
    eigenvalues, ordered by decreasing magnitude of ``values``; ``null_basis``
    (d x (d-k)) spans the complementary, numerically null subspace.
    """

    vectors: np.ndarray
    values: np.ndarray
    null_basis: np.ndarray

    @property
    def rank(self) -> int:
        return int(self.values.size)

    def reconstruct(self) -> np.ndarray:
        """Dense matrix `vectors diag(values) vectors^T`."""
        return (self.vectors * self.values) @ self.vectors.T


def thin_sym_evd(m, rel_tol: float = DEFAULT_REL_TOL) -> ThinEvd:
    """Eigendecompose a symmetric matrix, separating significant pairs from
    the null space.

    Eigenvalues with ``|value| > rel_tol * max|value|`` are retained, ordered
    by decreasing magnitude; the remaining eigenvectors form an orthonormal
    basis of the numerical null space.
    """
    if not 0.0 < rel_tol < 1.0:
        raise InvalidInputError("rel_tol must lie in (0, 1)")
    a = _check_symmetric(m)
    d = a.shape[0]
    if d == 0:
        return ThinEvd(np.zeros((0, 0)), np.zeros(0), np.zeros((0, 0)))
    w, v = np.linalg.eigh(a)
    order = np.argsort(-np.abs(w), kind="stable")
    w, v = w[order], v[:, order]
    cutoff = rel_tol * abs(w[0])
    k = int(np.count_nonzero(np.abs(w) > cutoff))
    return ThinEvd(v[:, :k].copy(), w[:k].copy(), v[:, k:].copy())


def cholesky(m) -> np.ndarray:
    """Lower-triangular factor L with L L^T = M for symmetric positive-definite M."""
    a = _check_symmetric(m)
    n = a.shape[0]
    low = np.zeros_like(a)
    for j in range(n):
        pivot = a[j, j] - low[j, :j] @ low[j, :j]
        if pivot <= 0.0 or not np.isfinite(pivot):
            raise NotPositiveDefiniteError(j)
        low[j, j] = np.sqrt(pivot)
        if j + 1 < n:
            low[j + 1 :, j] = (a[j + 1 :, j] - low[j + 1 :, :j] @ low[j, :j]) / low[j, j]
    return low


def d_cholesky(m) -> tuple[np.ndarray, np.ndarray]:
    """Signed Cholesky of a symmetric nonsingular matrix: M = L diag(signs) L^T.

    Pivots whose magnitude falls below 1e-12 times the Frobenius norm abort
    with :class:`SingularPivotError` (the factorization is unpivoted).
    """
    a = _check_symmetric(m)
    n = a.shape[0]
    scale = np.linalg.norm(a)
    low = np.zeros_like(a)
    signs = np.ones(n)
    for j in range(n):
        pivot = a[j, j] - (signs[:j] * low[j, :j]) @ low[j, :j]
        if abs(pivot) <= 1e-12 * scale:
            raise SingularPivotError(j)
        signs[j] = 1.0 if pivot > 0.0 else -1.0
        low[j, j] = np.sqrt(abs(pivot))
        if j + 1 < n:
            rhs = a[j + 1 :, j] - low[j + 1 :, :j] @ (signs[:j] * low[j, :j])
            low[j + 1 :, j] = rhs / (signs[j] * low[j, j])
    return low, signs


def rank_p_diag_update(d, alpha: float, m, rel_tol: float = DEFAULT_REL_TOL) -> ThinEvd:
    """Thin EVD of ``diag(d) + alpha * M M^T``.

    The matrix is formed densely and re-diagonalized; at the sizes this
    library targets that is both exact and cheap.
    """
    dv = _as_finite_array(d, "d").ravel()
    mm = _as_finite_array(m, "M")
    if mm.ndim != 2:
        raise InvalidInputError("update factor M must be 2-d")
    if mm.shape[0] != dv.size:
        raise InvalidInputError(
            f"dimension mismatch: diagonal has {dv.size} entries, M has {mm.shape[0]} rows"
        )
    if mm.shape[1] < 1:
        raise InvalidInputError("update factor M needs at least one column")
    a = np.diag(dv) + alpha * (mm @ mm.T)
    return thin_sym_evd(a, rel_tol)


def solve_triangular(l, b, lower: bool = True, trans: bool = False, side: str = "left") -> np.ndarray:
    """Solve a triangular system ``op(L) X = B`` (side='left') or
    ``X op(L) = B`` (side='right'), where op is transposition when ``trans``.
    """
    a = _as_finite_array(l, "L")
    rhs = _as_finite_array(b, "B")
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InvalidInputError("L must be square")
    diag = np.diag(a)
    if np.any(diag == 0.0):
        raise SingularPivotError(int(np.argmin(np.abs(diag))), "zero diagonal entry in triangular solve")
    if side == "left":
        return scipy.linalg.solve_triangular(a, rhs, lower=lower, trans=1 if trans else 0)
    if side == "right":
        # X op(L) = B  <=>  op(L)^T X^T = B^T
        xt = scipy.linalg.solve_triangular(a, rhs.T, lower=lower, trans=0 if trans else 1)
        return xt.T
    raise InvalidInputError("side must be 'left' or 'right'")


def positive_thin_evd(m, rel_tol: float, scale_floor: float = 0.0) -> ThinEvd:
    """Thin EVD of a PSD-up-to-roundoff matrix.

    Eigenvalues below ``rel_tol * max(eigenvalue)`` move to the null basis;
    negative eigenvalues beyond ``-rel_tol * max(trace, scale_floor)`` raise
    :class:`NumericalBreakdownError` instead of being clamped.
    """
    a = _check_symmetric(m)
    if a.shape[0] == 0:
        return ThinEvd(np.zeros((0, 0)), np.zeros(0), np.zeros((0, 0)))
    w, v = np.linalg.eigh(a)  # ascending
    floor = max(float(np.trace(a)), scale_floor, 0.0)
    if w[0] < -rel_tol * floor:
        raise NumericalBreakdownError(
            f"matrix expected PSD has eigenvalue {w[0]:.3e} (scale {floor:.3e})"
        )
    wmax = w[-1]
    if wmax <= 0.0:
        return ThinEvd(np.zeros((a.shape[0], 0)), np.zeros(0), v)
    keep = w > rel_tol * wmax
    order = np.argsort(-w[keep], kind="stable")
    vectors = v[:, keep][:, order]
    values = w[keep][order]
    return ThinEvd(vectors, values, v[:, ~keep])
