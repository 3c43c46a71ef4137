"""Pre-image set reduction.

Two lossless passes (dropping unused rows, eliminating Gram null-space
redundancy) and one lossy pass that re-fits the coefficient matrix under an
L1-style row penalty solved by the cone-QP interior point method, then
re-estimates coefficients on the kept span.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .coneqp import IpmConfig, STATUS_FAILURE, build_problem, ipm_solve
from .exceptions import (
    DegenerateResultError,
    InvalidInputError,
    LambdaSelectionError,
    SolverFailureError,
)
from .linalg import DEFAULT_REL_TOL, thin_sym_evd
from .operators import KernelOperator, operator_distance


@dataclass(frozen=True)
class ReductionReport:
    removed_indices: list
    residual: float
    method: str  # 'unused' | 'nullspace' | 'qp'


@dataclass(frozen=True)
class QpReductionParams:
    """Shape of a reduced-set pass: either an explicit penalty ``lambda_`` or
    an automatic one targeting ``target_removals`` dropped pre-images."""

    lambda_: float | None = None
    target_removals: int = 1
    delta_row_threshold: float = 1e-6
    ipm: IpmConfig = field(default_factory=IpmConfig)

    def __post_init__(self):
        if self.lambda_ is not None and self.lambda_ < 0.0:
            raise InvalidInputError("lambda must be non-negative")
        if self.target_removals < 1:
            raise InvalidInputError("target_removals must be at least 1")
        if self.delta_row_threshold <= 0.0:
            raise InvalidInputError("delta_row_threshold must be positive")


def remove_unused(op: KernelOperator) -> tuple[KernelOperator, ReductionReport]:
    """Drop pre-images whose row of ``Y diag(D) Y^T`` is numerically null.

    This never changes the represented operator.
    """
    if op.preimage_count == 0:
        return op, ReductionReport([], 0.0, "unused")
    weight_rows = (op.Y * op.D) @ op.Y.T
    scale = np.linalg.norm(weight_rows)
    norms = np.linalg.norm(weight_rows, axis=1)
    drop = norms <= 1e-12 * scale
    if not np.any(drop):
        return op, ReductionReport([], 0.0, "unused")
    keep = np.flatnonzero(~drop)
    out = KernelOperator(op.X.subset(keep), op.Y[keep], op.D, op.orthonormal)
    residual = operator_distance(op, out)
    return out, ReductionReport(list(np.flatnonzero(drop)), residual, "unused")


def nullspace_reduce(
    op: KernelOperator, delta: float = 0.1, rank_rel_tol: float = DEFAULT_REL_TOL
) -> tuple[KernelOperator, ReductionReport]:
    """Losslessly eliminate pre-images that are linear combinations of others.

    Null vectors z of the Gram matrix witness ``sum_j z_j x_j = 0``. For each
    one, the least-used pre-image (minimum ``||Y_j.|| ||x_j||`` among entries
    with ``|z_j| >= delta * ||z||_inf``) is folded into the remaining rows,
    and z is Gauss-eliminated from the rest of the null basis. Finishes with
    :func:`remove_unused`.
    """
    if not 0.0 < delta <= 1.0:
        raise InvalidInputError("delta must lie in (0, 1]")
    if op.preimage_count == 0:
        return op, ReductionReport([], 0.0, "nullspace")
    gram = op.X.gram()
    basis = thin_sym_evd(gram, rank_rel_tol).null_basis
    if basis.shape[1] == 0:
        return op, ReductionReport([], 0.0, "nullspace")
    y = np.array(op.Y)
    norms_x = np.sqrt(np.clip(np.diag(gram), 0.0, None))
    alive = list(range(op.preimage_count))
    removed: list = []
    while basis.shape[1] > 0:
        z = basis[:, 0]
        zmax = float(np.max(np.abs(z))) if z.size else 0.0
        if zmax <= 0.0:
            basis = basis[:, 1:]
            continue
        cand = np.flatnonzero(np.abs(z) >= delta * zmax)
        scores = np.linalg.norm(y[cand], axis=1) * norms_x[cand]
        j = int(cand[int(np.argmin(scores))])
        # x_j = -sum_{i != j} (z_i / z_j) x_i: fold row j of Y into the others
        ratio = z / z[j]
        ratio[j] = 0.0
        y -= np.outer(ratio, y[j])
        rest = basis[:, 1:]
        if rest.shape[1]:
            rest = rest - np.outer(z / z[j], rest[j, :])
        mask = np.arange(z.size) != j
        y = y[mask]
        norms_x = norms_x[mask]
        basis = rest[mask]
        removed.append(alive.pop(j))
    reduced = KernelOperator(op.X.subset(alive), y, op.D, op.orthonormal)
    cleaned, unused_rep = remove_unused(reduced)
    removed.extend(alive[i] for i in unused_rep.removed_indices)
    residual = operator_distance(op, cleaned)
    return cleaned, ReductionReport(sorted(removed), residual, "nullspace")


def select_lambda(op: KernelOperator, m: int) -> float:
    """Penalty strength expected to drive at least ``m`` coefficient rows of
    the reduced-set fit to zero.

    Each pre-image gets the quadratic cost its removal would incur; the bound
    is the ratio between the summed costs of the m cheapest rows and their
    summed penalty savings, inflated by a 5% safety factor. This is a
    heuristic; callers should judge it by the removals it achieves.
    """
    n = op.preimage_count
    if not 1 <= m < n:
        raise InvalidInputError("need 1 <= m < pre-image count")
    if not op.orthonormal:
        raise InvalidInputError("lambda selection needs an orthonormal operator")
    k = op.X.gram()
    a = op.Y
    sigma = np.sqrt(np.abs(op.D))
    quad_col = np.einsum("ij,ij->j", a, k @ a)  # A_{.q}^T K A_{.q}, ~1 when orthonormal
    scores = (np.diag(k) ** 2) * ((a**2) @ (sigma**3 * quad_col))
    chosen = np.argsort(scores, kind="stable")[:m]
    denom = float(np.sum(np.max(np.abs(a[chosen]) * sigma[None, :], axis=1)))
    if denom <= 1e-14:
        raise LambdaSelectionError("penalty savings vanish for the chosen rows")
    return 1.05 * float(np.sum(scores[chosen])) / denom


def qp_reduce(
    op: KernelOperator, params: QpReductionParams | None = None
) -> tuple[KernelOperator, ReductionReport]:
    """Lossy reduced-set pass.

    Re-fits the coefficient matrix under the row penalty, drops pre-images
    whose fitted rows fall below ``delta_row_threshold`` of the largest row
    norm, re-estimates the original columns on the kept span by Gram-metric
    least squares, and re-orthonormalizes. With a positive penalty a lossless
    null-space sweep runs afterwards, catching redundant pre-images the QP
    left balanced (exact ties, e.g. duplicates, have centered optima).
    """
    params = params or QpReductionParams()
    n = op.preimage_count
    if n < 2:
        raise InvalidInputError("reduction needs at least two pre-images")
    if not op.orthonormal:
        raise InvalidInputError("the reduced-set QP needs an orthonormal operator")
    lam = params.lambda_ if params.lambda_ is not None else select_lambda(op, params.target_removals)
    problem = build_problem(op, lam)
    result = ipm_solve(problem, params.ipm)
    if result.status == STATUS_FAILURE:
        raise SolverFailureError(result.iterations, result.message)
    row_norms = np.linalg.norm(result.B, axis=1)
    max_norm = float(np.max(row_norms))
    if max_norm <= 0.0:
        raise DegenerateResultError("every coefficient row vanished")
    keep = np.flatnonzero(row_norms > params.delta_row_threshold * max_norm)
    if keep.size == 0:
        raise DegenerateResultError("every coefficient row fell below the threshold")
    removed = sorted(set(range(n)) - set(keep.tolist()))
    if removed:
        out = _reestimate(op, keep)
        index_map = list(keep)
    else:
        out = op
        index_map = list(range(n))
    if lam > 0.0:
        out, ns_rep = nullspace_reduce(out)
        removed.extend(index_map[i] for i in ns_rep.removed_indices)
    residual = operator_distance(op, out)
    return out, ReductionReport(sorted(removed), residual, "qp")


def _reestimate(op: KernelOperator, keep: np.ndarray) -> KernelOperator:
    """Gram-metric least squares of each original column onto the kept span."""
    k = op.X.gram()
    kk = k[np.ix_(keep, keep)]
    ridge = 1e-12 * float(np.trace(k))
    coeff = np.linalg.solve(kk + ridge * np.eye(keep.size), k[keep, :] @ op.Y)
    candidate = KernelOperator(op.X.subset(keep), coeff, op.D, orthonormal=False)
    return candidate.orthonormalize()
