"""Cone quadratic programming for the L1-penalized reduced-set problem.

The program, over x = (beta_1, ..., beta_r, xi):

    minimize    sum_q beta_q^T K' beta_q - 2 alpha_q^T K'' beta_q + lambda sum_i xi_i
    subject to  nu_q |beta_{q,i}| <= xi_i   for every column q and pre-image i,

written as ``x^T H x + 2 c^T x`` with ``G x <= 0`` (two sign blocks per
column). Complex Gram matrices enter through the standard real embedding,
doubling the per-column block size.

The Newton systems of the primal-dual interior-point driver are solved with a
block LDL^T factorization of the reordered KKT matrix

    [[ diag_r(K'), -S,       S,       0   ]      x  (primal beta blocks)
     [ -S,         -U,       0,      -E   ]      z  (duals of -S beta - E xi <= 0)
     [  S,          0,      -V,      -E   ]      t  (duals of  S beta - E xi <= 0)
     [  0,         -E^T,    -E^T,     0   ]]     y  (primal xi)

with S = diag(nu_q G0), E the stacked identity coupling xi into every block,
and U, V the positive slack/dual scaling diagonals. The factor only ever
solves blocks of the per-column size, and its sign matrix is
D = (+Id, -Id, -Id, +Id) by block row.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from .exceptions import (
    FactorizationError,
    InvalidInputError,
    KqpError,
    NotPositiveDefiniteError,
    SingularPivotError,
)
from .linalg import cholesky, solve_triangular

# diagonal ridge (relative to mean Gram diagonal) applied to the quadratic
# term so its Cholesky exists for rank-deficient pre-image sets
_GRAM_RIDGE = 1e-9

STATUS_OPTIMAL = "optimal"
STATUS_MAX_ITERS = "max_iters"
STATUS_FAILURE = "failure"


@dataclass(frozen=True)
class GramEmbedding:
    """Real quadratic/linear-term Gram matrices and the constraint pattern.

    Real scalars: ``k_prime = k_dprime = K`` and ``g0 = Id``. A Hermitian Gram
    ``K_re + i K_im`` doubles into the symmetric real embedding
    ``[[Re, -Im], [Im, Re]]`` (used for both terms) with
    ``g0 = [[Id, Id], [Id, -Id]]``, which bounds real and imaginary parts
    jointly through xi.
    """

    k_prime: np.ndarray
    k_dprime: np.ndarray
    g0: np.ndarray
    field_case: str  # 'real' | 'complex'
    n: int  # pre-image count
    multiplier: int  # 1 (real) or 2 (complex); r' = multiplier * r

    @property
    def block(self) -> int:
        """Per-column block size n * multiplier."""
        return self.n * self.multiplier

    def xi_fold(self, v: np.ndarray) -> np.ndarray:
        """E^T v: fold a per-column block down onto the xi coordinates."""
        return v.reshape(self.multiplier, self.n).sum(axis=0)

    def xi_lift(self, xi: np.ndarray) -> np.ndarray:
        """E xi: tile the xi coordinates across a per-column block."""
        return np.tile(xi, self.multiplier)


def embed_gram(k_re, k_im=None) -> GramEmbedding:
    """Build the real embedding of a (possibly Hermitian) Gram matrix."""
    kr = np.asarray(k_re, dtype=float)
    if kr.ndim != 2 or kr.shape[0] != kr.shape[1]:
        raise InvalidInputError("K_re must be square")
    if not np.all(np.isfinite(kr)):
        raise InvalidInputError("K_re contains NaN or Inf")
    scale = max(np.linalg.norm(kr), 1e-300)
    if np.linalg.norm(kr - kr.T) > 1e-12 * scale:
        raise InvalidInputError("K_re must be symmetric")
    kr = 0.5 * (kr + kr.T)
    n = kr.shape[0]
    if k_im is None:
        return GramEmbedding(kr, kr, np.eye(n), "real", n, 1)
    ki = np.asarray(k_im, dtype=float)
    if ki.shape != kr.shape or not np.all(np.isfinite(ki)):
        raise InvalidInputError("K_im must match K_re and be finite")
    if np.linalg.norm(ki + ki.T) > 1e-12 * max(scale, np.linalg.norm(ki)):
        raise InvalidInputError("K_im must be antisymmetric")
    ki = 0.5 * (ki - ki.T)
    kp = np.block([[kr, -ki], [ki, kr]])
    eye = np.eye(n)
    g0 = np.block([[eye, eye], [eye, -eye]])
    return GramEmbedding(kp, kp, g0, "complex", n, 2)


@dataclass(frozen=True)
class QpProblem:
    """Data of the reduced-set cone QP.

    ``alphas`` holds one target column per row (already carrying the sigma_q
    scaling); ``nus`` are the positive per-column constraint weights.
    """

    embedding: GramEmbedding
    alphas: np.ndarray  # (r, block)
    nus: np.ndarray  # (r,)
    lam: float

    def __post_init__(self):
        a = np.atleast_2d(np.asarray(self.alphas, dtype=float))
        nus = np.asarray(self.nus, dtype=float).ravel()
        if a.shape[0] != nus.size:
            raise InvalidInputError("one weight nu_q per target column required")
        if a.shape[1] != self.embedding.block:
            raise InvalidInputError(
                f"alpha columns must have length {self.embedding.block}, got {a.shape[1]}"
            )
        if np.any(nus <= 0.0):
            raise InvalidInputError("weights nu_q must be positive")
        if self.lam < 0.0:
            raise InvalidInputError("lambda must be non-negative")
        object.__setattr__(self, "alphas", a)
        object.__setattr__(self, "nus", nus)

    @property
    def r(self) -> int:
        return int(self.nus.size)

    def linear_term(self) -> tuple[np.ndarray, np.ndarray]:
        """c split into the beta part (r x block) and the xi part (n,)."""
        c_beta = -(self.alphas @ self.embedding.k_dprime)
        c_xi = np.full(self.embedding.n, 0.5 * self.lam)
        return c_beta, c_xi

    def objective(self, beta: np.ndarray, xi: np.ndarray) -> float:
        """x^T H x + 2 c^T x without materializing H or c densely."""
        c_beta, _ = self.linear_term()
        quad = float(np.sum(beta * (beta @ self.embedding.k_prime)))
        lin = 2.0 * float(np.sum(c_beta * beta))
        return quad + lin + self.lam * float(np.sum(xi))

    def constraint_values(self, beta: np.ndarray, xi: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """The two blocks of G x: (-S beta - E xi, S beta - E xi), each (r, block)."""
        emb = self.embedding
        gb = self.nus[:, None] * (beta @ emb.g0)
        ex = emb.xi_lift(xi)[None, :]
        return -gb - ex, gb - ex

    def adjoint_constraints(self, z1: np.ndarray, z2: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """G^T (z1, z2) split into the beta part (r x block) and the xi part (n,)."""
        emb = self.embedding
        beta_part = self.nus[:, None] * ((z2 - z1) @ emb.g0)
        xi_part = -(z1 + z2).reshape(self.r * emb.multiplier, emb.n).sum(axis=0)
        return beta_part, xi_part

    def dense_objective(self) -> tuple[np.ndarray, np.ndarray]:
        """Materialize H and c densely (tests and cross-checks only)."""
        emb = self.embedding
        m, r, n = emb.block, self.r, emb.n
        dim = r * m + n
        h = np.zeros((dim, dim))
        for q in range(r):
            h[q * m : (q + 1) * m, q * m : (q + 1) * m] = emb.k_prime
        c_beta, c_xi = self.linear_term()
        c = np.concatenate([c_beta.ravel(), c_xi])
        return h, c

    def dense_constraints(self) -> np.ndarray:
        """Materialize G densely (tests and cross-checks only)."""
        emb = self.embedding
        m, r, n = emb.block, self.r, emb.n
        g = np.zeros((2 * r * m, r * m + n))
        e_blk = np.tile(np.eye(n), (emb.multiplier, 1))
        for q in range(r):
            rows1 = slice(q * m, (q + 1) * m)
            rows2 = slice(r * m + q * m, r * m + (q + 1) * m)
            cols = slice(q * m, (q + 1) * m)
            g[rows1, cols] = -self.nus[q] * emb.g0
            g[rows2, cols] = self.nus[q] * emb.g0
            g[rows1, r * m :] = -e_blk
            g[rows2, r * m :] = -e_blk
        return g


def build_problem(op, lam: float) -> QpProblem:
    """Assemble the reduced-set QP for an orthonormal kernel operator.

    Targets are ``alpha_q = sigma_q Y[:, q]`` with ``sigma_q = sqrt(|D_q|)``,
    and the constraint weights are ``nu_q = sigma_q``. The quadratic Gram gets
    a tiny diagonal ridge so its Cholesky exists when the pre-image set is
    rank deficient; the linear-term Gram stays exact.
    """
    if lam < 0.0:
        raise InvalidInputError("lambda must be non-negative")
    if not op.orthonormal:
        raise InvalidInputError("the reduced-set QP needs an orthonormal operator")
    if op.rank == 0:
        raise InvalidInputError("cannot build a QP for an empty operator")
    k = op.X.gram()
    emb = embed_gram(k)
    n = emb.n
    ridge = _GRAM_RIDGE * float(np.trace(k)) / max(n, 1)
    emb = replace(emb, k_prime=emb.k_prime + ridge * np.eye(n))
    sigma = np.sqrt(np.abs(op.D))
    alphas = (op.Y * sigma).T
    return QpProblem(emb, alphas, sigma, float(lam))


@dataclass(frozen=True)
class KktFactor:
    """Block lower-triangular factor of the reordered KKT matrix.

    ``a_chol`` factors K' (block-lower in the complex case), ``b`` solves
    ``B A^T = G0``; the remaining blocks follow the per-column elimination
    order. Sign structure by block row: D = (+Id, -Id, -Id, +Id).
    """

    a_chol: np.ndarray
    b: np.ndarray
    l22: list
    l32: list
    l33: list
    l42: list
    l43: list
    l44: np.ndarray
    nus: np.ndarray
    n: int
    multiplier: int

    @property
    def r(self) -> int:
        return int(self.nus.size)

    @property
    def block(self) -> int:
        return self.n * self.multiplier

    def dense_factor(self) -> tuple[np.ndarray, np.ndarray]:
        """Materialize (L, diag of D) densely (tests only)."""
        m, r, n = self.block, self.r, self.n
        dim = 3 * r * m + n
        low = np.zeros((dim, dim))
        x0, z0, t0, y0 = 0, r * m, 2 * r * m, 3 * r * m
        for q in range(r):
            xs = slice(x0 + q * m, x0 + (q + 1) * m)
            zs = slice(z0 + q * m, z0 + (q + 1) * m)
            ts = slice(t0 + q * m, t0 + (q + 1) * m)
            low[xs, xs] = self.a_chol
            low[zs, xs] = -self.nus[q] * self.b
            low[ts, xs] = self.nus[q] * self.b
            low[zs, zs] = self.l22[q]
            low[ts, zs] = self.l32[q]
            low[ts, ts] = self.l33[q]
            low[y0:, zs] = self.l42[q]
            low[y0:, ts] = self.l43[q]
        low[y0:, y0:] = self.l44
        signs = np.concatenate(
            [np.ones(r * m), -np.ones(r * m), -np.ones(r * m), np.ones(n)]
        )
        return low, signs


def _factor_k_prime(emb: GramEmbedding) -> np.ndarray:
    """Cholesky of K'; the complex case uses the 2x2 block shortcut."""
    if emb.field_case == "real":
        return cholesky(emb.k_prime)
    n = emb.n
    re = emb.k_prime[:n, :n]
    im = emb.k_prime[n:, :n]  # lower-left block of [[Re, -Im], [Im, Re]]
    a11 = cholesky(re)
    a21 = solve_triangular(a11, im, lower=True, trans=True, side="right")
    a22 = cholesky(0.5 * ((re - a21 @ a21.T) + (re - a21 @ a21.T).T))
    out = np.zeros((2 * n, 2 * n))
    out[:n, :n] = a11
    out[n:, :n] = a21
    out[n:, n:] = a22
    return out


def kkt_factorize(problem: QpProblem, u_diag, v_diag) -> KktFactor:
    """Factor the reordered KKT matrix for positive scaling diagonals U, V.

    U scales the duals of the ``-S beta - E xi`` rows and V those of the
    ``S beta - E xi`` rows, both of length r * block.
    """
    emb = problem.embedding
    m, r, n = emb.block, problem.r, emb.n
    u = np.asarray(u_diag, dtype=float).ravel()
    v = np.asarray(v_diag, dtype=float).ravel()
    if u.size != r * m or v.size != r * m:
        raise InvalidInputError(f"scaling diagonals must have length {r * m}")
    if np.any(u <= 0.0) or np.any(v <= 0.0):
        raise InvalidInputError("scaling diagonals must be entrywise positive")
    try:
        a = _factor_k_prime(emb)
    except (NotPositiveDefiniteError, SingularPivotError) as exc:
        raise FactorizationError("L11", f"Cholesky of K' failed: {exc}") from exc
    b = solve_triangular(a, emb.g0, lower=True, trans=True, side="right")
    bbt = b @ b.T
    e_t = np.tile(np.eye(n), (1, emb.multiplier))  # E_q^T, n x m
    l22, l32, l33, l42, l43 = [], [], [], [], []
    acc44 = np.zeros((n, n))
    for q in range(r):
        nu2 = problem.nus[q] ** 2
        uq = u[q * m : (q + 1) * m]
        vq = v[q * m : (q + 1) * m]
        try:
            l22q = cholesky(np.diag(uq) + nu2 * bbt)
        except (NotPositiveDefiniteError, SingularPivotError) as exc:
            raise FactorizationError("L22", f"block {q}: {exc}") from exc
        l32q = solve_triangular(l22q, -nu2 * bbt, lower=True, trans=True, side="right")
        rhs33 = np.diag(vq) + nu2 * bbt - l32q @ l32q.T
        try:
            l33q = cholesky(0.5 * (rhs33 + rhs33.T))
        except (NotPositiveDefiniteError, SingularPivotError) as exc:
            raise FactorizationError("L33", f"block {q}: {exc}") from exc
        l42q = solve_triangular(l22q, e_t, lower=True, trans=True, side="right")
        l43q = solve_triangular(l33q, e_t - l42q @ l32q.T, lower=True, trans=True, side="right")
        acc44 += l42q @ l42q.T + l43q @ l43q.T
        l22.append(l22q)
        l32.append(l32q)
        l33.append(l33q)
        l42.append(l42q)
        l43.append(l43q)
    try:
        l44 = cholesky(0.5 * (acc44 + acc44.T))
    except (NotPositiveDefiniteError, SingularPivotError) as exc:
        raise FactorizationError("L44", str(exc)) from exc
    return KktFactor(a, b, l22, l32, l33, l42, l43, l44, problem.nus.copy(), n, emb.multiplier)


def kkt_solve(factor: KktFactor, a, b, d, c) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Solve the reordered KKT system by the forward/backward triangular chain.

    Right-hand-side blocks by row: ``a`` for the beta rows (length r * block),
    ``c`` for the first constraint block (the one scaled by U), ``d`` for the
    second (scaled by V), ``b`` for the xi rows (length n). Returns
    ``(x, z, t, y)`` matching those rows.
    """
    m, r, n = factor.block, factor.r, factor.n
    ra = np.asarray(a, dtype=float).reshape(r, m)
    rc = np.asarray(c, dtype=float).reshape(r, m)
    rd = np.asarray(d, dtype=float).reshape(r, m)
    rb = np.asarray(b, dtype=float).reshape(n)
    ach, bmat = factor.a_chol, factor.b
    ux = np.empty((r, m))
    uz = np.empty((r, m))
    ut = np.empty((r, m))
    y_rhs = rb.copy()
    for q in range(r):
        nu = factor.nus[q]
        ux[q] = solve_triangular(ach, ra[q], lower=True)
        bx = bmat @ ux[q]
        uz[q] = solve_triangular(factor.l22[q], rc[q] + nu * bx, lower=True)
        ut[q] = solve_triangular(factor.l33[q], rd[q] - nu * bx - factor.l32[q] @ uz[q], lower=True)
        y_rhs -= factor.l42[q] @ uz[q] + factor.l43[q] @ ut[q]
    uy = solve_triangular(factor.l44, y_rhs, lower=True)
    y = solve_triangular(factor.l44, uy, lower=True, trans=True)
    z = np.empty((r, m))
    t = np.empty((r, m))
    x = np.empty((r, m))
    for q in range(r):
        nu = factor.nus[q]
        t[q] = solve_triangular(factor.l33[q], -ut[q] - factor.l43[q].T @ y, lower=True, trans=True)
        z[q] = solve_triangular(
            factor.l22[q], -uz[q] - factor.l32[q].T @ t[q] - factor.l42[q].T @ y, lower=True, trans=True
        )
        x[q] = solve_triangular(ach, ux[q] + nu * (bmat.T @ (z[q] - t[q])), lower=True, trans=True)
    return x.ravel(), z.ravel(), t.ravel(), y


def dense_reordered_kkt(problem: QpProblem, u_diag, v_diag) -> np.ndarray:
    """Assemble the reordered KKT matrix densely (tests and verification only)."""
    emb = problem.embedding
    m, r, n = emb.block, problem.r, emb.n
    u = np.asarray(u_diag, dtype=float).ravel()
    v = np.asarray(v_diag, dtype=float).ravel()
    dim = 3 * r * m + n
    kkt = np.zeros((dim, dim))
    x0, z0, t0, y0 = 0, r * m, 2 * r * m, 3 * r * m
    e_blk = np.tile(np.eye(n), (emb.multiplier, 1))  # E_q, m x n
    for q in range(r):
        s_q = problem.nus[q] * emb.g0
        xs = slice(x0 + q * m, x0 + (q + 1) * m)
        zs = slice(z0 + q * m, z0 + (q + 1) * m)
        ts = slice(t0 + q * m, t0 + (q + 1) * m)
        kkt[xs, xs] = emb.k_prime
        kkt[zs, xs] = -s_q
        kkt[xs, zs] = -s_q
        kkt[ts, xs] = s_q
        kkt[xs, ts] = s_q
        kkt[zs, zs] = -np.diag(u[q * m : (q + 1) * m])
        kkt[ts, ts] = -np.diag(v[q * m : (q + 1) * m])
        kkt[zs, y0:] = -e_blk
        kkt[y0:, zs] = -e_blk.T
        kkt[ts, y0:] = -e_blk
        kkt[y0:, ts] = -e_blk.T
    return kkt


@dataclass(frozen=True)
class IpmConfig:
    max_iters: int = 100
    tol: float = 1e-7
    step_fraction: float = 0.99

    def __post_init__(self):
        if self.max_iters < 1:
            raise InvalidInputError("max_iters must be at least 1")
        if self.tol <= 0.0:
            raise InvalidInputError("tol must be positive")
        if not 0.0 < self.step_fraction < 1.0:
            raise InvalidInputError("step_fraction must lie in (0, 1)")


@dataclass
class IpmResult:
    B: np.ndarray  # n x r, unscaled coefficient matrix
    xi: np.ndarray
    status: str
    iterations: int
    gap: float
    objective: float
    objective_trace: list = field(default_factory=list)
    message: str = ""


def _max_step(v: np.ndarray, dv: np.ndarray) -> float:
    neg = dv < 0.0
    if not np.any(neg):
        return np.inf
    return float(np.min(-v[neg] / dv[neg]))


def ipm_solve(problem: QpProblem, config: IpmConfig | None = None) -> IpmResult:
    """Primal-dual path following with Mehrotra predictor-corrector steps.

    Starts strictly feasible at beta = 0, xi > 0 and keeps iterates interior;
    each iteration factors the scaled KKT system once and reuses the factor
    for the corrector. Failures surface as a ``failure`` status, not a raise.
    """
    config = config or IpmConfig()
    emb = problem.embedding
    m, r, n = emb.block, problem.r, emb.n
    c_beta, c_xi = problem.linear_term()

    beta = np.zeros((r, m))
    xi = np.full(n, 1.0 + 1e-2)
    g1, g2 = problem.constraint_values(beta, xi)
    s1, s2 = -g1, -g2
    z1 = np.ones_like(s1)
    z2 = np.ones_like(s2)
    total = 2 * r * m

    def unscale(curr_beta: np.ndarray) -> np.ndarray:
        return (curr_beta[:, :n] / problem.nus[:, None]).T

    obj = problem.objective(beta, xi)
    trace: list = []
    status = STATUS_MAX_ITERS
    message = ""
    gap = float(np.sum(s1 * z1) + np.sum(s2 * z2))
    iters = 0
    for iters in range(1, config.max_iters + 1):
        gt_beta, gt_xi = problem.adjoint_constraints(z1, z2)
        rd_beta = beta @ emb.k_prime + c_beta + gt_beta
        rd_xi = c_xi + gt_xi
        g1, g2 = problem.constraint_values(beta, xi)
        rp1 = g1 + s1
        rp2 = g2 + s2
        gap = float(np.sum(s1 * z1) + np.sum(s2 * z2))
        obj = problem.objective(beta, xi)
        trace.append(obj)
        mu = gap / total
        rd_norm = max(
            float(np.max(np.abs(rd_beta))) if rd_beta.size else 0.0,
            float(np.max(np.abs(rd_xi))) if rd_xi.size else 0.0,
        )
        rp_norm = max(float(np.max(np.abs(rp1))), float(np.max(np.abs(rp2))))
        d_scale = 1.0 + max(float(np.max(np.abs(c_beta))) if c_beta.size else 0.0, float(np.max(np.abs(c_xi))))
        if rd_norm <= config.tol * d_scale and rp_norm <= config.tol and gap <= config.tol * (1.0 + abs(obj)):
            status = STATUS_OPTIMAL
            break
        try:
            factor = kkt_factorize(problem, (s1 / z1).ravel(), (s2 / z2).ravel())
        except (FactorizationError, KqpError) as exc:
            status = STATUS_FAILURE
            message = str(exc)
            break

        def newton(compl1: np.ndarray, compl2: np.ndarray):
            rhs_z = (-rp1 - compl1 / z1).ravel()
            rhs_t = (-rp2 - compl2 / z2).ravel()
            dx, dz, dt, dy = kkt_solve(factor, (-rd_beta).ravel(), -rd_xi, rhs_t, rhs_z)
            d_beta = dx.reshape(r, m)
            d_z1 = dz.reshape(r, m)
            d_z2 = dt.reshape(r, m)
            d_xi = dy
            gb1, gb2 = problem.constraint_values(d_beta, d_xi)
            # constraint map is linear, so G(dx) is reusable for ds
            d_s1 = -rp1 - gb1
            d_s2 = -rp2 - gb2
            return d_beta, d_xi, d_s1, d_s2, d_z1, d_z2

        # predictor (affine scaling) step
        db_a, dxi_a, ds1_a, ds2_a, dz1_a, dz2_a = newton(-s1 * z1, -s2 * z2)
        ap_aff = min(1.0, _max_step(s1.ravel(), ds1_a.ravel()), _max_step(s2.ravel(), ds2_a.ravel()))
        ad_aff = min(1.0, _max_step(z1.ravel(), dz1_a.ravel()), _max_step(z2.ravel(), dz2_a.ravel()))
        mu_aff = (
            float(np.sum((s1 + ap_aff * ds1_a) * (z1 + ad_aff * dz1_a)))
            + float(np.sum((s2 + ap_aff * ds2_a) * (z2 + ad_aff * dz2_a)))
        ) / total
        sigma = min(max((mu_aff / mu) ** 3, 1e-10), 0.99) if mu > 0 else 0.1

        # corrector with centering
        compl1 = -s1 * z1 + sigma * mu - ds1_a * dz1_a
        compl2 = -s2 * z2 + sigma * mu - ds2_a * dz2_a
        db, dxi, ds1, ds2, dz1, dz2 = newton(compl1, compl2)
        theta = config.step_fraction
        ap = min(1.0, theta * _max_step(s1.ravel(), ds1.ravel()), theta * _max_step(s2.ravel(), ds2.ravel()))
        ad = min(1.0, theta * _max_step(z1.ravel(), dz1.ravel()), theta * _max_step(z2.ravel(), dz2.ravel()))
        beta = beta + ap * db
        xi = xi + ap * dxi
        s1 = s1 + ap * ds1
        s2 = s2 + ap * ds2
        z1 = z1 + ad * dz1
        z2 = z2 + ad * dz2

    obj = problem.objective(beta, xi)
    return IpmResult(
        B=unscale(beta),
        xi=xi.copy(),
        status=status,
        iterations=iters,
        gap=gap,
        objective=obj,
        objective_trace=trace,
        message=message,
    )
