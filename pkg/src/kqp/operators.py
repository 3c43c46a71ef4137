"""Kernel operators and the quantum-probability calculus on them.

A :class:`KernelOperator` stores a low-rank self-adjoint operator
``X Y diag(D) Y^T X^T`` over the pre-images of a feature matrix X. Once the
decomposition is orthonormal (``Y^T k(X,X) Y = Id``), D is the operator's
spectrum. Densities, observables (projectors) and strict effects all share
this carrier; probabilities, entropy, divergence and conditionalisation are
evaluated from Gram matrices alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .exceptions import (
    DegenerateDensityError,
    InvalidInputError,
    KqpError,
    NumericalBreakdownError,
)
from .feature import FeatureMatrix
from .linalg import DEFAULT_REL_TOL, cholesky, rank_p_diag_update, solve_triangular, thin_sym_evd

# construction-time sanity bound on the orthonormal flag; the tight 1e-8
# contract is asserted by the test suite
_ORTHO_GUARD = 1e-6
_DEGENERATE_TRACE = 1e-14
_EFFECT_SLACK = 1e-12


class EventKind(Enum):
    OBSERVABLE = "observable"
    STRICT_EFFECT = "strict_effect"


@dataclass(frozen=True)
class KernelOperator:
    """Self-adjoint operator ``X Y diag(D) Y^T X^T`` over pre-images X.

    Exactly zero weights and zero coefficient columns are pruned at
    construction. ``orthonormal`` asserts ``Y^T k(X,X) Y = Id``.
    """

    X: FeatureMatrix
    Y: np.ndarray
    D: np.ndarray
    orthonormal: bool = False

    def __post_init__(self):
        y = np.asarray(self.Y, dtype=float)
        d = np.asarray(self.D, dtype=float).ravel()
        if y.ndim != 2:
            raise InvalidInputError("Y must be 2-d")
        if y.shape[0] != self.X.count:
            raise InvalidInputError(
                f"Y has {y.shape[0]} rows but X holds {self.X.count} pre-images"
            )
        if y.shape[1] != d.size:
            raise InvalidInputError("Y column count and D length differ")
        if not (np.all(np.isfinite(y)) and np.all(np.isfinite(d))):
            raise InvalidInputError("decomposition contains NaN or Inf entries")
        live = (d != 0.0) & (np.linalg.norm(y, axis=0) != 0.0)
        if not np.all(live):
            y = y[:, live]
            d = d[live]
        y = y.copy()
        d = d.copy()
        y.setflags(write=False)
        d.setflags(write=False)
        object.__setattr__(self, "Y", y)
        object.__setattr__(self, "D", d)
        if self.orthonormal and d.size:
            g = y.T @ self.X.gram() @ y
            if np.max(np.abs(g - np.eye(d.size))) > _ORTHO_GUARD:
                raise InvalidInputError("orthonormal flag set but Y^T k(X,X) Y is far from Id")

    @property
    def rank(self) -> int:
        return int(self.D.size)

    @property
    def preimage_count(self) -> int:
        return self.X.count

    @property
    def is_empty(self) -> bool:
        return self.rank == 0

    def trace(self) -> float:
        """Trace of the represented operator (via the Gram matrix)."""
        if self.rank == 0:
            return 0.0
        t = self.Y.T @ self.X.gram() @ self.Y
        return float(np.sum(self.D * np.diag(t)))

    def with_weights(self, d: np.ndarray) -> "KernelOperator":
        return KernelOperator(self.X, self.Y, d, self.orthonormal)

    def scaled(self, factor: float) -> "KernelOperator":
        return KernelOperator(self.X, self.Y, self.D * factor, self.orthonormal)

    def orthonormalize(self, rel_tol: float = DEFAULT_REL_TOL) -> "KernelOperator":
        """Rewrite the operator over an orthonormal basis (``Y^T k Y = Id``).

        Non-negative weights need one thin EVD of the weighted Gram. Mixed
        signs split into a positive envelope carrying |D| and a negative part;
        the envelope is orthonormalized first and the negative part is folded
        back in by re-diagonalizing its small projection.
        """
        n = self.preimage_count
        if self.rank == 0:
            return KernelOperator(self.X, np.zeros((n, 0)), np.zeros(0), orthonormal=True)
        gram = self.X.gram()
        if np.all(self.D >= 0.0):
            y, d = _orthonormalize_psd(self.Y * np.sqrt(self.D), gram, rel_tol)
            return KernelOperator(self.X, y, d, orthonormal=True)
        envelope = self.Y * np.sqrt(np.abs(self.D))
        negative = self.Y * np.sqrt(np.maximum(-self.D, 0.0))
        y1, d1 = _orthonormalize_psd(envelope, gram, rel_tol)
        z = y1.T @ gram @ negative
        evd = rank_p_diag_update(d1, -2.0, z, rel_tol)
        return KernelOperator(self.X, y1 @ evd.vectors, evd.values, orthonormal=True)


def _orthonormalize_psd(a: np.ndarray, gram: np.ndarray, rel_tol: float) -> tuple[np.ndarray, np.ndarray]:
    """Orthonormal form of ``X A A^T X^T`` given the Gram of X."""
    evd = thin_sym_evd(a.T @ gram @ a, rel_tol)
    if evd.rank == 0:
        return np.zeros((a.shape[0], 0)), np.zeros(0)
    if np.min(evd.values) <= 0.0:
        raise NumericalBreakdownError("weighted Gram retained a non-positive eigenvalue")
    y = a @ (evd.vectors / np.sqrt(evd.values))
    return _refine_basis(y, gram), evd.values


def _refine_basis(y: np.ndarray, gram: np.ndarray) -> np.ndarray:
    """One Cholesky correction pass pushing ``Y^T K Y`` from near-identity to
    identity at machine precision; ill-conditioned Grams otherwise leave
    1e-10-level drift that downstream formulas inherit."""
    try:
        low = cholesky(y.T @ gram @ y)
    except KqpError:
        return y
    return solve_triangular(low, y, lower=True, trans=True, side="right")


@dataclass(frozen=True)
class Event:
    """A quantum event: an observable (projector) or a strict effect with
    spectrum in (0, 1]."""

    op: KernelOperator
    kind: EventKind = EventKind.OBSERVABLE

    def __post_init__(self):
        d = self.op.D
        if self.kind is EventKind.OBSERVABLE:
            if d.size and np.max(np.abs(d - 1.0)) > 1e-8:
                raise InvalidInputError("an observable is a projector: weights must all be 1")
        elif self.kind is EventKind.STRICT_EFFECT:
            if d.size and (np.min(d) <= 0.0 or np.max(d) > 1.0 + _EFFECT_SLACK):
                raise InvalidInputError("a strict effect needs weights in (0, 1]")
        else:
            raise InvalidInputError("unknown event kind")

    @classmethod
    def from_operator(cls, op: KernelOperator, kind: EventKind = EventKind.OBSERVABLE) -> "Event":
        """Coerce a PSD operator into an event.

        The operator is orthonormalized if needed; observables replace the
        spectrum by ones (the projector onto the operator's support), strict
        effects keep it, clamping round-off excursions above 1.
        """
        base = op if op.orthonormal else op.orthonormalize()
        if kind is EventKind.OBSERVABLE:
            base = base.with_weights(np.ones(base.rank))
        else:
            d = base.D
            if d.size and (np.min(d) <= 0.0 or np.max(d) > 1.0 + _EFFECT_SLACK):
                raise InvalidInputError("strict-effect weights must lie in (0, 1]")
            base = base.with_weights(np.minimum(d, 1.0))
        return cls(base, kind)


@dataclass(frozen=True)
class Density:
    """A (possibly unnormalized) quantum density: a PSD kernel operator."""

    op: KernelOperator

    def __post_init__(self):
        d = self.op.D
        if d.size:
            scale = max(float(np.max(np.abs(d))), 1.0)
            if float(np.min(d)) < -1e-10 * scale:
                raise InvalidInputError("a density needs non-negative weights")

    def trace(self) -> float:
        return self.op.trace()

    @property
    def is_degenerate(self) -> bool:
        return self.trace() <= _DEGENERATE_TRACE

    def normalize(self) -> "Density":
        t = self.trace()
        if t <= _DEGENERATE_TRACE:
            raise DegenerateDensityError(f"density trace {t:.3e} is not positive")
        return Density(self.op.scaled(1.0 / t))

    def orthonormalize(self, rel_tol: float = DEFAULT_REL_TOL) -> "Density":
        return Density(self.op.orthonormalize(rel_tol))

    def probability(self, event: Event) -> float:
        """Probability of observing the event: tr(rho E), evaluated as the
        squared Frobenius norm of the weighted cross-Gram coupling."""
        _require_unit_trace(self, 1e-8)
        e = event.op
        rho = self.op
        if e.X.kernel != rho.X.kernel:
            raise InvalidInputError("kernel mismatch between density and event")
        if e.rank == 0 or rho.rank == 0:
            return 0.0
        coupling = e.Y.T @ e.X.cross_gram(rho.X) @ rho.Y
        m = np.sqrt(e.D)[:, None] * coupling * np.sqrt(rho.D)[None, :]
        return float(np.sum(m * m))

    def entropy(self) -> float:
        """tr(rho log rho) in natural log: always <= 0, and 0 exactly for a
        pure state. Negate for the von Neumann entropy."""
        if not self.op.orthonormal:
            raise InvalidInputError("entropy needs an orthonormal decomposition")
        _require_unit_trace(self, 1e-8)
        d = self.op.D
        if d.size == 0 or float(np.min(d)) <= 0.0:
            raise InvalidInputError("entropy needs strictly positive weights")
        return float(np.sum(d * np.log(d)))

    def divergence(self, tau: "Density", epsilon: float, alpha_noise: float) -> float:
        """Relative entropy tr(rho log rho - rho log tau') against the
        noise-regularized tau' = (1 - epsilon) tau + epsilon alpha Id.

        With ``epsilon = 0`` the support of rho must sit inside the support of
        tau; leakage yields ``math.inf`` (never an exception). The evaluation
        sums log-weighted squared column norms, so it stays real even where a
        square-root-of-log formulation would not.
        """
        if not 0.0 <= epsilon < 1.0:
            raise InvalidInputError("epsilon must lie in [0, 1)")
        if alpha_noise <= 0.0:
            raise InvalidInputError("alpha_noise must be positive")
        rho, tau_op = self.op, tau.op
        if not (rho.orthonormal and tau_op.orthonormal):
            raise InvalidInputError("divergence needs orthonormal decompositions")
        if rho.X.kernel != tau_op.X.kernel:
            raise InvalidInputError("kernel mismatch between densities")
        _require_unit_trace(self, 1e-8)
        _require_unit_trace(tau, 1e-8)
        h = self.entropy()
        m = np.sqrt(rho.D)[:, None] * (rho.Y.T @ rho.X.cross_gram(tau_op.X) @ tau_op.Y)
        col = np.sum(m * m, axis=0)  # squared column norms, one per tau eigenvector
        total = float(np.sum(col))
        if epsilon == 0.0:
            if 1.0 - total > 1e-8:
                return math.inf
            cross = float(np.sum(np.log(tau_op.D) * col))
        else:
            lam = (1.0 - epsilon) * tau_op.D + epsilon * alpha_noise
            cross = float(np.sum(np.log(lam) * col))
            cross += math.log(epsilon * alpha_noise) * (1.0 - total)
        return h - cross

    def condition_on(self, event: Event, orthogonal: bool = False) -> "Density":
        """Density conditioned on observing the event (or, with ``orthogonal``,
        its complement). The result is unnormalized; chain ``.normalize()``.

        A zero-trace outcome is returned as a degenerate density rather than
        raised here, so callers may inspect near-impossible updates.
        """
        e = event.op
        rho = self.op
        if e.X.kernel != rho.X.kernel:
            raise InvalidInputError("kernel mismatch between density and event")
        k_e_rho = e.X.cross_gram(rho.X)
        if not orthogonal:
            if event.kind is EventKind.OBSERVABLE:
                mid = e.Y @ (e.D[:, None] * (e.Y.T @ k_e_rho @ rho.Y))
            else:
                if not e.orthonormal:
                    raise InvalidInputError("strict-effect conditioning needs an orthonormal event")
                mid = e.Y @ (np.sqrt(e.D)[:, None] * (e.Y.T @ k_e_rho @ rho.Y))
            return Density(KernelOperator(e.X, mid, rho.D))
        if not e.orthonormal:
            raise InvalidInputError("orthogonal conditioning needs an orthonormal event")
        # Id - (Id - D_E)^{1/2}, clamping 1 - d at 0 for d in (1, 1 + eps]
        shrink = 1.0 - np.sqrt(np.clip(1.0 - e.D, 0.0, None))
        low = -e.Y @ (shrink[:, None] * (e.Y.T @ k_e_rho @ rho.Y))
        coeff = np.vstack([rho.Y, low])
        return Density(KernelOperator(rho.X.concat(e.X), coeff, rho.D))


def _require_unit_trace(rho: Density, tol: float) -> None:
    t = rho.trace()
    if abs(t - 1.0) > tol:
        raise InvalidInputError(f"density must be normalized (trace {t:.6g})")


def operator_dot(a: KernelOperator, b: KernelOperator) -> float:
    """Frobenius inner product tr(A B), computed from Gram matrices alone."""
    if a.rank == 0 or b.rank == 0:
        return 0.0
    c = a.Y.T @ a.X.cross_gram(b.X) @ b.Y
    return float(np.einsum("i,ij,j,ij->", a.D, c, b.D, c))


def operator_distance(a: KernelOperator, b: KernelOperator) -> float:
    """Relative Frobenius distance ||A - B||_F / ||A||_F via Gram algebra."""
    aa = operator_dot(a, a)
    bb = operator_dot(b, b)
    ab = operator_dot(a, b)
    num = math.sqrt(max(aa + bb - 2.0 * ab, 0.0))
    den = math.sqrt(max(aa, 0.0))
    if den == 0.0:
        return 0.0 if num == 0.0 else math.inf
    return num / den
