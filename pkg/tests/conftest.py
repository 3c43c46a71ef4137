"""Shared helpers: dense oracles and seeded instance generators.

The oracles materialize operators in the ambient space via the linear kernel
(Phi(x) = x) and use generic dense solvers; they stay independent of the
Gram-side code paths they check.
"""

from __future__ import annotations

import numpy as np
import pytest

from kqp import Density, Event, EventKind, FeatureMatrix, KernelOperator, KernelSpec

LINEAR = KernelSpec()


def materialize(op: KernelOperator) -> np.ndarray:
    """Dense ambient-space matrix of a linear-kernel operator."""
    assert op.X.kernel.kind == "linear"
    phi = op.X.vectors.T  # columns are the feature images
    if op.rank == 0:
        return np.zeros((phi.shape[0], phi.shape[0]))
    return phi @ ((op.Y * op.D) @ op.Y.T) @ phi.T


def dense_entropy(rho_dense: np.ndarray, tol: float = 1e-12) -> float:
    w = np.linalg.eigvalsh(rho_dense)
    w = w[w > tol]
    return float(np.sum(w * np.log(w)))


def dense_log(mat: np.ndarray) -> np.ndarray:
    w, v = np.linalg.eigh(0.5 * (mat + mat.T))
    return (v * np.log(w)) @ v.T


def dense_sqrt(mat: np.ndarray) -> np.ndarray:
    w, v = np.linalg.eigh(0.5 * (mat + mat.T))
    w = np.clip(w, 0.0, None)
    # sqrt is not Lipschitz at 0: zero the noise eigenvalues of a singular
    # PSD matrix or they surface as 1e-8-level errors
    w[w < 1e-12 * max(w[-1], 0.0)] = 0.0
    return (v * np.sqrt(w)) @ v.T


def rel_fro(a: np.ndarray, b: np.ndarray) -> float:
    denom = np.linalg.norm(a)
    return np.linalg.norm(a - b) / (denom if denom > 0 else 1.0)


def random_operator(rng, dim: int, rank: int, n_pre: int | None = None, mixed_signs: bool = False) -> KernelOperator:
    """Seeded raw (non-orthonormal) operator over random pre-images."""
    n = n_pre if n_pre is not None else max(rank, 2)
    vectors = rng.standard_normal((n, dim))
    y = rng.standard_normal((n, rank))
    d = rng.uniform(0.5, 2.0, size=rank)
    if mixed_signs:
        d *= rng.choice([-1.0, 1.0], size=rank)
    return KernelOperator(FeatureMatrix(vectors, LINEAR), y, d)


def random_density(rng, dim: int, rank: int, n_pre: int | None = None) -> Density:
    op = random_operator(rng, dim, rank, n_pre).orthonormalize()
    return Density(op).normalize()


def random_observable(rng, dim: int, rank: int) -> Event:
    span = random_operator(rng, dim, rank).orthonormalize()
    return Event.from_operator(span, EventKind.OBSERVABLE)


def random_strict_effect(rng, dim: int, rank: int) -> Event:
    span = random_operator(rng, dim, rank).orthonormalize()
    weights = rng.uniform(0.15, 0.95, size=span.rank)
    return Event(span.with_weights(weights), EventKind.STRICT_EFFECT)


@pytest.fixture
def rng():
    return np.random.default_rng(0xC0FFEE)
