"""Pre-image lists with an attached kernel.

Every feature-space inner product in the library flows through the Gram and
cross-Gram evaluations defined here; feature vectors themselves are never
materialized for non-linear kernels.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .exceptions import InvalidInputError


@dataclass(frozen=True)
class KernelSpec:
    """Kernel family: ``linear`` (dot product) or ``gaussian`` with
    k(x, y) = exp(-||x - y||^2 / (2 bandwidth^2))."""

    kind: str = "linear"
    bandwidth: float | None = None

    def __post_init__(self):
        if self.kind not in ("linear", "gaussian"):
            raise InvalidInputError(f"unknown kernel kind {self.kind!r}")
        if self.kind == "gaussian":
            if self.bandwidth is None or not self.bandwidth > 0:
                raise InvalidInputError("gaussian kernel requires bandwidth > 0")
        elif self.bandwidth is not None:
            raise InvalidInputError("bandwidth only applies to the gaussian kernel")


@dataclass(frozen=True)
class FeatureMatrix:
    """Ordered list of pre-images; each row of ``vectors`` is one point of the
    ambient space. Immutable after construction."""

    vectors: np.ndarray
    kernel: KernelSpec = field(default_factory=KernelSpec)

    def __post_init__(self):
        v = np.asarray(self.vectors, dtype=float)
        if v.ndim != 2:
            raise InvalidInputError("vectors must be 2-d (one pre-image per row)")
        if not np.all(np.isfinite(v)):
            raise InvalidInputError("pre-images contain NaN or Inf entries")
        v = v.copy()
        v.setflags(write=False)
        object.__setattr__(self, "vectors", v)

    @classmethod
    def empty(cls, dim: int, kernel: KernelSpec | None = None) -> "FeatureMatrix":
        return cls(np.zeros((0, dim)), kernel or KernelSpec())

    @property
    def count(self) -> int:
        return self.vectors.shape[0]

    @property
    def dim(self) -> int:
        return self.vectors.shape[1]

    def gram(self) -> np.ndarray:
        """Symmetric PSD matrix of pairwise kernel values."""
        k = self._kernel_values(self.vectors, self.vectors)
        return 0.5 * (k + k.T)

    def cross_gram(self, other: "FeatureMatrix") -> np.ndarray:
        """Matrix of kernel values k(x_i, u_j) against another pre-image list."""
        self._check_compatible(other)
        return self._kernel_values(self.vectors, other.vectors)

    def concat(self, other: "FeatureMatrix") -> "FeatureMatrix":
        self._check_compatible(other)
        return FeatureMatrix(np.vstack([self.vectors, other.vectors]), self.kernel)

    def subset(self, keep) -> "FeatureMatrix":
        """Pre-images at the given strictly increasing indices, in order."""
        idx = np.asarray(keep, dtype=int).ravel()
        if idx.size:
            if idx.min() < 0 or idx.max() >= self.count:
                raise InvalidInputError("subset index out of range")
            if np.any(np.diff(idx) <= 0):
                raise InvalidInputError("subset indices must be strictly increasing")
        return FeatureMatrix(self.vectors[idx].reshape(idx.size, self.dim), self.kernel)

    def diag_norms(self) -> np.ndarray:
        """Feature-space norms sqrt(k(x_i, x_i)) of each pre-image."""
        if self.kernel.kind == "linear":
            sq = np.sum(self.vectors**2, axis=1)
        else:
            sq = np.ones(self.count)
        return np.sqrt(sq)

    def _check_compatible(self, other: "FeatureMatrix") -> None:
        if not isinstance(other, FeatureMatrix):
            raise InvalidInputError("expected a FeatureMatrix")
        if self.kernel != other.kernel:
            raise InvalidInputError("kernel specs differ")
        if self.dim != other.dim:
            raise InvalidInputError(f"ambient dimensions differ ({self.dim} vs {other.dim})")

    def _kernel_values(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.kernel.kind == "linear":
            return a @ b.T
        sq = (
            np.sum(a**2, axis=1)[:, None]
            + np.sum(b**2, axis=1)[None, :]
            - 2.0 * (a @ b.T)
        )
        return np.exp(-0.5 * np.maximum(sq, 0.0) / self.kernel.bandwidth**2)
