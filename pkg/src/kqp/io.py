"""JSON (de)serialization of kernel-operator decompositions.

Document layout::

    {"dim": int,
     "kernel": {"type": "linear" | "gaussian", "bandwidth": number?},
     "preimages": [[number, ...], ...],
     "Y": [[number, ...], ...],
     "D": [number, ...],
     "orthonormal": bool}

Numbers round-trip at full double precision (json emits repr, 17 significant
digits).
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .exceptions import InvalidInputError
from .feature import FeatureMatrix, KernelSpec
from .operators import KernelOperator


def operator_to_dict(op: KernelOperator) -> dict:
    kernel: dict = {"type": op.X.kernel.kind}
    if op.X.kernel.bandwidth is not None:
        kernel["bandwidth"] = float(op.X.kernel.bandwidth)
    return {
        "dim": op.X.dim,
        "kernel": kernel,
        "preimages": op.X.vectors.tolist(),
        "Y": op.Y.tolist(),
        "D": op.D.tolist(),
        "orthonormal": bool(op.orthonormal),
    }


def operator_from_dict(doc: dict) -> KernelOperator:
    try:
        dim = int(doc["dim"])
        kspec = doc["kernel"]
        kernel = KernelSpec(kspec["type"], kspec.get("bandwidth"))
        pre = np.asarray(doc["preimages"], dtype=float).reshape(-1, dim) if doc["preimages"] else np.zeros((0, dim))
        y = np.asarray(doc["Y"], dtype=float)
        d = np.asarray(doc["D"], dtype=float)
        ortho = bool(doc["orthonormal"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInputError(f"malformed decomposition document: {exc}") from exc
    if y.size == 0:
        y = y.reshape(pre.shape[0], 0)
    return KernelOperator(FeatureMatrix(pre, kernel), y, d, orthonormal=ortho)


def save_operator(op: KernelOperator, path) -> None:
    Path(path).write_text(json.dumps(operator_to_dict(op)) + "\n")


def load_operator(path) -> KernelOperator:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"not valid JSON: {path}") from exc
    return operator_from_dict(doc)
