"""Command-line front end.

Subcommands: ``evd`` builds a decomposition from CSV vectors through the
incremental builder; ``prob``, ``entropy``, ``divergence`` evaluate scalar
quantities; ``condition`` updates a density on an event; ``reduce`` shrinks a
pre-image set. Decompositions travel as JSON documents (see :mod:`kqp.io`).

Exit codes: 0 success, 2 input or contract error, 3 degenerate mathematical
outcome, 4 solver failure.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .builders import BuilderConfig, IncrementalBuilder, UpdateTerm
from .exceptions import (
    DegenerateDensityError,
    DegenerateResultError,
    InvalidInputError,
    KqpError,
    SolverFailureError,
)
from .feature import FeatureMatrix, KernelSpec
from .io import load_operator, operator_to_dict, save_operator
from .operators import Density, Event, EventKind, KernelOperator, operator_distance
from .reduction import QpReductionParams, nullspace_reduce, qp_reduce, remove_unused


def _fmt(value: float) -> str:
    """Locale-independent, 12 significant digits with trailing zeros."""
    if value != value or value in (float("inf"), float("-inf")):
        return str(value)
    return np.format_float_positional(value, precision=12, unique=False, fractional=False)


def _load_csv(path: str) -> np.ndarray:
    try:
        rows = np.loadtxt(path, delimiter=",", ndmin=2, dtype=float)
    except (ValueError, OSError) as exc:
        raise InvalidInputError(f"cannot read CSV {path}: {exc}") from exc
    if rows.size == 0:
        raise InvalidInputError(f"empty input file {path}")
    return rows


def _kernel_from_args(args) -> KernelSpec:
    return KernelSpec(args.kernel, args.bandwidth if args.kernel == "gaussian" else None)


def _emit(doc: dict, output: str | None) -> None:
    text = json.dumps(doc)
    if output:
        with open(output, "w") as handle:
            handle.write(text + "\n")
    else:
        print(text)


def _load_density(path: str) -> Density:
    """Load, orthonormalize if needed, and normalize a density file."""
    op = load_operator(path)
    if not op.orthonormal:
        op = op.orthonormalize()
    return Density(op).normalize()


def _load_event(path: str, kind: str) -> Event:
    op = load_operator(path)
    event_kind = EventKind.OBSERVABLE if kind == "observable" else EventKind.STRICT_EFFECT
    return Event.from_operator(op, event_kind)


def _cmd_evd(args) -> int:
    rows = _load_csv(args.vectors)
    if args.weights:
        weights = np.loadtxt(args.weights, dtype=float, ndmin=1)
        if weights.size != rows.shape[0]:
            raise InvalidInputError("one weight per CSV row required")
    else:
        weights = np.ones(rows.shape[0])
    kernel = _kernel_from_args(args)
    builder = IncrementalBuilder(
        BuilderConfig(eta=args.eta, r_max=args.r_max, preimage_ratio=args.ratio)
    )
    for row, weight in zip(rows, weights):
        builder.add(UpdateTerm(FeatureMatrix(row[None, :], kernel), np.ones((1, 1)), float(weight)))
    _emit(operator_to_dict(builder.get_decomposition()), args.output)
    return 0


def _cmd_prob(args) -> int:
    rho = _load_density(args.density)
    event = _load_event(args.event, args.kind)
    print(f"probability={_fmt(rho.probability(event))}")
    return 0


def _cmd_entropy(args) -> int:
    rho = _load_density(args.density)
    print(f"entropy={_fmt(rho.entropy())}")
    return 0


def _cmd_divergence(args) -> int:
    rho = _load_density(args.density)
    tau = _load_density(args.other)
    alpha = args.alpha if args.alpha is not None else 1.0 / max(rho.op.X.dim, 1)
    print(f"divergence={_fmt(rho.divergence(tau, args.epsilon, alpha))}")
    return 0


def _cmd_condition(args) -> int:
    rho = _load_density(args.density)
    event = _load_event(args.event, args.kind)
    conditioned = rho.condition_on(event, orthogonal=args.orthogonal)
    result = conditioned.normalize().orthonormalize()
    _emit(operator_to_dict(result.op), args.output)
    return 0


def _cmd_reduce(args) -> int:
    original = load_operator(args.operator)
    op, _ = remove_unused(original)
    op, _ = nullspace_reduce(op, delta=args.delta)
    removed = original.preimage_count - op.preimage_count
    if args.lambda_ is not None or args.target_removals is not None:
        if not op.orthonormal:
            op = op.orthonormalize()
        params = QpReductionParams(
            lambda_=args.lambda_,
            target_removals=args.target_removals or 1,
            delta_row_threshold=args.delta_row_threshold,
        )
        op, report = qp_reduce(op, params)
        removed += len(report.removed_indices)
    residual = operator_distance(original, op)
    print(f"removed={removed}")
    print(f"residual={_fmt(residual)}")
    _emit(operator_to_dict(op), args.output)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kqp",
        description="kernel quantum probabilities: build, query and reduce decompositions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    evd = sub.add_parser("evd", help="build a decomposition from CSV vectors (one per row)")
    evd.add_argument("vectors", help="CSV file, one vector per row")
    evd.add_argument("--weights", help="optional file with one weight per row")
    evd.add_argument("--kernel", choices=["linear", "gaussian"], default="linear")
    evd.add_argument("--bandwidth", type=float, default=None)
    evd.add_argument("--eta", type=float, default=1e-10, help="relative error budget")
    evd.add_argument("--r-max", dest="r_max", type=int, default=None, help="rank cap")
    evd.add_argument("--ratio", type=float, default=2.0, help="pre-image/rank budget ratio")
    evd.add_argument("-o", "--output", help="output JSON path (default: stdout)")
    evd.set_defaults(func=_cmd_evd)

    prob = sub.add_parser("prob", help="probability of an event under a density")
    prob.add_argument("density")
    prob.add_argument("event")
    prob.add_argument("--kind", choices=["observable", "effect"], default="observable")
    prob.set_defaults(func=_cmd_prob)

    entropy = sub.add_parser("entropy", help="tr(rho log rho) of a density")
    entropy.add_argument("density")
    entropy.set_defaults(func=_cmd_entropy)

    div = sub.add_parser("divergence", help="relative entropy between two densities")
    div.add_argument("density")
    div.add_argument("other")
    div.add_argument("--epsilon", type=float, default=0.0, help="noise mixing weight in [0, 1)")
    div.add_argument("--alpha", type=float, default=None, help="noise level (default 1/dim)")
    div.set_defaults(func=_cmd_divergence)

    cond = sub.add_parser("condition", help="condition a density on an event")
    cond.add_argument("density")
    cond.add_argument("event")
    cond.add_argument("--kind", choices=["observable", "effect"], default="observable")
    cond.add_argument("--orthogonal", action="store_true", help="condition on the complement")
    cond.add_argument("-o", "--output", help="output JSON path (default: stdout)")
    cond.set_defaults(func=_cmd_condition)

    reduce_p = sub.add_parser("reduce", help="shrink the pre-image set of a decomposition")
    reduce_p.add_argument("operator")
    reduce_p.add_argument("--delta", type=float, default=0.1, help="null-space pivot threshold")
    reduce_p.add_argument("--lambda", dest="lambda_", type=float, default=None, help="explicit L1 penalty")
    reduce_p.add_argument(
        "--target-removals", dest="target_removals", type=int, default=None,
        help="pick the penalty automatically to remove at least this many pre-images",
    )
    reduce_p.add_argument(
        "--delta-row-threshold", dest="delta_row_threshold", type=float, default=1e-6,
        help="relative row-norm cutoff declaring a pre-image removed",
    )
    reduce_p.add_argument("-o", "--output", help="output JSON path (default: stdout)")
    reduce_p.set_defaults(func=_cmd_reduce)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DegenerateDensityError, DegenerateResultError) as exc:
        print(f"error: zero-trace result ({exc})", file=sys.stderr)
        return 3
    except SolverFailureError as exc:
        print(f"error: solver failure ({exc})", file=sys.stderr)
        return 4
    except (KqpError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
