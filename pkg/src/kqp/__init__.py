"""Kernel quantum probabilities.

Represent quantum densities and events as low-rank decompositions over
kernel pre-images, compute probabilities, entropy, divergence and
conditionalisation from Gram matrices alone, maintain the decompositions
incrementally, and shrink pre-image sets losslessly or by an L1-penalized
reduced-set optimization.
"""

from .builders import BuilderConfig, IncrementalBuilder, UpdateTerm, accumulator_build
from .coneqp import (
    GramEmbedding,
    IpmConfig,
    IpmResult,
    KktFactor,
    QpProblem,
    build_problem,
    embed_gram,
    ipm_solve,
    kkt_factorize,
    kkt_solve,
)
from .exceptions import (
    DegenerateDensityError,
    DegenerateResultError,
    FactorizationError,
    InvalidInputError,
    KqpError,
    LambdaSelectionError,
    NotPositiveDefiniteError,
    NumericalBreakdownError,
    SingularPivotError,
    SolverFailureError,
)
from .feature import FeatureMatrix, KernelSpec
from .io import load_operator, operator_from_dict, operator_to_dict, save_operator
from .linalg import ThinEvd, cholesky, d_cholesky, rank_p_diag_update, solve_triangular, thin_sym_evd
from .operators import (
    Density,
    Event,
    EventKind,
    KernelOperator,
    operator_distance,
    operator_dot,
)
from .reduction import (
    QpReductionParams,
    ReductionReport,
    nullspace_reduce,
    qp_reduce,
    remove_unused,
    select_lambda,
)

__all__ = [
    "BuilderConfig",
    "Density",
    "DegenerateDensityError",
    "DegenerateResultError",
    "Event",
    "EventKind",
    "FactorizationError",
    "FeatureMatrix",
    "GramEmbedding",
    "IncrementalBuilder",
    "InvalidInputError",
    "IpmConfig",
    "IpmResult",
    "KernelOperator",
    "KernelSpec",
    "KktFactor",
    "KqpError",
    "LambdaSelectionError",
    "NotPositiveDefiniteError",
    "NumericalBreakdownError",
    "QpProblem",
    "QpReductionParams",
    "ReductionReport",
    "SingularPivotError",
    "SolverFailureError",
    "ThinEvd",
    "UpdateTerm",
    "accumulator_build",
    "build_problem",
    "cholesky",
    "d_cholesky",
    "embed_gram",
    "ipm_solve",
    "kkt_factorize",
    "kkt_solve",
    "load_operator",
    "nullspace_reduce",
    "operator_distance",
    "operator_dot",
    "operator_from_dict",
    "operator_to_dict",
    "qp_reduce",
    "rank_p_diag_update",
    "remove_unused",
    "save_operator",
    "select_lambda",
    "solve_triangular",
    "thin_sym_evd",
]

__version__ = "0.1.0"
