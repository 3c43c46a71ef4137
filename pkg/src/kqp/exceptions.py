"""Exception types shared across the package."""


class KqpError(Exception):
    """Base class for all library errors."""


class InvalidInputError(KqpError, ValueError):
    """Malformed or contract-violating input (NaN entries, shape or kernel mismatch)."""


class NotPositiveDefiniteError(KqpError):
    """Cholesky factorization met a non-positive pivot."""

    def __init__(self, pivot: int):
        self.pivot = pivot
        super().__init__(f"matrix is not positive definite (pivot {pivot})")


class SingularPivotError(KqpError):
    """A signed Cholesky or triangular solve met a vanishing pivot."""

    def __init__(self, pivot: int, message: str | None = None):
        self.pivot = pivot
        super().__init__(message or f"singular pivot at index {pivot}")


class DegenerateDensityError(KqpError):
    """Normalization was asked of an (almost) zero-trace density."""


class NumericalBreakdownError(KqpError):
    """An internally PSD quantity came out significantly indefinite."""


class LambdaSelectionError(KqpError):
    """The penalty-selection heuristic hit a degenerate denominator."""


class SolverFailureError(KqpError):
    """The interior-point solver did not produce a usable iterate."""

    def __init__(self, iterations: int, message: str = ""):
        self.iterations = iterations
        super().__init__(message or f"solver failed after {iterations} iterations")


class DegenerateResultError(KqpError):
    """A reduction pass removed every pre-image."""


class FactorizationError(KqpError):
    """A block of the structured KKT factorization could not be computed."""

    def __init__(self, block: str, message: str = ""):
        self.block = block
        super().__init__(message or f"factorization failed in block {block}")
