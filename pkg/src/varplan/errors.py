"""Exception types shared across the package."""


class SdfBoundsError(ValueError):
    """Raised when a query point lies outside the signed-distance grid."""

    def __init__(self, point):
        self.point = tuple(float(c) for c in point)
        super().__init__(f"query point {self.point} is outside the SDF grid bounds")


class FactorizationError(ArithmeticError):
    """Raised when an LDL^T pivot block is singular or indefinite."""

    def __init__(self, block_index, message=None):
        self.block_index = int(block_index)
        super().__init__(
            message or f"non-positive-definite pivot block at index {self.block_index}"
        )


class QuadratureBudgetError(RuntimeError):
    """Raised when a tensor-product rule would exceed the sigma-point budget."""


class ScenarioError(ValueError):
    """Raised when a scenario or obstacle-spec file cannot be parsed."""
