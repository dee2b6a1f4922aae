"""Exception types shared across the package."""


class LassoError(Exception):
    """Base class for all lassoloop errors."""


class ModelInvalid(LassoError):
    """Loop model parameters outside the validity region (requires R < 1)."""


class DomainError(LassoError):
    """Evaluation point outside a curve half's x-domain."""


class DegenerateInput(LassoError):
    """Geometric input too degenerate to process (rank-deficient, too few points)."""


class DegeneratePolygon(LassoError):
    """Polygon with fewer than 3 usable vertices or near-zero area."""


class NonConvergence(LassoError):
    """Iterative solver exhausted its budget before reaching tolerance."""

    def __init__(self, message, residual=None, iterations=None):
        super().__init__(message)
        self.residual = residual
        self.iterations = iterations


class InsufficientData(LassoError):
    """Not enough (or not diverse enough) samples to identify the model."""


class NoValidStart(LassoError):
    """Every multistart candidate violated the parameter bounds."""


class PhaseError(LassoError):
    """Illegal gripper phase transition or command."""
