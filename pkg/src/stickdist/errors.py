"""Exception types shared across the package."""


class StickDistError(Exception):
    """Base class for all package-specific errors."""


class DomainError(StickDistError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class NoSignChangeError(StickDistError):
    """A bracketing root finder was handed endpoints with equal signs."""


class NonFiniteError(StickDistError):
    """A function evaluated to NaN or infinity where a finite value is required."""


class NoRealTripleError(StickDistError):
    """A cubic expected to have three real roots has fewer."""


class ToleranceNotMetError(StickDistError):
    """An iterative routine exhausted its budget before reaching tolerance."""


class NotFormableError(StickDistError):
    """The given pieces cannot be closed into a polygon."""


class NoConvergenceError(StickDistError):
    """An iterative geometric solver failed to converge."""


class DiagonalMismatchError(StickDistError):
    """Cyclic-quadrilateral consistency checks disagree beyond tolerance."""
