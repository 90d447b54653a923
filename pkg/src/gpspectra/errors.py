"""Exception types shared across the package.

Numerical failures (as opposed to bad inputs) derive from
:class:`NumericalError` so callers can map them to a single exit path.
"""


class GPSpectraError(Exception):
    """Base class for all package-specific errors."""


class ConfigError(GPSpectraError):
    """A job configuration failed validation; message carries the JSON path."""


class NumericalError(GPSpectraError):
    """An algorithm failed to meet its contract (non-convergence etc.)."""


class PoleProximityError(NumericalError):
    """Evaluation point too close to a kernel pole for a trustworthy value."""


class NoSignChangeError(NumericalError):
    """A bracketing interval did not change sign where a root was expected."""

    def __init__(self, lo: float, hi: float, value_lo: float, value_hi: float):
        self.lo, self.hi = lo, hi
        self.value_lo, self.value_hi = value_lo, value_hi
        super().__init__(
            f"no sign change on [{lo!r}, {hi!r}]: f(lo)={value_lo!r}, f(hi)={value_hi!r}"
        )


class NonContractionError(NumericalError):
    """Fixed-point map stopped contracting (|g'| >= 1 observed)."""


class MaxIterationsError(NumericalError):
    """Iteration cap reached before the convergence test was met."""


class DivergenceError(NumericalError):
    """Newton refinement moved away from a root (residual grew repeatedly)."""


class QuadratureError(NumericalError):
    """Adaptive quadrature hit its subdivision depth before the tolerance."""


class ContourError(NumericalError):
    """Winding-number quadrature defect failed to shrink under refinement."""
