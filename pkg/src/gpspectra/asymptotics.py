"""Large-frequency predictions for the oscillatory pair.

Two kernel classes get closed-form leading terms for the upper root
lam(a) as the mode frequency a grows:

* finite-sum kernels (K(0) = sum c_k finite):
      lam = i*a - K(0) / (2*a**(2*(1-xi))) + smaller,
* power-law families with regularity r < 1:
      lam = i*a - C(r) * A / (beta * B**(1-r)) * a**(-(1+r-2*xi)) + smaller,
  and for r = 1 the algebraic factor gains a log:
      lam = i*a - A/(2*beta) * log(a) * a**(-2*(1-xi)) + smaller.

C(r) is the complex constant (i/2) * angular_integral(r, pi/2), available
both in closed form and by quadrature so each route checks the other.  The
sign of 1 + r - 2*xi sorts families into three long-run regimes for the
decay rate |Re lam|: vanishing, constant, or unbounded.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .kernels import PowerLawFamily
from .quadrature import integrate_power_weighted

REGIME_TAGS = (
    "finite_sum_xi_lt_half",
    "finite_sum_xi_eq_half",
    "finite_sum_xi_gt_half",
    "power_r_lt_half",
    "power_r_in_half_one",
    "power_r_eq_one",
)

DECAY_REGIMES = ("tends_to_axis", "constant_offset", "unbounded_decay")


@dataclass(frozen=True)
class AsymptoticPrediction:
    """Leading term plus the declared decay order of the neglected remainder.

    ``remainder_order`` is the exponent q such that the (real-part) error of
    ``value`` is O(a**-q); for finite-sum kernels the imaginary part has its
    own exponent, which degenerates to 0 (bounded, not decaying) at
    xi = 1/2.
    """

    value: complex
    remainder_order: float
    regime_tag: str
    imag_remainder_order: float | None = None


def _real_remainder(tag: str, xi: float, r: float | None) -> float:
    if tag.startswith("finite_sum"):
        return 2.0 * (1.0 - xi)
    if tag == "power_r_lt_half":
        return 2.0 * (r - xi) + 1.0
    return 2.0 * (1.0 - xi)  # both power tags with r >= 1/2


def _imag_remainder(tag: str, xi: float) -> float | None:
    if not tag.startswith("finite_sum"):
        return None
    if xi < 0.5:
        return 1.0 - 2.0 * xi
    if xi > 0.5:
        return 2.0 * xi - 1.0
    return 0.0


def asymptotic_constant(r: float) -> complex:
    """C(r) = (pi/2) * exp(i*pi*(1-r)/2) / sin(pi*r) for 0 < r < 1."""
    if not 0.0 < r < 1.0:
        raise ValueError("r must lie strictly inside (0, 1)")
    return (math.pi / 2.0) * cmath.exp(1j * math.pi * (1.0 - r) / 2.0) / math.sin(
        math.pi * r
    )


def asymptotic_constant_quadrature(r: float, tol: float = 1e-12) -> complex:
    """C(r) from its two defining real integrals, as an independent check.

    C(r) = (1/2) * [ integral t**(-r)/(1+t**2) + i * integral t**(1-r)/(1+t**2) ]
    over (0, inf).  Each integral splits at t = 1 and inverts the tail so
    only power-weighted integrals over (0, 1] remain.
    """
    if not 0.0 < r < 1.0:
        raise ValueError("r must lie strictly inside (0, 1)")

    def lower(power: float) -> complex:
        return integrate_power_weighted(lambda t: 1.0 / (1.0 + t * t), power, tol=tol)

    j1 = lower(-r) + lower(r)  # head t**-r, inverted tail v**r
    j2 = lower(1.0 - r) + lower(r - 1.0)
    return 0.5 * complex(j1.real, j2.real)


def predict_finite_sum(frequency: float, xi: float, initial_value: float) -> AsymptoticPrediction:
    """Pair prediction for kernels with finite initial value K(0).

    value = i*a - K(0)/(2*a**(2*(1-xi))); the real remainder decays one
    order faster in the weight, the imaginary remainder switches behaviour
    at xi = 1/2.
    """
    if not frequency > 0:
        raise ValueError("frequency must be positive")
    if not 0.0 < xi < 1.0:
        raise ValueError("xi must lie strictly inside (0, 1)")
    if initial_value < 0:
        raise ValueError("initial value must be nonnegative")
    if xi < 0.5:
        tag = "finite_sum_xi_lt_half"
    elif xi > 0.5:
        tag = "finite_sum_xi_gt_half"
    else:
        tag = "finite_sum_xi_eq_half"
    weight = frequency ** (-2.0 * (1.0 - xi))
    value = complex(-0.5 * initial_value * weight, frequency)
    return AsymptoticPrediction(
        value=value,
        remainder_order=_real_remainder(tag, xi, None),
        regime_tag=tag,
        imag_remainder_order=_imag_remainder(tag, xi),
    )


def predict_power_law(frequency: float, xi: float, family: PowerLawFamily) -> AsymptoticPrediction:
    """Pair prediction for a power-law family, upper branch.

    The complex constant multiplies the full correction, so both real and
    imaginary parts of the returned value carry the leading shift; the
    conjugate branch is the mirror image.
    """
    if not frequency > 0:
        raise ValueError("frequency must be positive")
    if not 0.0 < xi < 1.0:
        raise ValueError("xi must lie strictly inside (0, 1)")
    a = float(frequency)
    r = family.regularity
    if r == 1.0:
        tag = "power_r_eq_one"
        corr = (family.amplitude / (2.0 * family.beta)) * math.log(a) * a ** (
            -2.0 * (1.0 - xi)
        )
        value = complex(-corr, a)
    else:
        tag = "power_r_lt_half" if r < 0.5 else "power_r_in_half_one"
        front = family.amplitude / (family.beta * family.scale ** (1.0 - r))
        corr = asymptotic_constant(r) * front * a ** (-(1.0 + r - 2.0 * xi))
        value = 1j * a - corr
    return AsymptoticPrediction(
        value=value,
        remainder_order=_real_remainder(tag, xi, r),
        regime_tag=tag,
        imag_remainder_order=None,
    )


def classify_regime(xi: float, r: float) -> str:
    """Long-run behaviour of the pair's decay rate |Re lam(a)|.

    Compares xi against (r+1)/2: below it the decay rate vanishes, at it
    the rate approaches the constant Re C(r)*A/(beta*B**(1-r)), above it
    the pair runs off to Re = -inf.  Kernels with r = 1 always send the
    pair to the axis (the log factor loses to any positive power).
    """
    if not 0.0 < xi < 1.0:
        raise ValueError("xi must lie strictly inside (0, 1)")
    if not 0.0 < r <= 1.0:
        raise ValueError("r must lie in (0, 1]")
    if r == 1.0:
        return "tends_to_axis"
    boundary = 0.5 * (r + 1.0)
    if xi < boundary:
        return "tends_to_axis"
    if xi == boundary:
        return "constant_offset"
    return "unbounded_decay"


@dataclass(frozen=True)
class SlopeFit:
    """Least-squares log-log slope with a residual-based uncertainty."""

    slope: float
    half_width: float
    below_floor: bool = False


def empirical_order(points: Sequence[tuple[float, float]]) -> SlopeFit:
    """Fit log(error) = slope*log(scale) + const over a measured ladder.

    Needs at least 4 points spanning two decades in scale.  Errors must be
    nonnegative; an exact zero means the quantity fell below measurement
    noise, reported via the ``below_floor`` sentinel instead of a fit.
    """
    if len(points) < 4:
        raise ValueError("need at least 4 points for a slope fit")
    scales = np.asarray([s for s, _ in points], dtype=float)
    errors = np.asarray([e for _, e in points], dtype=float)
    if np.any(scales <= 0):
        raise ValueError("scales must be positive")
    if np.max(scales) / np.min(scales) < 100.0:
        raise ValueError("scales must span at least two decades")
    if np.any(errors < 0):
        raise ValueError("errors must be nonnegative")
    if np.any(errors == 0):
        return SlopeFit(slope=math.nan, half_width=math.nan, below_floor=True)
    x = np.log(scales)
    y = np.log(errors)
    n = len(x)
    xbar = x.mean()
    sxx = float(np.sum((x - xbar) ** 2))
    slope, intercept = np.polyfit(x, y, 1)
    resid = y - (slope * x + intercept)
    variance = float(np.sum(resid**2)) / (n - 2)
    half_width = 2.0 * math.sqrt(variance / sxx)
    return SlopeFit(slope=float(slope), half_width=half_width)
