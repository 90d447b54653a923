"""Scalar mode symbols and their polynomial form.

Each mode of the underlying evolution problem contributes the symbol

    L(z) = z**2 + a**2 - a**(2*xi) * Khat(z)
         = z**2 + a**2 * (1 - w * Khat(z)),      w = a**(-2*(1-xi)),

where a is the mode frequency and xi in (0, 1) grades how strongly the
memory term couples.  Dividing by a**2 splits the symbol into an inertia
part z**2/a**2 and a stiffness part 1 - w*Khat(z); the two views trade off
in different half-planes and both are exposed here.

Multiplying L by prod_k (z + g_k) clears the poles and yields a monic
polynomial of degree size+2 whose coefficients satisfy exact sum/product
identities used as cross-checks throughout the test-suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np

from .kernels import ExponentialKernel, laplace, laplace_deriv

#: largest ladder for which the cleared polynomial is formed explicitly
POLY_MAX = 64


@dataclass(frozen=True)
class ModePencil:
    """One mode: frequency a > 0, coupling grade xi in (0, 1), and a kernel."""

    frequency: float
    xi: float
    kernel: ExponentialKernel

    def __post_init__(self):
        if not self.frequency > 0:
            raise ValueError("frequency must be positive")
        if not 0.0 < self.xi < 1.0:
            raise ValueError("xi must lie strictly inside (0, 1)")

    @cached_property
    def memory_weight(self) -> float:
        """w = a**(-2*(1-xi)), the dimensionless weight of the memory term."""
        return self.frequency ** (-2.0 * (1.0 - self.xi))


def symbol(p: ModePencil, zeta) -> complex | np.ndarray:
    """L(z) = z**2 + a**2 * (1 - w*Khat(z)).  Vectorised over z."""
    a2 = p.frequency**2
    return zeta * zeta + a2 * (1.0 - p.memory_weight * laplace(p.kernel, zeta))


def symbol_deriv(p: ModePencil, zeta) -> complex | np.ndarray:
    """L'(z) = 2z - a**2 * w * Khat'(z)."""
    a2 = p.frequency**2
    return 2.0 * zeta - a2 * p.memory_weight * laplace_deriv(p.kernel, zeta)


def stiffness(p: ModePencil, zeta) -> complex | np.ndarray:
    """f(z) = 1 - w*Khat(z), the memoryless-stiffness factor of L/a**2."""
    return 1.0 - p.memory_weight * laplace(p.kernel, zeta)


def inertia(p: ModePencil, zeta) -> complex | np.ndarray:
    """g(z) = z**2/a**2, so that L/a**2 = stiffness + inertia identically."""
    return zeta * zeta / p.frequency**2


def _poly_mul(acc: list, root: Fraction) -> list:
    """Multiply ascending exact coefficients by (z + root)."""
    out = [Fraction(0)] * (len(acc) + 1)
    for i, v in enumerate(acc):
        out[i] += root * v
        out[i + 1] += v
    return out


def _poly_div_linear(b: list, root: Fraction) -> list:
    """Exact synthetic division of ascending coefficients by (z + root).

    Only valid when the division is exact, which holds by construction
    here: ``b`` is always a product that contains the factor being
    removed.
    """
    q = [Fraction(0)] * (len(b) - 1)
    q[-1] = b[-1]
    for i in range(len(b) - 2, 0, -1):
        q[i - 1] = b[i] - root * q[i]
    return q


def to_polynomial(p: ModePencil) -> np.ndarray:
    """Clear the poles of L: P(z) = L(z) * prod_k (z + g_k).

    Returns ascending coefficients of the monic degree size+2 polynomial

        (z**2 + a**2) * prod_k (z + g_k)
        - a**2 * w * sum_k c_k * prod_{j != k} (z + g_j)

    as exact rationals (an object array of Fraction values).  Every input
    is a binary rational, so the expansion is computed exactly; this
    matters because pinched roots give the monomial basis condition
    numbers around 1e10, and any fixed-precision rounding of the
    coefficients would move those roots by more than the cross-check
    tolerances downstream.  Cast with ``float`` for ordinary numeric
    work.  Ladders larger than POLY_MAX are refused: the coefficient
    range becomes meaningless long before that.
    """
    n = p.kernel.size
    if n > POLY_MAX:
        raise ValueError(f"ladder size {n} exceeds polynomial cap {POLY_MAX}")
    rates = [Fraction(g) for g in p.kernel.rates]
    coeffs = [Fraction(c) for c in p.kernel.coeffs]
    a2 = Fraction(p.frequency) ** 2
    w = Fraction(p.memory_weight)

    base = [Fraction(1)]
    for g in rates:
        base = _poly_mul(base, g)

    # (z**2 + a**2) * base
    main = [Fraction(0)] * (n + 3)
    for i, v in enumerate(base):
        main[i] += a2 * v
        main[i + 2] += v

    for k in range(n):
        partial = _poly_div_linear(base, rates[k])
        weight = a2 * w * coeffs[k]
        for i, v in enumerate(partial):
            main[i] -= weight * v

    return np.array(main, dtype=object)
