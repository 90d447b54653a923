"""Real spectral branches between consecutive kernel poles.

On each interval (-g_k, -g_{k-1}) (with g_0 = 0) the mode symbol L runs
from -inf at the left pole to +inf at the right one (to L(0) > 0 on the
first interval), so it crosses zero.  The same bracketing carries over to
the stiffness factor f(z) = 1 - w*Khat(z), whose roots sit strictly to the
right of the symbol roots and share the pole limits.  Roots are located by
guarded bisection followed by a short Newton polish; a missing sign change
is reported, never papered over.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import NoSignChangeError
from .kernels import POLE_GUARD_FACTOR, ExponentialKernel
from .pencil import ModePencil, stiffness, symbol, symbol_deriv

#: bisection stops once the bracket is this fraction of the initial width
WIDTH_TOL = 1e-13

#: endpoints are pulled inside the interval by this fraction of its width
ENDPOINT_STANDOFF = 1e-9

#: Newton polish steps after bisection
POLISH_STEPS = 8


@dataclass(frozen=True)
class BranchRoot:
    """A located real root: 1-based branch index, value, bracket, residual."""

    index: int
    value: float
    interval: tuple[float, float]
    residual: float


def bracket_intervals(
    kernel: ExponentialKernel, count: int
) -> list[tuple[float, float]]:
    """First ``count`` pole-to-pole intervals (-g_k, -g_{k-1}), g_0 = 0."""
    if not 1 <= count <= kernel.size:
        raise ValueError(f"count {count} outside 1..{kernel.size}")
    edges = (0.0,) + kernel.rates
    return [(-edges[k], -edges[k - 1]) for k in range(1, count + 1)]


def _bracketed_root(
    fun: Callable[[float], float],
    dfun: Callable[[float], float],
    lo: float,
    hi: float,
    standoff: float,
) -> float:
    width = hi - lo
    a = lo + max(ENDPOINT_STANDOFF * width, standoff)
    b = hi - max(ENDPOINT_STANDOFF * width, standoff)
    fa, fb = fun(a), fun(b)
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if (fa > 0) == (fb > 0):
        raise NoSignChangeError(a, b, fa, fb)
    target = WIDTH_TOL * width
    while b - a > target:
        mid = 0.5 * (a + b)
        if mid <= a or mid >= b:  # float exhaustion
            break
        fm = fun(mid)
        if fm == 0.0:
            return mid
        if (fm > 0) == (fa > 0):
            a, fa = mid, fm
        else:
            b, fb = mid, fm
    root = 0.5 * (a + b)
    best, best_res = root, abs(fun(root))
    z = root
    for _ in range(POLISH_STEPS):
        d = dfun(z)
        if d == 0.0:
            break
        step = fun(z) / d
        z = z - step
        if not a <= z <= b:
            break
        res = abs(fun(z))
        if res < best_res:
            best, best_res = z, res
        if abs(step) <= 1e-17 * max(1.0, abs(z)):
            break
    return best


def _locate(
    p: ModePencil,
    which: str,
    intervals: Sequence[tuple[float, float]],
    first_index: int,
) -> list[BranchRoot]:
    if which == "symbol":
        fun = lambda x: symbol(p, x).real
        dfun = lambda x: symbol_deriv(p, x).real
    else:
        fun = lambda x: stiffness(p, x).real
        # f'(z) = -w * Khat'(z) = L'(z)/a**2 - 2z/a**2
        a2 = p.frequency**2
        dfun = lambda x: (symbol_deriv(p, x).real - 2.0 * x) / a2
    standoff = 10.0 * POLE_GUARD_FACTOR * p.kernel.rates[-1]
    out = []
    for offset, (lo, hi) in enumerate(intervals):
        k = first_index + offset
        root = _bracketed_root(fun, dfun, lo, hi, standoff)
        out.append(
            BranchRoot(
                index=k,
                value=root,
                interval=(lo, hi),
                residual=abs(symbol(p, root)) if which == "symbol" else abs(stiffness(p, root)),
            )
        )
    return out


def branch_roots(p: ModePencil, count: int) -> list[BranchRoot]:
    """Real roots of the mode symbol, one per pole interval, k = 1..count."""
    intervals = bracket_intervals(p.kernel, count)
    return _locate(p, "symbol", intervals, 1)


def stiffness_roots(p: ModePencil, count: int) -> list[BranchRoot]:
    """Real roots of the stiffness factor f, one per pole interval."""
    intervals = bracket_intervals(p.kernel, count)
    return _locate(p, "stiffness", intervals, 1)


@dataclass(frozen=True)
class ConvergenceRecord:
    """How the k-th branch approaches its pole as the frequency grows."""

    index: int
    frequencies: tuple[float, ...]
    roots: tuple[float, ...]
    stiffness_values: tuple[float, ...]
    pole_deviations: tuple[float, ...]  # |root + g_k|: shrinks like the weight
    gaps: tuple[float, ...]  # |root - stiffness root|: strictly faster
    deviation_slope: float  # fitted log-log order of pole_deviations
    gap_slope: float  # fitted log-log order of gaps


def branch_convergence(pencils: Sequence[ModePencil], k: int) -> ConvergenceRecord:
    """Track branch k across a frequency ladder sharing kernel and xi.

    Asserts the monotone approach of the root to -g_k; when the ladder
    supports a fit (4+ points over 2+ decades) it also asserts that the
    root/stiffness-root gap closes no slower than the memory weight
    a**(-2(1-xi)).  The deviation |root + g_k| is what tracks the weight
    order exactly; the gap contracts two extra powers (like a**(2 xi - 4)),
    because the stiffness slope blows up as the root pinches its pole.
    """
    if len(pencils) < 2:
        raise ValueError("need at least two pencils to compare")
    kern, xi = pencils[0].kernel, pencils[0].xi
    freqs = [p.frequency for p in pencils]
    if any(p.kernel is not kern and p.kernel != kern for p in pencils):
        raise ValueError("pencils must share one kernel")
    if any(p.xi != xi for p in pencils):
        raise ValueError("pencils must share xi")
    if any(b <= a for a, b in zip(freqs, freqs[1:])):
        raise ValueError("frequencies must increase strictly")
    if not 1 <= k <= kern.size:
        raise ValueError(f"branch index {k} outside 1..{kern.size}")

    g_k = kern.rates[k - 1]
    interval = bracket_intervals(kern, k)[k - 1]
    mu, x = [], []
    for p in pencils:
        mu.append(_locate(p, "symbol", [interval], k)[0].value)
        x.append(_locate(p, "stiffness", [interval], k)[0].value)
    dev = [abs(m + g_k) for m in mu]
    gaps = [abs(m - s) for m, s in zip(mu, x)]
    if any(b > a * (1 + 1e-9) for a, b in zip(dev, dev[1:])):
        raise ValueError(
            f"branch {k} does not approach its pole monotonically: {dev}"
        )
    from .asymptotics import empirical_order

    # the slope fits need four points over two decades; shorter ladders
    # still get the monotonicity check above, just no fitted orders
    if len(freqs) >= 4 and max(freqs) / min(freqs) >= 100.0:
        gap_slope = empirical_order(list(zip(freqs, gaps))).slope
        deviation_slope = empirical_order(list(zip(freqs, dev))).slope
        weight_order = -2.0 * (1.0 - xi)
        if gap_slope > weight_order + 0.25:
            raise ValueError(
                f"branch {k} gap decays with order {gap_slope:.3f}, slower "
                f"than the weight order {weight_order:.3f}"
            )
    else:
        gap_slope = math.nan
        deviation_slope = math.nan
    return ConvergenceRecord(
        index=k,
        frequencies=tuple(freqs),
        roots=tuple(mu),
        stiffness_values=tuple(x),
        pole_deviations=tuple(dev),
        gaps=tuple(gaps),
        deviation_slope=deviation_slope,
        gap_slope=gap_slope,
    )
