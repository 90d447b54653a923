"""Independent cross-checks: polynomial roots and time-domain decay.

None of the machinery here reuses the bracketing/fixed-point solvers, so
agreement is evidence rather than tautology:

* :func:`aberth_roots` finds all roots of the cleared polynomial at once
  (Aberth-Ehrlich simultaneous iteration from a perturbed circle);
* :func:`build_mode_system` realises a mode as the first-order linear
  system whose eigenvalues are exactly the symbol roots, with the
  characteristic polynomial recovered by the Faddeev-LeVerrier recursion;
* :func:`simulate_decay` integrates that system (classical fourth-order
  one-step matrix, fixed step) and reads the slowest decay rate off the
  oscillation envelope.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np
from mpmath import mp
from numpy.polynomial import polynomial as npoly
from scipy.optimize import linear_sum_assignment

from .errors import MaxIterationsError, NumericalError
from .pencil import ModePencil

#: largest mode system materialised as a dense matrix
ODE_MAX = 32

#: residual acceptance for the simultaneous root finder
ABERTH_RESIDUAL = 1e-10

_GOLDEN = 0.6180339887498949


def _working_value(x) -> np.clongdouble:
    """Convert one coefficient to extended precision without losing bits.

    numpy's own object-array casts go through ``float`` and would round
    exact rationals to 53 bits; splitting into a double head plus exact
    remainder keeps the full 64-bit longdouble mantissa.
    """
    if isinstance(x, Fraction):
        hi = float(x)
        lo = float(x - Fraction(hi))
        return np.clongdouble(hi) + np.clongdouble(lo)
    return np.clongdouble(x)


def _precise_value(x):
    """Convert one coefficient to an mpmath number at working precision."""
    if isinstance(x, Fraction):
        return mp.mpf(x.numerator) / x.denominator
    if isinstance(x, (int, np.integer)):
        return mp.mpf(int(x))
    if isinstance(x, np.longdouble):
        m, e = np.frexp(x)
        return mp.mpf(int(m * np.longdouble(2.0) ** 64)) * mp.mpf(2.0) ** (int(e) - 64)
    if isinstance(x, (complex, np.complexfloating)):
        return mp.mpc(complex(x))
    return mp.mpf(float(x))


def _polish_roots(z: np.ndarray, exacts: list, steps: int = 4) -> np.ndarray:
    """Newton-polish converged iterates against the exact coefficients.

    The simultaneous iteration leaves every iterate deep inside its own
    Newton basin; what still limits it is evaluation noise at working
    precision, which for badly conditioned monomial bases (condition
    numbers around 1e10 for pinched roots) costs ~1e-9 of forward
    accuracy.  Re-evaluating at 40 significant digits from the exact
    coefficient values puts that noise near 1e-30, so the returned
    double-precision roots are correctly rounded.
    """
    with mp.workdps(40):
        cs = [_precise_value(x) for x in exacts]
        tiny = mp.mpf(10) ** -35
        out = []
        for seed in z:
            root = mp.mpc(complex(seed))
            for _ in range(steps):
                value = cs[-1]
                deriv = mp.mpf(0)
                for coeff in cs[-2::-1]:
                    deriv = deriv * root + value
                    value = value * root + coeff
                if deriv == 0:
                    break
                step = value / deriv
                root = root - step
                if abs(step) <= tiny * (1 + abs(root)):
                    break
            out.append(complex(root))
    return np.array(out, dtype=complex)


def aberth_roots(coeffs: Sequence[float] | np.ndarray, max_sweeps: int = 500) -> np.ndarray:
    """All complex roots of a polynomial given by ascending coefficients.

    Starts from a deterministically perturbed circle of radius
    |c0/cn|**(1/n) (the geometric mean of the root moduli) and applies
    Aberth-Ehrlich corrections until the steps flatline: either the
    largest relative step is machine-size, or the steps have stopped
    shrinking for several sweeps while every residual sits within a small
    factor of the round-off floor of evaluating P there
    (eps * sum (2k+1)|c_k||z|^k).  That plateau is the evaluation-noise
    limit cycle, the accuracy ceiling of the data; stopping on small
    residuals alone would quit a sweep or two earlier, which for pinched
    roots (tiny |P'|) costs a decade of forward accuracy.  The whole
    iteration is carried in extended precision (clongdouble):
    ill-conditioned clusters — pinched roots of cleared pencils have
    monomial-basis condition numbers around 1e10 — would otherwise limit
    forward accuracy to ~1e-6 even at full convergence.  Every returned
    root must have backward error
    |P(root)| <= ABERTH_RESIDUAL * sum |c_k||root|^k, i.e. be an exact
    root of a polynomial whose coefficients differ relatively by at most
    ABERTH_RESIDUAL; anything worse is reported as non-convergence rather
    than returned.  Exact rational coefficients (Fraction values, as the
    cleared-pencil expansion produces) are honoured end to end: the
    converged iterates get a final Newton polish against the exact values
    so the returned roots are correct to double precision regardless of
    monomial-basis conditioning.
    """
    raw = np.asarray(coeffs)
    if raw.ndim != 1 or raw.size < 2:
        raise ValueError("need a polynomial of degree >= 1")
    exacts = list(raw)
    if raw.dtype == object:
        c = np.array([_working_value(x) for x in raw], dtype=np.clongdouble)
    else:
        c = raw.astype(np.clongdouble)
    if c[-1] == 0:
        raise ValueError("leading coefficient must be nonzero")
    c = c / c[-1]
    dc = npoly.polyder(c)

    zeros_at_origin = 0
    while exacts[0] == 0:
        zeros_at_origin += 1
        exacts = exacts[1:]
        c = c[1:]
        dc = npoly.polyder(c)
    n = c.size - 1
    if n == 0:
        return np.zeros(zeros_at_origin, dtype=complex)

    radius = float(abs(c[0])) ** (1.0 / n)
    radius = max(radius, 1e-12)
    j = np.arange(n)
    angles = 2.0 * np.pi * j / n + 0.4
    wobble = 1.0 + 0.05 * ((j * _GOLDEN) % 1.0)
    z = (radius * wobble * np.exp(1j * angles)).astype(np.clongdouble)

    eps = float(np.finfo(np.longdouble).eps)
    noise_weights = (2.0 * np.arange(c.size) + 1.0) * np.abs(c)

    def at_noise_floor(factor: float) -> bool:
        resid = np.abs(npoly.polyval(z, c))
        floor = eps * npoly.polyval(np.abs(z), noise_weights)
        return bool(np.all(resid <= factor * floor))

    converged = False
    best_step = np.inf
    stale = 0
    for _ in range(max_sweeps):
        pz = npoly.polyval(z, c)
        dz = npoly.polyval(z, dc)
        ratio = np.where(dz != 0, pz / np.where(dz != 0, dz, 1.0), 0.0)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, np.inf)
        if np.any(diff == 0):  # collided iterates: nudge apart
            z = z * (1.0 + 1e-12 * np.arange(1, n + 1))
            continue
        repulsion = np.sum(1.0 / diff, axis=1)
        denom = 1.0 - ratio * repulsion
        w = np.where(denom != 0, ratio / np.where(denom != 0, denom, 1.0), ratio)
        z = z - w
        relstep = float(np.max(np.abs(w) / (1.0 + np.abs(z))))
        if relstep < 1e-16:
            converged = True
            break
        if relstep < 0.5 * best_step:
            best_step = relstep
            stale = 0
            continue
        stale += 1
        if stale >= 4:
            # steps plateaued: either the noise-ball limit cycle (accept)
            # or a slow early phase (keep sweeping)
            if at_noise_floor(8.0):
                converged = True
                break
            stale = 0
    if not converged and not at_noise_floor(8.0):
        raise MaxIterationsError(f"Aberth sweeps exhausted ({max_sweeps})")

    z = _polish_roots(z, exacts).astype(np.clongdouble)
    backward = np.abs(npoly.polyval(z, c)) / npoly.polyval(np.abs(z), np.abs(c))
    worst = float(np.max(backward))
    if worst > ABERTH_RESIDUAL:
        raise NumericalError(
            f"root backward error {worst:.3e} exceeds {ABERTH_RESIDUAL:.1e}"
        )
    out = z.astype(complex)
    if zeros_at_origin:
        out = np.concatenate([out, np.zeros(zeros_at_origin, dtype=complex)])
    return out


@dataclass(frozen=True)
class ModeSystem:
    """First-order realisation of one mode with memory stages.

    State (u, u', w_1..w_n):
        u'   = u'
        u''  = -a**2 u + a**(2 xi) sum_k c_k w_k
        w_k' = -g_k w_k + u.
    Eigenvalues of ``matrix`` coincide with the symbol roots.
    """

    matrix: np.ndarray
    frequency: float
    xi: float

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]

    def char_coefficients(self) -> np.ndarray:
        """Ascending monic characteristic coefficients via Faddeev-LeVerrier."""
        m = self.matrix.astype(np.longdouble)
        n = m.shape[0]
        coeffs = np.zeros(n + 1, dtype=np.longdouble)
        coeffs[n] = 1.0
        work = np.zeros_like(m)
        eye = np.eye(n, dtype=np.longdouble)
        ck = np.longdouble(1.0)
        for k in range(1, n + 1):
            work = m @ (work + ck * eye)
            ck = -np.trace(work) / k
            coeffs[n - k] = ck
        return np.asarray(coeffs, dtype=float)


def build_mode_system(p: ModePencil) -> ModeSystem:
    """Assemble the (n+2)-dimensional companion system for one mode."""
    n = p.kernel.size
    if n + 2 > ODE_MAX:
        raise ValueError(f"system dimension {n + 2} exceeds cap {ODE_MAX}")
    a = p.frequency
    mat = np.zeros((n + 2, n + 2))
    mat[0, 1] = 1.0
    mat[1, 0] = -(a**2)
    mat[1, 2:] = a ** (2.0 * p.xi) * np.asarray(p.kernel.coeffs)
    for i, g in enumerate(p.kernel.rates):
        mat[2 + i, 0] = 1.0
        mat[2 + i, 2 + i] = -g
    return ModeSystem(matrix=mat, frequency=a, xi=p.xi)


@dataclass(frozen=True)
class DecayEstimate:
    """Envelope decay rate fitted over the second half of a simulation."""

    rate: float
    half_width: float
    peak_count: int
    window: tuple[float, float]


def simulate_decay(p: ModePencil, horizon: float, dt: float) -> DecayEstimate:
    """Integrate the mode from u(0)=1 at rest and fit the envelope decay.

    Classical fourth-order one-step integration with fixed step ``dt``; the
    explicit scheme needs dt <= 0.05 / max(frequency, largest rate), which
    is enforced.  The envelope |u| + |u'|/a is sampled roughly 24 times per
    oscillation period, its local maxima over [horizon/2, horizon] are
    collected, and log-peaks are fitted linearly; the slope estimates the
    slowest decay rate among the excited roots.
    """
    system = build_mode_system(p)
    a = p.frequency
    limit = 0.05 / max(a, p.kernel.rates[-1])
    if dt > limit:
        raise ValueError(f"step {dt} exceeds stability limit {limit:.3e}")
    if horizon <= 0:
        raise ValueError("horizon must be positive")

    # one RK4 step of u' = M u is the fixed matrix sum_{j<=4} (M dt)^j / j!
    m = system.matrix
    dim = system.dimension
    step = np.eye(dim)
    term = np.eye(dim)
    for fact in (1.0, 2.0, 3.0, 4.0):
        term = term @ (m * dt) / fact
        step = step + term

    period = 2.0 * math.pi / a
    stride = max(1, int(round(period / 24.0 / dt)))
    hop = np.linalg.matrix_power(step, stride)
    out_dt = stride * dt
    n_out = int(horizon / out_dt)
    if n_out < 16:
        raise ValueError("horizon too short for the requested step")

    state = np.zeros(dim)
    state[0] = 1.0
    envelope = np.empty(n_out)
    for j in range(n_out):
        envelope[j] = abs(state[0]) + abs(state[1]) / a
        state = hop @ state
    times = out_dt * np.arange(n_out)

    half = times >= 0.5 * horizon
    e, t = envelope[half], times[half]
    interior = (e[1:-1] > e[:-2]) & (e[1:-1] >= e[2:]) & (e[1:-1] > 0.0)
    peak_t = t[1:-1][interior]
    peak_e = e[1:-1][interior]
    if peak_t.size < 8:
        raise ValueError(
            f"degenerate fit window: only {peak_t.size} envelope peaks"
        )
    x = peak_t - peak_t[0]
    y = np.log(peak_e)
    slope, intercept = np.polyfit(x, y, 1)
    resid = y - (slope * x + intercept)
    sxx = float(np.sum((x - x.mean()) ** 2))
    variance = float(np.sum(resid**2)) / max(1, len(x) - 2)
    return DecayEstimate(
        rate=float(slope),
        half_width=2.0 * math.sqrt(variance / sxx),
        peak_count=int(peak_t.size),
        window=(float(t[0]), float(t[-1])),
    )


@dataclass(frozen=True)
class MatchResult:
    """Pairing of two root multisets with the worst relative deviation."""

    pairs: tuple[tuple[complex, complex], ...]
    max_relative_deviation: float


def match_roots(
    computed: Sequence[complex] | np.ndarray,
    reference: Sequence[complex] | np.ndarray,
) -> MatchResult:
    """Pair each computed root with a distinct reference root.

    Greedy nearest-neighbour matching is used when unambiguous; if any
    root's second-best candidate comes within a factor two of its best,
    the pairing is redone as an optimal assignment.  A cardinality mismatch
    is an error, never a silent truncation.
    """
    a = np.asarray(computed, dtype=complex)
    b = np.asarray(reference, dtype=complex)
    if a.shape != b.shape or a.ndim != 1:
        raise ValueError(f"multiset sizes differ: {a.shape} vs {b.shape}")
    n = a.size
    dist = np.abs(a[:, None] - b[None, :])

    ambiguous = False
    order = np.argsort(dist, axis=1)
    if n > 1:
        best = dist[np.arange(n), order[:, 0]]
        second = dist[np.arange(n), order[:, 1]]
        ambiguous = bool(np.any(second < 2.0 * best))
    taken = np.zeros(n, dtype=bool)
    pairing = np.full(n, -1)
    if not ambiguous:
        for i in range(n):
            for j in order[i]:
                if not taken[j]:
                    taken[j] = True
                    pairing[i] = j
                    break
        if np.any(pairing < 0):
            ambiguous = True
    if ambiguous:
        rows, cols = linear_sum_assignment(dist)
        pairing = np.empty(n, dtype=int)
        pairing[rows] = cols

    pairs = tuple((complex(a[i]), complex(b[pairing[i]])) for i in range(n))
    deviation = max(
        abs(x - y) / max(1.0, abs(x)) for x, y in pairs
    )
    return MatchResult(pairs=pairs, max_relative_deviation=float(deviation))
