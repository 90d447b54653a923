"""Kernel ladders, their transforms, and the power-law family plumbing."""

import math

import numpy as np
import pytest
from mpmath import mp

from gpspectra import (
    ExponentialKernel,
    PoleProximityError,
    PowerLawFamily,
    admissibility_report,
    angular_integral,
    asymptotic_constant,
    continuum_laplace,
    laplace,
    laplace_asymptotic,
    laplace_deriv,
    laplace_tail,
    materialize,
    tail_bound,
)


# ---------------------------------------------------------------- ladders


def test_kernel_validation():
    with pytest.raises(ValueError):
        ExponentialKernel((), ())
    with pytest.raises(ValueError):
        ExponentialKernel((1.0, 2.0), (1.0,))
    with pytest.raises(ValueError):
        ExponentialKernel((0.0,), (1.0,))
    with pytest.raises(ValueError):
        ExponentialKernel((1.0,), (-1.0,))
    with pytest.raises(ValueError):
        ExponentialKernel((1.0, 1.0), (2.0, 2.0))  # rates must increase


def test_kernel_norms_harmonic_ladder():
    kern = ExponentialKernel((1.0, 0.5, 1.0 / 3.0), (1.0, 2.0, 3.0))
    assert abs(kern.l1_norm - 49.0 / 36.0) < 1e-15
    assert abs(kern.initial_value - 11.0 / 6.0) < 1e-15


# ------------------------------------------------------------- transforms


def test_laplace_spot_values():
    unit = ExponentialKernel((1.0,), (1.0,))
    assert laplace(unit, 0.0) == 1.0
    assert abs(laplace(unit, 1j) - (0.5 - 0.5j)) < 1e-15
    two = ExponentialKernel((1.0, 2.0), (1.0, 3.0))
    assert abs(laplace(two, 1.0) - 1.0) < 1e-15


def test_laplace_vectorised_matches_scalar():
    kern = ExponentialKernel((0.3, 0.4), (1.0, 5.0))
    pts = np.array([0.1 + 1j, 2.0, -0.5 + 4j, 100.0j])
    vec = laplace(kern, pts)
    assert vec.shape == pts.shape
    for z, v in zip(pts, vec):
        assert abs(v - laplace(kern, complex(z))) < 1e-15


def test_laplace_conjugate_symmetry():
    kern = ExponentialKernel((0.3, 0.4, 0.1), (1.0, 2.5, 7.0))
    rng = np.random.default_rng(7)
    pts = rng.standard_normal(50) + 1j * rng.standard_normal(50)
    assert np.allclose(laplace(kern, np.conj(pts)), np.conj(laplace(kern, pts)),
                       rtol=0, atol=1e-15)


def test_laplace_decreasing_on_positive_axis():
    kern = ExponentialKernel((1.0, 0.5), (1.0, 4.0))
    xs = np.linspace(0.0, 50.0, 200)
    vals = laplace(kern, xs).real
    assert np.all(np.diff(vals) < 0)


def test_laplace_deriv_spot_values_and_fd():
    unit = ExponentialKernel((1.0,), (1.0,))
    assert laplace_deriv(unit, 0.0) == -1.0
    assert abs(laplace_deriv(unit, 1j) - 0.5j) < 1e-15

    kern = ExponentialKernel((0.2, 0.7), (1.0, 3.0))
    rng = np.random.default_rng(11)
    pts = rng.uniform(0.5, 5.0, 100) + 1j * rng.uniform(-5.0, 5.0, 100)
    h = 1e-6
    fd = (laplace(kern, pts + h) - laplace(kern, pts - h)) / (2.0 * h)
    assert np.max(np.abs(fd - laplace_deriv(kern, pts))) < 1e-6


def test_pole_guard_trips():
    kern = ExponentialKernel((1.0,), (1.0,))
    with pytest.raises(PoleProximityError):
        laplace(kern, -1.0 + 1e-14)
    with pytest.raises(PoleProximityError):
        laplace_deriv(kern, -1.0 + 1e-14 + 0j)


def test_admissibility_report():
    good = admissibility_report(ExponentialKernel((1.0,), (2.0,)))
    assert good.admissible and good.l1_norm == 0.5 and good.initial_value == 1.0
    assert math.isnan(good.spacing_supremum)

    bad = admissibility_report(ExponentialKernel((1.0, 1.0), (1.0, 2.0)))
    assert not bad.admissible
    assert abs(bad.l1_norm - 1.5) < 1e-15
    assert bad.spacing_supremum == 1.0  # g_1 * (g_2 - g_1)


# ------------------------------------------------------------ power laws


def test_family_validation():
    with pytest.raises(ValueError):
        PowerLawFamily(1.0, 1.0, 0.5, 0.5, 10)  # alpha + beta must exceed 1
    with pytest.raises(ValueError):
        PowerLawFamily(1.0, 1.0, 1.5, 1.0, 10)  # alpha capped at 1
    with pytest.raises(ValueError):
        PowerLawFamily(0.0, 1.0, 0.5, 1.0, 10)
    with pytest.raises(ValueError):
        PowerLawFamily(1.0, 1.0, 0.5, 1.0, 0)


def test_regularity_exponent():
    assert PowerLawFamily(1.0, 1.0, 0.5, 1.0, 5).regularity == 0.5
    assert PowerLawFamily(1.0, 1.0, 1.0, 7.0, 5).regularity == 1.0  # exact
    assert abs(PowerLawFamily(1.0, 1.0, 0.75, 0.5, 5).regularity - 0.5) < 1e-15


def test_materialize_harmonic():
    kern = materialize(PowerLawFamily(1.0, 1.0, 1.0, 1.0, 3))
    assert kern.coeffs == (1.0, 0.5, 1.0 / 3.0)
    assert kern.rates == (1.0, 2.0, 3.0)
    assert abs(admissibility_report(kern).l1_norm - 49.0 / 36.0) < 1e-15


def test_materialize_scaled():
    kern = materialize(PowerLawFamily(0.5, 2.0, 0.5, 1.0, 2))
    assert kern.coeffs == (0.5, 0.5 / math.sqrt(2.0))
    assert kern.rates == (2.0, 4.0)


def test_tail_bound_bounds_the_tail():
    fam = PowerLawFamily(1.0, 1.0, 0.5, 1.0, 100)
    # true tail sum_{k>100} k^-1.5 via Hurwitz zeta
    truth = float(mp.zeta(1.5, 101))
    bound = tail_bound(fam, 100, moment=1)
    assert truth < bound < 1.2 * truth
    # second moment controls how truncation moves the pair
    truth2 = float(mp.zeta(2.5, 101))
    bound2 = tail_bound(fam, 100, moment=2)
    assert truth2 < bound2 < 1.2 * truth2


def test_tail_bound_divergent_moment():
    fam = PowerLawFamily(1.0, 1.0, 0.5, 1.0, 100)
    with pytest.raises(ValueError):
        tail_bound(fam, 100, moment=0)  # sum c_k alone diverges here


# -------------------------------------------------- continuum comparisons


def test_continuum_laplace_log_value():
    # A=B=alpha=beta=1 at z=1: integral of dt/(t(1+t)) from 1 = log 2
    fam = PowerLawFamily(1.0, 1.0, 1.0, 1.0, 10)
    assert abs(continuum_laplace(fam, 1.0) - math.log(2.0)) < 1e-9


def test_continuum_laplace_finite_cutoff():
    # truncating at t_max=2 gives log(4/3) instead
    fam = PowerLawFamily(1.0, 1.0, 1.0, 1.0, 10)
    value = continuum_laplace(fam, 1.0, t_max=2.0)
    assert abs(value - math.log(4.0 / 3.0)) < 1e-9


def test_continuum_laplace_real_on_real_axis():
    fam = PowerLawFamily(1.0, 1.0, 0.5, 1.0, 10)
    assert abs(continuum_laplace(fam, 3.0).imag) < 1e-12


def test_continuum_laplace_argument_guards():
    fam = PowerLawFamily(1.0, 1.0, 0.5, 1.0, 10)
    with pytest.raises(ValueError):
        continuum_laplace(fam, 0.0)
    with pytest.raises(ValueError):
        continuum_laplace(fam, complex(-1.0, 1e-3))  # hugging the cut


def test_laplace_tail_is_truncation_independent():
    # K_N + tail_N must not depend on N once the guard is satisfied
    z = 30.0 * complex(math.cos(0.7), math.sin(0.7))
    values = []
    for count in (500, 5000, 50000):
        fam = PowerLawFamily(1.0, 1.0, 0.5, 1.0, count)
        values.append(laplace(materialize(fam), z) + laplace_tail(fam, z))
    assert abs(values[0] - values[2]) < 1e-14
    assert abs(values[1] - values[2]) < 1e-14


def test_laplace_tail_agrees_with_brute_force():
    # independent route: exact ladder terms up to M, then the integral with
    # Euler-Maclaurin corrections (f(M)/2 - f'(M)/12 leaves ~1e-20 behind)
    fam = PowerLawFamily(0.7, 1.5, 0.5, 1.0, 200)
    z = 40.0 + 25.0j
    tail = laplace_tail(fam, z)
    with mp.workdps(30):
        big_m = 20000
        f = lambda t: mp.mpf("0.7") * t ** mp.mpf("-0.5") / (z + mp.mpf("1.5") * t)
        head = mp.fsum(f(mp.mpf(k)) for k in range(201, big_m))
        rest = mp.quad(f, [big_m, mp.inf])
        m = mp.mpf(big_m)
        fprime = mp.mpf("0.7") * (
            -mp.mpf("0.5") * m ** mp.mpf("-1.5") / (z + mp.mpf("1.5") * m)
            - mp.mpf("1.5") * m ** mp.mpf("-0.5") / (z + mp.mpf("1.5") * m) ** 2
        )
        brute = head + rest + f(m) / 2 - fprime / 12
        assert abs(tail - complex(brute)) < 1e-14


def test_laplace_tail_radius_guard():
    fam = PowerLawFamily(1.0, 1.0, 0.5, 1.0, 100)
    with pytest.raises(ValueError):
        laplace_tail(fam, 60.0)  # first dropped rate is 101


def test_bounded_gap_between_ladder_and_continuum():
    # |z| * |Khat - h| stays O(1) along the quarter-turn ray; the ladder
    # side needs its dropped tail restored or the comparison is unfair to
    # the integral, which keeps all its mass.
    fam = PowerLawFamily(1.0, 1.0, 0.5, 1.0, 100000)
    kern = materialize(fam)
    products = []
    for x in (10.0, 100.0, 1000.0):
        z = x * complex(math.cos(math.pi / 4), math.sin(math.pi / 4))
        khat = laplace(kern, z) + laplace_tail(fam, z)
        products.append(x * abs(khat - continuum_laplace(fam, z)))
    assert max(products) < 2.0 * min(products)
    assert max(products) < 1.0


def test_asymptotic_form_r_equals_one():
    fam = PowerLawFamily(1.0, 1.0, 1.0, 1.0, 10)
    value = laplace_asymptotic(fam, 1000.0)
    assert abs(value - math.log(1001.0) / 1000.0) < 1e-15


def test_asymptotic_form_converges_from_above():
    # relative error of the leading term shrinks as |z| grows
    fam = PowerLawFamily(1.0, 1.0, 0.5, 1.0, 200000)
    kern = materialize(fam)
    errs = []
    for x in (100.0, 1000.0, 10000.0):
        z = x * complex(math.cos(math.pi / 4), math.sin(math.pi / 4))
        khat = laplace(kern, z) + laplace_tail(fam, z)
        errs.append(abs(laplace_asymptotic(fam, z) - khat) / abs(khat))
    assert errs[0] > errs[1] > errs[2]
    assert errs[2] < 1e-2


def test_angular_integral_closed_forms():
    # phi=0, r=1/2: integral dt/(sqrt(t)(1+t)) = pi
    assert abs(angular_integral(0.5, 0.0) - math.pi) < 1e-9
    # the oscillation constant is (i/2) times the quarter-turn integral
    quarter = angular_integral(0.5, math.pi / 2.0)
    assert abs(0.5j * quarter - asymptotic_constant(0.5)) < 1e-9


def test_angular_integral_domain():
    with pytest.raises(ValueError):
        angular_integral(1.0, 0.0)
    with pytest.raises(ValueError):
        angular_integral(0.5, math.pi)
