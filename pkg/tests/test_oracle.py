"""Independent cross-checks: simultaneous roots, ODE realisation, decay."""

import numpy as np
import pytest

from gpspectra import (
    ExponentialKernel,
    ModePencil,
    aberth_roots,
    build_mode_system,
    match_roots,
    simulate_decay,
    to_polynomial,
)
from conftest import MU_1, PAIR


# ------------------------------------------------------------ aberth roots


def test_pure_quadratic():
    roots = aberth_roots([1.0, 0.0, 1.0])
    match = match_roots(roots, [1j, -1j])
    assert match.max_relative_deviation < 1e-15


def test_cleared_cubic_frozen_roots():
    roots = aberth_roots([190.0, 100.0, 2.0, 1.0])
    match = match_roots(roots, [MU_1, PAIR, PAIR.conjugate()])
    assert match.max_relative_deviation < 1e-14


def test_exact_rational_coefficients(cubic):
    # object-dtype Fractions go through the extended-precision path
    roots = aberth_roots(to_polynomial(cubic))
    match = match_roots(roots, [MU_1, PAIR, PAIR.conjugate()])
    assert match.max_relative_deviation < 1e-14


def test_integer_spaced_real_roots():
    roots = aberth_roots([6.0, 11.0, 6.0, 1.0])
    match = match_roots(roots, [-1.0, -2.0, -3.0])
    assert match.max_relative_deviation < 1e-13
    assert np.max(np.abs(roots.imag)) < 1e-13


def test_zero_roots_are_deflated():
    roots = aberth_roots([0.0, 0.0, 6.0, 5.0, 1.0])
    match = match_roots(roots, [0.0, 0.0, -2.0, -3.0])
    assert match.max_relative_deviation < 1e-13


def test_non_monic_input():
    roots = aberth_roots([-2.0, 0.0, 2.0])
    match = match_roots(roots, [1.0, -1.0])
    assert match.max_relative_deviation < 1e-14


def test_degree_guard():
    with pytest.raises(ValueError):
        aberth_roots([1.0])
    with pytest.raises(ValueError):
        aberth_roots(np.ones((2, 2)))
    with pytest.raises(ValueError):
        aberth_roots([1.0, 2.0, 0.0])


def test_real_polynomials_close_under_conjugation():
    rng = np.random.default_rng(4321)
    for _ in range(20):
        degree = int(rng.integers(3, 9))
        coeffs = rng.normal(size=degree + 1)
        coeffs[-1] = coeffs[-1] if abs(coeffs[-1]) > 0.1 else 1.0
        roots = aberth_roots(coeffs)
        match = match_roots(roots, np.conj(roots))
        assert match.max_relative_deviation < 1e-10


# --------------------------------------------------------- mode realisation


def test_system_matrix_layout(cubic):
    system = build_mode_system(cubic)
    expected = np.array([
        [0.0, 1.0, 0.0],
        [-100.0, 0.0, 10.0],
        [1.0, 0.0, -2.0],
    ])
    assert np.array_equal(system.matrix, expected)
    assert system.dimension == 3


def test_characteristic_polynomial_matches_cleared_pencil(cubic):
    coeffs = build_mode_system(cubic).char_coefficients()
    assert np.allclose(coeffs, [190.0, 100.0, 2.0, 1.0], rtol=1e-12, atol=0.0)


def test_trace_identity(cubic):
    # trace(M) = -sum(rates) = sum of all symbol roots
    system = build_mode_system(cubic)
    roots = aberth_roots([190.0, 100.0, 2.0, 1.0])
    assert np.trace(system.matrix) == -2.0
    assert complex(np.sum(roots)) == pytest.approx(-2.0 + 0.0j, abs=1e-13)


def test_tiny_kernel_factorises():
    p = ModePencil(10.0, 0.5, ExponentialKernel((1e-300,), (2.0,)))
    roots = aberth_roots(to_polynomial(p))
    match = match_roots(roots, [-2.0, 10j, -10j])
    assert match.max_relative_deviation < 1e-14


def test_char_coefficients_agree_with_clearing_on_random_pencils():
    rng = np.random.default_rng(99)
    for _ in range(20):
        n = int(rng.integers(1, 7))
        rates = tuple(np.cumsum(10.0 ** rng.uniform(-0.5, 0.5, size=n)))
        coeffs = tuple(10.0 ** rng.uniform(-1.0, 0.0, size=n))
        p = ModePencil(
            frequency=float(rng.choice([5.0, 50.0])),
            xi=float(rng.uniform(0.2, 0.8)),
            kernel=ExponentialKernel(coeffs, rates),
        )
        via_matrix = build_mode_system(p).char_coefficients()
        via_clearing = np.array([float(c) for c in to_polynomial(p)])
        scale = np.maximum(1.0, np.abs(via_clearing))
        assert np.max(np.abs(via_matrix - via_clearing) / scale) < 1e-12


def test_dimension_cap():
    n = 31
    kern = ExponentialKernel(tuple([0.01] * n), tuple(float(k) for k in range(1, n + 1)))
    p = ModePencil(1000.0, 0.5, kern)
    with pytest.raises(ValueError):
        build_mode_system(p)


# ----------------------------------------------------------- decay fitting


def test_decay_matches_pair_rate(cubic):
    est = simulate_decay(cubic, horizon=2000.0, dt=1e-3)
    assert est.rate == pytest.approx(PAIR.real, rel=0.05)
    assert est.peak_count >= 8
    assert est.window[0] >= 1000.0


def test_decay_of_nearly_free_oscillator_is_flat():
    p = ModePencil(10.0, 0.5, ExponentialKernel((1e-12,), (2.0,)))
    est = simulate_decay(p, horizon=200.0, dt=1e-3)
    assert abs(est.rate) < 1e-5


def test_decay_needs_an_oscillatory_envelope():
    # when the slowest root is real the envelope is eventually monotone,
    # leaving no peaks to fit: the estimator must refuse, not extrapolate
    p = ModePencil(10.0, 0.5, ExponentialKernel((9.9,), (1.0,)))
    with pytest.raises(ValueError, match="envelope peaks"):
        simulate_decay(p, horizon=600.0, dt=4e-3)


def test_decay_step_guards(cubic):
    with pytest.raises(ValueError):
        simulate_decay(cubic, horizon=100.0, dt=0.01)  # above stability limit
    with pytest.raises(ValueError):
        simulate_decay(cubic, horizon=-1.0, dt=1e-3)
    with pytest.raises(ValueError):
        simulate_decay(cubic, horizon=0.3, dt=1e-3)  # too few output samples


# ------------------------------------------------------------ root matching


def test_match_roots_identity_and_shift():
    ref = np.array([MU_1, PAIR, PAIR.conjugate()])
    assert match_roots(ref, ref).max_relative_deviation == 0.0
    shifted = ref + 1e-9
    dev = match_roots(shifted, ref).max_relative_deviation
    # deviations are scaled by max(1, |root|); the branch root dominates
    assert dev == pytest.approx(1e-9 / abs(MU_1), rel=1e-3)


def test_match_roots_cardinality():
    with pytest.raises(ValueError):
        match_roots([1.0, 2.0], [1.0])
