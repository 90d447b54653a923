"""Real branches: bracketing, interlaced roots, pole-approach rates."""

import math

import pytest

from gpspectra import (
    ExponentialKernel,
    ModePencil,
    NoSignChangeError,
    bracket_intervals,
    branch_convergence,
    branch_roots,
    stiffness_roots,
)
from conftest import MU_1


def test_bracket_intervals_single():
    kern = ExponentialKernel((1.0,), (2.0,))
    assert bracket_intervals(kern, 1) == [(-2.0, 0.0)]


def test_bracket_intervals_three_terms():
    kern = ExponentialKernel((1.0, 0.5, 1.0 / 3.0), (1.0, 2.0, 3.0))
    assert bracket_intervals(kern, 3) == [(-1.0, 0.0), (-2.0, -1.0), (-3.0, -2.0)]
    with pytest.raises(ValueError):
        bracket_intervals(kern, 4)
    with pytest.raises(ValueError):
        bracket_intervals(kern, 0)


def test_cubic_branch_root(cubic):
    (root,) = branch_roots(cubic, 1)
    assert root.index == 1
    assert root.interval == (-2.0, 0.0)
    assert abs(root.value - MU_1) < 1e-12
    assert root.residual < 1e-8


def test_cubic_stiffness_root_closed_form(cubic):
    # f(z) = 1 - 0.1/(z+2) vanishes at exactly -1.9
    (x1,) = stiffness_roots(cubic, 1)
    assert abs(x1.value - (-1.9)) < 1e-12


def test_strict_ordering_between_pole_symbol_and_stiffness(cubic):
    (mu,) = branch_roots(cubic, 1)
    (x1,) = stiffness_roots(cubic, 1)
    assert -2.0 < mu.value < x1.value < 0.0


def test_every_interval_holds_one_of_each():
    kern = ExponentialKernel((0.3, 0.2, 0.1), (1.0, 2.5, 6.0))
    p = ModePencil(frequency=12.0, xi=0.25, kernel=kern)
    mus = branch_roots(p, 3)
    xs = stiffness_roots(p, 3)
    edges = (0.0, 1.0, 2.5, 6.0)
    for k, (mu, x) in enumerate(zip(mus, xs), start=1):
        assert -edges[k] < mu.value < x.value < -edges[k - 1]


def test_overloaded_kernel_has_no_first_branch():
    # w*S = 1.5 pushes L(0) negative: no sign change left of the origin
    kern = ExponentialKernel((1.0, 1.0), (1.0, 2.0))
    p = ModePencil(frequency=1.0, xi=0.5, kernel=kern)  # weight is 1 at a=1
    with pytest.raises(NoSignChangeError):
        branch_roots(p, 1)


def test_branch_chases_its_pole():
    kern = ExponentialKernel((1.0,), (2.0,))
    pencils = [ModePencil(a, 0.5, kern) for a in (10.0, 100.0, 1000.0)]
    record = branch_convergence(pencils, 1)
    dev = record.pole_deviations
    assert dev[0] > dev[1] > dev[2]
    assert math.isnan(record.gap_slope)  # three points is not enough to fit
    assert math.isnan(record.deviation_slope)


def test_branch_convergence_orders():
    kern = ExponentialKernel((1.0,), (2.0,))
    pencils = [ModePencil(a, 0.5, kern) for a in (10.0, 100.0, 1000.0, 10000.0)]
    record = branch_convergence(pencils, 1)
    # the pole deviation |mu + g| tracks the weight a^(-2(1-xi)) = 1/a ...
    assert abs(record.deviation_slope - (-1.0)) < 0.15
    # ... while the root/stiffness gap contracts two powers faster
    assert abs(record.gap_slope - (-3.0)) < 0.3
    assert all(g > 0 for g in record.gaps)


def test_branch_convergence_input_checks():
    kern = ExponentialKernel((1.0,), (2.0,))
    other = ExponentialKernel((1.0,), (3.0,))
    pencils = [ModePencil(a, 0.5, kern) for a in (10.0, 100.0)]
    with pytest.raises(ValueError):
        branch_convergence(pencils[:1], 1)
    with pytest.raises(ValueError):
        branch_convergence(pencils, 2)  # only one branch exists
    with pytest.raises(ValueError):
        branch_convergence([pencils[0], ModePencil(100.0, 0.25, kern)], 1)
    with pytest.raises(ValueError):
        branch_convergence([pencils[0], ModePencil(100.0, 0.5, other)], 1)
    with pytest.raises(ValueError):
        branch_convergence([pencils[1], pencils[0]], 1)  # must increase
