"""Spectra of second-order modes damped through exponential-sum memory kernels.

The package answers three questions about the mode symbol
L(z) = z**2 + a**2 - a**(2*xi) * Khat(z):

* where its roots are (interlaced real branches + one oscillatory pair),
* how confident we are (residuals, argument-principle certificates,
  polynomial and time-domain oracles),
* and where the pair goes as the frequency a grows (closed-form
  asymptotics with verified remainder orders).

Quick start::

    from gpspectra import ExponentialKernel, ModePencil, solve_mode

    kernel = ExponentialKernel(coeffs=(1.0,), rates=(2.0,))
    mode = ModePencil(frequency=10.0, xi=0.5, kernel=kernel)
    result = solve_mode(mode)
    print(result.all_roots, result.certificate.zeros_inferred)

The ``gpspectra`` command line exposes the same machinery on JSON job
configs; see the README for the schema.
"""

from .asymptotics import (
    AsymptoticPrediction,
    SlopeFit,
    asymptotic_constant,
    asymptotic_constant_quadrature,
    classify_regime,
    empirical_order,
    predict_finite_sum,
    predict_power_law,
)
from .complex_pair import (
    CountCertificate,
    FixedPointPair,
    RectContour,
    count_zeros,
    fixed_point_pair,
    newton_refine,
    spectrum_contour,
)
from .errors import (
    ConfigError,
    ContourError,
    DivergenceError,
    GPSpectraError,
    MaxIterationsError,
    NonContractionError,
    NoSignChangeError,
    NumericalError,
    PoleProximityError,
    QuadratureError,
)
from .kernels import (
    AdmissibilityReport,
    ExponentialKernel,
    PowerLawFamily,
    admissibility_report,
    angular_integral,
    continuum_laplace,
    laplace,
    laplace_asymptotic,
    laplace_deriv,
    laplace_tail,
    materialize,
    tail_bound,
)
from .oracle import (
    DecayEstimate,
    MatchResult,
    ModeSystem,
    aberth_roots,
    build_mode_system,
    match_roots,
    simulate_decay,
)
from .pencil import ModePencil, inertia, stiffness, symbol, symbol_deriv, to_polynomial
from .real_branches import (
    BranchRoot,
    ConvergenceRecord,
    bracket_intervals,
    branch_convergence,
    branch_roots,
    stiffness_roots,
)
from .solve import SpectrumResult, solve_mode

__version__ = "0.1.0"

__all__ = [
    "AdmissibilityReport",
    "AsymptoticPrediction",
    "BranchRoot",
    "ConfigError",
    "ContourError",
    "ConvergenceRecord",
    "CountCertificate",
    "DecayEstimate",
    "DivergenceError",
    "ExponentialKernel",
    "FixedPointPair",
    "GPSpectraError",
    "MatchResult",
    "MaxIterationsError",
    "ModePencil",
    "ModeSystem",
    "NonContractionError",
    "NoSignChangeError",
    "NumericalError",
    "PoleProximityError",
    "PowerLawFamily",
    "QuadratureError",
    "RectContour",
    "SlopeFit",
    "SpectrumResult",
    "aberth_roots",
    "admissibility_report",
    "angular_integral",
    "asymptotic_constant",
    "asymptotic_constant_quadrature",
    "bracket_intervals",
    "branch_convergence",
    "branch_roots",
    "build_mode_system",
    "classify_regime",
    "continuum_laplace",
    "count_zeros",
    "empirical_order",
    "fixed_point_pair",
    "inertia",
    "laplace",
    "laplace_asymptotic",
    "laplace_deriv",
    "laplace_tail",
    "match_roots",
    "materialize",
    "newton_refine",
    "predict_finite_sum",
    "predict_power_law",
    "simulate_decay",
    "solve_mode",
    "spectrum_contour",
    "stiffness",
    "stiffness_roots",
    "symbol",
    "symbol_deriv",
    "tail_bound",
    "to_polynomial",
]
