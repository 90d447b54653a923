"""Command-line front end: JSON job configs in, '#'-annotated CSV out.

Five job kinds share one config schema (see docs/config.md):

* ``spectrum``     — all roots of every requested mode, one row per branch.
* ``verify``       — pass/fail table of the structural checks with margins.
* ``sweep``        — numeric pair vs. asymptotic prediction along a ladder,
  with fitted error slopes appended as footer rows.
* ``oracle-check`` — solver roots against the polynomial companion oracle.
* ``asymptote``    — predictions alone (no solving), for quick regime maps.

Every output starts with the tool version and the effective config echoed
as canonical JSON, so a result file is reproducible from its own header.
Numbers are printed with 17 significant digits and rows are assembled in a
fixed order: reruns of the same config are byte-identical.

Exit codes: 0 success, 1 verification failure, 2 config error, 3 numerical
failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import __version__
from .asymptotics import classify_regime, empirical_order, predict_finite_sum, predict_power_law
from .complex_pair import fixed_point_pair, newton_refine
from .errors import ConfigError, GPSpectraError, NumericalError
from .kernels import ExponentialKernel, PowerLawFamily, admissibility_report, materialize
from .oracle import ODE_MAX, aberth_roots, build_mode_system, match_roots
from .pencil import POLY_MAX, ModePencil, symbol, symbol_deriv, to_polynomial
from .solve import SpectrumResult, solve_mode

JOB_KINDS = ("spectrum", "verify", "sweep", "oracle-check", "asymptote")

#: Cross-validation threshold shared by verify and oracle-check rows.
ORACLE_TOL = 1e-8


@dataclass(frozen=True)
class JobConfig:
    """Validated, defaults-filled job description.

    ``kernel`` is None exactly when the config used the power-law family
    form; jobs materialize the ladder on demand so that prediction-only
    runs never build a million-term kernel. ``ladder`` keeps the geometric
    form (a_min/factor/count) when that form was used, for the echo block
    and for sweep's precondition.
    """

    job: str
    kernel: ExponentialKernel | None
    family: PowerLawFamily | None
    xi: float
    modes: tuple[float, ...]
    ladder: dict | None
    residual_tol: float
    quadrature_tol: float
    output: str | None


# --------------------------------------------------------------------------
# strict config parsing


def _fail(path: str, message: str) -> None:
    raise ConfigError(f"{path}: {message}")


def _kind_name(value) -> str:
    if isinstance(value, bool):
        return "boolean"
    if isinstance(value, (int, float)):
        return "number"
    if isinstance(value, str):
        return "string"
    if isinstance(value, list):
        return "array"
    if isinstance(value, dict):
        return "object"
    return "null"


def _as_object(value, path: str) -> dict:
    if not isinstance(value, dict):
        _fail(path, f"expected object, got {_kind_name(value)}")
    return value


def _as_number(value, path: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        _fail(path, f"expected number, got {_kind_name(value)}")
    out = float(value)
    if not math.isfinite(out):
        _fail(path, "must be finite")
    return out


def _as_positive(value, path: str) -> float:
    out = _as_number(value, path)
    if out <= 0.0:
        _fail(path, "must be positive")
    return out


def _as_int(value, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        _fail(path, f"expected integer, got {_kind_name(value)}")
    return value


def _as_string(value, path: str) -> str:
    if not isinstance(value, str):
        _fail(path, f"expected string, got {_kind_name(value)}")
    return value


def _check_keys(obj: dict, path: str, required: set[str], optional: set[str] = frozenset()) -> None:
    for key in sorted(obj):
        if key not in required and key not in optional:
            _fail(path, f"unknown key '{key}'")
    for key in sorted(required):
        if key not in obj:
            _fail(path, f"missing required key '{key}'")


def _parse_positive_array(value, path: str) -> tuple[float, ...]:
    if not isinstance(value, list):
        _fail(path, f"expected array, got {_kind_name(value)}")
    if not value:
        _fail(path, "must not be empty")
    return tuple(_as_positive(v, f"{path}[{i}]") for i, v in enumerate(value))


def _parse_kernel(node, path: str) -> tuple[ExponentialKernel | None, PowerLawFamily | None]:
    obj = _as_object(node, path)
    explicit = ("coeffs" in obj) or ("rates" in obj)
    if explicit and "family" in obj:
        _fail(path, "exactly one kernel form allowed: coeffs/rates or family")
    if "family" in obj:
        _check_keys(obj, path, {"family"})
        fam = _as_object(obj["family"], f"{path}.family")
        _check_keys(fam, f"{path}.family", {"amplitude", "scale", "alpha", "beta", "count"})
        try:
            family = PowerLawFamily(
                amplitude=_as_positive(fam["amplitude"], f"{path}.family.amplitude"),
                scale=_as_positive(fam["scale"], f"{path}.family.scale"),
                alpha=_as_positive(fam["alpha"], f"{path}.family.alpha"),
                beta=_as_positive(fam["beta"], f"{path}.family.beta"),
                count=_as_int(fam["count"], f"{path}.family.count"),
            )
        except ValueError as exc:
            _fail(f"{path}.family", str(exc))
        return None, family
    _check_keys(obj, path, {"coeffs", "rates"})
    coeffs = _parse_positive_array(obj["coeffs"], f"{path}.coeffs")
    rates = _parse_positive_array(obj["rates"], f"{path}.rates")
    try:
        kernel = ExponentialKernel(coeffs=coeffs, rates=rates)
    except ValueError as exc:
        _fail(path, str(exc))
    return kernel, None


def _parse_modes(node, path: str) -> tuple[tuple[float, ...], dict | None]:
    if isinstance(node, list):
        return _parse_positive_array(node, path), None
    if not isinstance(node, dict):
        _fail(path, f"expected array of frequencies or ladder object, got {_kind_name(node)}")
    _check_keys(node, path, {"a_min", "factor", "count"})
    a_min = _as_positive(node["a_min"], f"{path}.a_min")
    factor = _as_number(node["factor"], f"{path}.factor")
    if factor <= 1.0:
        _fail(f"{path}.factor", "must exceed 1")
    count = _as_int(node["count"], f"{path}.count")
    if count < 1:
        _fail(f"{path}.count", "must be at least 1")
    modes = tuple(a_min * factor**k for k in range(count))
    return modes, {"a_min": a_min, "factor": factor, "count": count}


def parse_config(text: str, job: str) -> JobConfig:
    """Validate a JSON config document against the strict schema.

    Unknown keys anywhere are rejected, every error names the offending
    path, and an embedded "job" key must agree with the subcommand.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config: invalid JSON ({exc})") from exc
    obj = _as_object(doc, "config")
    _check_keys(obj, "config", {"kernel", "xi", "modes"}, {"job", "tolerances", "output"})

    if "job" in obj:
        declared = _as_string(obj["job"], "config.job")
        if declared not in JOB_KINDS:
            _fail("config.job", f"unknown job kind '{declared}'")
        if declared != job:
            _fail("config.job", f"config says '{declared}' but the subcommand is '{job}'")

    xi = _as_number(obj["xi"], "config.xi")
    if not 0.0 < xi < 1.0:
        _fail("config.xi", "xi must lie strictly inside (0,1)")

    kernel, family = _parse_kernel(obj["kernel"], "config.kernel")
    modes, ladder = _parse_modes(obj["modes"], "config.modes")

    residual_tol = 1e-10
    quadrature_tol = 1e-10
    if "tolerances" in obj:
        tol = _as_object(obj["tolerances"], "config.tolerances")
        _check_keys(tol, "config.tolerances", set(), {"residual", "quadrature"})
        if "residual" in tol:
            residual_tol = _as_positive(tol["residual"], "config.tolerances.residual")
        if "quadrature" in tol:
            quadrature_tol = _as_positive(tol["quadrature"], "config.tolerances.quadrature")

    output = _as_string(obj["output"], "config.output") if "output" in obj else None

    return JobConfig(
        job=job,
        kernel=kernel,
        family=family,
        xi=xi,
        modes=modes,
        ladder=ladder,
        residual_tol=residual_tol,
        quadrature_tol=quadrature_tol,
        output=output,
    )


# --------------------------------------------------------------------------
# output assembly


def _fmt(x: float) -> str:
    value = float(x)
    if value == 0.0:
        value = 0.0  # never print the sign of a negative zero
    return format(value, ".17g")


def _effective_config(cfg: JobConfig) -> str:
    if cfg.family is not None:
        kernel_spec = {
            "family": {
                "amplitude": cfg.family.amplitude,
                "scale": cfg.family.scale,
                "alpha": cfg.family.alpha,
                "beta": cfg.family.beta,
                "count": cfg.family.count,
            }
        }
    else:
        kernel_spec = {"coeffs": list(cfg.kernel.coeffs), "rates": list(cfg.kernel.rates)}
    modes_spec = dict(cfg.ladder) if cfg.ladder is not None else list(cfg.modes)
    effective = {
        "job": cfg.job,
        "kernel": kernel_spec,
        "modes": modes_spec,
        "tolerances": {"quadrature": cfg.quadrature_tol, "residual": cfg.residual_tol},
        "xi": cfg.xi,
    }
    return json.dumps(effective, sort_keys=True, separators=(", ", ": "))


def _header(cfg: JobConfig) -> list[str]:
    return [f"# gpspectra {__version__}", f"# config {_effective_config(cfg)}"]


def _materialized(cfg: JobConfig) -> ExponentialKernel:
    return cfg.kernel if cfg.kernel is not None else materialize(cfg.family)


def _pencils(cfg: JobConfig, kernel: ExponentialKernel) -> list[ModePencil]:
    return [ModePencil(frequency=a, xi=cfg.xi, kernel=kernel) for a in cfg.modes]


def _labels(cfg: JobConfig) -> list[str]:
    return [f"mode {i} (a_n={_fmt(a)})" for i, a in enumerate(cfg.modes, start=1)]


def _run_tasks(worker, tasks, labels, jobs: int) -> list:
    """Run worker over tasks, keeping order and naming the failing mode."""
    if jobs <= 1:
        results = []
        for label, task in zip(labels, tasks):
            try:
                results.append(worker(task))
            except NumericalError as exc:
                raise NumericalError(f"{label}: {exc}") from exc
        return results
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(worker, task) for task in tasks]
        results = []
        for label, future in zip(labels, futures):
            try:
                results.append(future.result())
            except NumericalError as exc:
                raise NumericalError(f"{label}: {exc}") from exc
    return results


# workers are module level so process pools can pickle them


def _spectrum_worker(task) -> SpectrumResult:
    pencil, residual_tol, certify = task
    return solve_mode(pencil, residual_tol=residual_tol, certify=certify)


def _pair_worker(task) -> complex:
    pencil, residual_tol = task
    seed = fixed_point_pair(pencil).plus
    plus = newton_refine(pencil, seed, residual_tol=residual_tol)
    return plus.conjugate() if plus.imag < 0 else plus


def _oracle_worker(task) -> tuple[float, float]:
    pencil, residual_tol = task
    result = solve_mode(pencil, residual_tol=residual_tol, certify=False)
    coeffs = to_polynomial(pencil)
    reference = aberth_roots(coeffs)
    matched = match_roots(result.all_roots, reference)
    if pencil.kernel.size + 2 <= ODE_MAX:
        companion = build_mode_system(pencil).char_coefficients()
        numeric = np.array([float(x) for x in coeffs])
        scale = np.maximum(1.0, np.abs(numeric))
        coeff_dev = float(np.max(np.abs(companion - numeric) / scale))
    else:
        coeff_dev = float("nan")
    return matched.max_relative_deviation, coeff_dev


# --------------------------------------------------------------------------
# job runners: each returns (output text, success flag)


def run_spectrum(cfg: JobConfig, jobs: int = 1) -> tuple[str, bool]:
    """All roots of every mode: N bracketed real branches plus the pair."""
    kernel = _materialized(cfg)
    pencils = _pencils(cfg, kernel)
    tasks = [(p, cfg.residual_tol, False) for p in pencils]
    results = _run_tasks(_spectrum_worker, tasks, _labels(cfg), jobs)

    lines = _header(cfg)
    lines.append("n,a_n,xi,kind,k,re,im,residual,interval_lo,interval_hi")
    for n, (a, result) in enumerate(zip(cfg.modes, results), start=1):
        for branch in result.real_roots:
            lines.append(
                ",".join(
                    (
                        str(n),
                        _fmt(a),
                        _fmt(cfg.xi),
                        f"real_{branch.index}",
                        str(branch.index),
                        _fmt(branch.value),
                        _fmt(0.0),
                        _fmt(branch.residual),
                        _fmt(branch.interval[0]),
                        _fmt(branch.interval[1]),
                    )
                )
            )
        lines.append(
            ",".join(
                (
                    str(n),
                    _fmt(a),
                    _fmt(cfg.xi),
                    "pair",
                    "0",
                    _fmt(result.pair_plus.real),
                    _fmt(result.pair_plus.imag),
                    _fmt(result.pair_residual),
                    "",
                    "",
                )
            )
        )
    print(f"gpspectra spectrum: {len(pencils)} mode(s) solved", file=sys.stderr)
    return "\n".join(lines) + "\n", True


def _mode_checks(
    pencil: ModePencil, result: SpectrumResult, residual_tol: float
) -> list[tuple[str, str, float]]:
    """(check, status, margin) rows for one solved mode."""
    a = pencil.frequency
    n = pencil.kernel.size
    rows: list[tuple[str, str, float]] = []

    margin = result.interlacing_margin
    rows.append(("interlacing", "pass" if margin > 0 else "fail", margin))

    rate_sum = math.fsum(pencil.kernel.rates)
    root_sum = math.fsum(b.value for b in result.real_roots) + 2.0 * result.pair_plus.real
    sum_dev = abs(root_sum + rate_sum) / max(1.0, rate_sum)
    rows.append(("vieta_sum", "pass" if sum_dev <= ORACLE_TOL else "fail", sum_dev))

    # product identity compared in log space so huge ladders cannot overflow
    ws = pencil.memory_weight * pencil.kernel.l1_norm
    if ws < 1.0:
        lhs = math.fsum(math.log(abs(b.value)) for b in result.real_roots)
        lhs += 2.0 * math.log(abs(result.pair_plus))
        rhs = 2.0 * math.log(a) + math.fsum(math.log(g) for g in pencil.kernel.rates)
        rhs += math.log1p(-ws)
        prod_dev = abs(lhs - rhs) / max(1.0, abs(rhs))
        rows.append(("vieta_product", "pass" if prod_dev <= ORACLE_TOL else "fail", prod_dev))
    else:
        rows.append(("vieta_product", "fail", float("inf")))

    conj_res = abs(symbol(pencil, result.pair_minus)) / a**2
    rows.append(("conjugacy", "pass" if conj_res <= residual_tol else "fail", conj_res))

    # branch roots judged by the Newton-step root-error estimate (the raw
    # residual blows up with L' near a pole), the pair by |L|/a**2
    worst = result.pair_residual / a**2
    for b in result.real_roots:
        slope = abs(symbol_deriv(pencil, b.value))
        worst = max(worst, b.residual / max(slope, 1e-300) / max(1.0, abs(b.value)))
    rows.append(("residual", "pass" if worst <= residual_tol else "fail", worst))

    cert = result.certificate
    count_ok = cert.zeros_inferred == n + 2 and cert.max_quadrature_defect <= 0.25
    rows.append(("contour_count", "pass" if count_ok else "fail", cert.max_quadrature_defect))

    if n <= POLY_MAX:
        try:
            reference = aberth_roots(to_polynomial(pencil))
            deviation = match_roots(result.all_roots, reference).max_relative_deviation
            rows.append(("oracle_match", "pass" if deviation <= ORACLE_TOL else "fail", deviation))
        except (GPSpectraError, ValueError):
            rows.append(("oracle_match", "fail", float("inf")))
    else:
        rows.append(("oracle_match", "skipped", float("nan")))
    return rows


def run_verify(cfg: JobConfig, jobs: int = 1) -> tuple[str, bool]:
    """Structural checks with measured margins; success means zero failures.

    Modes are solved at the solver's own default residual target; the
    configured residual tolerance is what the report judges against, so a
    tightened tolerance shows up as a failed check rather than a crash.
    """
    kernel = _materialized(cfg)
    lines = _header(cfg)
    lines.append("check,scope,status,margin")

    report = admissibility_report(kernel)
    adm_margin = 1.0 - report.l1_norm
    lines.append(
        f"admissibility,kernel,{'pass' if report.admissible else 'fail'},{_fmt(adm_margin)}"
    )
    if not report.admissible:
        print("gpspectra verify: admissibility failed, no modes solved", file=sys.stderr)
        return "\n".join(lines) + "\n", False

    pencils = _pencils(cfg, kernel)
    tasks = [(p, 1e-10, True) for p in pencils]
    results = _run_tasks(_spectrum_worker, tasks, _labels(cfg), jobs)

    failures = 0
    total = 1
    for n, (pencil, result) in enumerate(zip(pencils, results), start=1):
        for check, status, margin in _mode_checks(pencil, result, cfg.residual_tol):
            lines.append(f"{check},mode_{n},{status},{_fmt(margin)}")
            total += 1
            if status == "fail":
                failures += 1
                print(f"gpspectra verify: {check} failed for mode {n}", file=sys.stderr)
    print(f"gpspectra verify: {total - failures}/{total} checks passed", file=sys.stderr)
    return "\n".join(lines) + "\n", failures == 0


def run_sweep(cfg: JobConfig, jobs: int = 1) -> tuple[str, bool]:
    """Numeric pair against its asymptotic prediction along a ladder.

    Requires the geometric ladder form with at least four points; only the
    oscillatory pair is computed (no real-branch sweep), so large kernels
    stay affordable. Footer rows carry the fitted log-log error slopes.
    """
    if cfg.ladder is None or len(cfg.modes) < 4:
        raise ConfigError("config.modes: sweep requires a geometric ladder with at least 4 points")
    kernel = _materialized(cfg)
    pencils = _pencils(cfg, kernel)
    tasks = [(p, cfg.residual_tol) for p in pencils]
    numeric = _run_tasks(_pair_worker, tasks, _labels(cfg), jobs)

    if cfg.family is not None:
        predictions = [predict_power_law(a, cfg.xi, cfg.family) for a in cfg.modes]
        regime = classify_regime(cfg.xi, cfg.family.regularity)
    else:
        predictions = [predict_finite_sum(a, cfg.xi, kernel.initial_value) for a in cfg.modes]
        regime = "tends_to_axis"

    lines = _header(cfg)
    lines.append("a_n,numeric_re,numeric_im,predicted_re,predicted_im,err_re,err_im,regime")
    err_re_points = []
    err_im_points = []
    for a, z, pred in zip(cfg.modes, numeric, predictions):
        err_re = abs(z.real - pred.value.real)
        err_im = abs(z.imag - pred.value.imag)
        err_re_points.append((a, err_re))
        err_im_points.append((a, err_im))
        lines.append(
            ",".join(
                (
                    _fmt(a),
                    _fmt(z.real),
                    _fmt(z.imag),
                    _fmt(pred.value.real),
                    _fmt(pred.value.imag),
                    _fmt(err_re),
                    _fmt(err_im),
                    regime,
                )
            )
        )
    try:
        fit_re = empirical_order(err_re_points)
        fit_im = empirical_order(err_im_points)
    except ValueError as exc:
        raise ConfigError(f"config.modes: {exc}") from exc
    for name, fit in (("err_re", fit_re), ("err_im", fit_im)):
        lines.append(
            f"# fit {name} slope {_fmt(fit.slope)} half_width {_fmt(fit.half_width)}"
            f" below_floor {int(fit.below_floor)}"
        )
    print(f"gpspectra sweep: {len(pencils)} mode(s) swept", file=sys.stderr)
    return "\n".join(lines) + "\n", True


def run_oracle_check(cfg: JobConfig, jobs: int = 1) -> tuple[str, bool]:
    """Solver roots vs. simultaneous-iteration roots of the cleared polynomial.

    Also rebuilds the polynomial from the first-order companion system when
    the dimension allows, as an independent coefficient check.
    """
    kernel = _materialized(cfg)
    if kernel.size > POLY_MAX:
        raise ConfigError(
            f"config.kernel: ladder size {kernel.size} exceeds polynomial oracle cap {POLY_MAX}"
        )
    pencils = _pencils(cfg, kernel)
    tasks = [(p, cfg.residual_tol) for p in pencils]
    rows = _run_tasks(_oracle_worker, tasks, _labels(cfg), jobs)

    lines = _header(cfg)
    lines.append("n,a_n,root_deviation,coeff_deviation,status")
    all_ok = True
    for n, (a, (root_dev, coeff_dev)) in enumerate(zip(cfg.modes, rows), start=1):
        ok = root_dev <= ORACLE_TOL and not coeff_dev > ORACLE_TOL
        all_ok = all_ok and ok
        lines.append(
            f"{n},{_fmt(a)},{_fmt(root_dev)},{_fmt(coeff_dev)},{'pass' if ok else 'fail'}"
        )
        if not ok:
            print(f"gpspectra oracle-check: mode {n} deviates", file=sys.stderr)
    print(f"gpspectra oracle-check: {len(rows)} mode(s) compared", file=sys.stderr)
    return "\n".join(lines) + "\n", all_ok


def run_asymptote(cfg: JobConfig, jobs: int = 1) -> tuple[str, bool]:
    """Leading-term predictions and regime tags only — nothing is solved.

    Useful for mapping where a family's pair is headed before paying for a
    numeric sweep; remainder columns state the declared error exponents.
    """
    if cfg.family is not None:
        regime = classify_regime(cfg.xi, cfg.family.regularity)
        predictions = [predict_power_law(a, cfg.xi, cfg.family) for a in cfg.modes]
    else:
        regime = "tends_to_axis"
        initial = cfg.kernel.initial_value
        predictions = [predict_finite_sum(a, cfg.xi, initial) for a in cfg.modes]

    lines = _header(cfg)
    lines.append("n,a_n,xi,regime_tag,decay_class,predicted_re,predicted_im,order_re,order_im")
    for n, (a, pred) in enumerate(zip(cfg.modes, predictions), start=1):
        order_im = float("nan") if pred.imag_remainder_order is None else pred.imag_remainder_order
        lines.append(
            ",".join(
                (
                    str(n),
                    _fmt(a),
                    _fmt(cfg.xi),
                    pred.regime_tag,
                    regime,
                    _fmt(pred.value.real),
                    _fmt(pred.value.imag),
                    _fmt(pred.remainder_order),
                    _fmt(order_im),
                )
            )
        )
    print(f"gpspectra asymptote: {len(predictions)} prediction(s)", file=sys.stderr)
    return "\n".join(lines) + "\n", True


_RUNNERS = {
    "spectrum": run_spectrum,
    "verify": run_verify,
    "sweep": run_sweep,
    "oracle-check": run_oracle_check,
    "asymptote": run_asymptote,
}

_JOB_HELP = {
    "spectrum": "solve every mode and list all roots",
    "verify": "run structural checks and report margins",
    "sweep": "compare the pair against its asymptotic prediction",
    "oracle-check": "cross-validate roots against the polynomial oracle",
    "asymptote": "emit predictions and regime tags without solving",
}


def _parse_args(argv):
    parser = argparse.ArgumentParser(
        prog="gpspectra",
        description="Spectra of second-order modes with exponential-sum memory damping.",
    )
    sub = parser.add_subparsers(dest="job", required=True, metavar="JOB")
    for name in JOB_KINDS:
        job = sub.add_parser(name, help=_JOB_HELP[name])
        job.add_argument("--config", required=True, help="path to the JSON job config")
        job.add_argument("--out", help="output path (overrides the config's output key)")
        job.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
    return parser.parse_args(argv)


def main(argv=None) -> int:
    args = _parse_args(argv)
    try:
        try:
            text = Path(args.config).read_text(encoding="utf-8")
        except OSError as exc:
            raise ConfigError(f"config: cannot read {args.config} ({exc})") from exc
        if args.jobs < 1:
            raise ConfigError("--jobs must be at least 1")
        cfg = parse_config(text, args.job)
        output, ok = _RUNNERS[args.job](cfg, jobs=args.jobs)
    except ConfigError as exc:
        print(f"gpspectra: config error: {exc}", file=sys.stderr)
        return 2
    except GPSpectraError as exc:
        print(f"gpspectra: numerical failure: {exc}", file=sys.stderr)
        return 3

    destination = args.out or cfg.output
    if destination:
        Path(destination).write_text(output, encoding="utf-8")
        print(f"gpspectra: wrote {destination}", file=sys.stderr)
    else:
        sys.stdout.write(output)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
