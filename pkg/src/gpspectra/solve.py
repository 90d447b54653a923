"""One-call spectrum of a single mode: branches, pair, certificate."""

from __future__ import annotations

from dataclasses import dataclass

from .complex_pair import (
    CountCertificate,
    count_zeros,
    fixed_point_pair,
    newton_refine,
    spectrum_contour,
)
from .errors import NumericalError
from .pencil import ModePencil, symbol, symbol_deriv
from .real_branches import BranchRoot, branch_roots, stiffness_roots


@dataclass(frozen=True)
class SpectrumResult:
    """Complete root set of one mode symbol.

    ``interlacing_margin`` is the smallest of the gaps that the ordering
    -g_k < root_k < stiffness_root_k < -g_{k-1} must keep positive; a
    negative margin means the ordering failed and verification should say
    so.  ``certificate`` is the argument-principle count over the enclosing
    rectangle (None when not requested).
    """

    pencil: ModePencil
    real_roots: tuple[BranchRoot, ...]
    stiffness_roots: tuple[BranchRoot, ...]
    pair_plus: complex
    pair_minus: complex
    pair_residual: float
    pair_iterations: int
    contraction_bound: float
    interlacing_margin: float
    certificate: CountCertificate | None

    @property
    def all_roots(self) -> tuple[complex, ...]:
        """Real branches followed by the pair (upper first)."""
        return tuple(complex(r.value) for r in self.real_roots) + (
            self.pair_plus,
            self.pair_minus,
        )

    @property
    def spectral_abscissa(self) -> float:
        return max(r.real for r in self.all_roots)


def _interlacing_margin(
    p: ModePencil,
    roots: tuple[BranchRoot, ...],
    stiff: tuple[BranchRoot, ...],
) -> float:
    edges = (0.0,) + p.kernel.rates
    margin = float("inf")
    for k, (mu, x) in enumerate(zip(roots, stiff), start=1):
        lo, hi = -edges[k], -edges[k - 1]
        margin = min(margin, mu.value - lo, x.value - mu.value, hi - x.value)
    return margin


def solve_mode(
    p: ModePencil,
    residual_tol: float = 1e-10,
    certify: bool = True,
) -> SpectrumResult:
    """Locate every root of the mode symbol and bundle the evidence.

    All kernel poles bracket one real branch; the conjugate pair comes from
    the fixed-point map polished by Newton.  Quality gates are root-error
    based: a branch root must have Newton-step estimate
    |L/L'| <= residual_tol * max(1, |root|) (the raw residual can be large
    near a pole where L' explodes without the root being any worse), and
    the pair must satisfy |L| <= residual_tol * a**2.  With ``certify`` the
    rectangle count is attached — the certificate is stored either way, the
    assertion belongs to the verification layer.
    """
    n = p.kernel.size
    real = tuple(branch_roots(p, n))
    stiff = tuple(stiffness_roots(p, n))
    for r in real:
        slope = abs(symbol_deriv(p, r.value))
        step = r.residual / max(slope, 1e-300)
        if step > residual_tol * max(1.0, abs(r.value)):
            raise NumericalError(
                f"branch {r.index} root-error estimate {step:.3e} exceeds "
                f"{residual_tol * max(1.0, abs(r.value)):.3e}"
            )

    fp = fixed_point_pair(p)
    plus = newton_refine(p, fp.plus, residual_tol=residual_tol)
    if plus.imag < 0:
        plus = plus.conjugate()
    pair_residual = abs(symbol(p, plus))

    certificate = None
    if certify:
        certificate = count_zeros(p, spectrum_contour(p, n))

    return SpectrumResult(
        pencil=p,
        real_roots=real,
        stiffness_roots=stiff,
        pair_plus=plus,
        pair_minus=plus.conjugate(),
        pair_residual=pair_residual,
        pair_iterations=fp.iterations,
        contraction_bound=fp.derivative_bound,
        interlacing_margin=_interlacing_margin(p, real, stiff),
        certificate=certificate,
    )
