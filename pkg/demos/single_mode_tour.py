"""Tour of one mode: every root, every piece of evidence.

The workhorse example everywhere in this repo: a single memory stage
c = 1, g = 2 at frequency a = 10 with weight exponent xi = 1/2.  Clearing
the denominator turns the symbol into z^3 + 2z^2 + 100z + 190, so every
number printed below can be checked against a cubic by hand.
"""

import numpy as np

from gpspectra import (
    ExponentialKernel,
    ModePencil,
    aberth_roots,
    admissibility_report,
    match_roots,
    solve_mode,
    to_polynomial,
)

kernel = ExponentialKernel(coeffs=(1.0,), rates=(2.0,))
report = admissibility_report(kernel)
print(f"kernel strength S = {report.l1_norm} (admissible: {report.admissible})")

mode = ModePencil(frequency=10.0, xi=0.5, kernel=kernel)
result = solve_mode(mode)

print("\nreal branch, bracketed between the pole and the origin:")
for b in result.real_roots:
    lo, hi = b.interval
    print(f"  mu_{b.index} = {b.value:.15f}   in ({lo}, {hi}),  |L| = {b.residual:.2e}")

print("stiffness root (always to the right of the branch):")
for s in result.stiffness_roots:
    print(f"  x_{s.index}  = {s.value:.15f}")
print(f"interlacing margin: {result.interlacing_margin:.6f}")

print("\noscillatory pair:")
print(f"  lam+ = {result.pair_plus:.15f}")
print(f"  lam- = {result.pair_minus:.15f}")
print(f"  fixed-point iterations {result.pair_iterations}, "
      f"contraction bound {result.contraction_bound:.3f}")

cert = result.certificate
print(f"\nargument-principle certificate: winding {cert.winding} "
      f"+ {cert.poles_inside} pole(s) = {cert.zeros_inferred} zeros "
      f"(defect {cert.max_quadrature_defect:.1e})")

# cross-check against simultaneous iteration on the cleared polynomial
coeffs = to_polynomial(mode)
print("\ncleared polynomial (ascending):", [str(c) for c in coeffs])
oracle = aberth_roots(coeffs)
dev = match_roots(result.all_roots, oracle).max_relative_deviation
print(f"worst deviation from the polynomial oracle: {dev:.2e}")

assert dev < 1e-10
print("\nslowest decay in the whole mode:", result.spectral_abscissa)
