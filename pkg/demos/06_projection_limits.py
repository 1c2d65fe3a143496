"""Matrix elements of spectral projections converge to Fourier coefficients.

Fix a pair of weights (m', m) and grow the dimension: the projection entry
P_{m',m} tends to the (m - m')-th Fourier coefficient of the arc indicator.
With a threshold a > 0 the limit is the shifted arc's coefficient, e.g. the
diagonal tends to arccos(a)/pi.  The d-function Bessel approximation that
drives these limits is accurate to O(j^{-3/2}) after sqrt(theta) scaling.
"""

import math

from speclab import (
    ArcSymbol,
    HalfInt,
    SpinRep,
    fourier_coeff,
    projection_x_entries,
    szego_approximation,
    wigner_d_theta,
)

pairs = [(HalfInt(2), HalfInt(0)), (HalfInt(4), HalfInt(-2)), (HalfInt(2), HalfInt(2))]
for a in (0.0, 0.5):
    sym = ArcSymbol(a)
    print(f"threshold a = {a}:")
    for mp, m in pairs:
        target = fourier_coeff(sym, m.diff_int(mp))
        vals = [
            projection_x_entries(SpinRep(n), a, [(mp, m)])[0] for n in (101, 401, 1601)
        ]
        errs = ", ".join(f"{abs(v - target):.2e}" for v in vals)
        print(f"  (m', m) = ({mp}, {m}): target {target:+.6f}, errors [{errs}]")

print("\nBessel main term vs the d-function (j doubled, sup error ratio ~ 2^1.5):")
thetas = [0.01 + k * (math.pi / 2 - 0.01) / 80 for k in range(81)]
for j in (20, 40):
    sups = []
    for jj in (j, 2 * j):
        rep = SpinRep(2 * jj + 1)
        worst = 0.0
        for theta in thetas:
            approx, _ = szego_approximation(jj, 1, 0, theta)
            exact = wigner_d_theta(rep, HalfInt(2), HalfInt(0), theta)
            worst = max(worst, abs(exact - approx) / math.sqrt(theta))
        sups.append(worst)
    print(f"  j = {j}: sup errors {sups[0]:.2e} -> {sups[1]:.2e},",
          f"ratio {sups[0] / sups[1]:.3f} (2^1.5 = {2**1.5:.3f})")
