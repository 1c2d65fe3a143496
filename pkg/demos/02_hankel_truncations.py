"""Truncated Hankel matrices of the half-circle indicator.

The N x N truncations have norms increasing with N, squeezed between the
essential-spectrum radius (lower certificate) and the Nehari witness bound
(upper certificate), which both equal 1/2.  Convergence is logarithmically
slow, visible in the table below.
"""

from speclab import (
    HALF_CIRCLE,
    hankel_truncation,
    nehari_bound,
    power_essential_radius,
    truncated_norm,
)

print("upper certificate (witness symbol):", nehari_bound(HALF_CIRCLE))
print("lower certificate (essential radius):", power_essential_radius(HALF_CIRCLE))
print()
print(f"{'N':>6} {'norm of truncation':>20} {'1/2 - norm':>12}")
for n in (1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024):
    v = truncated_norm(HALF_CIRCLE, n)
    print(f"{n:>6} {v:>20.12f} {0.5 - v:>12.2e}")

h = hankel_truncation(HALF_CIRCLE, 6)
print("\nleading 6x6 truncation (constant along anti-diagonals, even ones zero):")
for row in h:
    print("  " + " ".join(f"{x:>9.5f}" for x in row))
