"""Hankel matrices of arc-indicator symbols on the Hardy space.

The symbol is the indicator of the arc E_a = {z on the unit circle with
Re z > a}, 0 <= a < 1.  Its Fourier coefficients are arccos(a)/pi at
frequency 0 and sin(p*arccos a)/(pi*p) elsewhere; the associated Hankel
matrix has entries h_{k,l} = coeff(1 - k - l), constant along
anti-diagonals.  Truncations are monotone in size and certified from above
by the Nehari witness and from below by the essential-spectrum radius for
piecewise-continuous symbols, both of which evaluate to 1/2 here.

For a = 0 the coefficients are evaluated by integer logic (sin(pi*p/2) is
exactly 0, +1 or -1), so entries that vanish do so exactly and identical
formulas elsewhere in the package reproduce them bit for bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ._errors import ContractError
from .linalg import operator_norm


@dataclass(frozen=True)
class ArcSymbol:
    """Indicator symbol of the arc Re z > a; alpha = arccos(a)."""

    a: float = 0.0
    alpha: float = field(init=False)

    def __post_init__(self):
        if not 0.0 <= self.a < 1.0:
            raise ContractError(f"arc parameter must lie in [0, 1), got {self.a}")
        object.__setattr__(self, "alpha", math.acos(self.a))


HALF_CIRCLE = ArcSymbol(0.0)


def fourier_coeff(sym: ArcSymbol, p: int) -> float:
    """Fourier coefficient of the arc indicator at integer frequency p."""
    p = int(p)
    if sym.a == 0.0:
        # sin(pi*p/2) by integer logic: exact zeros on even frequencies
        if p == 0:
            return 0.5
        r = p % 4
        if r % 2 == 0:
            return 0.0
        return (1.0 if r == 1 else -1.0) / (math.pi * p)
    if p == 0:
        return sym.alpha / math.pi
    return math.sin(p * sym.alpha) / (math.pi * p)


def _coeff_grid(sym: ArcSymbol, p: np.ndarray) -> np.ndarray:
    """Vectorized fourier_coeff over an integer array (same values bitwise)."""
    p = np.asarray(p, dtype=np.int64)
    out = np.empty(p.shape)
    if sym.a == 0.0:
        r = np.mod(p, 4)
        with np.errstate(divide="ignore", invalid="ignore"):
            odd = np.where(r == 1, 1.0, -1.0) / (math.pi * p)
        out = np.where(r % 2 == 0, 0.0, odd)
        out = np.where(p == 0, 0.5, out)
        return out
    flat = p.ravel()
    vals = np.array([fourier_coeff(sym, int(q)) for q in flat])
    return vals.reshape(p.shape)


def hankel_truncation(sym: ArcSymbol, n: int) -> np.ndarray:
    """N x N truncated Hankel matrix h_{k,l} = coeff(1 - k - l), 1-based k, l."""
    if n < 1:
        raise ContractError(f"truncation size must be >= 1, got {n}")
    k = np.arange(1, n + 1, dtype=np.int64)
    return _coeff_grid(sym, 1 - np.add.outer(k, k))


def truncated_norm(sym: ArcSymbol, n: int) -> float:
    """Operator norm of the N x N truncation (nondecreasing in N)."""
    return operator_norm(hankel_truncation(sym, n))


def nehari_bound(sym: ArcSymbol) -> float:
    """Upper-bound certificate for the Hankel operator norm.

    The witness symbol conj(z) * (indicator - c) matches the prescribed
    coefficients for every constant c; the sup-norm max(|1 - c|, |c|) is
    minimized at c = 1/2, giving 1/2 for every arc.  This is a certificate,
    not a claim that the bound is attained when a > 0.
    """
    c = 0.5
    return max(abs(1.0 - c), abs(c))


def _indicator_at_angle(sym: ArcSymbol, theta: float) -> float:
    return 1.0 if math.cos(theta) > sym.a else 0.0


def power_essential_radius(sym: ArcSymbol) -> float:
    """Lower-bound certificate: radius of the essential spectrum.

    The arc indicator jumps at the two endpoints exp(+-i*alpha); the jump at
    angle t is half the difference of one-sided limits.  The endpoints form a
    conjugate pair contributing the segment [-sqrt(-j1*j2), sqrt(-j1*j2)],
    while z = +-1 are continuity points contributing nothing.
    """
    eps = 1e-8

    def jump(theta: float) -> float:
        return 0.5 * (
            _indicator_at_angle(sym, theta + eps) - _indicator_at_angle(sym, theta - eps)
        )

    j_plus = jump(sym.alpha)
    j_minus = jump(-sym.alpha)
    j_one = jump(0.0)
    j_minus_one = jump(math.pi)
    radius = max(abs(j_one), abs(j_minus_one))
    pair = -j_plus * j_minus
    if pair > 0:
        radius = max(radius, math.sqrt(pair))
    return radius
