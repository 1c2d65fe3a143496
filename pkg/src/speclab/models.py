"""The commutator families: SU(2) spin, ring, finite Heisenberg, SE(2)/line.

Each builder returns a CommutatorReport bundling the commutator matrix, its
operator norm, and model-specific diagnostics.  Circle-grid membership tests
(which grid points lie on the open arc Re z > a) run on exact integers when
a = 0, where cos(2*pi*k/n) = 0 exactly at the quarter points and the strict
inequality must exclude them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ._errors import ComputationError, ContractError
from .hankel import HALF_CIRCLE, ArcSymbol, _coeff_grid
from .linalg import commutator, operator_norm
from .spinrep import (
    HalfInt,
    SpinRep,
    projection_x,
    projection_x_entries,
    projection_z_interval,
    weight_exceeds,
)

NORM_CAP = 0.5 + 1e-9  # projection commutators cannot exceed 1/2


@dataclass
class CommutatorReport:
    """Result of building one commutator: matrix, norm, and diagnostics."""

    family: str
    params: dict
    norm: float
    dim: int
    matrix: np.ndarray
    submatrix: np.ndarray | None = None
    block_check: float | None = None
    diagnostics: dict = field(default_factory=dict)

    def __post_init__(self):
        if not 0.0 <= self.norm <= NORM_CAP:
            raise ComputationError(
                f"{self.family}: norm {self.norm} violates the 1/2 projection bound"
            )


# ---------------------------------------------------------------------------
# SU(2)
# ---------------------------------------------------------------------------

def su2_commutator(n: int, a: float = 0.0, b: float = 1.0) -> CommutatorReport:
    """Commutator of the J_x projection above a*(j+1/2) with the J_z
    projection onto (0, b*(j+1/2)].

    For the plain case (a, b) = (0, 1) the matrix is block anti-diagonal in
    the z-basis; the block structure is verified and the norm is taken from
    the off-diagonal block.
    """
    rep = SpinRep(n)
    if not 0.0 <= a < 1.0:
        raise ContractError(f"su2_commutator: a must lie in [0, 1), got {a}")
    if not 0.0 < b <= 1.0:
        raise ContractError(f"su2_commutator: b must lie in (0, 1], got {b}")
    p = projection_x(rep, a)
    q = projection_z_interval(rep, b)
    c = commutator(p, q)
    plain = a == 0.0 and b == 1.0
    block_check = None
    if plain:
        n_pos = sum(1 for w in rep.weights if w.twice > 0)
        p2 = p[:n_pos, n_pos:]
        expected = np.zeros_like(c)
        expected[:n_pos, n_pos:] = -p2
        expected[n_pos:, :n_pos] = p2.T
        block_check = float(np.max(np.abs(c - expected)))
        norm = operator_norm(p2)
    else:
        norm = operator_norm(c)
    return CommutatorReport(
        family="su2" if plain else "su2_interval",
        params={"n": n, "a": a, "b": b},
        norm=norm,
        dim=n,
        matrix=c,
        block_check=block_check,
    )


def su2_caps_commutator(n: int, a: float) -> CommutatorReport:
    """Commutator with both projections thresholded at a*(j+1/2).

    This is the family whose norm profile changes character as a crosses
    1/sqrt(2) (both caps shrink together).
    """
    rep = SpinRep(n)
    if not 0.0 <= a < 1.0:
        raise ContractError(f"su2_caps_commutator: a must lie in [0, 1), got {a}")
    p = projection_x(rep, a)
    q = np.diag([1.0 if weight_exceeds(w.twice, a, n) else 0.0 for w in rep.weights])
    c = commutator(p, q)
    return CommutatorReport(
        family="su2_caps",
        params={"n": n, "a": a},
        norm=operator_norm(c),
        dim=n,
        matrix=c,
    )


def su2_submatrix(n: int, size: int) -> np.ndarray:
    """The N x N corner extraction of the plain SU(2) projection data.

    Entries are P_{m',m} with m' = k, m = 1 - l on odd dimensions and
    m' = k - 1/2, m = 1/2 - l on even ones (k, l = 1..N); requires j > N.
    The entries converge entrywise to the half-circle Hankel truncation.
    """
    rep = SpinRep(n)
    if size < 1:
        raise ContractError("su2_submatrix: size must be >= 1")
    if rep.j.twice <= 2 * size:
        raise ContractError(f"su2_submatrix requires j > N, got j = {rep.j}, N = {size}")
    if n % 2 == 1:
        pairs = [
            (HalfInt(2 * k), HalfInt(2 * (1 - l)))
            for k in range(1, size + 1)
            for l in range(1, size + 1)
        ]
    else:
        pairs = [
            (HalfInt(2 * k - 1), HalfInt(1 - 2 * l))
            for k in range(1, size + 1)
            for l in range(1, size + 1)
        ]
    return projection_x_entries(rep, 0.0, pairs).reshape(size, size)


# ---------------------------------------------------------------------------
# circle-grid membership
# ---------------------------------------------------------------------------

def grid_in_arc(k: int, n: int, a: float = 0.0) -> bool:
    """Whether the grid point exp(2*pi*i*k/n) lies on the open arc Re z > a.

    At a = 0 the test is pure integer arithmetic on 4k mod 4n, so points with
    Re z exactly zero are excluded the way a strict inequality demands.
    """
    if a == 0.0:
        r = (4 * k) % (4 * n)
        return r < n or r > 3 * n
    return math.cos(2 * math.pi * (k % n) / n) > a


# ---------------------------------------------------------------------------
# ring
# ---------------------------------------------------------------------------

def _ring_report(n: int, window: int, a: float) -> CommutatorReport:
    ks = np.arange(-window, window + 1, dtype=np.int64)
    memb = np.array([1.0 if grid_in_arc(int(k), n, a) else 0.0 for k in ks])
    sym = ArcSymbol(a)
    t = _coeff_grid(sym, np.subtract.outer(ks, ks))
    c = (memb[None, :] - memb[:, None]) * t
    return CommutatorReport(
        family="ring",
        params={"n": n, "K": window, "a": a},
        norm=operator_norm(c),
        dim=2 * window + 1,
        matrix=c,
    )


def ring_commutator(n: int, window: int) -> CommutatorReport:
    """Ring commutator on the Fourier modes -K..K.

    Entry (k, l) is (ind(l) - ind(k)) * coeff(k - l), where ind marks grid
    points exp(2*pi*i*k/n) on the right half-circle and coeff is the arc
    indicator's Fourier coefficient.
    """
    if n < 2:
        raise ContractError(f"ring_commutator: n must be >= 2, got {n}")
    if window < 1:
        raise ContractError(f"ring_commutator: window must be >= 1, got {window}")
    return _ring_report(n, window, 0.0)


def ring_commutator_shifted(n: int, window: int, a: float) -> CommutatorReport:
    """Ring commutator with both projections shifted to the arc Re z > a."""
    if n < 2 or window < 1:
        raise ContractError("ring_commutator_shifted: need n >= 2 and window >= 1")
    if not 0.0 <= a < 1.0:
        raise ContractError(f"ring_commutator_shifted: a must lie in [0, 1), got {a}")
    return _ring_report(n, window, a)


def ring_submatrix(n: int, size: int, a: float = 0.0) -> np.ndarray:
    """Designated N x N extraction at rows ceil(n/4) - k, columns
    ceil(n/4) + l - 1 (k, l = 1..N); requires n > 4N.

    For a = 0 this equals minus the Hankel truncation exactly (identical
    formula evaluation, not merely to roundoff).
    """
    if n <= 4 * size:
        raise ContractError(f"ring_submatrix requires n > 4N, got n = {n}, N = {size}")
    q = -(-n // 4)  # ceil(n/4)
    sym = ArcSymbol(a)
    rows = np.array([q - k for k in range(1, size + 1)], dtype=np.int64)
    cols = np.array([q + l - 1 for l in range(1, size + 1)], dtype=np.int64)
    memb_r = np.array([1.0 if grid_in_arc(int(k), n, a) else 0.0 for k in rows])
    memb_c = np.array([1.0 if grid_in_arc(int(l), n, a) else 0.0 for l in cols])
    t = _coeff_grid(sym, np.subtract.outer(rows, cols))
    return (memb_c[None, :] - memb_r[:, None]) * t


# ---------------------------------------------------------------------------
# finite Heisenberg
# ---------------------------------------------------------------------------

def _heis_pairing(n: int, p: int, a: float) -> complex:
    """Discretized pairing (1/n) * sum over arc grid points of exp(-2*pi*i*p*m/n)."""
    ms = np.array([m for m in range(n) if grid_in_arc(m, n, a)], dtype=np.int64)
    if len(ms) == 0:
        return 0.0 + 0.0j
    return complex(np.sum(np.exp(-2j * math.pi * p * ms / n)) / n)


def _heis_pairing_table(n: int, a: float) -> np.ndarray:
    """Pairing values for every difference p = -(n-1)..(n-1), vectorized."""
    ms = np.array([m for m in range(n) if grid_in_arc(m, n, a)], dtype=np.int64)
    ps = np.arange(-(n - 1), n, dtype=np.int64)
    if len(ms) == 0:
        return np.zeros(len(ps), dtype=complex)
    return np.exp(-2j * math.pi * np.outer(ps, ms) / n).sum(axis=1) / n


def _heis_report(n: int, a: float) -> CommutatorReport:
    memb = np.array([1.0 if grid_in_arc(k, n, a) else 0.0 for k in range(n)])
    grid = np.arange(n)
    f = np.exp(-2j * math.pi * np.outer(grid, grid) / n) / math.sqrt(n)
    p1 = (f.conj().T * memb[None, :]) @ f
    p2 = np.diag(memb.astype(complex))
    c = commutator(p1, p2)
    # cross-check the matrix elements in the shift-operator eigenbasis
    # against the closed form (ind(k) - ind(l)) * pairing(k - l)
    ebasis = np.exp(2j * math.pi * np.outer(grid, grid) / n) / math.sqrt(n)
    c_e = ebasis.conj().T @ c @ ebasis
    table = _heis_pairing_table(n, a)
    diffs = np.subtract.outer(grid, grid) + (n - 1)  # index into the table
    closed = (memb[:, None] - memb[None, :]) * table[diffs]
    residual = float(np.max(np.abs(c_e - closed)))
    if residual > 1e-12:
        raise ComputationError(
            f"heisenberg closed form disagrees with the operator construction: {residual}"
        )
    return CommutatorReport(
        family="heisenberg",
        params={"n": n, "a": a},
        norm=operator_norm(c),
        dim=n,
        matrix=c,
        diagnostics={"closed_form_residual": residual},
    )


def heisenberg_commutator(n: int) -> CommutatorReport:
    """Commutator of the two half-circle projections of the finite
    Heisenberg pair (cyclic shift and modulation), conjugate under the
    unitary DFT.

    The projection for the shift operator is built by DFT conjugation of the
    diagonal one and the result is validated against the closed-form matrix
    elements in the shift eigenbasis (residual kept in diagnostics).
    """
    if n < 2:
        raise ContractError(f"heisenberg_commutator: n must be >= 2, got {n}")
    return _heis_report(n, 0.0)


def heisenberg_commutator_shifted(n: int, a: float) -> CommutatorReport:
    """Heisenberg commutator with both projections shifted to Re z > a."""
    if n < 2:
        raise ContractError(f"heisenberg_commutator_shifted: n must be >= 2, got {n}")
    if not 0.0 <= a < 1.0:
        raise ContractError(f"heisenberg_commutator_shifted: a must lie in [0, 1), got {a}")
    return _heis_report(n, a)


def heisenberg_submatrix(n: int, size: int, a: float = 0.0) -> np.ndarray:
    """Designated N x N extraction of the Heisenberg commutator matrix
    elements, rows ceil(n/4) - k and columns ceil(n/4) + l - 1; needs n > 4N.

    Entries converge to the arc-symbol Hankel truncation as n grows.
    """
    if n <= 4 * size:
        raise ContractError(f"heisenberg_submatrix requires n > 4N, got n = {n}, N = {size}")
    q = -(-n // 4)
    ms = np.array([m for m in range(n) if grid_in_arc(m, n, a)], dtype=np.int64)
    out = np.empty((size, size))
    for k in range(1, size + 1):
        for l in range(1, size + 1):
            row, col = q - k, q + l - 1
            pref = (1.0 if grid_in_arc(row, n, a) else 0.0) - (
                1.0 if grid_in_arc(col, n, a) else 0.0
            )
            # the pairing is real: the arc grid is symmetric under m -> n - m
            out[k - 1, l - 1] = pref * float(
                np.sum(np.cos(2 * math.pi * (row - col) * ms / n)) / n
            )
    return out


# ---------------------------------------------------------------------------
# SE(2) / line
# ---------------------------------------------------------------------------

def se2_commutator(window: int) -> CommutatorReport:
    """Commutator of half-circle multiplication with the Hardy projection on
    Fourier modes -K..K.

    Decomposes exactly into a Hankel block and minus its adjoint; the same
    operator realizes the line position/momentum commutator numerically.
    The report's submatrix holds the Hankel block with rows flipped to the
    1-based Hankel indexing.
    """
    if window < 1:
        raise ContractError(f"se2_commutator: window must be >= 1, got {window}")
    ks = np.arange(-window, window + 1, dtype=np.int64)
    t = _coeff_grid(HALF_CIRCLE, np.subtract.outer(ks, ks))
    hardy = (ks >= 0).astype(float)
    c = t * hardy[None, :] - hardy[:, None] * t
    neg = ks < 0
    pos = ks >= 0
    block = c[np.ix_(neg, pos)]
    expected = np.zeros_like(c)
    expected[np.ix_(neg, pos)] = block
    expected[np.ix_(pos, neg)] = -block.T
    block_check = float(np.max(np.abs(c - expected)))
    return CommutatorReport(
        family="se2",
        params={"K": window},
        norm=operator_norm(block),
        dim=2 * window + 1,
        matrix=c,
        submatrix=block[::-1, :],
        block_check=block_check,
    )


# ---------------------------------------------------------------------------
# extremal vectors
# ---------------------------------------------------------------------------

@dataclass
class ExtremalVector:
    """Unit vector achieving the extremal singular value of a commutator."""

    coefficients: np.ndarray
    value: float
    which: str
    gap: float
    degenerate: bool


def extremal_vector(source, which: str = "max") -> ExtremalVector:
    """Extremal eigenvector of a commutator matrix, in basis order.

    Commutators of orthogonal projections are skew-adjoint, so i*C is
    Hermitian with a symmetric spectrum; ``which`` picks the top or bottom
    eigenvalue (both have magnitude equal to the operator norm).  A gap below
    1e-10 to the neighboring eigenvalue is flagged as degenerate.
    """
    if which not in ("max", "min"):
        raise ContractError(f"which must be 'max' or 'min', got {which!r}")
    mat = source.matrix if isinstance(source, CommutatorReport) else np.asarray(source)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ContractError("extremal_vector needs a square commutator matrix")
    scale = max(1.0, float(np.max(np.abs(mat))))
    if float(np.max(np.abs(mat + mat.conj().T))) > 1e-10 * scale:
        raise ContractError("extremal_vector expects a skew-adjoint commutator matrix")
    evals, evecs = np.linalg.eigh(1j * mat)
    if which == "max":
        vec, val = evecs[:, -1], evals[-1]
        gap = float(evals[-1] - evals[-2]) if len(evals) > 1 else math.inf
    else:
        vec, val = evecs[:, 0], evals[0]
        gap = float(evals[1] - evals[0]) if len(evals) > 1 else math.inf
    return ExtremalVector(
        coefficients=vec,
        value=float(abs(val)),
        which=which,
        gap=gap,
        degenerate=gap < 1e-10,
    )
