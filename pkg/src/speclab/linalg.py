"""Dense linear-algebra kernel: tridiagonal eigensolver, operator norms, commutators.

Everything here is a pure function of its inputs.  Matrices are plain numpy
arrays (row-major), real or complex.  Determinism matters: the power-iteration
starting vector is the all-ones vector plus a perturbation drawn from a fixed
seed (override with the LAB_SEED environment variable), so repeated runs are
bit-identical.
"""

from __future__ import annotations

import math
import os
from typing import NamedTuple

import numpy as np
from scipy.linalg import eigh_tridiagonal

from ._errors import ComputationError, ContractError

DEFAULT_SEED = 20250809

# power iteration controls
RAYLEIGH_TOL = 1e-13
VERIFY_TOL = 1e-12
STAGNATION_WINDOW = 25


def _calibration_seed() -> int:
    return int(os.environ.get("LAB_SEED", DEFAULT_SEED))


class EigenDecomposition(NamedTuple):
    """Spectral decomposition of a real symmetric matrix.

    eigenvalues are ascending; eigenvector k is ``eigenvectors[:, k]``.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def tridiag_eigh(diag, offdiag) -> EigenDecomposition:
    """Full eigendecomposition of a real symmetric tridiagonal matrix.

    Args:
        diag: main diagonal, length n.
        offdiag: first off-diagonal, length n - 1.

    Returns:
        EigenDecomposition with ascending eigenvalues and orthonormal columns.
    """
    d = np.asarray(diag, dtype=float)
    e = np.asarray(offdiag, dtype=float)
    if d.ndim != 1 or e.ndim != 1 or len(e) != max(len(d) - 1, 0):
        raise ContractError(
            f"offdiag must have length len(diag)-1, got {len(d)} and {len(e)}"
        )
    if len(d) == 0:
        raise ContractError("empty diagonal")
    if not (np.all(np.isfinite(d)) and np.all(np.isfinite(e))):
        raise ContractError("non-finite entry in tridiagonal data")
    if len(d) == 1:
        return EigenDecomposition(d.copy(), np.ones((1, 1)))
    try:
        w, v = eigh_tridiagonal(d, e)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK rarely fails
        raise ComputationError(f"tridiagonal eigensolver did not converge: {exc}") from exc
    return EigenDecomposition(w, v)


def commutator(a, b) -> np.ndarray:
    """AB - BA for square matrices of equal size."""
    A = np.asarray(a)
    B = np.asarray(b)
    if A.ndim != 2 or B.ndim != 2 or A.shape[0] != A.shape[1] or A.shape != B.shape:
        raise ContractError(f"commutator needs equal square matrices, got {A.shape} and {B.shape}")
    C = A @ B - B @ A
    # commutators of Hermitian inputs are anti-Hermitian; keep that honest
    if _is_hermitian(A) and _is_hermitian(B):
        scale = max(1.0, _max_abs(C))
        skew = _max_abs(C + C.conj().T)
        if skew > 1e-12 * scale:  # pragma: no cover - arithmetic identity
            raise ComputationError(f"commutator of Hermitian inputs not anti-Hermitian: {skew}")
    return C


def _max_abs(a) -> float:
    a = np.asarray(a)
    return float(np.max(np.abs(a))) if a.size else 0.0


def _is_hermitian(a, tol: float = 1e-12) -> bool:
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        return False
    return _max_abs(a - a.conj().T) <= tol * max(1.0, _max_abs(a))


def _is_diagonal(a) -> bool:
    off = a - np.diag(np.diag(a))
    return not np.any(off)


def _exact_norm(a) -> float:
    """LAPACK-grade largest singular value (termination guarantee path)."""
    if a.shape[0] == a.shape[1] and np.array_equal(a, a.conj().T):
        w = np.linalg.eigvalsh(a)
        return float(max(abs(w[0]), abs(w[-1])))
    return float(np.linalg.norm(a, 2))


def _power_start(n: int) -> np.ndarray:
    rng = np.random.default_rng(_calibration_seed())
    v = np.ones(n) + 1e-2 * rng.standard_normal(n)
    return v / np.linalg.norm(v)


def operator_norm(a) -> float:
    """Largest singular value of a dense matrix.

    Diagonal matrices take an exact fast path.  Otherwise runs power iteration
    on A*A with Rayleigh-quotient stopping (tol 1e-13) from a deterministic
    start vector, accepts the result only if the two-sided singular-pair
    residual passes, and falls back to a full dense solve whenever iteration
    stagnates (clustered top singular values) or the cap is reached.
    """
    A = np.asarray(a)
    if A.ndim != 2 or A.size == 0:
        raise ContractError(f"operator_norm needs a non-empty matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A.real)) or (np.iscomplexobj(A) and not np.all(np.isfinite(A.imag))):
        raise ContractError("operator_norm: non-finite entries")
    scale = _max_abs(A)
    if scale == 0.0:
        return 0.0
    if A.shape[0] == A.shape[1] and _is_diagonal(A):
        return float(np.max(np.abs(np.diag(A))))

    rows, cols = A.shape
    cap = 50 * max(rows, cols)
    AH = A.conj().T
    v = _power_start(cols).astype(complex if np.iscomplexobj(A) else float)
    lam_prev = -np.inf
    changes: list[float] = []
    converged = False
    for it in range(cap):
        w = AH @ (A @ v)
        lam = float(np.real(np.vdot(v, w)))
        nw = float(np.linalg.norm(w))
        if nw == 0.0:
            break
        v = w / nw
        change = abs(lam - lam_prev)
        if np.isfinite(lam_prev) and change <= RAYLEIGH_TOL * max(abs(lam), 1e-300):
            converged = True
            break
        if np.isfinite(change):
            changes.append(change)
        lam_prev = lam
        # clustered spectra make the Rayleigh quotient creep; if the geometric
        # decay rate projects past the cap, bail to the exact solver now
        if len(changes) > STAGNATION_WINDOW and it % STAGNATION_WINDOW == 0:
            old = changes[-STAGNATION_WINDOW - 1]
            recent = changes[-1]
            if old > 0 and recent > 0:
                rate = (recent / old) ** (1.0 / STAGNATION_WINDOW)
                if rate >= 1.0:
                    break
                target = RAYLEIGH_TOL * max(abs(lam), 1e-300)
                projected = math.log(target / recent) / math.log(rate)
                if it + projected > cap:
                    break
    if converged:
        u = A @ v
        sigma = float(np.linalg.norm(u))
        if sigma > 0.0:
            u = u / sigma
            resid = float(np.linalg.norm(AH @ u - sigma * v))
            if resid <= VERIFY_TOL * max(sigma, 1e-300) * np.sqrt(max(rows, cols)):
                return sigma
    return _exact_norm(A)
