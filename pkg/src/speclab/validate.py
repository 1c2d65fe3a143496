"""Cross-path and identity suites, runnable as a machine-readable report.

Each suite computes a residual and compares it to a fixed tolerance; the
`validate` CLI subcommand serializes the outcome as JSON.  The sign-flip
injection hook deliberately corrupts one column of the eigenvector-route
d-matrix so that mutation tests can confirm the cross-path suite has teeth.
"""

from __future__ import annotations

import math

import numpy as np

from . import hankel, models, specfun, spinrep
from .linalg import commutator, operator_norm, tridiag_eigh

SCHEMA_VERSION = 1


def wigner_sum_matrix(rep: spinrep.SpinRep, theta: float = math.pi / 2) -> np.ndarray:
    """Assemble the full d-matrix from the explicit binomial sum."""
    return np.array(
        [
            [spinrep.wigner_d_sum(rep.j, mp, m, theta) for m in rep.weights]
            for mp in rep.weights
        ]
    )


def projection_from_sum(rep: spinrep.SpinRep, a: float) -> np.ndarray:
    """Assemble projection_x from the binomial-sum d-matrix (oracle route)."""
    d = wigner_sum_matrix(rep)
    cols = [
        i
        for i, mu in enumerate(rep.weights)
        if spinrep.weight_exceeds(mu.twice, a, rep.n)
    ]
    ds = d[:, cols]
    return ds @ ds.T


def _suite_operator_norm_symmetries():
    rng = np.random.default_rng(7)
    worst = 0.0
    for n in (3, 7, 16):
        a = rng.standard_normal((n, n))
        base = operator_norm(a)
        worst = max(worst, abs(operator_norm(a.T) - base) / base)
        worst = max(worst, abs(operator_norm(-a) - base) / base)
        q1, _ = np.linalg.qr(rng.standard_normal((n, n)))
        q2, _ = np.linalg.qr(rng.standard_normal((n, n)))
        worst = max(worst, abs(operator_norm(q1 @ a @ q2) - base) / base)
    return worst, 1e-10


def _suite_tridiag_reconstruction():
    rng = np.random.default_rng(11)
    worst = 0.0
    for n in (2, 5, 24):
        d = rng.standard_normal(n)
        e = rng.standard_normal(n - 1)
        w, v = tridiag_eigh(d, e)
        full = np.diag(d) + np.diag(e, 1) + np.diag(e, -1)
        resid = np.max(np.abs(v @ np.diag(w) @ v.T - full))
        worst = max(worst, resid / max(1.0, operator_norm(full)))
    return worst, 1e-10


def _suite_projection_commutator_bound():
    rng = np.random.default_rng(13)
    worst = 0.0
    for n in (4, 9, 17):
        for _ in range(3):
            q1, _ = np.linalg.qr(rng.standard_normal((n, n)))
            q2, _ = np.linalg.qr(rng.standard_normal((n, n)))
            k1, k2 = rng.integers(1, n, size=2)
            p = q1[:, :k1] @ q1[:, :k1].T
            q = q2[:, :k2] @ q2[:, :k2].T
            worst = max(worst, operator_norm(commutator(p, q)) - 0.5)
    return worst, 1e-12


def _suite_bessel_series_vs_integral():
    worst = 0.0
    for p in range(6):
        for x in (0.5, 1.0, 3.0, 5.0, 8.0, 12.0, 16.0, 20.0):
            worst = max(
                worst,
                abs(specfun.bessel_j_series(p, x) - specfun.bessel_j_integral(p, x)),
            )
    return worst, 1e-9


def _suite_bessel_decay():
    worst = 0.0
    for p in range(6):
        for x in np.linspace(10.0, 50.0, 41):
            worst = max(worst, abs(specfun.bessel_j(p, float(x))) * math.sqrt(x))
    return worst, 1.0  # sqrt(x)-scaled amplitude stays O(1)


def _suite_hilbert_quadrature():
    worst = 0.0
    for p in range(-15, 16):
        if p == 0 or p % 2 == 0:
            continue
        quad = specfun.gauss_legendre_quad(
            lambda t, p=p: math.sin(-p * t) / math.pi, 0.0, math.pi, nodes=64
        )
        worst = max(worst, abs(specfun.hilbert_bessel_at_zero(p) - quad))
    return worst, 1e-8


def _suite_cap_consistency():
    worst = 0.0
    for p in range(1, 16, 2):
        ratio = specfun.hilbert_bessel_at_zero(p) / specfun.cap_integral(0.0, p)
        worst = max(worst, abs(ratio + 2.0 / math.pi))
    return worst, 1e-14


def _suite_wigner_cross_path(inject_sign_flip: bool = False):
    worst = 0.0
    for n in range(2, 32):
        rep = spinrep.SpinRep(n)
        d_eig = spinrep.wigner_d_pi_half(rep)
        if inject_sign_flip:
            d_eig = d_eig.copy()
            d_eig[:, min(1, n - 1)] *= -1.0
        worst = max(worst, float(np.max(np.abs(d_eig - wigner_sum_matrix(rep)))))
    return worst, 1e-8


def _suite_wigner_matrix_invariants():
    worst = 0.0
    for n in (2, 3, 12, 31, 101, 103):
        rep = spinrep.SpinRep(n)
        d = spinrep.wigner_d_pi_half(rep)
        worst = max(worst, float(np.max(np.abs(d.T @ d - np.eye(n)))))
        # d_{-m',-m}(theta) = (-1)^{m'-m} d_{m',m}(theta)
        signs = np.array([(-1.0) ** ((w.twice - rep.weights[0].twice) // 2) for w in rep.weights])
        parity = signs[:, None] * signs[None, :] * d
        worst = max(worst, float(np.max(np.abs(d[::-1, ::-1] - parity))))
        # d_{m',m}(theta + pi) = (-1)^{j-m} d_{m',-m}(theta) at theta = pi/2
        tj = rep.j.twice
        d32 = np.array(
            [
                [spinrep.wigner_d_theta(rep, mp, m, 3 * math.pi / 2) for m in rep.weights]
                for mp in rep.weights
            ]
        )
        sg = np.array([(-1.0) ** ((tj - w.twice) // 2) for w in rep.weights])
        worst = max(worst, float(np.max(np.abs(d32 - sg[None, :] * d[:, ::-1]))))
    return worst, 1e-10


def _suite_projection_properties():
    worst = 0.0
    for n in (2, 3, 10, 31, 64):
        rep = spinrep.SpinRep(n)
        for a in (0.0, 0.3, 0.7):
            p = spinrep.projection_x(rep, a)
            worst = max(worst, float(np.max(np.abs(p - p.T))))
            worst = max(worst, float(np.max(np.abs(p @ p - p))))
            expected = sum(1 for w in rep.weights if spinrep.weight_exceeds(w.twice, a, n))
            worst = max(worst, abs(float(np.trace(p)) - expected))
    return worst, 1e-9


def _suite_projection_cross_path():
    worst = 0.0
    for n in range(2, 32):
        rep = spinrep.SpinRep(n)
        for a in (0.0, 0.3, 0.7):
            diff = spinrep.projection_x(rep, a) - projection_from_sum(rep, a)
            worst = max(worst, float(np.max(np.abs(diff))))
    return worst, 1e-8


def _suite_hilbert_formula():
    worst = 0.0
    for n in range(2, 32):
        worst = max(worst, spinrep.verify_hilbert_formula(spinrep.SpinRep(n)))
    return worst, 1e-9


def _suite_hankel_truncations():
    worst = 0.0
    prev = 0.0
    for n in (1, 2, 3, 4, 8, 16, 32, 64, 128):
        v = hankel.truncated_norm(hankel.HALF_CIRCLE, n)
        worst = max(worst, prev - v)          # monotone
        worst = max(worst, v - (0.5 + 1e-12))  # bounded by the certificate
        prev = v
    h = hankel.hankel_truncation(hankel.HALF_CIRCLE, 32)
    k = np.arange(1, 33)
    even_antidiag = (np.add.outer(k, k) - 1) % 2 == 0
    worst = max(worst, float(np.max(np.abs(h[even_antidiag]))))  # exact zeros
    return worst, 0.0


def _suite_certificates():
    worst = abs(hankel.nehari_bound(hankel.HALF_CIRCLE) - 0.5)
    worst = max(worst, abs(hankel.power_essential_radius(hankel.HALF_CIRCLE) - 0.5))
    for a in (0.3, 1 / math.sqrt(2), 0.9):
        sym = hankel.ArcSymbol(a)
        worst = max(worst, hankel.power_essential_radius(sym) - hankel.nehari_bound(sym))
    return worst, 0.0


def _suite_universal_bound():
    reports = [
        models.su2_commutator(9),
        models.su2_commutator(12, 0.3, 0.6),
        models.su2_caps_commutator(17, 0.5),
        models.ring_commutator(24, 16),
        models.heisenberg_commutator(14),
        models.se2_commutator(12),
    ]
    worst = max(r.norm - (0.5 + 1e-10) for r in reports)
    return max(worst, 0.0), 0.0


def _suite_su2_block_structure():
    worst = max(models.su2_commutator(n).block_check for n in (2, 5, 8, 31))
    return worst, 0.0


def _suite_ring_exact_identity():
    worst = 0.0
    for n, size in ((64, 15), (101, 25)):
        sub = models.ring_submatrix(n, size)
        target = hankel.hankel_truncation(hankel.HALF_CIRCLE, size)
        if not np.array_equal(-sub, target):
            worst = max(worst, float(np.max(np.abs(-sub - target))), np.inf)
    return worst, 0.0


def _suite_heisenberg_closed_form():
    worst = max(
        models.heisenberg_commutator(n).diagnostics["closed_form_residual"]
        for n in (2, 5, 12, 33)
    )
    return worst, 1e-12


def _suite_se2_block_identity():
    worst = 0.0
    for window in (8, 64):
        r = models.se2_commutator(window)
        worst = max(worst, r.block_check)
        target = hankel.hankel_truncation(hankel.HALF_CIRCLE, window + 1)[:window, :]
        if not np.array_equal(r.submatrix, target):
            worst = max(worst, np.inf)
    return worst, 1e-12


def run_validation(inject_sign_flip: bool = False) -> dict:
    """Run every suite; returns a JSON-ready report."""
    suites = [
        ("linalg.operator_norm_symmetries", _suite_operator_norm_symmetries),
        ("linalg.tridiag_reconstruction", _suite_tridiag_reconstruction),
        ("linalg.projection_commutator_bound", _suite_projection_commutator_bound),
        ("specfun.bessel_series_vs_integral", _suite_bessel_series_vs_integral),
        ("specfun.bessel_decay", _suite_bessel_decay),
        ("specfun.hilbert_quadrature", _suite_hilbert_quadrature),
        ("specfun.cap_consistency", _suite_cap_consistency),
        (
            "spinrep.wigner_cross_path",
            lambda: _suite_wigner_cross_path(inject_sign_flip),
        ),
        ("spinrep.wigner_matrix_invariants", _suite_wigner_matrix_invariants),
        ("spinrep.projection_properties", _suite_projection_properties),
        ("spinrep.projection_cross_path", _suite_projection_cross_path),
        ("spinrep.hilbert_formula", _suite_hilbert_formula),
        ("hankel.truncation_monotone_bounded", _suite_hankel_truncations),
        ("hankel.certificates", _suite_certificates),
        ("models.universal_bound", _suite_universal_bound),
        ("models.su2_block_structure", _suite_su2_block_structure),
        ("models.ring_exact_identity", _suite_ring_exact_identity),
        ("models.heisenberg_closed_form", _suite_heisenberg_closed_form),
        ("models.se2_block_identity", _suite_se2_block_identity),
    ]
    results = []
    for name, fn in suites:
        try:
            residual, tolerance = fn()
            status = "pass" if residual <= tolerance else "fail"
            results.append(
                {
                    "name": name,
                    "status": status,
                    "residual": float(residual),
                    "tolerance": float(tolerance),
                }
            )
        except Exception as exc:  # a crashed suite is a failed suite
            results.append(
                {
                    "name": name,
                    "status": "fail",
                    "residual": float("inf"),
                    "tolerance": 0.0,
                    "error": f"{type(exc).__name__}: {exc}",
                }
            )
    return {
        "schema_version": SCHEMA_VERSION,
        "all_pass": all(r["status"] == "pass" for r in results),
        "suites": results,
    }
