"""Command-line front end: parameter sweeps, truncation tables, regression,
eigenvector export, and the validation report.

Data files are byte-reproducible: rows are computed (possibly in parallel),
sorted canonically, and written with floats at 17 significant digits and LF
line endings.  The wall_ms column is therefore a fixed 0 placeholder; real
timings and timestamps live in the ``<out>.meta.json`` sidecar, which is the
only file allowed to differ between identical runs.

Exit codes: 0 ok, 1 contract error, 2 I/O error, 3 validation failure.
"""

from __future__ import annotations

import argparse
import datetime
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from ._errors import ComputationError, ContractError
from .hankel import ArcSymbol, nehari_bound, power_essential_radius, truncated_norm
from .linalg import DEFAULT_SEED
from .models import (
    extremal_vector,
    heisenberg_commutator,
    heisenberg_commutator_shifted,
    ring_commutator,
    ring_commutator_shifted,
    se2_commutator,
    su2_caps_commutator,
    su2_commutator,
)
from .validate import run_validation

NORMS_HEADER = "family,n,a,b,norm,n_mod_4,wall_ms"
HANKEL_HEADER = "a,N,truncated_norm,nehari_upper,power_lower"
FAMILIES = ("su2", "su2_interval", "su2_caps", "ring", "heisenberg", "se2")
HALF_SLACK = 1e-10  # rows this close to 1/2 count as exactly half in regression


def _fmt(x: float) -> str:
    return f"{float(x):.17g}"


def _write_text(path: str, text: str) -> None:
    with open(path, "w", newline="") as fh:
        fh.write(text)


def _sidecar(path: str, payload: dict) -> None:
    payload = dict(payload)
    payload["schema_version"] = 1
    payload["created_utc"] = datetime.datetime.now(datetime.timezone.utc).isoformat()
    _write_text(path + ".meta.json", json.dumps(payload, indent=2) + "\n")


# ---------------------------------------------------------------------------
# norms sweep
# ---------------------------------------------------------------------------

def _norm_point(task):
    """Worker for one sweep point; returns (csv key, row dict, wall ms)."""
    family, n, a, b = task
    t0 = time.perf_counter()
    if family in ("su2", "su2_interval"):
        report = su2_commutator(n, a, b)
    elif family == "su2_caps":
        report = su2_caps_commutator(n, a)
    elif family == "ring":
        report = ring_commutator(n, n) if a == 0.0 else ring_commutator_shifted(n, n, a)
    elif family == "heisenberg":
        report = (
            heisenberg_commutator(n) if a == 0.0 else heisenberg_commutator_shifted(n, a)
        )
    elif family == "se2":
        report = se2_commutator(n)
    else:
        raise ContractError(f"unknown family {family!r}")
    wall_ms = int(round(1000 * (time.perf_counter() - t0)))
    if family == "su2_caps":
        a_out, b_out = a, a          # both projections thresholded at a
    elif family in ("ring", "heisenberg"):
        a_out, b_out = a, 0.0
    elif family == "se2":
        a_out, b_out = 0.0, 0.0
    else:
        a_out, b_out = a, b
    row = {
        "family": report.family,
        "n": n,
        "a": a_out,
        "b": b_out,
        "norm": report.norm,
        "n_mod_4": n % 4,
    }
    return (n, a_out, b_out), row, wall_ms


MAX_SWEEP_N = 2048  # keeps desk-scale runtimes; one dense eigensolve per point


def _sweep_tasks(args) -> list:
    ns = list(range(args.n_start, args.n_stop + 1, args.n_step))
    if not ns:
        raise ContractError("empty n range")
    if ns[-1] > MAX_SWEEP_N:
        raise ContractError(f"sweep cap is n <= {MAX_SWEEP_N}, got {ns[-1]}")
    a_list = args.a if args.a else [0.0]
    b_list = args.b if args.b else [1.0]
    if args.family in ("ring", "heisenberg", "se2", "su2_caps"):
        b_list = [1.0]
    if args.family == "se2":
        a_list = [0.0]
    return [(args.family, n, a, b) for n in ns for a in a_list for b in b_list]


def cmd_norms(args) -> int:
    tasks = _sweep_tasks(args)
    t0 = time.perf_counter()
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_norm_point, tasks, chunksize=1))
    else:
        results = [_norm_point(t) for t in tasks]
    results.sort(key=lambda r: r[0])
    lines = [NORMS_HEADER]
    for _, row, _ in results:
        lines.append(
            ",".join(
                [
                    row["family"],
                    str(row["n"]),
                    _fmt(row["a"]),
                    _fmt(row["b"]),
                    _fmt(row["norm"]),
                    str(row["n_mod_4"]),
                    "0",
                ]
            )
        )
    _write_text(args.out, "\n".join(lines) + "\n")
    _sidecar(
        args.out,
        {
            "command": "norms",
            "family": args.family,
            "seed": DEFAULT_SEED,
            "jobs": args.jobs,
            "wall_ms_total": int(round(1000 * (time.perf_counter() - t0))),
            "wall_ms_points": [r[2] for r in results],
        },
    )
    return 0


# ---------------------------------------------------------------------------
# hankel table
# ---------------------------------------------------------------------------

def cmd_hankel(args) -> int:
    sizes = args.N if args.N else [1, 2, 4, 8, 16, 32, 64, 128, 256, 512]
    a_list = args.a if args.a else [0.0]
    t0 = time.perf_counter()
    lines = [HANKEL_HEADER]
    for a in sorted(a_list):
        sym = ArcSymbol(a)
        upper = nehari_bound(sym)
        lower = power_essential_radius(sym)
        for n in sorted(sizes):
            lines.append(
                ",".join([_fmt(a), str(n), _fmt(truncated_norm(sym, n)), _fmt(upper), _fmt(lower)])
            )
    _write_text(args.out, "\n".join(lines) + "\n")
    _sidecar(
        args.out,
        {
            "command": "hankel",
            "wall_ms_total": int(round(1000 * (time.perf_counter() - t0))),
        },
    )
    return 0


# ---------------------------------------------------------------------------
# regression
# ---------------------------------------------------------------------------

def regress_rows(rows, residue: int) -> dict:
    """Least squares of ln(1/2 - norm) against ln(n) on an n mod 4 class."""
    picked = [(n, norm) for n, norm in rows if n % 4 == residue]
    if not picked:
        raise ContractError(f"no rows with n = {residue} mod 4")
    usable = [(n, norm) for n, norm in picked if 0.5 - norm > HALF_SLACK]
    if not usable:
        return {
            "schema_version": 1,
            "degenerate": True,
            "reason": "exact half",
            "points_used": 0,
        }
    if len(usable) < 2:
        raise ContractError("need at least 2 rows below 1/2 to regress")
    x = np.log([n for n, _ in usable])
    y = np.log([0.5 - norm for _, norm in usable])
    design = np.vstack([x, np.ones(len(x))]).T
    (slope, intercept), *_ = np.linalg.lstsq(design, y, rcond=None)
    fitted = design @ [slope, intercept]
    ss_res = float(np.sum((y - fitted) ** 2))
    ss_tot = float(np.sum((y - np.mean(y)) ** 2))
    r2 = 1.0 if ss_tot == 0.0 else 1.0 - ss_res / ss_tot
    return {
        "schema_version": 1,
        "degenerate": False,
        "slope": float(slope),
        "intercept": float(intercept),
        "r2": float(min(max(r2, 0.0), 1.0)),
        "points_used": len(usable),
    }


def _read_norms_csv(path: str):
    with open(path, "r", newline="") as fh:
        header = fh.readline().strip()
        if header != NORMS_HEADER:
            raise ContractError(f"unexpected CSV header {header!r}")
        rows = []
        for line in fh:
            parts = line.strip().split(",")
            if len(parts) != 7:
                raise ContractError(f"malformed CSV row: {line!r}")
            rows.append((int(parts[1]), float(parts[4])))
    return rows

def cmd_regress(args) -> int:
    result = regress_rows(_read_norms_csv(args.csv), args.mod_residue)
    text = json.dumps(result, indent=2) + "\n"
    if args.out:
        _write_text(args.out, text)
    else:
        sys.stdout.write(text)
    return 0


# ---------------------------------------------------------------------------
# extremal vectors
# ---------------------------------------------------------------------------

def _vector_labels(family: str, n: int):
    if family in ("su2", "su2_interval", "su2_caps"):
        return [(n - 1 - 2 * i) / 2.0 for i in range(n)]
    if family in ("ring", "se2"):
        return list(range(-n, n + 1))
    return list(range(n))


def cmd_vectors(args) -> int:
    a = args.a[0] if args.a else 0.0
    if args.family in ("su2", "su2_interval"):
        report = su2_commutator(args.n, a, args.b[0] if args.b else 1.0)
    elif args.family == "su2_caps":
        report = su2_caps_commutator(args.n, a)
    elif args.family == "ring":
        report = ring_commutator(args.n, args.n)
    elif args.family == "heisenberg":
        report = heisenberg_commutator(args.n)
    elif args.family == "se2":
        report = se2_commutator(args.n)
    else:
        raise ContractError(f"unknown family {args.family!r}")
    vec = extremal_vector(report, args.which)
    labels = _vector_labels(args.family, args.n)
    moduli = np.abs(vec.coefficients)
    lines = ["m,modulus"]
    for label, mod in zip(labels, moduli):
        lines.append(f"{_fmt(label)},{_fmt(mod)}")
    _write_text(args.out, "\n".join(lines) + "\n")
    _sidecar(
        args.out,
        {
            "command": "vectors",
            "family": args.family,
            "n": args.n,
            "which": args.which,
            "norm": report.norm,
            "extremal_value": vec.value,
            "degenerate_gap": vec.degenerate,
        },
    )
    if args.svg:
        _write_text(args.svg, _svg_bars(labels, moduli, f"{args.family} n={args.n} {args.which}"))
    return 0


def _svg_bars(labels, heights, title: str) -> str:
    """Minimal dependency-free bar rendering of |coefficient| against index."""
    width, height, pad = 900, 300, 40
    n = len(heights)
    top = max(float(max(heights)), 1e-12)
    bar_w = (width - 2 * pad) / n
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">',
        f'<text x="{pad}" y="20" font-size="13">{title}</text>',
        f'<line x1="{pad}" y1="{height - pad}" x2="{width - pad}" y2="{height - pad}" stroke="black"/>',
    ]
    for i, h in enumerate(heights):
        hh = (height - 2 * pad) * float(h) / top
        x = pad + i * bar_w
        parts.append(
            f'<rect x="{x:.2f}" y="{height - pad - hh:.2f}" width="{max(bar_w - 1, 0.5):.2f}" '
            f'height="{hh:.2f}" fill="steelblue"/>'
        )
    parts.append(
        f'<text x="{pad}" y="{height - pad + 16}" font-size="11">{_fmt(labels[0])}</text>'
    )
    parts.append(
        f'<text x="{width - pad - 30}" y="{height - pad + 16}" font-size="11">{_fmt(labels[-1])}</text>'
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

def cmd_validate(args) -> int:
    report = run_validation(inject_sign_flip=args.inject_sign_flip)
    text = json.dumps(report, indent=2) + "\n"
    if args.out:
        _write_text(args.out, text)
    else:
        sys.stdout.write(text)
    return 0 if report["all_pass"] else 3


# ---------------------------------------------------------------------------
# argument plumbing
# ---------------------------------------------------------------------------

def _float_list(text: str):
    return [float(tok) for tok in text.split(",") if tok != ""]


def _int_list(text: str):
    return [int(tok) for tok in text.split(",") if tok != ""]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="speclab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    norms = sub.add_parser("norms", help="sweep commutator norms to CSV")
    norms.add_argument("--family", choices=FAMILIES, default=None)
    norms.add_argument("--n-start", type=int, default=None)
    norms.add_argument("--n-stop", type=int, default=None)
    norms.add_argument("--n-step", type=int, default=None)
    norms.add_argument("--a", type=_float_list, default=None, help="comma list of thresholds")
    norms.add_argument("--b", type=_float_list, default=None, help="comma list of z-side widths")
    norms.add_argument("--out", required=True)
    norms.add_argument("--jobs", type=int, default=None)
    norms.add_argument("--config", default=None, help="JSON config supplying defaults")
    norms.set_defaults(
        func=cmd_norms,
        _fallbacks={"family": "su2", "n_start": 2, "n_stop": 32, "n_step": 1, "jobs": 1},
    )

    hank = sub.add_parser("hankel", help="truncated Hankel norms and certificates")
    hank.add_argument("--N", type=_int_list, default=None, help="comma list of truncation sizes")
    hank.add_argument("--a", type=_float_list, default=None)
    hank.add_argument("--out", required=True)
    hank.add_argument("--config", default=None)
    hank.set_defaults(func=cmd_hankel)

    reg = sub.add_parser("regress", help="fit ln(1/2 - norm) against ln(n) on an n mod 4 class")
    reg.add_argument("--csv", required=True, help="CSV produced by the norms command")
    reg.add_argument("--mod-residue", type=int, choices=(0, 1, 2, 3), required=True)
    reg.add_argument("--out", default=None)
    reg.set_defaults(func=cmd_regress)

    vec = sub.add_parser("vectors", help="export extremal-vector coefficient moduli")
    vec.add_argument("--family", choices=FAMILIES, default="su2")
    vec.add_argument("--n", type=int, required=True)
    vec.add_argument("--a", type=_float_list, default=None)
    vec.add_argument("--b", type=_float_list, default=None)
    vec.add_argument("--which", choices=("max", "min"), default="max")
    vec.add_argument("--out", required=True)
    vec.add_argument("--svg", default=None)
    vec.set_defaults(func=cmd_vectors)

    val = sub.add_parser("validate", help="run invariant suites, emit JSON report")
    val.add_argument("--out", default=None)
    val.add_argument(
        "--inject-sign-flip",
        action="store_true",
        help="testing hook: corrupt one d-matrix column to prove the suite bites",
    )
    val.set_defaults(func=cmd_validate)
    return parser


def _apply_config(args) -> None:
    """Merge a JSON config under explicit flags, then fill hard defaults."""
    path = getattr(args, "config", None)
    if path:
        with open(path) as fh:
            cfg = json.load(fh)
        if cfg.get("schema_version") != 1:
            raise ContractError("config must carry schema_version 1")
        casts = {
            "a": lambda v: [float(x) for x in v],
            "b": lambda v: [float(x) for x in v],
            "N": lambda v: [int(x) for x in v],
        }
        for key, value in cfg.items():
            if key == "schema_version":
                continue
            attr = key.replace("-", "_")
            if not hasattr(args, attr):
                raise ContractError(f"config key {key!r} is not a recognized option")
            if getattr(args, attr) is None:
                setattr(args, attr, casts.get(attr, lambda v: v)(value))
    for attr, value in getattr(args, "_fallbacks", {}).items():
        if getattr(args, attr) is None:
            setattr(args, attr, value)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _apply_config(args)
        return args.func(args)
    except ContractError as exc:
        print(f"contract error: {exc}", file=sys.stderr)
        return 1
    except ComputationError as exc:
        print(f"computation error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
