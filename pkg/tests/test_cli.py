import json
import math

import numpy as np
import pytest

from speclab.cli import main, regress_rows

HEADER = "family,n,a,b,norm,n_mod_4,wall_ms"


def run(args):
    return main(list(args))


def test_norms_header_and_format(tmp_path):
    out = tmp_path / "norms.csv"
    assert run(["norms", "--family", "su2", "--n-start", "2", "--n-stop", "8", "--out", str(out)]) == 0
    raw = out.read_bytes()
    assert b"\r" not in raw
    assert raw.endswith(b"\n")
    lines = raw.decode().splitlines()
    assert lines[0] == HEADER
    assert len(lines) == 8
    for line in lines[1:]:
        family, n, a, b, norm, mod4, wall = line.split(",")
        assert family == "su2"
        assert int(mod4) == int(n) % 4
        assert wall == "0"
        assert float(norm) <= 0.5 + 1e-9
    # norms carry 17 significant digits
    norm_field = lines[2].split(",")[4]
    assert len(norm_field.replace("-", "").replace(".", "").lstrip("0")) >= 16


def test_norms_exact_half_rows(tmp_path):
    out = tmp_path / "ladder.csv"
    run(["norms", "--family", "su2", "--n-start", "2", "--n-stop", "12", "--out", str(out)])
    for line in out.read_text().splitlines()[1:]:
        parts = line.split(",")
        if int(parts[1]) % 4 == 2:
            assert abs(float(parts[4]) - 0.5) <= 1e-10


def test_norms_heisenberg_half_rows(tmp_path):
    out = tmp_path / "heis.csv"
    run(["norms", "--family", "heisenberg", "--n-start", "2", "--n-stop", "12", "--out", str(out)])
    for line in out.read_text().splitlines()[1:]:
        parts = line.split(",")
        if int(parts[1]) % 4 == 2:
            assert abs(float(parts[4]) - 0.5) <= 1e-10


def test_norms_idempotent_and_sidecar(tmp_path):
    out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
    args = ["norms", "--family", "su2", "--n-start", "2", "--n-stop", "20", "--n-step", "3"]
    run(args + ["--out", str(out1)])
    run(args + ["--out", str(out2)])
    assert out1.read_bytes() == out2.read_bytes()
    meta = json.loads((tmp_path / "a.csv.meta.json").read_text())
    assert meta["schema_version"] == 1
    assert "created_utc" in meta and "wall_ms_total" in meta


def test_norms_parallel_equals_serial(tmp_path):
    serial, parallel = tmp_path / "s.csv", tmp_path / "p.csv"
    base = ["norms", "--family", "su2", "--n-start", "2", "--n-stop", "14", "--a", "0,0.3"]
    run(base + ["--out", str(serial)])
    run(base + ["--jobs", "3", "--out", str(parallel)])
    assert serial.read_bytes() == parallel.read_bytes()


def test_norms_row_ordering(tmp_path):
    out = tmp_path / "o.csv"
    run([
        "norms", "--family", "su2_caps", "--n-start", "4", "--n-stop", "8", "--n-step", "2",
        "--a", "0.7,0.2", "--out", str(out),
    ])
    keys = []
    for line in out.read_text().splitlines()[1:]:
        parts = line.split(",")
        keys.append((int(parts[1]), float(parts[2]), float(parts[3])))
    assert keys == sorted(keys)


def test_config_file(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"schema_version": 1, "family": "su2", "n_start": 2, "n_stop": 6}))
    out1, out2 = tmp_path / "c1.csv", tmp_path / "c2.csv"
    assert run(["norms", "--config", str(cfg), "--out", str(out1)]) == 0
    run(["norms", "--family", "su2", "--n-start", "2", "--n-stop", "6", "--out", str(out2)])
    assert out1.read_bytes() == out2.read_bytes()
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"schema_version": 99}))
    assert run(["norms", "--config", str(bad), "--out", str(tmp_path / "x.csv")]) == 1


def test_exit_codes(tmp_path):
    assert run(["norms", "--n-start", "9", "--n-stop", "5", "--out", str(tmp_path / "e.csv")]) == 1
    assert run(["norms", "--n-stop", "4", "--out", "/nonexistent-dir/x.csv"]) == 2


def test_hankel_table(tmp_path):
    out = tmp_path / "h.csv"
    assert run(["hankel", "--N", "1,2,4,8,64", "--out", str(out)]) == 0
    rerun = tmp_path / "h2.csv"
    run(["hankel", "--N", "1,2,4,8,64", "--out", str(rerun)])
    assert out.read_bytes() == rerun.read_bytes()
    lines = out.read_text().splitlines()
    assert lines[0] == "a,N,truncated_norm,nehari_upper,power_lower"
    rows = [line.split(",") for line in lines[1:]]
    assert abs(float(rows[0][2]) - 0.31830988618379069) <= 1e-15
    vals = [float(r[2]) for r in rows]
    assert vals == sorted(vals)
    for r in rows:
        assert float(r[3]) == 0.5 and float(r[4]) == 0.5
        assert float(r[2]) <= 0.5


def test_regress_degenerate_on_exact_half_ladder(tmp_path):
    out = tmp_path / "l.csv"
    run(["norms", "--family", "su2", "--n-start", "2", "--n-stop", "30", "--out", str(out)])
    res = tmp_path / "r.json"
    assert run(["regress", "--csv", str(out), "--mod-residue", "2", "--out", str(res)]) == 0
    data = json.loads(res.read_text())
    assert data["degenerate"] is True
    assert data["reason"] == "exact half"


def test_regress_negative_slope(tmp_path):
    out = tmp_path / "l.csv"
    run(["norms", "--family", "su2", "--n-start", "4", "--n-stop", "120", "--n-step", "4", "--out", str(out)])
    res = tmp_path / "r.json"
    assert run(["regress", "--csv", str(out), "--mod-residue", "0", "--out", str(res)]) == 0
    data = json.loads(res.read_text())
    assert data["degenerate"] is False
    # frozen from an oracle run of this exact sweep: slope -0.27625
    assert abs(data["slope"] - (-0.27625388)) <= 1e-3
    assert 0.99 <= data["r2"] <= 1.0
    assert data["points_used"] == 30


def test_regress_two_points_interpolate(tmp_path):
    csv = tmp_path / "two.csv"
    csv.write_text(HEADER + "\nsu2,4,0,1,0.25,0,0\nsu2,8,0,1,0.3,0,0\n")
    res = tmp_path / "r.json"
    assert run(["regress", "--csv", str(csv), "--mod-residue", "0", "--out", str(res)]) == 0
    data = json.loads(res.read_text())
    assert data["points_used"] == 2
    assert abs(data["r2"] - 1.0) <= 1e-12


def test_regress_rows_contract():
    with pytest.raises(Exception):
        regress_rows([(4, 0.25)], 0)  # single usable row


def test_vectors_unit_norm_and_interior_max(tmp_path):
    out = tmp_path / "v.csv"
    svg = tmp_path / "v.svg"
    assert run([
        "vectors", "--family", "su2", "--n", "101", "--which", "max",
        "--out", str(out), "--svg", str(svg),
    ]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "m,modulus"
    moduli = np.array([float(line.split(",")[1]) for line in lines[1:]])
    assert len(moduli) == 101
    assert abs(np.sum(moduli**2) - 1.0) <= 1e-10
    # concentration away from the extreme weights
    k = int(np.argmax(moduli))
    assert 5 <= k <= 95
    assert svg.read_text().startswith("<svg")


def test_vectors_deterministic(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    run(["vectors", "--family", "heisenberg", "--n", "21", "--out", str(a)])
    run(["vectors", "--family", "heisenberg", "--n", "21", "--out", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_validate_report(tmp_path):
    out = tmp_path / "val.json"
    assert run(["validate", "--out", str(out)]) == 0
    report = json.loads(out.read_text())
    assert report["schema_version"] == 1
    assert report["all_pass"] is True
    names = {s["name"] for s in report["suites"]}
    assert {
        "spinrep.wigner_cross_path",
        "spinrep.hilbert_formula",
        "hankel.certificates",
        "models.ring_exact_identity",
        "models.se2_block_identity",
    } <= names
    for suite in report["suites"]:
        assert suite["status"] == "pass"
        assert suite["residual"] <= suite["tolerance"]


def test_validate_sign_flip_injection(tmp_path):
    out = tmp_path / "val.json"
    assert run(["validate", "--inject-sign-flip", "--out", str(out)]) == 3
    report = json.loads(out.read_text())
    failed = {s["name"] for s in report["suites"] if s["status"] == "fail"}
    assert failed == {"spinrep.wigner_cross_path"}
