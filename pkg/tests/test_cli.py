"""Command-line behavior: payload shapes, determinism, and exit codes."""

import json

import numpy as np
import pytest

import gwextropy as gx
from gwextropy.cli import run_command


def run_json(capsys, argv):
    code = run_command(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_measure_registry_case(capsys):
    code, payload = run_json(
        capsys,
        ["measure", "--dist", "uniform:0,1", "--weight", "power:1",
         "--variant", "past", "--design", "maxrssu", "--n", "2"],
    )
    assert code == 0
    assert payload["value"] == pytest.approx(-0.0208333, abs=1e-6)
    assert payload["closed_form"] == pytest.approx(payload["value"], rel=1e-8)
    assert payload["quadrature_error"] >= 0.0
    assert list(payload) == ["value", "closed_form", "quadrature_error"]


def test_measure_without_registry_entry(capsys):
    code, payload = run_json(
        capsys,
        ["measure", "--dist", "uniform:0,1", "--weight", "expdecay:1",
         "--variant", "residual"],
    )
    assert code == 0
    assert "closed_form" not in payload
    assert "quadrature_error" in payload


def test_measure_twelve_significant_digits(capsys):
    code, payload = run_json(
        capsys,
        ["measure", "--dist", "uniform:0,1", "--weight", "power:1", "--variant", "past"],
    )
    assert code == 0
    assert payload["value"] == float(f"{-0.125:.12g}")


def test_simulate_csv_and_reproducibility(tmp_path):
    out1 = tmp_path / "a.csv"
    out2 = tmp_path / "b.csv"
    argv = ["simulate", "--dist", "uniform:0,1", "--design", "minrssu",
            "--n", "4", "--seed", "123", "--out"]
    assert run_command(argv + [str(out1)]) == 0
    assert run_command(argv + [str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    lines = out1.read_text().splitlines()
    assert lines[0] == "i,value"
    assert len(lines) == 5
    sample = gx.draw_design(gx.uniform(), gx.MIN_RSSU, 4, 123)
    for row, expected in zip(lines[1:], sample.raw_order):
        i, value = row.split(",")
        assert float(value) == expected
    assert [int(r.split(",")[0]) for r in lines[1:]] == [1, 2, 3, 4]


def test_estimate_two_point_file(tmp_path, capsys):
    path = tmp_path / "two_points.csv"
    path.write_text("1\n2\n")
    code, payload = run_json(
        capsys,
        ["estimate", "--variant", "residual", "--m", "1", "--style", "step",
         "--input", str(path)],
    )
    assert code == 0
    assert payload["value"] == pytest.approx(-0.1875)
    assert payload["config"]["style"] == "step"
    assert payload["config"]["observations"] == 2


def test_estimate_accepts_indexed_rows_and_header(tmp_path, capsys):
    path = tmp_path / "indexed.csv"
    path.write_text("i,value\n1,0.0\n2,1.0\n3,2.0\n")
    code, payload = run_json(
        capsys,
        ["estimate", "--variant", "past", "--m", "1", "--input", str(path)],
    )
    assert code == 0
    assert payload["value"] == pytest.approx(-13 / 36)


def test_estimate_kernel_reports_bandwidth(tmp_path, capsys):
    path = tmp_path / "pts.csv"
    path.write_text("1\n2\n")
    code, payload = run_json(
        capsys,
        ["estimate", "--variant", "past", "--m", "1", "--style", "kernel",
         "--kernel", "gaussian", "--bandwidth", "0.5", "--input", str(path)],
    )
    assert code == 0
    assert payload["value"] == pytest.approx(-0.1875)
    assert payload["config"]["bandwidth_resolved"] == pytest.approx(0.5)


def test_verify_json_structure(tmp_path):
    out = tmp_path / "reports.json"
    assert run_command(["verify", "--out", str(out)]) == 0
    records = json.loads(out.read_text())
    assert records and isinstance(records, list)
    required = {"theorem_id", "subject", "hypotheses_checked",
                "conclusion_margin", "passed", "inconclusive", "note"}
    assert required <= set(records[0])
    # divergent comparisons serialize as strings, not JSON Infinity
    margins = [r["conclusion_margin"] for r in records]
    assert any(m == "inf" for m in margins)
    assert all(isinstance(m, (int, float)) or m in ("inf", "-inf", "nan") for m in margins)


def test_converge_ladder(tmp_path):
    out1 = tmp_path / "c1.csv"
    out2 = tmp_path / "c2.csv"
    argv = ["converge", "--dist", "uniform:0,1", "--m", "1", "--variant", "residual",
            "--design", "srs", "--sizes", "200,800", "--seeds", "9",
            "--seed", "7", "--out"]
    assert run_command(argv + [str(out1)]) == 0
    assert run_command(argv + [str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    lines = out1.read_text().splitlines()
    assert lines[0] == "sample_size,design,variant,estimate,truth,abs_err,rel_err,seed"
    rows = [line.split(",") for line in lines[1:]]
    assert len(rows) == 18
    sizes = [int(r[0]) for r in rows]
    seeds = [int(r[7]) for r in rows]
    assert sorted(zip(sizes, seeds)) == list(zip(sizes, seeds))
    for r in rows:
        estimate, truth, abs_err, rel_err = map(float, r[3:7])
        assert abs_err == abs(estimate - truth)
        assert rel_err == pytest.approx(abs_err / abs(truth), rel=1e-12)
        assert truth == pytest.approx(-1 / 24, rel=1e-8)
        assert r[1] == "srs" and r[2] == "residual"


def test_exit_codes(tmp_path, capsys):
    assert run_command(["nonsense"]) == 2
    assert run_command(["measure", "--dist", "uniform:0,1"]) == 2  # missing flags
    assert run_command(
        ["measure", "--dist", "norm:0,1", "--weight", "power:1", "--variant", "past"]
    ) == 2
    assert run_command(
        ["measure", "--dist", "exp:1", "--weight", "power:1", "--variant", "past"]
    ) == 3  # divergent integral
    path = tmp_path / "pts.csv"
    path.write_text("1\n2\n")
    assert run_command(
        ["estimate", "--variant", "past", "--input", str(path), "--bandwidth", "wide",
         "--style", "kernel"]
    ) == 2
    assert run_command(["estimate", "--variant", "past", "--input", str(tmp_path / "missing.csv")]) == 2
    capsys.readouterr()  # drain usage noise


def test_rejected_measure_combination(capsys):
    code = run_command(
        ["measure", "--dist", "uniform:0,1", "--weight", "power:1",
         "--variant", "past", "--design", "minrssu", "--n", "2"]
    )
    assert code == 2
    assert "error" in capsys.readouterr().err


def test_converge_rejects_single_design(capsys):
    code = run_command(
        ["converge", "--dist", "uniform:0,1", "--m", "1", "--variant", "residual",
         "--design", "single", "--sizes", "100", "--seeds", "2"]
    )
    assert code == 2
    capsys.readouterr()
