import json
import subprocess
import sys
from pathlib import Path

import pytest

from cubenodal import cli, pleijel_cutoff
from cubenodal.nodal import NodalCount
from helpers import EIGENVALUE_TABLE

GOLDEN = Path(__file__).parent / "data" / "table_golden.md"


def run_cli(args):
    return subprocess.run(
        [sys.executable, "-m", "cubenodal", *args],
        capture_output=True,
        text=True,
    )


def run_main(args, capsys):
    code = cli.main(args)
    out = capsys.readouterr().out
    return code, out


def test_table_matches_golden_copy():
    result = run_cli(["table"])
    assert result.returncode == 0
    assert result.stdout == GOLDEN.read_text()


def test_table_json_matches_published_table(capsys):
    code, out = run_main(["table", "--format", "json"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["schema"] == 1
    got = [
        (g["k_min"], g["k_max"], g["value"], [tuple(r) for r in g["representatives"]])
        for g in data["groups"]
    ]
    expected = [(k0, k1, v, list(reps)) for k0, k1, v, reps in EIGENVALUE_TABLE]
    assert got == expected


def test_table_row_38(capsys):
    code, out = run_main(["table"], capsys)
    assert code == 0
    assert "| 79-87 | (1,1,6) & (2,3,5) | 38 |" in out


def test_table_small_lambda_max(capsys):
    code, out = run_main(["table", "--lambda-max", "6"], capsys)
    assert code == 0
    rows = [line for line in out.splitlines() if line.startswith("| ") and "---" not in line]
    assert len(rows) == 2 + 1  # header + two data rows


def test_table_csv_format(capsys):
    code, out = run_main(["table", "--format", "csv"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "k_min,k_max,eigenvalue,multiplicity,modes"
    assert lines[1] == "1,1,3,1,\"(1,1,1)\""
    assert len(lines) == 1 + len(EIGENVALUE_TABLE)


def test_table_general_box(capsys):
    code, out = run_main(
        ["table", "--box", "1.0,1.4142135623,2.2360679774", "--lambda-max", "20", "--format", "json"],
        capsys,
    )
    assert code == 0
    data = json.loads(out)
    assert all(g["multiplicity"] == 1 for g in data["groups"])


def test_unknown_format_is_usage_error():
    result = run_cli(["table", "--format", "xml"])
    assert result.returncode == 1
    assert "error" in result.stderr


def test_bad_box_is_usage_error():
    result = run_cli(["table", "--box", "1,0,-1"])
    assert result.returncode == 1


def test_screen_report(capsys):
    code, out = run_main(["screen"], capsys)
    assert code == 0
    assert "Candidates (Faber-Krahn at k_min): k = 1, 2, 5, 8, 12" in out
    assert "Surviving after symmetry: k = 1, 2, 8" in out
    assert "| 9 | 5-7 | 5.4000 | yes | even | 2 | 4 | yes |" in out
    assert "mu root = 6.97836" in out
    assert "lambda < 48.7" in out


def test_screen_json_roundtrips_exactly(capsys):
    code, out = run_main(["screen", "--format", "json"], capsys)
    assert code == 0
    data = json.loads(out)
    mu, cutoff = pleijel_cutoff()
    assert data["mu_root"] == mu
    assert data["lambda_cutoff"] == cutoff
    assert data["candidates"] == [1, 2, 5, 8, 12]
    assert data["survivors"] == [1, 2, 8]
    rec9 = next(r for r in data["records"] if r["value"] == 9)
    assert (rec9["parity"], rec9["j"], rec9["bound"]) == ("even", 2, 4)
    rec14 = next(r for r in data["records"] if r["value"] == 14)
    assert (rec14["parity"], rec14["j"], rec14["bound"]) == ("odd", 5, 10)
    reparsed = json.loads(json.dumps(data))
    assert reparsed == data


def test_nodal_ellipsoid_probe(capsys):
    code, out = run_main(
        [
            "nodal",
            "--mode", "1,1,3", "--mode", "3,1,1", "--mode", "1,3,1",
            "--coeffs", "0.1,0.1,0.8",
            "--resolution", "64",
        ],
        capsys,
    )
    assert code == 0
    data = json.loads(out)
    assert data["count"]["total"] == 3
    assert data["count"]["converged"] is True


def test_nodal_single_product_mode(capsys):
    code, out = run_main(
        ["nodal", "--mode", "2,3,4", "--coeffs", "1", "--resolution", "32"],
        capsys,
    )
    assert code == 0
    assert json.loads(out)["count"]["total"] == 24


def test_nodal_negated_ground_state(capsys):
    code, out = run_main(
        ["nodal", "--mode", "1,1,1", "--coeffs", "-1", "--resolution", "16"],
        capsys,
    )
    assert code == 0
    data = json.loads(out)
    assert data["count"]["total"] == 1
    assert data["count"]["negative_components"] == 1


def test_nodal_usage_errors(capsys):
    code, _ = run_main(["nodal", "--mode", "1,1,1", "--mode", "1,1,2", "--coeffs", "1,1"], capsys)
    assert code == 1
    code, _ = run_main(["nodal", "--mode", "1,1,2", "--coeffs", "0"], capsys)
    assert code == 1
    code, _ = run_main(["nodal", "--mode", "1,1,2", "--coeffs", "1,2"], capsys)
    assert code == 1
    code, _ = run_main(["nodal", "--coeffs", "1"], capsys)
    assert code == 1


def test_nodal_nonconverged_exits_with_warning(capsys, monkeypatch):
    fake = NodalCount(2, 1, 0, 512, False)
    monkeypatch.setattr(cli, "count_nodal_domains", lambda *a, **k: fake)
    code, out = run_main(
        ["nodal", "--mode", "1,1,1", "--coeffs", "1"],
        capsys,
    )
    assert code == 2
    assert json.loads(out)["count"]["converged"] is False


def test_sweep_json_deterministic():
    args = ["sweep", "--value", "6", "--samples", "6", "--resolution", "32",
            "--seed", "9", "--format", "json"]
    first = run_cli(args)
    second = run_cli(args)
    assert first.returncode == 0
    assert first.stdout == second.stdout
    other = run_cli(args[:-3] + ["7", "--format", "json"])
    assert other.stdout != first.stdout


def test_sweep_value_must_be_eigenvalue(capsys):
    code, _ = run_main(["sweep", "--value", "10"], capsys)
    assert code == 1


def test_out_writes_file(tmp_path):
    target = tmp_path / "report.md"
    result = run_cli(["table", "--out", str(target)])
    assert result.returncode == 0
    assert result.stdout == ""
    assert target.read_text() == GOLDEN.read_text()


def test_verdict_small_run(capsys):
    code, out = run_main(
        ["verdict", "--samples", "25", "--resolution", "48", "--seed", "2"],
        capsys,
    )
    assert code == 0
    assert "Courant sharp: k=1 (lambda=3), k=2 (lambda=6)" in out
    assert "not Courant sharp" in out


def test_verdict_json_fields(capsys):
    code, out = run_main(
        ["verdict", "--samples", "20", "--resolution", "48", "--seed", "2",
         "--format", "json"],
        capsys,
    )
    assert code == 0
    data = json.loads(out)
    assert data["courant_sharp"] == [1, 2]
    sweep = data["eigenspace_sweep"]
    assert sweep["value"] == 11
    assert sweep["k_min"] == 8
    assert set(sweep["histogram"]) <= {"2", "3", "4"}
    assert sweep["predictor_mismatches"] == 0
    assert data["warnings"] == []
