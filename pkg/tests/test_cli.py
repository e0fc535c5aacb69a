import csv
import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from reject_lab.cli import main

GOLDEN = Path(__file__).parent / "golden"

RUN_CASES = [
    (preset, mode, reject)
    for preset in ("example1", "example2", "example3", "example4")
    for mode in ("bayes", "mi")
    for reject in ("reject", "no-reject")
    if not (mode == "bayes" and reject == "reject" and preset in ("example2", "example3"))
]


def run_cli(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def rows_of(text):
    return list(csv.DictReader(io.StringIO(text)))


@pytest.mark.parametrize("preset,mode,reject", RUN_CASES)
def test_run_matches_golden(preset, mode, reject, capsys, monkeypatch):
    monkeypatch.delenv("REJECT_LAB_SEED", raising=False)
    code, out, _ = run_cli(["run", "--preset", preset, "--mode", mode, f"--{reject}"], capsys)
    assert code == 0
    assert out == (GOLDEN / f"run_{preset}_{mode}_{reject}.csv").read_text(encoding="utf-8")


@pytest.mark.parametrize(
    "argv,golden",
    [
        (["sweep"], "sweep_example2.csv"),
        (["bounds"], "bounds.csv"),
        (["redundancy", "--preset", "example1"], "redundancy_example1.csv"),
    ],
)
def test_tables_match_golden(argv, golden, capsys):
    code, out, _ = run_cli(argv, capsys)
    assert code == 0
    assert out == (GOLDEN / golden).read_text(encoding="utf-8")


def test_run_row_values(capsys):
    _, out, _ = run_cli(["run", "--preset", "example1", "--mode", "bayes", "--reject"], capsys)
    (row,) = rows_of(out)
    assert (row["e"], row["rej"], row["ni"]) == ("0.155293", "0.167159", "0.285374")
    _, out, _ = run_cli(["run", "--preset", "example3", "--mode", "mi", "--no-reject"], capsys)
    (row,) = rows_of(out)
    assert abs(float(row["e"]) - 0.514) < 2e-3 and abs(float(row["ni"]) - 0.0803) < 2e-3
    assert row["xb3"] == "" and row["xb4"] == ""


def test_lf_line_endings(tmp_path, capsys):
    out = tmp_path / "o.csv"
    assert main(["run", "--preset", "example1", "--out", str(out)]) == 0
    data = out.read_bytes()
    assert b"\r" not in data and data.endswith(b"\n")


def test_sweep_rows(capsys):
    _, out, _ = run_cli(["sweep"], capsys)
    rows = rows_of(out)
    assert len(rows) == 14
    assert [r["classifier"] for r in rows] == ["bayes"] * 7 + ["mi"] * 7
    bayes1, mi1 = rows[0], rows[7]
    assert {k: v for k, v in bayes1.items() if k != "classifier"} == {k: v for k, v in mi1.items() if k != "classifier"}


def test_sweep_reciprocal_ratio(capsys):
    _, out, _ = run_cli(["sweep", "--ratios", "2,0.5"], capsys)
    rows = [r for r in rows_of(out) if r["classifier"] == "bayes"]
    assert rows[0]["e1"] == rows[1]["e2"] and rows[0]["e2"] == rows[1]["e1"]
    assert float(rows[0]["xb"]) == pytest.approx(-float(rows[1]["xb"]), abs=1e-5)


def test_bounds_rows(capsys):
    _, out, _ = run_cli(["bounds"], capsys)
    rows = rows_of(out)
    assert len(rows) == 15
    assert all(r["lb_ok"] == "true" for r in rows)
    last = rows[-1]
    assert last["label"].startswith("example3") and last["classifier"] == "mi"
    assert last["ub_violated"] == "true" and last["const_ub_violated"] == "true"
    assert last["kovalevskij_violated"] == "true"


def test_redundancy_count(capsys):
    code, out, _ = run_cli(["redundancy", "--preset", "example1", "--count", "4"], capsys)
    rows = rows_of(out)
    assert code == 0 and len(rows) == 4
    assert len({r["xb1"] for r in rows}) == 1 and len({r["l21"] for r in rows}) == 4


def test_threshold_sum_exit_3(capsys):
    code, _, err = run_cli(["run", "--preset", "example1", "--reject", "--tr1", "0.6", "--tr2", "0.6"], capsys)
    assert code == 3 and "Tr1 + Tr2" in err


def test_missing_reject_costs_exit_3(capsys):
    code, _, err = run_cli(["run", "--preset", "example3", "--mode", "bayes", "--reject"], capsys)
    assert code == 3 and "reject costs" in err


def test_bad_flag_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["run", "--preset", "example1", "--bogus"])
    assert info.value.code == 2


def test_bad_config_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    assert main(["run", "--config", str(bad)]) == 2
    two = tmp_path / "two.json"
    two.write_text(json.dumps({"model": {"family": "gaussian", "mu1": 0, "sigma1": 1, "mu2": 1, "sigma2": 1},
                               "policy": {"mi": True, "thresholds": [0.2, 0.2]}}), encoding="utf-8")
    assert main(["run", "--config", str(two)]) == 2


def test_config_constraint_exit_3(tmp_path, capsys):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"model": {"family": "gaussian", "mu1": -1, "sigma1": 2, "mu2": 1, "sigma2": 1},
                               "policy": {"thresholds": [0.7, 0.5]}, "reject_option": True}), encoding="utf-8")
    assert main(["run", "--config", str(cfg)]) == 3


def test_config_file_run(tmp_path, capsys):
    cfg = tmp_path / "ex1.json"
    out = tmp_path / "ex1.csv"
    cfg.write_text(json.dumps({
        "model": {"family": "gaussian", "mu1": -1, "sigma1": 2, "mu2": 1, "sigma2": 1, "p1": 0.5},
        "policy": {"costs": [[0, 1.2, 0.2], [1, 0, 0.6]]},
        "reject_option": True,
        "oracle": {"enabled": True, "n": 20000, "seed": 3},
        "output": {"format": "csv", "path": str(out)},
    }), encoding="utf-8")
    assert main(["run", "--config", str(cfg)]) == 0
    rows = rows_of(out.read_text(encoding="utf-8"))
    assert [r["classifier"] for r in rows] == ["bayes", "bayes_empirical"]
    assert rows[0]["case"] == "ex1" and rows[0]["e"] == "0.155293"


def test_oracle_command_and_env_seed(capsys, monkeypatch):
    argv = ["oracle", "--preset", "example1", "--mode", "bayes", "--reject", "--oracle-n", "50000", "--seed", "1"]
    code, by_flag, err = run_cli(argv, capsys)
    assert code == 0 and "within" in err
    monkeypatch.setenv("REJECT_LAB_SEED", "99")
    _, by_env, _ = run_cli(argv, capsys)
    _, by_env_again, _ = run_cli(argv[:-2] + ["--seed", "5"], capsys)
    assert by_env != by_flag and by_env == by_env_again


def test_bad_env_seed(capsys, monkeypatch):
    monkeypatch.setenv("REJECT_LAB_SEED", "abc")
    assert main(["run", "--preset", "example1", "--oracle-n", "10"]) == 2


def test_console_script(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "reject_lab.cli", "run", "--preset", "example4", "--mode", "mi", "--reject"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == (GOLDEN / "run_example4_mi_reject.csv").read_text(encoding="utf-8")
