import csv
import json
import subprocess
import sys

import pytest

from bt1kit.cli import SWEEP_FIELDS, main, sweep_row


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eo_p2_d9(capsys):
    code, out, _ = run(capsys, "eo", "--p", "2", "--d", "9", "--format", "json")
    report = json.loads(out)
    assert code == 0
    assert report["es"]["psi"] == [0, 1, 1, 2]
    assert report["words"] == "fv,fffvvv"


def test_eo_superspecial(capsys):
    code, out, _ = run(capsys, "eo", "--p", "7", "--d", "8")
    assert code == 0
    assert "psi: [0, 0, 0]" in out
    assert "superspecial" in out


def test_eo_rational_warns(capsys):
    code, out, err = run(capsys, "eo", "--p", "3", "--d", "2", "--format", "json")
    assert code == 0
    assert json.loads(out)["es"]["psi"] == []
    assert "rational" in err


def test_eo_full_fermat(capsys):
    code, out, _ = run(capsys, "eo", "--p", "2", "--d", "5", "--full-fermat", "--format", "json")
    report = json.loads(out)
    assert code == 0 and report["genus"] == 6 and report["invariants"]["g"] == 6


@pytest.mark.parametrize("argv", [["eo", "--p", "4", "--d", "9"], ["eo", "--p", "3", "--d", "9"],
                                  ["classify", "--words", "fx"], ["verify", "--suite", "nope"]])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("error:")


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["eo", "--p", "x"])
    assert exc.value.code == 2


@pytest.mark.parametrize(
    "words, psi, extra",
    [("fv,ffvv", [0, 0, 1], {"a": 2, "s11": 1, "u11": 2}), ("ffvfvvfv", [0, 0, 1, 1], {}), ("fv^3", [0, 0, 0], {})],
)
def test_classify(capsys, words, psi, extra):
    code, out, _ = run(capsys, "classify", "--words", words, "--format", "json")
    report = json.loads(out)
    assert code == 0
    assert report["es"]["psi"] == psi
    assert report["admissible"]
    for key, value in extra.items():
        assert report["invariants"][key] == value


def test_classify_not_self_dual(capsys):
    code, out, err = run(capsys, "classify", "--words", "ffv", "--format", "json")
    assert code == 0
    assert json.loads(out)["es"] is None
    assert "self-dual" in err


def test_verify_pass_and_fail(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "tables")
    assert code == 0 and "PASS" in out
    code, out, _ = run(capsys, "verify", "--suite", "encompassing", "--p", "3", "--lmax", "4")
    assert code == 0 and "PASS" in out
    code, out, _ = run(capsys, "verify", "--suite", "p2", "--d-max", "15")
    assert code == 1 and "d=13" in out
    code, out, _ = run(capsys, "verify", "--suite", "p2", "--d-max", "15", "--orientation", "inverse")
    assert code == 0


def test_tables(capsys):
    code, out, _ = run(capsys, "tables", "--format", "json")
    rows = json.loads(out)
    assert code == 0 and len(rows) == 30


def expected_sweep_count(p_list, d_max):
    # d in 3..d_max, less the multiples of p in that range
    return sum((d_max - 2) - (d_max // p - 2 // p) for p in p_list)


def test_sweep_rows_and_header(tmp_path, capsys):
    out = tmp_path / "t.csv"
    code, _, _ = run(capsys, "sweep", "--p-list", "3,5", "--d-max", "50", "--out", str(out), "--jobs", "1")
    assert code == 0
    text = out.read_text()
    assert text.splitlines()[0] == "p,d,ell,genus,p_rank,a_number,s11,u11,sel_dim,eo_rle,words"
    rows = list(csv.DictReader(text.splitlines()))
    assert expected_sweep_count([3, 5], 50) == 70
    assert len(rows) == 70
    assert [(int(r["p"]), int(r["d"])) for r in rows] == sorted((int(r["p"]), int(r["d"])) for r in rows)


def test_sweep_rows_agree_with_recomputation(tmp_path, capsys):
    out = tmp_path / "t.csv"
    run(capsys, "sweep", "--p-list", "2,7", "--d-max", "30", "--out", str(out), "--jobs", "1")
    for row in csv.DictReader(out.read_text().splitlines()):
        fresh = sweep_row((int(row["p"]), int(row["d"])))
        assert {k: str(v) for k, v in fresh.items()} == row
        assert int(row["sel_dim"]) == int(row["a_number"]) + int(row["u11"]) - int(row["s11"])


def test_sweep_deterministic_across_jobs(tmp_path, capsys, monkeypatch):
    a, b, c = (tmp_path / n for n in ("a.csv", "b.csv", "c.csv"))
    run(capsys, "sweep", "--p-list", "3,5", "--d-max", "60", "--out", str(a), "--jobs", "1")
    run(capsys, "sweep", "--p-list", "3,5", "--d-max", "60", "--out", str(b), "--jobs", "3")
    monkeypatch.setenv("BT1KIT_JOBS", "2")
    run(capsys, "sweep", "--p-list", "3,5", "--d-max", "60", "--out", str(c))
    assert a.read_bytes() == b.read_bytes() == c.read_bytes()


def test_sweep_json(tmp_path, capsys):
    out = tmp_path / "t.json"
    run(capsys, "sweep", "--p-list", "3", "--d-max", "10", "--out", str(out), "--format", "json")
    rows = json.loads(out.read_text())
    assert [r["d"] for r in rows] == [4, 5, 7, 8, 10]
    assert set(rows[0]) == set(SWEEP_FIELDS)


def test_sweep_io_error_exit_3(tmp_path, capsys):
    code, _, err = run(capsys, "sweep", "--p-list", "3", "--d-max", "10", "--out", str(tmp_path / "no" / "x.csv"))
    assert code == 3 and "cannot write" in err


def test_bad_jobs_env(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("BT1KIT_JOBS", "many")
    code, _, _ = run(capsys, "sweep", "--p-list", "3", "--d-max", "10", "--out", str(tmp_path / "x.csv"))
    assert code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "bt1kit", "classify", "--words", "fv"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert "es: [0]" in proc.stdout
