import json
import subprocess
import sys
from pathlib import Path

import pytest

from asai_gamma import cli
from asai_gamma.config import ConfigError, RunConfig

ROOT = Path(__file__).resolve().parent.parent
GOLDEN = ROOT / "golden"


def run(*args):
    return subprocess.run([sys.executable, "-m", "asai_gamma.cli", *args], capture_output=True, text=True)


def test_num_formatting():
    assert cli.num(1e-13) == 0.0
    assert cli.num(-2.23606797749979) == -2.2360679775
    assert cli.num(2 * 2**0.5) == 2.82842712475


def test_gamma_records_schema(capsys):
    assert cli.main(["gamma", "--p", "2", "--n", "2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    header = json.loads(lines[0])
    assert header == {"config": RunConfig().echo()}
    recs = [json.loads(x) for x in lines[1:]]
    assert len(recs) == 6
    for r in recs:
        assert list(r) == cli.GammaRecord.columns()
        assert r["criteria_agreement"] is True
        assert r["gamma_abs"] == pytest.approx(2.0, abs=1e-8)


def test_csv_columns(capsys):
    assert cli.main(["gamma", "--format", "csv", "--theta", "1", "4", "3"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0].startswith("# config ")
    assert out[1].split(",") == cli.GammaRecord.columns()
    assert len(out) == 4  # theta 1 and 4 share an orbit


def test_list_and_table(capsys):
    assert cli.main(["list", "--p", "3"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert len(out) == 37 and "distinguished" in out[0]


def test_verify_exit_zero(capsys):
    assert cli.main(["verify"]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out and out.count("[PASS]") > 40


def test_level_zero_output(capsys):
    assert cli.main(["level-zero", "--n", "3", "--lambda", "2", "0.5j"]) == 0
    lines = [json.loads(x) for x in capsys.readouterr().out.splitlines()[1:]]
    assert [d["c3"] for d in lines] == [3, 3]
    assert lines[0]["vol_epsilon"] == "0.5*T^-3"
    assert lines[0]["L"] == "(1) / (1 - 2*T^3)"
    assert lines[1]["poles"] == 3


@pytest.mark.parametrize(
    "argv",
    [
        ["gamma", "--p", "4"],
        ["gamma", "--n", "4"],
        ["gamma", "--theta", "5"],
        ["gamma", "--z", "0"],
        ["gamma", "--n", "3", "--budget", "1000"],
        ["gamma", "--tol", "-1"],
        ["bogus"],
        ["level-zero", "--lambda", "0"],
        ["golden", "compare", "/nonexistent/file.jsonl"],
    ],
)
def test_usage_errors_exit_two(argv, capsys):
    try:
        code = cli.main(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == 2


def test_config_validation_before_enumeration():
    with pytest.raises(ConfigError):
        RunConfig(p=2, n=3, budget=10).validate()
    assert RunConfig(p=3, z=20).validate().z == 20


def test_output_file_and_determinism(tmp_path):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    assert cli.main(["gamma", "--p", "3", "--out", str(a)]) == 0
    assert cli.main(["gamma", "--p", "3", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert a.read_bytes() == (GOLDEN / "q3_n2.jsonl").read_bytes()


@pytest.mark.parametrize("q,n", [(2, 2), (3, 2)])
def test_golden_compare_shipped(q, n, capsys):
    assert cli.main(["golden", "compare", str(GOLDEN / f"q{q}_n{n}.jsonl"), "--p", str(q), "--n", str(n)]) == 0
    assert "byte-identical" in capsys.readouterr().out


def test_golden_mismatch_detected(tmp_path, capsys):
    src = (GOLDEN / "q2_n2.jsonl").read_text().splitlines()
    rec = json.loads(src[1])
    rec["gamma_re"] += 1e-3
    src[1] = json.dumps(rec, separators=(", ", ": "))
    bad = tmp_path / "bad.jsonl"
    bad.write_text("\n".join(src) + "\n")
    assert cli.main(["golden", "compare", str(bad)]) == 1
    assert "gamma_re" in capsys.readouterr().err


def test_golden_tolerates_small_drift(tmp_path):
    src = (GOLDEN / "q2_n2.jsonl").read_text().splitlines()
    rec = json.loads(src[1])
    rec["gamma_re"] += 1e-11
    src[1] = json.dumps(rec, separators=(", ", ": "))
    path = tmp_path / "drift.jsonl"
    path.write_text("\n".join(src) + "\n")
    assert cli.main(["golden", "compare", str(path)]) == 0


def test_golden_write_roundtrip(tmp_path):
    path = tmp_path / "g.jsonl"
    assert cli.main(["golden", "write", str(path)]) == 0
    assert cli.main(["golden", "compare", str(path)]) == 0


def test_console_entry_subprocess():
    r = run("gamma", "--format", "table")
    assert r.returncode == 0 and "criteria_agreement" in r.stdout
    r = run("gamma", "--p", "9")
    assert r.returncode == 2 and "not prime" in r.stderr
