import io
import json
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from splitfactor import cli
from splitfactor.bench import CSV_HEADER, read_records


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_factor_125(capsys):
    code, out, _ = run(capsys, "factor", "125")
    assert code == 0
    assert out.splitlines()[0] == "125 = 5 * 5 * 5"
    assert "inner_iterations=" in out


@pytest.mark.parametrize("arg", ["1", "0", "-5", "0x10", "1_000", "12.0", "abc"])
def test_factor_usage_errors(capsys, arg):
    try:
        code = cli.main(["factor", arg])
    except SystemExit as exc:
        code = exc.code
    assert code == 2
    out, err = capsys.readouterr()
    assert err and not out


def test_factor_below_domain_direct(capsys):
    assert cli.cmd_factor(1) == 2
    assert "n must be >= 2" in capsys.readouterr().err


def test_factor_json_prime(capsys):
    code, out, _ = run(capsys, "factor", "97", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["factors"] == ["97"]
    assert set(doc) == {"n", "factors", "inner_iterations", "split_pairs_examined", "elapsed_ns"}


def test_factor_large_sorted(capsys):
    code, out, _ = run(capsys, "factor", str(2**5 * 1009 * 1013 * 3), "--json")
    assert json.loads(out)["factors"] == ["2", "2", "2", "2", "2", "3", "1009", "1013"]


@given(st.integers(2, 10**7))
@settings(max_examples=1000, deadline=None)
def test_factor_json_well_formed(n):
    buf = io.StringIO()
    assert cli.cmd_factor(n, as_json=True, out=buf) == 0
    text = buf.getvalue()
    assert text.endswith("\n") and text.count("\n") == 1
    doc = json.loads(text)
    assert doc["n"] == str(n)
    prod = 1
    for f in doc["factors"]:
        assert f.isdigit()
        prod *= int(f)
    assert prod == n
    assert [int(f) for f in doc["factors"]] == sorted(int(f) for f in doc["factors"])
    for key in ("inner_iterations", "split_pairs_examined", "elapsed_ns"):
        assert isinstance(doc[key], int) and doc[key] >= 0


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--max", "10")
    assert code == 0
    assert out.strip() == "9 checked, 0 mismatches"


def test_verify_2000(capsys):
    code, out, _ = run(capsys, "verify", "--max", "2000")
    assert code == 0 and "0 mismatches" in out


def test_verify_mismatch_exit_1(capsys, monkeypatch):
    real = cli.full_factorize
    monkeypatch.setattr(cli, "full_factorize", lambda n: [n] if n == 15 else real(n))
    code, out, _ = run(capsys, "verify", "--max", "20")
    assert code == 1
    assert "1 mismatches" in out and "n=15" in out


def test_verify_too_small(capsys):
    assert run(capsys, "verify", "--max", "5")[0] == 2


def test_bench_writes_csv(capsys, tmp_path):
    path = tmp_path / "out.csv"
    code, out, _ = run(capsys, "bench", "--bits", "16..32", "--samples", "50", "--csv", str(path))
    assert code == 0
    recs = read_records(path)
    assert len(recs) == 50 and all(r.outcome == "found" for r in recs)
    assert "slope=" in out


def test_bench_all_algorithms(capsys, tmp_path):
    path = tmp_path / "out.csv"
    code, _, _ = run(capsys, "bench", "--bits", "16..24", "--samples", "5", "--csv", str(path),
                     "--algorithms", "split-search,trial-division,pollard-rho")
    assert code == 0
    assert {r.algorithm for r in read_records(path)} == {"split-search", "trial-division", "pollard-rho"}


def test_bench_empty_corpus(capsys, tmp_path):
    path = tmp_path / "out.csv"
    code, out, _ = run(capsys, "bench", "--samples", "0", "--csv", str(path))
    assert code == 0
    assert path.read_text() == CSV_HEADER + "\n"
    assert "fit unavailable" in out


def test_bench_unwritable(capsys, tmp_path):
    code, _, err = run(capsys, "bench", "--csv", str(tmp_path / "nope" / "out.csv"))
    assert code == 3
    assert "nope" in err


@pytest.mark.parametrize("argv", [
    ["bench", "--csv", "x.csv", "--algorithms", "gnfs"],
    ["bench", "--csv", "x.csv", "--bits", "40..16"],
    ["bench", "--samples", "3"],
    ["verify"],
    [],
])
def test_bench_and_verify_usage(capsys, argv):
    with pytest.raises(SystemExit) as info:
        cli.main(argv)
    assert info.value.code == 2


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0
    assert "FAIL" not in out and out.count("PASS") >= 8


def test_module_entry_point_json_is_only_output():
    proc = subprocess.run([sys.executable, "-m", "splitfactor", "factor", "125", "--json"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["factors"] == ["5", "5", "5"]
    assert proc.stderr == ""


@pytest.mark.parametrize("script", ["01_worked_example.py", "02_differential_check.py", "03_complexity_fit.py"])
def test_demo_scripts_run(script):
    from pathlib import Path

    path = Path(__file__).resolve().parents[1] / "demos" / script
    proc = subprocess.run([sys.executable, str(path)], capture_output=True, text=True, check=False, timeout=120)
    assert proc.returncode == 0, proc.stderr
