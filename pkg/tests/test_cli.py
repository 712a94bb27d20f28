import json
import subprocess
import sys

import pytest

from qpoin.cli import run_command


def run(capsys, *argv):
    code = run_command(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_normalize(capsys):
    code, out, _ = run(capsys, "normalize", "E*F - F*E")
    assert code == 0
    assert out.strip() == "lam^-1*(K - Kinv)"


def test_commutator_json(capsys):
    code, out, _ = run(capsys, "commutator", "P0", "P3", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"result": "0"}


def test_star_and_coproduct(capsys):
    assert run(capsys, "star", "E")[1].strip() == "F*K"
    code, out, _ = run(capsys, "coproduct", "K")
    assert code == 0 and "K (x) K" in out


def test_input_errors_exit_2(capsys):
    assert run(capsys, "normalize", "")[0] == 2
    assert run(capsys, "normalize", "E +")[0] == 2
    code, _, err = run(capsys, "coproduct", "P0")
    assert code == 2 and "error" in err


def test_usage_errors_exit_2(capsys):
    for argv in (["verify", "--suite", "nope"], ["frobnicate"], ["verify", "--qvalues", "0.5"]):
        with pytest.raises(SystemExit) as info:
            run_command(argv)
        assert info.value.code == 2
    capsys.readouterr()


def test_pl_component(capsys):
    code, out, _ = run(capsys, "pl", "--component", "0", "--format", "json")
    assert code == 0
    assert list(json.loads(out)) == ["0"]


def test_little_massless(capsys):
    code, out, _ = run(capsys, "little", "--case", "massless", "--format", "json")
    payload = json.loads(out)
    assert code == 0
    assert payload["case"] == "massless"
    assert all(c["status"] == "pass" for c in payload["checks"])


def test_verify_report_schema(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "pl2", "--format", "json", "--seed", "3")
    report = json.loads(out)
    assert code == 0
    assert set(report) == {"suite", "version", "seed", "checks"}
    assert report["seed"] == 3 and report["suite"] == "pl2"
    ids = [c["id"] for c in report["checks"]]
    assert ids == sorted(ids) and len(ids) == 16
    assert all(set(c) == {"id", "status", "witness", "ms"} for c in report["checks"])


def test_verify_failure_exit_1(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "limit", "--slope-tol", "1e-12")
    assert code == 1
    assert "fail" in out


def test_fuzz_command(capsys):
    code, out, _ = run(capsys, "fuzz", "--seed", "2", "--trials", "20", "--max-len", "5")
    assert code == 0
    assert out.startswith("0 mismatches in 20 words")


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qpoin.cli", "commutator", "b", "c"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "0"
