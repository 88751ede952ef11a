import csv
import io
import json
import subprocess
import sys

import pytest

from cayley_kernel.cli import main


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def test_phase_sym3_at_two(capsys):
    status, out, _ = run(capsys, "phase", "--N", "3", "--exp-beta", "2")
    assert status == 0
    payload = json.loads(out)
    assert payload["verdict"] == "PositiveSemiDefinite"
    assert payload["theorem"] == {**payload["theorem"], "verdict": "PositiveSemiDefinite", "source": "Theorem"}
    assert payload["computed"]["verdict"] == "PositiveSemiDefinite"
    assert payload["computed"]["source"] == "ComputedExact"


def test_phase_numeric_downgrade(capsys):
    status, out, _ = run(capsys, "phase", "--N", "3", "--exp-beta", "2.0")
    payload = json.loads(out)
    assert status == 0
    assert payload["computed"]["source"] == "ComputedNumeric"
    assert payload["computed"]["verdict"] == "Unknown"
    assert payload["verdict"] == "PositiveSemiDefinite"


def test_phase_csv(capsys):
    _, out, _ = run(capsys, "phase", "--N", "3", "--exp-beta", "3/2", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["N", "exp_beta", "verdict", "theorem", "computed"]
    assert rows[1] == ["3", "3/2", "Indefinite", "Indefinite", "Indefinite"]


def test_spectrum_json_and_csv(capsys):
    _, out, _ = run(capsys, "spectrum", "--N", "3", "--exp-beta", "2")
    payload = json.loads(out)
    assert payload["N"] == 3 and payload["exp_beta"] == "2"
    assert [(e["partition"], e["value"], e["multiplicity"]) for e in payload["eigenvalues"]] == [
        ("3", "3", 1), ("2+1", "3/4", 4), ("1+1+1", "0", 1)
    ]
    _, out, _ = run(capsys, "spectrum", "--N", "3", "--exp-beta", "2", "--format", "csv")
    assert out.splitlines() == ["partition,value,multiplicity", "3,3,1", "2+1,3/4,4", "1+1+1,0,1"]


def test_sweep_sign_pattern(capsys):
    status, out, _ = run(capsys, "sweep", "--N", "4", "--grid", "1:6:0.05")
    assert status == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 101
    by_point = {r["exp_beta"]: float(r["scaled_min_eig"]) for r in rows}
    assert by_point["1"] == by_point["2"] == by_point["3"] == 0
    assert by_point["1.5"] < 0 and by_point["2.5"] < 0
    assert by_point["4"] > 0 and by_point["6"] > 0
    assert list(by_point)[:3] == ["1", "1.05", "1.1"]


def test_sweep_numeric_parallel_matches_serial(capsys):
    _, serial, _ = run(capsys, "sweep", "--N", "4", "--grid", "1:3:0.5", "--numeric")
    _, parallel, _ = run(capsys, "sweep", "--N", "4", "--grid", "1:3:0.5", "--numeric", "--jobs", "2")
    assert serial == parallel


def test_sweep_json_and_exponent(capsys):
    _, out, _ = run(capsys, "sweep", "--N", "2", "--grid", "2:2:1", "--exponent", "0", "--format", "json")
    assert json.loads(out) == [{"exp_beta": "2", "min_eig": "1/2", "scaled_min_eig": "1/2"}]


def test_weight(capsys):
    status, out, _ = run(capsys, "weight", "--strands", "3", "--word", "1,2 2,3 1,3", "--n", "2")
    assert status == 0 and out == "1/2\n"
    _, out, _ = run(capsys, "weight", "--strands", "3", "--word", "", "--n", "2", "--format", "json")
    assert json.loads(out) == {"strands": 3, "word": "", "n": 2, "value": "1"}


def test_state(capsys):
    status, out, _ = run(capsys, "state", "--strands", "2", "--term", "1/1,0/1:", "--term", "1/2,0/1:1,2", "--n", "2")
    assert status == 0
    payload = json.loads(out)
    assert payload["value"] == {"re": "7/4", "im": "0"}  # 1 + 1/4 + 2 * 1/2 * 1/2
    assert payload["is_nonnegative"] is True


def test_matrix(capsys):
    _, out, _ = run(capsys, "matrix", "--N", "2", "--exp-beta", "2")
    assert out.splitlines() == ["perm,12,21", "12,1,1/2", "21,1/2,1"]


def test_verify(capsys):
    status, out, _ = run(capsys, "verify")
    lines = out.splitlines()
    assert status == 0
    assert lines[-1] == "14/14 checks passed"
    assert all(line.startswith("PASS ") for line in lines[:-1])


@pytest.mark.parametrize(
    "argv,status,kind",
    [
        (["phase", "--N", "3", "--exp-beta", "0"], 2, "invalid-argument"),
        (["phase", "--N", "0", "--exp-beta", "2"], 2, "invalid-argument"),
        (["spectrum", "--N", "3"], 2, "invalid-argument"),
        (["bogus"], 2, "invalid-argument"),
        (["sweep", "--N", "3", "--grid", "1:2"], 2, "invalid-argument"),
        (["weight", "--strands", "2", "--word", "1,3", "--n", "2"], 2, "invalid-argument"),
        (["state", "--strands", "2", "--n", "2"], 2, "invalid-argument"),
        (["state", "--strands", "2", "--term", "1,0", "--n", "2"], 2, "invalid-argument"),
        (["matrix", "--N", "6", "--exp-beta", "2"], 3, "cap-exceeded"),
    ],
)
def test_errors_are_single_lines(capsys, argv, status, kind):
    got, out, err = run(capsys, *argv)
    assert got == status
    assert out == ""
    assert len(err.splitlines()) == 1
    assert err.startswith(f"error: {kind}: ")


def test_env_cap(capsys, monkeypatch):
    monkeypatch.setenv("CAYLEY_MAX_ENUM", "3")
    status, _, err = run(capsys, "matrix", "--N", "4", "--exp-beta", "2")
    assert status == 3 and err.startswith("error: cap-exceeded: ")
    # spectrum never enumerates the group
    assert run(capsys, "spectrum", "--N", "12", "--exp-beta", "5")[0] == 0


def test_output_file(capsys, tmp_path):
    target = tmp_path / "spec.json"
    status, out, _ = run(capsys, "spectrum", "--N", "4", "--exp-beta", "5/2", "--output", str(target))
    assert status == 0 and out == ""
    assert json.loads(target.read_text())["N"] == 4


def test_byte_identical_runs():
    cmd = [sys.executable, "-m", "cayley_kernel", "sweep", "--N", "4", "--grid", "1:2:0.1", "--jobs", "2"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first.startswith(b"exp_beta,min_eig,scaled_min_eig\n")
