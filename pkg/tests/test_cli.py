"""Command line behavior: exit codes, output shapes, determinism."""

import json
import subprocess
import sys

import pytest

from dicksonlab import build_nearfield, export_cayley
from dicksonlab.cli import main


def run(argv, capsys):
    try:
        rc = main(argv)
    except SystemExit as e:
        rc = e.code if e.code is not None else 0
    cap = capsys.readouterr()
    return rc, cap.out, cap.err


def test_pairs_check_valid(capsys):
    rc, out, err = run(["pairs", "--check", "3", "2"], capsys)
    assert rc == 0
    doc = json.loads(out)
    assert doc["valid"] is True
    assert doc["violated"] == "none"
    assert doc["brackets_mod_n"] == [1, 0]


def test_pairs_check_invalid(capsys):
    rc, out, err = run(["pairs", "--check", "3", "4"], capsys)
    assert rc == 1
    doc = json.loads(out)
    assert doc["valid"] is False and doc["violated"] == "iii"
    rc, out, _ = run(["pairs", "--check", "6", "2"], capsys)
    assert rc == 1
    assert json.loads(out)["violated"] == "i"


def test_pairs_check_text(capsys):
    rc, out, _ = run(["pairs", "--check", "5", "4", "--format", "text"], capsys)
    assert rc == 0
    assert out.strip() == "valid"
    rc, out, _ = run(["pairs", "--check", "2", "2", "--format", "text"], capsys)
    assert rc == 1
    assert out.strip() == "invalid: condition ii"


def test_pairs_listing(capsys):
    rc, out, _ = run(["pairs", "--max-order", "100", "--min-n", "2"], capsys)
    assert rc == 0
    doc = json.loads(out)
    assert doc["count"] == 5
    assert [(e["q"], e["n"]) for e in doc["pairs"]] == [
        (3, 2), (5, 2), (7, 2), (4, 3), (9, 2),
    ]
    assert doc["pairs"][0] == {"q": 3, "p": 3, "l": 1, "n": 2,
                               "order": 9, "trivial": False}


def test_pairs_listing_csv_and_text(capsys):
    rc, out, _ = run(["pairs", "--max-order", "30", "--format", "csv"], capsys)
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == "q,p,l,n,order,trivial"
    assert lines[1] == "2,2,1,1,2,true"
    rc, out, _ = run(["pairs", "--max-order", "30", "--format", "text"], capsys)
    assert rc == 0
    assert out.splitlines()[0] == "(2, 1) order=2 trivial"


def test_pairs_requires_a_task(capsys):
    rc, _, err = run(["pairs"], capsys)
    assert rc == 2
    assert "max-order" in err or "check" in err


def test_pairs_rejects_silly_input(capsys):
    rc, _, err = run(["pairs", "--check", "3", "10000001"], capsys)
    assert rc == 2
    rc, _, err = run(["pairs", "--check", "1", "2"], capsys)
    assert rc == 2


def test_verify_passing_instance(capsys):
    rc, out, err = run(["verify", "3", "2"], capsys)
    assert rc == 0
    doc = json.loads(out)
    assert doc["passed"] is True
    assert doc["center"]["elements"] == [0, 1, 2]
    assert doc["witnesses"]["right_distributive"] == [1, 3, 3]
    assert doc["kernel"]["oracle_agrees"] is True


def test_verify_rejects_invalid_pair(capsys):
    rc, out, err = run(["verify", "6", "2"], capsys)
    assert rc == 2
    assert "condition i" in err
    rc, out, err = run(["verify", "3", "4"], capsys)
    assert rc == 2
    assert "condition iii" in err


def test_verify_cap_exit(capsys):
    rc, out, err = run(["verify", "31", "2", "--mode", "exhaustive"], capsys)
    assert rc == 1
    assert "cap exceeded" in err
    rc, out, err = run(["verify", "3", "2", "--order-cap", "4"], capsys)
    assert rc == 1
    assert "cap exceeded" in err


def test_verify_is_deterministic(capsys):
    rc1, out1, _ = run(["verify", "9", "2", "--seed", "7"], capsys)
    rc2, out2, _ = run(["verify", "9", "2", "--seed", "7"], capsys)
    assert rc1 == rc2 == 0
    assert out1 == out2


def test_verify_generator_flag(capsys):
    rc, out, _ = run(["verify", "3", "2", "--generator", "3"], capsys)
    assert rc == 0
    doc = json.loads(out)
    assert doc["passed"] is True
    assert doc["center"]["elements"] == [0, 1, 2]
    rc, _, err = run(["verify", "3", "2", "--generator", "2"], capsys)
    assert rc == 2  # not coprime to the unit group order


def test_verify_sampled_flags(capsys):
    rc, out, _ = run(
        ["verify", "29", "2", "--mode", "sampled", "--samples", "2000",
         "--seed", "11"], capsys)
    assert rc == 0
    doc = json.loads(out)
    assert doc["mode"] == "sampled(2000)"
    assert doc["seed"] == 11
    assert doc["passed"] is True


def test_verify_text_format(capsys):
    rc, out, _ = run(["verify", "3", "2", "--format", "text"], capsys)
    assert rc == 0
    lines = out.splitlines()
    assert lines[0].startswith("pair (3, 2)")
    assert any("right_distributive" in ln and "fails" in ln for ln in lines)
    assert any("center size 3" in ln for ln in lines)
    assert lines[-1] == "passed: true"


def test_verify_flag_validation(capsys):
    rc, _, err = run(["verify", "3", "2", "--exhaustive-cap", "2000000"], capsys)
    assert rc == 2
    rc, _, err = run(["verify", "3", "2", "--samples", "0"], capsys)
    assert rc == 2
    rc, _, err = run(["verify", "3", "2", "--mode", "everything"], capsys)
    assert rc == 2


def test_table_to_file(tmp_path, capsys):
    target = tmp_path / "t.csv"
    rc, out, err = run(["table", "3", "2", str(target)], capsys)
    assert rc == 0
    assert out == ""
    spec = json.loads(err)
    assert spec == {"p": 3, "m": 2, "modulus": [2, 1, 1], "generator": 3}
    want = export_cayley(build_nearfield(3, 2), "circle", "csv")
    assert target.read_text() == want


def test_table_stdout_and_ops(capsys):
    rc, out, _ = run(["table", "3", "2", "--op", "add"], capsys)
    assert rc == 0
    want = export_cayley(build_nearfield(3, 2), "add", "csv")
    assert out.rstrip("\n") == want.rstrip("\n")
    rc, circle_out, _ = run(["table", "3", "1", "--op", "circle"], capsys)
    rc2, mul_out, _ = run(["table", "3", "1", "--op", "mul"], capsys)
    assert rc == rc2 == 0
    assert circle_out == mul_out  # trivial pair collapses to the field


def test_table_json_format(capsys):
    rc, out, _ = run(["table", "5", "2", "--format", "json"], capsys)
    assert rc == 0
    doc = json.loads(out)
    assert doc["op"] == "circle"
    assert doc["table"] == build_nearfield(5, 2).circle_table().tolist()


def test_table_caps_and_validation(capsys):
    rc, _, err = run(["table", "5", "4", "--export-cap", "100"], capsys)
    assert rc == 1
    assert "cap exceeded" in err
    rc, _, err = run(["table", "6", "2"], capsys)
    assert rc == 2


def test_field_info(capsys):
    rc, out, _ = run(["field-info", "3", "2"], capsys)
    assert rc == 0
    assert json.loads(out) == {"p": 3, "m": 2, "modulus": [2, 1, 1],
                               "generator": 3}
    rc, out, _ = run(["field-info", "2", "6", "--format", "text"], capsys)
    assert rc == 0
    assert "order=64" in out
    rc, _, err = run(["field-info", "4", "2"], capsys)
    assert rc == 2
    assert "not prime" in err


def test_usage_errors(capsys):
    assert run([], capsys)[0] == 2
    assert run(["frobnicate"], capsys)[0] == 2
    assert run(["verify"], capsys)[0] == 2
    assert run(["verify", "3"], capsys)[0] == 2


def test_module_entrypoint_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "dicksonlab", "verify", "3", "2"],
        capture_output=True, text=True, timeout=120,
    )
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert doc["passed"] is True
    proc = subprocess.run(
        [sys.executable, "-m", "dicksonlab", "pairs", "--check", "2", "2"],
        capture_output=True, text=True, timeout=120,
    )
    assert proc.returncode == 1
