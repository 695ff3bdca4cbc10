import json

import pytest

from binseq.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_count(capsys):
    code, out, _ = run(capsys, "count", "-p", "10", "-w", "10010")
    assert code == 0
    assert json.loads(out) == {"count": "4"}


def test_spectrum_csv(capsys):
    code, out, _ = run(capsys, "spectrum", "-p", "101", "-n", "6", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "k,count"
    assert "5,0" in lines
    assert "6,9" in lines


def test_closed_form(capsys):
    code, out, _ = run(capsys, "closed-form", "-p", "10", "-n", "4", "-k", "3")
    assert code == 0
    assert json.loads(out) == {"B": "3"}


def test_closed_form_out_of_range(capsys):
    code, _, err = run(capsys, "closed-form", "-p", "10", "-n", "2", "-k", "4")
    assert code == 1
    assert "not asserted" in err


def test_invalid_pattern(capsys):
    code, _, err = run(capsys, "count", "-p", "10x", "-w", "1")
    assert code == 1
    assert "invalid character" in err


def test_budget_error(capsys):
    code, _, err = run(capsys, "spectrum", "-p", "10", "-n", "25")
    assert code == 1
    assert "cap" in err


def test_identities(capsys):
    code, out, _ = run(capsys, "identities", "-p", "10", "-n", "4")
    assert code == 0
    assert json.loads(out)["all_hold"] is True


def test_max_with_oracle(capsys):
    code, out, _ = run(capsys, "max", "-i", "1", "-j", "1", "-k", "1", "-n", "12", "--oracle")
    assert code == 0
    d = json.loads(out)
    assert d["M"] == "64"
    assert d["match"] is True
    assert {"a": 4, "b": 4, "c": 4} in d["argmax"]


def test_optimal(capsys):
    code, out, _ = run(capsys, "optimal", "-p", "1101", "-n", "7")
    assert code == 0
    assert "1110101" in json.loads(out)["optimal_words"]


def test_internal_zeros(capsys):
    code, out, _ = run(capsys, "internal-zeros", "-p", "1101", "--n-max", "10")
    assert code == 0
    d = json.loads(out)
    assert d["predict"] is True
    assert d["agreement"] is True


def test_wilf_scan(capsys, tmp_path):
    code, out, _ = run(
        capsys, "wilf-scan", "-l", "3", "--n-max", "6",
        "--checkpoint", str(tmp_path / "ck.jsonl"),
    )
    assert code == 0
    d = json.loads(out)
    assert d["verdict"] is True
    assert len(d["classes"]) == 3


def test_gf_check(capsys):
    code, out, _ = run(capsys, "gf-check", "-i", "1", "-j", "1", "-N", "8")
    assert code == 0
    assert json.loads(out)["match"] is True


def test_output_is_worker_independent(capsys):
    outputs = set()
    for w in ("1", "2", "8"):
        _, out, _ = run(capsys, "spectrum", "-p", "1101", "-n", "17", "--workers", w)
        outputs.add(out)
    assert len(outputs) == 1


def test_usage_error(capsys):
    assert main(["spectrum", "-p", "10"]) == 1
    capsys.readouterr()
