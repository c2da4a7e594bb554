"""Command line front end: exit codes, determinism, corpus behavior."""
from __future__ import annotations

import json
from pathlib import Path

import pytest

from kropinaflat import corpus_dir
from kropinaflat.cli import main

E1 = Path(corpus_dir()) / "minkowski.inst"
E2 = Path(corpus_dir()) / "perturbed.inst"
E3 = Path(corpus_dir()) / "beta-variable.inst"


def run(capsys, *argv) -> tuple[int, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def test_bundled_corpus_exists():
    names = sorted(p.name for p in Path(corpus_dir()).glob("*.inst"))
    assert names == [
        "beta-variable.inst",
        "conformal.inst",
        "minkowski.inst",
        "perturbed.inst",
        "random-seed-11.inst",
        "random-seed-7.inst",
    ]


def test_dually_flat_holds_exit_zero(capsys):
    code, out = run(capsys, "check-dually-flat", "--input", str(E1))
    assert code == 0
    assert "[HOLDS] dually-flat" in out
    assert "R_1 = 0" in out


def test_theorem1_fails_exit_one(capsys):
    code, out = run(capsys, "check-theorem1", "--input", str(E3))
    assert code == 1
    assert "beta-bracket" in out and "coupling" in out
    assert "C3_1" in out and "C2_1" in out
    assert "at point" in out


def test_m2_file_rejected(capsys, tmp_path):
    bad = tmp_path / "m2.inst"
    bad.write_text("n = 2\nm = 2\nA = y1*y2\nbeta = y1\n")
    code = main(["check-theorem1", "--input", str(bad)])
    err = capsys.readouterr().err
    assert code == 2
    assert "m > 2" in err


def test_parse_error_has_position(capsys, tmp_path):
    bad = tmp_path / "bad.inst"
    bad.write_text("n = 2\nm = 3\nA = y1^(1/2) + y2^3\nbeta = y1\n")
    code = main(["check-dually-flat", "--input", str(bad)])
    err = capsys.readouterr().err
    assert code == 2
    assert "fractional exponent" in err
    assert "position" in err


def test_missing_input_file(capsys):
    code = main(["check-dually-flat", "--input", "does-not-exist.inst"])
    assert code == 2


def test_json_report_is_deterministic(capsys):
    code1, out1 = run(capsys, "check-theorem1", "--input", str(E2), "--format", "json")
    code2, out2 = run(capsys, "check-theorem1", "--input", str(E2), "--format", "json")
    assert code1 == code2 == 1
    assert out1 == out2
    document = json.loads(out1)
    assert document["command"] == "check-theorem1"
    assert document["exit_code"] == 1
    assert document["instance"]["m"] == 3
    names = [c["name"] for c in document["checks"][0]["conditions"]]
    assert any(name.startswith("beta-bracket") for name in names)


def test_out_writes_structured_report(capsys, tmp_path):
    out_path = tmp_path / "report.json"
    code = main(["check-dually-flat", "--input", str(E1), "--out", str(out_path)])
    capsys.readouterr()
    assert code == 0
    document = json.loads(out_path.read_text())
    assert document["checks"][0]["overall"] == "holds"


def test_verify_identities_exit_zero(capsys):
    code, out = run(capsys, "verify-identities", "--input", str(E2))
    assert code == 0
    assert "euler-identities" in out
    assert "inverse-identities" in out
    assert "contraction-probes" in out


def test_crosscheck_exit_zero(capsys):
    code, out = run(capsys, "crosscheck", "--input", str(E2), "--points", "5")
    assert code == 0
    assert "finite differences" in out


def test_crosscheck_seed_changes_points_not_verdict(capsys):
    code1, out1 = run(capsys, "crosscheck", "--input", str(E2), "--points", "4", "--seed", "1")
    code2, out2 = run(capsys, "crosscheck", "--input", str(E2), "--points", "4", "--seed", "2")
    assert code1 == code2 == 0


def test_corpus_bundled_six_rows_exit_one(capsys):
    code, out = run(capsys, "corpus")
    assert code == 1
    lines = [line for line in out.splitlines() if line.endswith(("-", "holds", "fails"))]
    assert len(lines) == 6
    assert "error" in out.splitlines()[1]  # header row
    assert out.count("fails") > 0


def test_corpus_is_byte_deterministic(capsys):
    _, out1 = run(capsys, "corpus", "--format", "json")
    _, out2 = run(capsys, "corpus", "--format", "json")
    assert out1 == out2
    document = json.loads(out1)
    assert len(document["rows"]) == 6
    assert all(row["error"] is None for row in document["rows"])


def test_corpus_empty_directory(capsys, tmp_path):
    code, out = run(capsys, "corpus", "--input", str(tmp_path))
    assert code == 0
    assert "exit: 0" in out


def test_corpus_with_malformed_file_continues(capsys, tmp_path):
    good = tmp_path / "a-good.inst"
    good.write_text(E1.read_text())
    bad = tmp_path / "b-bad.inst"
    bad.write_text("n = 2\nm = 3\nA = y1^3 +\nbeta = y1\n")
    code, out = run(capsys, "corpus", "--input", str(tmp_path))
    assert code == 2
    assert "a-good.inst" in out
    assert "b-bad.inst" in out
    assert "holds" in out  # the good row was still computed


def test_corpus_missing_directory(capsys):
    code = main(["corpus", "--input", "no-such-dir"])
    assert code == 2


def test_three_dimensional_instance(capsys, tmp_path):
    inst = tmp_path / "n3.inst"
    inst.write_text(
        "n = 3\nm = 3\nA = y1^3 + y2^3 + y3^3 + y1*y2*y3\nbeta = y1 + y3\n"
    )
    code, out = run(capsys, "verify-identities", "--input", str(inst))
    assert code == 0
    assert "inverse-identities" in out
    code, out = run(capsys, "check-dually-flat", "--input", str(inst))
    assert code == 0  # constant coefficients: still flat
