"""Command line: JSON output, determinism, fixture mode and error codes."""

from __future__ import annotations

import json
import subprocess
import sys

import pytest

from zonotopal.cli import run

X1 = "1 0 1;0 1 1"


def call(*argv: str) -> tuple[dict, int]:
    return run(list(argv))


def test_flats(capsys):
    doc, status = call("flats", "--inline", X1, "--upperset", "gens:0;2")
    assert status == 0
    res = doc["result"]
    assert res["hyperplanes"] == [[0], [1], [2]]
    assert [f["chi"] for f in res["flats"]] == [0, 1, 0, 1, 1]
    printed = json.loads(capsys.readouterr().out)
    assert printed == doc


def test_hilb_all_methods():
    doc, status = call("hilb", "--inline", X1, "--k", "0", "--upperset", "gens:0;2")
    assert status == 0
    res = doc["result"]
    assert res["hilb"] == [1, 2, 2] and res["dim"] == 5 and res["agree"]
    assert set(res["methods"]) == {"kernel", "recursive", "activity", "subset"}


def test_tutte_and_verify():
    doc, _ = call("tutte", "--inline", X1)
    assert doc["result"]["text"] == "x^2 + x + y" and doc["result"]["deletion_contraction_agrees"]
    doc, status = call("verify", "--inline", X1, "--k", "0", "--upperset", "gens:0;2")
    assert status == 0 and doc["result"]["passed"]
    assert set(doc["result"]["exact_sequences"]) == {"0", "1", "2"}


def test_kernel_basis_pspace_ideal():
    doc, _ = call("kernel", "--inline", X1, "--k", "-1", "--upperset", "gens:0;2")
    assert doc["result"]["hilb"] == [1, 1]
    doc, _ = call("kernel", "--inline", X1, "--selector", "seeded:3")
    assert doc["result"]["ideal"] == "I'[seeded:3]" and doc["result"]["hilb"] == [1, 2]
    doc, _ = call("pspace", "--inline", X1)
    assert doc["result"]["dim"] == 3
    doc, _ = call("basis", "--inline", X1)
    assert len(doc["result"]["polys"]) == 3
    doc, _ = call("basis", "--inline", X1, "--k", "-1")
    assert "heuristic_tilde_b_minus" in doc["result"]
    doc, _ = call("ideal", "--inline", X1)
    assert sorted(g["exponent"] for g in doc["result"]["iprime"]) == [2, 2, 2]


def test_cox_and_graph(tmp_path):
    doc, status = call("cox-hilb", "--inline", X1, "--a", "2,2,2", "--c0", "0,1,2")
    assert status == 0 and doc["result"]["hilb"] == [1, 2, 3, 1] and doc["result"]["agree"]
    doc, status = call("cox-hilb", "--inline", X1, "--a", "1,1,1", "--b", "1,0,1")
    assert status == 0 and doc["result"]["agree"]
    g = tmp_path / "k3.txt"
    g.write_text("3 3\n1 2\n2 3\n1 3\n")
    doc, status = call("graph-poly", str(g), "--graph")
    assert doc["result"]["flow"] == [-1, 1] and doc["result"]["chromatic"] == [0, 2, -3, 1]
    assert doc["result"]["flow_matches_tutte"]


def test_output_is_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    call("verify", "--inline", X1, "--k", "1", "--out", str(a))
    call("verify", "--inline", X1, "--k", "1", "--out", str(b))
    assert a.read_text() == b.read_text()
    assert "timing_seconds" not in json.loads(a.read_text())
    doc, _ = call("flats", "--inline", X1, "--timing", "--out", str(a))
    assert "timing_seconds" in doc


def test_matrix_file_input(tmp_path):
    m = tmp_path / "x1.txt"
    m.write_text("1 0 1\n0 1 1\n")
    doc, status = call("hilb", str(m), "--k", "1")
    assert status == 0 and doc["result"]["hilb"] == [1, 2, 3, 1]


def test_fixture_directory(fixtures_dir):
    doc, status = call("verify", str(fixtures_dir))
    assert status == 0 and doc["passed"] and len(doc["fixtures"]) == 6


def test_failing_fixture_exits_one(tmp_path):
    f = tmp_path / "bad.json"
    f.write_text(json.dumps({"matrix": [[1, 0, 1], [0, 1, 1]], "checks": [
        {"kind": "hilb", "k": 0, "J": "central", "expect": [1, 1]}]}))
    doc, status = call("verify", str(f))
    assert status == 1 and not doc["passed"]


@pytest.mark.parametrize(
    "argv, code",
    [
        (["hilb", "--inline", X1, "--k", "-2"], "K_BELOW_MINUS_ONE"),
        (["hilb", "--inline", "1 0;0"], "RAGGED"),
        (["hilb", "--inline", "1 2;2 4"], "NOT_SPANNING"),
        (["hilb", "--inline", X1, "--upperset", "gens:9"], "BAD_INDEX"),
        (["hilb", "--inline", X1, "--k", "-1", "--method", "activity"], "K_TOO_SMALL"),
        (["hilb", "--inline", X1, "--k", "-1", "--upperset", "gens:0", "--method", "recursive"],
         "J_MISSING_HYPERPLANES_FOR_INTERNAL"),
        (["hilb"], "NO_INPUT"),
        (["hilb", "/nonexistent/matrix.txt"], "IO_ERROR"),
        (["cox-hilb", "--inline", X1, "--a", "1,0,0", "--b", "1,1,1"], "RANK_DROP"),
        (["graph-poly", "--inline", X1], "NO_INPUT"),
    ],
)
def test_error_codes(argv, code):
    doc, status = call(*argv)
    assert status == 2 and doc["error"]["code"] == code


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "zonotopal", "hilb", "--inline", X1],
        capture_output=True, text=True, check=False,
    )
    assert out.returncode == 0
    assert json.loads(out.stdout)["result"]["hilb"] == [1, 2]
