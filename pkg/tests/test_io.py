"""Matrix and upper-set parsing, fixture polynomials and JSON serialization."""

from __future__ import annotations

import json
from fractions import Fraction

import pytest

from zonotopal.errors import ZonotopalError
from zonotopal.fixtures import parse_poly, run_fixture
from zonotopal.io import dumps, format_matrix, parse_matrix, parse_upperset, poly_json, upperset_json
from zonotopal.matroid import VectorConfig
from zonotopal.poly import MPoly

X1 = VectorConfig.from_rows([[1, 0, 1], [0, 1, 1]])


def test_parse_matrix_rationals_and_comments():
    X = parse_matrix("# X\n1 0 1/2\n0 1 -3  # tail\n")
    assert X.columns[2] == (Fraction(1, 2), Fraction(-3))
    assert parse_matrix(format_matrix(X)) == X


@pytest.mark.parametrize(
    "text, code",
    [("", "PARSE_ERROR"), ("1 a\n", "PARSE_ERROR"), ("1 0\n0\n", "RAGGED"), ("1 2\n2 4\n", "NOT_SPANNING")],
)
def test_parse_matrix_errors(text, code):
    with pytest.raises(ZonotopalError) as e:
        parse_matrix(text)
    assert e.value.code == code


def test_upperset_specs(tmp_path):
    J2 = {0b001, 0b100, 0b111}
    assert set(parse_upperset("gens:0;2", X1).flats) == J2
    assert set(parse_upperset("mask:101", X1).flats) == J2
    assert set(parse_upperset({"generators": [[0], [2]]}, X1).flats) == J2
    assert set(parse_upperset("above:0", X1).flats) == {0b001, 0b111}
    assert len(parse_upperset("full", X1)) == 5 and len(parse_upperset("central", X1)) == 1
    f = tmp_path / "J.json"
    f.write_text(json.dumps({"mask": [1, 0, 1]}))
    assert set(parse_upperset(f"@{f}", X1).flats) == J2
    assert upperset_json(parse_upperset("gens:0;2", X1)) == [[0], [2], [0, 1, 2]]


@pytest.mark.parametrize("spec, code", [("gens:7", "BAD_INDEX"), ("mask:1x1", "PARSE_ERROR"), ("bogus", "PARSE_ERROR")])
def test_upperset_errors(spec, code):
    with pytest.raises(ZonotopalError) as e:
        parse_upperset(spec, X1)
    assert e.value.code == code


def test_parse_poly_and_json():
    f = parse_poly("x^2 - 2*x*y + 1/2", 2)
    assert f == MPoly(2, {(2, 0): Fraction(1), (1, 1): Fraction(-2), (0, 0): Fraction(1, 2)})
    doc = poly_json(f, normalize=False)
    assert doc["terms"][0] == ["1", [2, 0]] and doc["space"] == "point"
    assert dumps({"b": 1, "a": [1]}) == '{\n  "a": [\n    1\n  ],\n  "b": 1\n}\n'


def test_fixture_runner_reports_wrong_expectations():
    doc = {"matrix": [[1, 0, 1], [0, 1, 1]], "checks": [
        {"kind": "pspace", "k": 0, "J": "central", "expect": {"dims": [1, 2]}},
        {"kind": "pspace", "k": 0, "J": "central", "expect": {"dims": [1, 1]}},
        {"kind": "kernel", "k": -2, "J": "central", "expect": {}, "expect_error": "K_BELOW_MINUS_ONE"},
        {"kind": "kernel", "k": 0, "J": "central", "expect": {"dims": [1, 2]}, "expect_error": "X"},
    ]}
    res = run_fixture(doc)
    assert [c["passed"] for c in res["checks"]] == [True, False, True, False]
