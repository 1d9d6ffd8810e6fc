"""Text/JSON ingestion and deterministic serialization."""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .errors import ZonotopalError
from .matroid import (
    UpperSet,
    VectorConfig,
    above,
    central,
    from_hyperplane_mask,
    full_lattice,
    members,
    to_mask,
    upper_set,
)
from .poly import MPoly, normalized


def parse_rational(tok: str) -> Fraction:
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise ZonotopalError(f"not a rational number: {tok!r}", "PARSE_ERROR") from None


def parse_matrix(text: str) -> VectorConfig:
    """Rows of whitespace-separated rationals; columns are the vectors."""
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append([parse_rational(t) for t in line.split()])
    if not rows:
        raise ZonotopalError("empty matrix", "PARSE_ERROR")
    if len({len(r) for r in rows}) != 1:
        raise ZonotopalError("rows have different lengths", "RAGGED")
    return VectorConfig.from_rows(rows)


def format_rational(q) -> str:
    return str(Fraction(q))


def format_matrix(X: VectorConfig) -> str:
    return "\n".join(" ".join(format_rational(v) for v in row) for row in X.rows()) + "\n"


def _parse_index_list(body: str, N: int) -> list[int]:
    out = []
    for tok in body.replace(",", " ").split():
        try:
            i = int(tok)
        except ValueError:
            raise ZonotopalError(f"bad index {tok!r}", "BAD_INDEX") from None
        if not 0 <= i < N:
            raise ZonotopalError(f"index {i} outside 0..{N - 1}", "BAD_INDEX")
        out.append(i)
    return out


def parse_upperset(spec: str | dict | list, X: VectorConfig) -> UpperSet:
    """Presets: ``central``, ``full``, ``above:i,j``, ``mask:b1b2...`` (hyperplane
    order of the lattice), ``gens:i,j;k`` (generator subsets, 0-based), ``@file.json``.

    A JSON document may be ``{"generators": [[...], ...]}``, ``{"mask": [...]}``,
    ``{"above": [...]}`` or ``{"preset": "central" | "full"}``.
    """
    if isinstance(spec, (dict, list)):
        return _upperset_from_json(spec, X)
    spec = spec.strip()
    if spec.startswith("@"):
        try:
            doc = json.loads(Path(spec[1:]).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise ZonotopalError(f"cannot read upper set file: {exc}", "PARSE_ERROR") from None
        return _upperset_from_json(doc, X)
    if spec == "central":
        return central(X)
    if spec == "full":
        return full_lattice(X)
    kind, _, body = spec.partition(":")
    if kind == "above":
        return above(X, X.closure(to_mask(_parse_index_list(body, X.N))))
    if kind == "mask":
        bits = [c for c in body if c in "01"]
        if len(bits) != len(body.replace(",", "").replace(" ", "")):
            raise ZonotopalError(f"mask must be 0/1 digits: {body!r}", "PARSE_ERROR")
        return from_hyperplane_mask(X, [int(c) for c in bits])
    if kind == "gens":
        groups = [g for g in body.split(";")]
        return upper_set(X, [_parse_index_list(g, X.N) for g in groups])
    raise ZonotopalError(f"unknown upper set spec {spec!r}", "PARSE_ERROR")


def _upperset_from_json(doc: Any, X: VectorConfig) -> UpperSet:
    if isinstance(doc, list):
        doc = {"generators": doc}
    if not isinstance(doc, dict):
        raise ZonotopalError("upper set JSON must be an object or list", "PARSE_ERROR")
    if "preset" in doc:
        return parse_upperset(str(doc["preset"]), X)
    if "generators" in doc:
        gens = []
        for g in doc["generators"]:
            if any(not isinstance(i, int) or not 0 <= i < X.N for i in g):
                raise ZonotopalError(f"bad generator {g}", "BAD_INDEX")
            gens.append(list(g))
        return upper_set(X, gens)
    if "mask" in doc:
        return from_hyperplane_mask(X, [int(b) for b in doc["mask"]])
    if "above" in doc:
        return above(X, X.closure(to_mask(_parse_index_list(" ".join(map(str, doc["above"])), X.N))))
    raise ZonotopalError("upper set JSON needs generators, mask, above or preset", "PARSE_ERROR")


# JSON payloads ---------------------------------------------------------------


def subset_json(mask: int) -> dict:
    idx = list(members(mask))
    return {"idx0": idx, "label": [f"x{i + 1}" for i in idx]}


def upperset_json(J: UpperSet) -> list[list[int]]:
    return sorted((list(members(m)) for m in J.flats), key=lambda s: (len(s), s))


def poly_json(f: MPoly, normalize: bool = True) -> dict:
    g = normalized(f) if normalize else f
    terms = sorted(g.terms.items(), key=lambda t: (-sum(t[0]), tuple(-x for x in t[0])))
    return {"space": g.space, "terms": [[format_rational(c), list(a)] for a, c in terms]}


def config_json(X: VectorConfig) -> dict:
    return {"r": X.r, "N": X.N, "rows": [[format_rational(v) for v in row] for row in X.rows()]}


def dumps(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
