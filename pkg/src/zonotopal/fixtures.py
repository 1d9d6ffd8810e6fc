"""Checked-in worked examples: a small JSON format and its runner.

A fixture file holds ``matrix`` (rows), optional ``uppersets`` (name -> spec
string as accepted by ``parse_upperset``) and a list of ``checks``. Each check
has a ``kind`` plus arguments and an ``expect`` value; the runner recomputes
the value and compares it. Polynomials are strings in x, y, z (or t1, t2, ...).
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable

import sympy

from . import activity, hilbert, ideals
from .errors import ZonotopalError
from .io import parse_upperset
from .matroid import (
    NormalSelector,
    SeededSelector,
    VectorConfig,
    contract,
    delete,
    hat_j_over_x,
    members,
)
from .poly import NORMAL, POINT, MPoly, same_space, span_reduce


def var_names(r: int) -> list[str]:
    return list("xyz") if r <= 3 else [f"t{i + 1}" for i in range(r)]


def parse_poly(text: str, r: int, space: str = POINT, names: list[str] | None = None) -> MPoly:
    names = list(names or var_names(r))[:r]
    syms = sympy.symbols(names)
    expr = sympy.sympify(text.replace("^", "**"), locals=dict(zip(names, syms)))
    poly = sympy.Poly(expr, *syms)
    terms = {tuple(m): Fraction(int(c.p), int(c.q)) for m, c in poly.terms() if c}
    return MPoly(r, terms, space)


class FixtureContext:
    def __init__(self, doc: dict):
        self.doc = doc
        self.X = VectorConfig.from_rows(doc["matrix"])
        self.uppersets = {
            name: parse_upperset(spec, self.X) for name, spec in doc.get("uppersets", {}).items()
        }

    def J(self, name: str, X: VectorConfig | None = None):
        if name in self.uppersets and X is None:
            return self.uppersets[name]
        return parse_upperset(name, X or self.X)


def _config_and_upper(ctx: FixtureContext, chk: dict):
    X = ctx.X
    J = ctx.J(chk["J"]) if "J" in chk else None
    if "delete" in chk:
        m = delete(X, J, chk["delete"])
        return m.config, m.upper
    if "contract" in chk:
        m = contract(X, J, chk["contract"])
        return m.config, m.upper
    return X, J


def _span_check(space, chk: dict, r: int) -> tuple[bool, Any]:
    exp = chk["expect"]
    got = {"dims": space.dims}
    ok = True
    if "dims" in exp:
        ok &= space.dims == exp["dims"]
    if "span" in exp:
        names = chk.get("vars")
        want = (
            span_reduce([parse_poly(p, r, names=names) for p in exp["span"]], r) if exp["span"] else None
        )
        ok &= (space.dim == 0) if want is None else same_space(space, want)
    return ok, got


def check_pspace(ctx, chk):
    X, J = _config_and_upper(ctx, chk)
    return _span_check(ideals.p_space(X, chk["k"], J), chk, X.r)


def check_kernel(ctx, chk):
    X, J = _config_and_upper(ctx, chk)
    return _span_check(ideals.kernel_of_i(X, chk["k"], J).basis, chk, X.r)


def check_kernel_of(ctx, chk):
    """Kernel of an explicit generator list (normal variables)."""
    r = chk.get("r", ctx.X.r)
    gens = [parse_poly(g, r, NORMAL) for g in chk["generators"]]
    cap = chk.get("cap", 12)
    return _span_check(ideals.kernel(gens, r, cap).basis, chk, r)


def check_ideal_equivalent(ctx, chk):
    """The listed generators cut out the same kernel as I(X, k, J)."""
    X, J = _config_and_upper(ctx, chk)
    gens = [parse_poly(g, X.r, NORMAL, chk.get("vars")) for g in chk["generators"]]
    mine = ideals.kernel_of_i(X, chk["k"], J).basis
    theirs = ideals.kernel(gens, X.r, ideals.default_cap(X, chk["k"]) + 4).basis
    ok = same_space(mine, theirs) == chk["expect"]
    return ok, {"dims": mine.dims, "listed_dims": theirs.dims}


def check_iprime_generators(ctx, chk):
    X, J = _config_and_upper(ctx, chk)
    gens = ideals.iprime_generators(X, chk["k"], J)
    got = sorted(
        [list(g.normals[0]), g.exponents[0]] for g in gens
    )
    want = sorted([list(n), e] for n, e in chk["expect"])
    return got == want, got


def check_s_set(ctx, chk):
    X, J = _config_and_upper(ctx, chk)
    got = sorted(list(members(s.Y)) for s in ideals.s_set_labeled(X, chk["k"], J))
    want = sorted(sorted(y) for y in chk["expect"])
    return got == want, got


def check_bases(ctx, chk):
    got = [list(rec.indices) for rec in activity.enumerate_bases(ctx.X)]
    return got == chk["expect"], got


def check_bases_minus(ctx, chk):
    got = [list(rec.indices) for rec in activity.semi_internal_bases(ctx.X, ctx.J(chk["J"]))]
    return got == chk["expect"], got


def check_external_activity(ctx, chk):
    got = {
        ",".join(map(str, rec.indices)): list(members(rec.externally_active))
        for rec in activity.enumerate_bases(ctx.X)
    }
    want = chk["expect"]
    return all(got.get(k) == v for k, v in want.items()), got


def check_gamma(ctx, chk):
    g = activity.gamma_set(ctx.X, chk["k"], ctx.J(chk["J"]))
    got = [[list(e.basis.indices), list(members(e.I)), list(e.a)] for e in g]
    return got == chk["expect"], got


def check_basis_polys(ctx, chk):
    X = ctx.X
    got = activity.basis_polys(X, chk["k"], ctx.J(chk["J"]))
    want = [parse_poly(p, X.r) for p in chk["expect"]]
    return len(got) == len(want) and all(a == b for a, b in zip(got, want)), [str(p) for p in got]


def check_hilb(ctx, chk):
    X, J = _config_and_upper(ctx, chk)
    res = hilbert.hilb_all(X, chk["k"], J)
    got = {m: s.as_list() for m, s in res["series"].items()}
    ok = res["agree"] and all(v == chk["expect"] for v in got.values())
    return ok, got


def check_upperset(ctx, chk):
    X, J = _config_and_upper(ctx, chk)
    if "hat_over" in chk:
        m = hat_j_over_x(ctx.X, ctx.J(chk["J"]), chk["hat_over"])
        J = m.upper
    got = sorted((list(members(m)) for m in J.flats), key=lambda s: (len(s), s))
    want = sorted((sorted(s) for s in chk["expect"]), key=lambda s: (len(s), s))
    return got == want, got


def check_matrix(ctx, chk):
    X, _ = _config_and_upper(ctx, chk)
    want = VectorConfig.from_rows(chk["expect"])
    return X == want, [[str(v) for v in row] for row in X.rows()]


def check_exact_sequence(ctx, chk):
    rep = ideals.verify_exact_sequence(
        ctx.X, chk["k"], ctx.J(chk["J"]), chk["x"], force=chk.get("force", False)
    )
    got = {c.name: c.holds for c in rep.checks}
    want = chk["expect"]
    return all(got.get(k) == v for k, v in want.items()), {"checks": got, "dims": rep.dims}


def check_main_theorem(ctx, chk):
    sels = [NormalSelector()] + [SeededSelector(s) for s in chk.get("seeds", [1])]
    rep = ideals.verify_main_theorem(ctx.X, chk["k"], ctx.J(chk["J"]), sels)
    got = {c.name: c.holds for c in rep.checks}
    want = chk["expect"]
    return all(got.get(k) == v for k, v in want.items()), {"checks": got, "dims": rep.dims}


def check_membership(ctx, chk):
    X, J = _config_and_upper(ctx, chk)
    K = ideals.kernel_of_i(X, chk["k"], J).basis
    f = parse_poly(chk["poly"], X.r)
    got = K.contains(f)
    return got == chk["expect"], got


def check_tilde_b_minus(ctx, chk):
    X = ctx.X
    got = activity.tilde_b_minus(X, ctx.J(chk["J"]))
    want = [parse_poly(p, X.r) for p in chk["expect"]]
    return len(got) == len(want) and all(a == b for a, b in zip(got, want)), [str(p) for p in got]


CHECKS: dict[str, Callable] = {
    "pspace": check_pspace,
    "kernel": check_kernel,
    "kernel_of": check_kernel_of,
    "ideal_equivalent": check_ideal_equivalent,
    "iprime_generators": check_iprime_generators,
    "s_set": check_s_set,
    "bases": check_bases,
    "bases_minus": check_bases_minus,
    "external_activity": check_external_activity,
    "gamma": check_gamma,
    "basis_polys": check_basis_polys,
    "hilb": check_hilb,
    "upperset": check_upperset,
    "matrix": check_matrix,
    "exact_sequence": check_exact_sequence,
    "main_theorem": check_main_theorem,
    "membership": check_membership,
    "tilde_b_minus": check_tilde_b_minus,
}


def run_fixture(doc: dict) -> dict:
    ctx = FixtureContext(doc)
    results = []
    for chk in doc["checks"]:
        kind = chk["kind"]
        if kind not in CHECKS:
            raise ZonotopalError(f"unknown fixture check {kind!r}", "BAD_FIXTURE")
        try:
            ok, got = CHECKS[kind](ctx, chk)
            ok = ok and "expect_error" not in chk
        except ZonotopalError as exc:
            ok = chk.get("expect_error") == exc.code
            got = {"error": exc.code}
        results.append({"kind": kind, "label": chk.get("label", kind), "passed": bool(ok), "got": got})
    return {
        "name": doc.get("name", ""),
        "passed": all(r["passed"] for r in results),
        "checks": results,
    }


def run_path(path: str | Path) -> list[dict]:
    path = Path(path)
    files = sorted(path.glob("*.json")) if path.is_dir() else [path]
    out = []
    for f in files:
        doc = json.loads(f.read_text())
        res = run_fixture(doc)
        res["file"] = f.name
        out.append(res)
    return out
