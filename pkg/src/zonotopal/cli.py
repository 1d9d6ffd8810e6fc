"""Command line entry point: ``zonotopal <command> [input] [flags]``; output is JSON."""

from __future__ import annotations

import argparse
import os
import sys
import tempfile
import time
from pathlib import Path
from typing import Callable

from . import activity, hilbert, ideals
from .errors import ZonotopalError, check_k
from .fixtures import run_path
from .graphs import chromatic_polynomial, flow_from_tutte, flow_polynomial, graph_to_config, parse_graph
from .io import config_json, dumps, parse_matrix, parse_upperset, poly_json, subset_json, upperset_json
from .matroid import VectorConfig, members, selector_from_name

COMMANDS = (
    "flats", "tutte", "hilb", "pspace", "basis", "kernel",
    "ideal", "verify", "cox-hilb", "graph-poly",
)


def _load_config(args) -> VectorConfig:
    if args.inline is not None:
        return parse_matrix(args.inline.replace(";", "\n"))
    if args.input is None:
        raise ZonotopalError("no input given (path or --inline)", "NO_INPUT")
    text = _read(args.input)
    if args.graph:
        return graph_to_config(parse_graph(text))
    return parse_matrix(text)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ZonotopalError(f"cannot read {path}: {exc.strerror}", "IO_ERROR") from None


def _series(s) -> list[int]:
    return s.as_list()


def cmd_flats(X, args) -> dict:
    J = parse_upperset(args.upperset, X) if args.upperset else None
    out = []
    for f in X.lattice:
        entry = {"rank": f.rank, **subset_json(f.mask)}
        if J is not None:
            entry["chi"] = int(f.mask in J)
        out.append(entry)
    hyper = [list(members(h.mask)) for h in X.lattice.hyperplanes]
    return {"flats": out, "hyperplanes": hyper, "loops": list(members(X.loops)), "coloops": list(members(X.coloops))}


def cmd_tutte(X, args) -> dict:
    T = hilbert.tutte(X)
    dc = hilbert.tutte_deletion_contraction(X)
    return {
        "tutte": [[i, j, c] for (i, j), c in T.coeffs],
        "text": str(T),
        "deletion_contraction_agrees": T == dc,
    }


def cmd_hilb(X, args) -> dict:
    J = parse_upperset(args.upperset, X)
    methods = hilbert.METHODS if args.method == "all" else (args.method,)
    res = hilbert.hilb_all(X, args.k, J, methods)
    if not res["series"]:
        code = next(iter(res["skipped"].values()))
        raise ZonotopalError(f"method {args.method} not applicable", code)
    first = next(iter(res["series"].values()))
    return {
        "hilb": _series(first),
        "dim": first.dim,
        "methods": {m: _series(s) for m, s in res["series"].items()},
        "skipped": res["skipped"],
        "agree": res["agree"],
    }


def cmd_pspace(X, args) -> dict:
    J = parse_upperset(args.upperset, X)
    P = ideals.p_space(X, args.k, J)
    S = ideals.s_set_labeled(X, args.k, J)
    return {
        "hilb": P.dims,
        "dim": P.dim,
        "basis": [poly_json(f) for f in P.polys()],
        "s_set": [{"Y": list(members(s.Y)), "monomial": list(s.monomial)} for s in S],
    }


def cmd_basis(X, args) -> dict:
    J = parse_upperset(args.upperset, X)
    bases = activity.enumerate_bases(X)
    out = {
        "bases": [
            {
                "B": list(b.indices),
                "external": list(members(b.externally_active)),
                "internal": list(members(b.internally_active)),
            }
            for b in bases
        ],
        "semi_internal": [list(b.indices) for b in activity.semi_internal_bases(X, J)],
    }
    if args.k >= 0:
        gamma = activity.gamma_set(X, args.k, J)
        polys = activity.basis_polys(X, args.k, J)
        out["gamma"] = [
            {"B": list(g.basis.indices), "I": list(members(g.I)), "a": list(g.a)} for g in gamma
        ]
        out["polys"] = [poly_json(f, normalize=False) for f in polys]
    else:
        K = ideals.kernel_of_i(X, -1, J, args.cap).basis
        cands = activity.tilde_b_minus(X, J)
        out["heuristic_tilde_b_minus"] = [
            {"poly": poly_json(f, normalize=False), "in_kernel": K.contains(f)} for f in cands
        ]
    return out


def cmd_kernel(X, args) -> dict:
    J = parse_upperset(args.upperset, X)
    if args.selector:
        res = ideals.kernel_of_iprime(X, args.k, J, selector_from_name(args.selector), args.cap)
        which = f"I'[{args.selector}]"
    else:
        res = ideals.kernel_of_i(X, args.k, J, args.cap)
        which = "I"
    return {
        "ideal": which,
        "hilb": _series(res.hilb),
        "dim": res.hilb.dim,
        "basis": [poly_json(f) for f in res.basis.polys()],
    }


def cmd_ideal(X, args) -> dict:
    J = parse_upperset(args.upperset, X)
    sel = selector_from_name(args.selector or "auto")
    prime = ideals.iprime_generators(X, args.k, J, sel)
    full = ideals.i_generators(X, args.k, J)
    return {
        "iprime": [
            {"flat": list(members(g.flat)), "normal": list(g.normals[0]), "exponent": g.exponents[0]}
            for g in prime
        ],
        "i_generator_count": len(full),
        "i_flats": sorted({tuple(members(g.flat)) for g in full}, key=lambda s: (len(s), s)),
        "selector": sel.name,
    }


def cmd_verify(X, args) -> dict:
    J = parse_upperset(args.upperset, X)
    names = ["auto"] + [f"seeded:{s}" for s in (1, 2)]
    rep = ideals.verify_main_theorem(X, args.k, J, [selector_from_name(n) for n in names], iprime_kernels=True)
    out = {"main_theorem": rep.to_dict(), "dim": sum(rep.dims["P"])}
    seqs = {}
    for x in range(X.N):
        if ideals.exact_sequence_precondition(X, args.k, J, x) is None:
            seqs[str(x)] = ideals.verify_exact_sequence(X, args.k, J, x).to_dict()
    out["exact_sequences"] = seqs
    out["passed"] = rep.passed and all(s["passed"] for s in seqs.values())
    return out


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise ZonotopalError(f"expected integers: {text!r}", "PARSE_ERROR") from None


def cmd_cox_hilb(X, args) -> dict:
    if args.a is None:
        raise ZonotopalError("--a is required", "NO_INPUT")
    a = _int_list(args.a)
    if (args.b is None) == (args.c0 is None):
        raise ZonotopalError("give exactly one of --b (semi-external) or --c0 (semi-internal)", "NO_INPUT")
    if args.b is not None:
        b = _int_list(args.b)
        s = hilbert.cox_semiexternal_hilb(X, a, b)
        ref = hilbert.cox_semiexternal_reference(X, a, b)
        kind = "semi-external"
    else:
        c0 = sum(1 << i for i in _int_list(args.c0))
        s = hilbert.cox_semiinternal_hilb(X, a, c0)
        ref = hilbert.cox_semiinternal_reference(X, a, c0)
        kind = "semi-internal"
    return {"kind": kind, "hilb": _series(s), "reference": _series(ref), "agree": s == ref}


def cmd_graph_poly(X, args) -> dict:
    if not args.graph:
        raise ZonotopalError("graph-poly needs --graph input", "NO_INPUT")
    G = parse_graph(_read(args.input))
    T = hilbert.tutte(X)
    flow = flow_polynomial(G)
    return {
        "flow": flow,
        "chromatic": chromatic_polynomial(G),
        "flow_matches_tutte": flow == flow_from_tutte(T, X.N, X.r),
        "tutte": [[i, j, c] for (i, j), c in T.coeffs],
    }


HANDLERS: dict[str, Callable] = {
    "flats": cmd_flats,
    "tutte": cmd_tutte,
    "hilb": cmd_hilb,
    "pspace": cmd_pspace,
    "basis": cmd_basis,
    "kernel": cmd_kernel,
    "ideal": cmd_ideal,
    "verify": cmd_verify,
    "cox-hilb": cmd_cox_hilb,
    "graph-poly": cmd_graph_poly,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="zonotopal", description=__doc__)
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("input", nargs="?", help="matrix file, graph file (--graph), fixture file/dir (verify), or -")
    p.add_argument("--inline", help="matrix rows separated by ';'")
    p.add_argument("--graph", action="store_true", help="read input as a graph file")
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--upperset", default="central")
    p.add_argument("--method", default="all", choices=hilbert.METHODS + ("all",))
    p.add_argument("--selector", default=None, help="auto | seeded:N (uses I' instead of I)")
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--a", help="multiplicities for cox-hilb")
    p.add_argument("--b", help="hyperplane mask for cox-hilb (semi-external)")
    p.add_argument("--c0", help="flat generators for cox-hilb (semi-internal)")
    p.add_argument("--out", help="write JSON here instead of stdout")
    p.add_argument("--timing", action="store_true", help="include wall-clock seconds (not reproducible)")
    return p


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    target = Path(out)
    fd, tmp = tempfile.mkstemp(dir=target.parent or ".", prefix=".zonotopal-")
    with os.fdopen(fd, "w", encoding="utf-8") as fh:
        fh.write(text)
    os.replace(tmp, target)


def _fixture_mode(args) -> bool:
    return args.command == "verify" and args.input is not None and (
        Path(args.input).is_dir() or args.input.endswith(".json")
    )


def run(argv: list[str] | None = None) -> tuple[dict, int]:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        check_k(args.k)
        if _fixture_mode(args):
            results = run_path(args.input)
            doc = {"command": "verify", "fixtures": results, "passed": all(r["passed"] for r in results)}
            status = 0 if doc["passed"] else 1
        else:
            X = _load_config(args)
            payload = HANDLERS[args.command](X, args)
            doc = {
                "command": args.command,
                "input": {"config": config_json(X), "k": args.k, "upperset": args.upperset},
                "result": payload,
            }
            if args.command not in ("flats", "tutte", "graph-poly", "cox-hilb"):
                doc["input"]["upperset_flats"] = upperset_json(parse_upperset(args.upperset, X))
            status = 0 if payload.get("passed", True) and payload.get("agree", True) else 1
    except ZonotopalError as exc:
        doc = {"command": args.command, "error": {"code": exc.code, "message": str(exc)}}
        status = 2
    if args.timing:
        doc["timing_seconds"] = round(time.perf_counter() - start, 6)
    _write(dumps(doc), args.out)
    return doc, status


def main(argv: list[str] | None = None) -> int:
    return run(argv)[1]


if __name__ == "__main__":
    sys.exit(main())
