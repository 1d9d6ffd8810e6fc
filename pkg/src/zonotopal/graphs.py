"""Graphs as vector configurations; flow and chromatic polynomials."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ZonotopalError
from .hilbert import TuttePoly, hilb_kernel, tutte
from .matroid import VectorConfig, central
from .series import upoly_add, upoly_pow, upoly_trim


@dataclass(frozen=True)
class GraphInput:
    """Vertices 0..n_vertices-1; edges as (tail, head) pairs, 0-based."""

    n_vertices: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for u, v in self.edges:
            if not (0 <= u < self.n_vertices and 0 <= v < self.n_vertices):
                raise ZonotopalError(f"edge ({u}, {v}) out of range", "BAD_EDGE")

    def is_connected(self) -> bool:
        if self.n_vertices == 0:
            return False
        adj = {i: set() for i in range(self.n_vertices)}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        seen = {0}
        stack = [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n_vertices


def graph_to_config(G: GraphInput) -> VectorConfig:
    """Oriented incidence matrix (tail -1, head +1) with the last vertex's row removed."""
    if not G.is_connected():
        raise ZonotopalError("graph is not connected", "DISCONNECTED_GRAPH")
    if G.n_vertices < 2:
        raise ZonotopalError("need at least two vertices", "DISCONNECTED_GRAPH")
    r = G.n_vertices - 1
    cols = []
    for u, v in G.edges:
        col = [0] * G.n_vertices
        col[u] -= 1
        col[v] += 1
        cols.append(col[:r])
    return VectorConfig.from_columns(cols, r)


def _shifted(p: list[int], shift: int) -> list[int]:
    return [0] * shift + list(p)


def flow_polynomial(G: GraphInput) -> list[int]:
    """(t-1)^{N-r} · hilb(P(X_G, -1, {X_G}), 1/(1-t)), as coefficients in t.

    With u = 1 - t the expression is Σ_d h_d (-1)^{N-r} u^{N-r-d}. A nonzero
    h_d with d > N - r would leave a pole and is reported as an error.
    """
    X = graph_to_config(G)
    g = X.N - X.r
    h = hilb_kernel(X, -1, central(X)).as_list()
    if len(h) > g + 1:
        raise ZonotopalError("flow substitution did not clear denominators", "NOT_POLYNOMIAL")
    out: list[int] = []
    one_minus_t = [1, -1]
    for d, hd in enumerate(h):
        if hd:
            term = [(-1) ** g * hd * c for c in upoly_pow(one_minus_t, g - d)]
            out = upoly_add(out, term)
    return upoly_trim(out)


def flow_from_tutte(T: TuttePoly, N: int, r: int) -> list[int]:
    """(-1)^{N-r} T(0, 1-t)."""
    out: list[int] = []
    for (i, j), c in T.coeffs:
        if i == 0:
            out = upoly_add(out, [(-1) ** (N - r) * c * x for x in upoly_pow([1, -1], j)])
    return upoly_trim(out)


def chromatic_polynomial(G: GraphInput) -> list[int]:
    """(-1)^r t^c T(1-t, 0) with c = 1 connected component."""
    X = graph_to_config(G)
    T = tutte(X)
    out: list[int] = []
    for (i, j), c in T.coeffs:
        if j == 0:
            out = upoly_add(out, [(-1) ** X.r * c * x for x in upoly_pow([1, -1], i)])
    return upoly_trim(_shifted(out, 1))


def parse_graph(text: str) -> GraphInput:
    """First line "V E", then E lines "tail head" with 1-based vertices."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or len(lines[0]) != 2:
        raise ZonotopalError("graph header must be 'V E'", "PARSE_ERROR")
    try:
        nv, ne = int(lines[0][0]), int(lines[0][1])
        edges = tuple((int(a) - 1, int(b) - 1) for a, b in (ln for ln in lines[1:]))
    except ValueError as exc:
        raise ZonotopalError(f"bad graph token: {exc}", "PARSE_ERROR") from None
    if len(edges) != ne:
        raise ZonotopalError(f"expected {ne} edges, found {len(edges)}", "PARSE_ERROR")
    return GraphInput(nv, edges)
