"""Graph configurations and flow / chromatic polynomials against brute-force counts."""

from __future__ import annotations

import itertools

import pytest

from zonotopal.errors import ZonotopalError
from zonotopal.graphs import (
    GraphInput,
    chromatic_polynomial,
    flow_from_tutte,
    flow_polynomial,
    graph_to_config,
    parse_graph,
)
from zonotopal.hilbert import tutte

GRAPHS = {
    "K3": GraphInput(3, ((0, 1), (1, 2), (0, 2))),
    "K4": GraphInput(4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))),
    "C4": GraphInput(4, ((0, 1), (1, 2), (2, 3), (3, 0))),
    "theta": GraphInput(2, ((0, 1), (0, 1), (1, 0))),
    "path": GraphInput(3, ((0, 1), (1, 2))),
    "diamond": GraphInput(4, ((0, 1), (1, 2), (2, 0), (1, 3), (3, 2))),
}


def evaluate(p: list[int], t: int) -> int:
    return sum(c * t**i for i, c in enumerate(p))


def count_flows(G: GraphInput, t: int) -> int:
    n = 0
    for vals in itertools.product(range(1, t), repeat=len(G.edges)):
        net = [0] * G.n_vertices
        for (u, v), f in zip(G.edges, vals):
            net[u] -= f
            net[v] += f
        n += all(x % t == 0 for x in net)
    return n


def count_colourings(G: GraphInput, t: int) -> int:
    return sum(
        all(c[u] != c[v] for u, v in G.edges)
        for c in itertools.product(range(t), repeat=G.n_vertices)
    )


@pytest.mark.parametrize("name", sorted(GRAPHS))
def test_flow_polynomial_counts_flows(name):
    G = GRAPHS[name]
    p = flow_polynomial(G)
    for t in range(2, 5):
        assert evaluate(p, t) == count_flows(G, t)
    X = graph_to_config(G)
    assert p == flow_from_tutte(tutte(X), X.N, X.r)


@pytest.mark.parametrize("name", sorted(GRAPHS))
def test_chromatic_polynomial_counts_colourings(name):
    G = GRAPHS[name]
    p = chromatic_polynomial(G)
    for t in range(0, 5):
        assert evaluate(p, t) == count_colourings(G, t)


def test_closed_forms():
    assert flow_polynomial(GRAPHS["K4"]) == [-6, 11, -6, 1]
    assert chromatic_polynomial(GRAPHS["K4"]) == [0, -6, 11, -6, 1]
    assert chromatic_polynomial(GRAPHS["path"]) == [0, 1, -2, 1]
    # a tree carries no nowhere-zero flow
    assert flow_polynomial(GRAPHS["path"]) == []


def test_incidence_matrix():
    X = graph_to_config(GRAPHS["K3"])
    assert [list(map(int, c)) for c in X.columns] == [[-1, 1], [0, -1], [-1, 0]]


def test_bad_graphs():
    with pytest.raises(ZonotopalError) as e:
        graph_to_config(GraphInput(4, ((0, 1), (2, 3))))
    assert e.value.code == "DISCONNECTED_GRAPH"
    with pytest.raises(ZonotopalError) as e:
        GraphInput(2, ((0, 5),))
    assert e.value.code == "BAD_EDGE"


def test_parse_graph():
    G = parse_graph("# triangle\n3 3\n1 2\n2 3\n1 3\n")
    assert G == GRAPHS["K3"]
    for bad in ("3\n1 2\n", "2 2\n1 2\n", "2 1\n1 x\n"):
        with pytest.raises(ZonotopalError) as e:
            parse_graph(bad)
        assert e.value.code == "PARSE_ERROR"
