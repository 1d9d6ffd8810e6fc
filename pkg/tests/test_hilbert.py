"""Tutte polynomials, the Hilbert-series routes and the Cox module formulas."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zonotopal import activity, hilbert
from zonotopal.corpus import matroid_corpus, random_upper_sets
from zonotopal.errors import MissingHyperplanes, ZonotopalError
from zonotopal.graphs import GraphInput, graph_to_config
from zonotopal.matroid import VectorConfig, central, full_lattice, upper_set
from zonotopal.series import HilbSeries

X1 = VectorConfig.from_rows([[1, 0, 1], [0, 1, 1]])
X4 = VectorConfig.from_rows([[1, 1, 0, 0, 1, 1, 0], [1, 1, 1, 1, 0, 0, 0], [0, 0, 0, 0, 1, 1, 1]])
K4 = graph_to_config(GraphInput(4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))))


def test_tutte_of_small_matroids():
    assert hilbert.tutte(X1).as_dict() == {(2, 0): 1, (1, 0): 1, (0, 1): 1}
    assert str(hilbert.tutte(X1)) == "x^2 + x + y"
    # standard table for the complete graph on four vertices
    assert hilbert.tutte(K4).as_dict() == {
        (3, 0): 1, (2, 0): 3, (1, 0): 2, (1, 1): 4, (0, 1): 2, (0, 2): 3, (0, 3): 1,
    }
    assert hilbert.tutte_deletion_contraction(K4) == hilbert.tutte(K4)


def test_tutte_counts_bases():
    for X in matroid_corpus(max_n=5):
        T = hilbert.tutte(X)
        n_bases = sum(1 for _ in activity.enumerate_bases(X))
        assert T(1, 1) == n_bases


def test_internal_series_from_tutte():
    T = hilbert.tutte(X4)
    assert hilbert.tutte_hilb(T, X4.N, X4.r, -1) == HilbSeries.of(1, 3, 3, 1)
    assert hilbert.hilb_kernel(X4, -1, central(X4)) == HilbSeries.of(1, 3, 3, 1)


def test_hilb_all_routes_agree_on_x1():
    J2 = upper_set(X1, [[0], [2]])
    res = hilbert.hilb_all(X1, 0, J2)
    assert res["agree"] and set(res["series"]) == set(hilbert.METHODS)
    assert res["series"]["kernel"] == HilbSeries.of(1, 2, 2)


def test_hilb_all_skip_codes():
    J = upper_set(X1, [[0]])
    res = hilbert.hilb_all(X1, -1, J)
    assert res["skipped"]["recursive"] == "J_MISSING_HYPERPLANES_FOR_INTERNAL"
    assert res["skipped"]["activity"] == "K_TOO_SMALL"
    assert res["skipped"]["subset"] == "ONLY_K_ZERO"
    with pytest.raises(MissingHyperplanes):
        hilbert.hilb_recursive(X1, -1, J)


@settings(max_examples=20, deadline=None)
@given(st.data())
def test_recursion_matches_kernel(data):
    X = data.draw(st.sampled_from(matroid_corpus(max_n=5)))
    k = data.draw(st.sampled_from([-1, 0, 1, 2]))
    (J,) = random_upper_sets(X, 1, seed=data.draw(st.integers(0, 50)))
    if k == -1:
        J = full_lattice(X)
    assert hilbert.hilb_recursive(X, k, J) == hilbert.hilb_kernel(X, k, J)


def test_semi_external_dimension_count():
    J2 = upper_set(X1, [[0], [2]])
    # independent sets with closure in J2: {x1}, {x3} and the three bases
    assert hilbert.dim_semi_external(X1, J2) == 5


def test_cox_semiinternal_literal_undercounts():
    a = (2, 2, 2)
    top = X1.full
    assert hilbert.cox_semiinternal_literal(X1, a, top) == HilbSeries.of(1, 2, 1)
    assert hilbert.cox_semiinternal_hilb(X1, a, top) == HilbSeries.of(1, 2, 3, 1)
    assert hilbert.cox_semiinternal_reference(X1, a, top) == HilbSeries.of(1, 2, 3, 1)


def test_cox_semiinternal_unit_multiplicity_is_plain_internal():
    for f in X4.lattice:
        assert hilbert.cox_semiinternal_hilb(X4, [1] * 7, f.mask) == hilbert.hilb_semi_internal(X4, f.mask)


def test_cox_semiexternal_matches_expansion():
    for a in ((1, 1, 1), (2, 1, 0), (0, 2, 2)):
        for b in ((1, 1, 1), (1, 0, 1), (0, 0, 0)):
            assert hilbert.cox_semiexternal_hilb(X1, a, b) == hilbert.cox_semiexternal_reference(X1, a, b)


def test_cox_errors():
    with pytest.raises(ZonotopalError) as e:
        hilbert.cox_semiexternal_hilb(X1, (1, 0, 0), (1, 1, 1))
    assert e.value.code == "RANK_DROP"
    with pytest.raises(ZonotopalError) as e:
        hilbert.cox_semiexternal_hilb(X1, (1, -1, 1), (1, 1, 1))
    assert e.value.code == "BAD_MULTIPLICITY"
    # dropping x1 leaves C0 = {x1} without a representative
    with pytest.raises(ZonotopalError) as e:
        hilbert.cox_semiinternal_hilb(X1, (0, 1, 1), 0b001)
    assert e.value.code == "NOT_SEMI_INTERNAL"
