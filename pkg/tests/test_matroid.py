"""Rank, closure, flats, upper sets, normals and minors."""

from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zonotopal.corpus import canonical_form, matroid_corpus
from zonotopal.errors import ZonotopalError
from zonotopal.matroid import (
    NormalSelector,
    SeededSelector,
    VectorConfig,
    above,
    central,
    contains_all_hyperplanes,
    contract,
    delete,
    expand_multiplicity,
    from_hyperplane_mask,
    full_lattice,
    is_upper_set,
    lift_upper_set,
    m_of,
    maximal_missing_flats,
    members,
    to_mask,
    upper_set,
)

X1 = VectorConfig.from_rows([[1, 0, 1], [0, 1, 1]])
# two parallel vectors plus a third direction, plus a loop
XP = VectorConfig.from_rows([[1, 2, 0, 0], [0, 0, 1, 0]])


def test_rank_and_closure():
    assert X1.rank(0b011) == 2 and X1.rank(0b100) == 1
    assert XP.closure(0b0001) == 0b1011  # parallel copy and the loop join in
    assert XP.loops == 0b1000 and XP.coloops == 0b0100


def test_lattice_of_uniform_matroid():
    flats = [f.mask for f in X1.lattice]
    assert flats == [0, 0b001, 0b010, 0b100, 0b111]
    assert [h.mask for h in X1.lattice.hyperplanes] == [0b001, 0b010, 0b100]


def test_upper_sets():
    J2 = upper_set(X1, [[0], [2]])
    assert set(J2.flats) == {0b001, 0b100, 0b111}
    assert is_upper_set(X1, J2)
    assert [f.mask for f in maximal_missing_flats(X1, J2)] == [0b010]
    assert not contains_all_hyperplanes(X1, J2)
    assert len(full_lattice(X1)) == 5 and len(central(X1)) == 1
    assert set(above(X1, 0b001).flats) == {0b001, 0b111}


def test_hyperplane_mask_upper_set():
    J = from_hyperplane_mask(X1, [1, 0, 1])
    assert set(J.flats) == {0b001, 0b100, 0b111}
    with pytest.raises(ZonotopalError) as e:
        from_hyperplane_mask(X1, [1, 0])
    assert e.value.code == "MASK_LENGTH"


def test_m_counts_outside():
    assert m_of(X1, 0b001) == 2 and m_of(X1, 0) == 3 and m_of(X1, 0b111) == 0


@pytest.mark.parametrize("selector", [NormalSelector(), SeededSelector(1), SeededSelector(7)])
def test_defining_normals_vanish_exactly_on_flat(selector):
    X = VectorConfig.from_rows([[1, 1, 0, 0, 1, 1, 0], [1, 1, 1, 1, 0, 0, 0], [0, 0, 0, 0, 1, 1, 1]])
    for f in X.lattice:
        if f.mask == X.full:
            continue
        eta = selector(X, f)
        zero = {i for i, c in enumerate(X.columns) if sum(a * b for a, b in zip(eta, c)) == 0}
        assert zero == set(members(f.mask))


def test_normals_only_for_proper_flats():
    X = VectorConfig.from_rows([[1, 0, 0, 1], [0, 1, 0, 1], [0, 0, 1, 1]])
    with pytest.raises(ZonotopalError) as e:
        NormalSelector()(X, X.full)
    assert e.value.code == "NOT_A_FLAT"
    with pytest.raises(ZonotopalError):
        NormalSelector()(X1, 0b011)  # not closed: x1, x2 span everything


def test_delete_and_contract_x1():
    J2 = upper_set(X1, [[0], [2]])
    d = delete(X1, J2, 0)
    assert d.config == VectorConfig.from_rows([[0, 1], [1, 1]])
    assert set(d.upper.flats) == {0b10, 0b11}
    c = contract(X1, J2, 0)
    assert c.config == VectorConfig.from_rows([[1, 1]])
    # J2 contains the flat {x1}, which becomes the bottom flat of X1/x1
    assert set(c.upper.flats) == {0b00, 0b11}


def test_delete_coloop_and_contract_loop_rejected():
    with pytest.raises(ZonotopalError) as e:
        delete(XP, None, 2)
    assert e.value.code == "DELETE_COLOOP"
    with pytest.raises(ZonotopalError) as e:
        contract(XP, None, 3)
    assert e.value.code == "CONTRACT_LOOP"


def test_multiplicity_expansion_and_lift():
    Xa, origin = expand_multiplicity(X1, [2, 0, 1])
    assert Xa.N == 3 and origin == [0, 0, 2]
    J = lift_upper_set(X1, above(X1, 0b001), Xa, origin)
    assert set(J.flats) == {0b011, 0b111}
    with pytest.raises(ZonotopalError) as e:
        expand_multiplicity(X1, [1, 0, 0])
    assert e.value.code == "RANK_DROP"


def test_not_spanning_rejected():
    with pytest.raises(ZonotopalError) as e:
        VectorConfig.from_rows([[1, 2], [2, 4]])
    assert e.value.code == "NOT_SPANNING"


def test_corpus_is_duplicate_free_and_loop_free():
    corpus = matroid_corpus()
    keys = {canonical_form(X) for X in corpus}
    assert len(keys) == len(corpus)
    assert all(X.loops == 0 and X.r <= 3 and X.N <= 6 for X in corpus)
    # every rank-1 matroid on n elements is one class: U(1, n)
    assert sum(1 for X in corpus if X.r == 1) == 6


@settings(max_examples=25, deadline=None)
@given(st.data())
def test_canonical_form_ignores_labels(data):
    corpus = matroid_corpus(max_n=5)
    X = data.draw(st.sampled_from(corpus))
    perm = data.draw(st.permutations(range(X.N)))
    assert canonical_form(X.permuted(perm)) == canonical_form(X)


def test_closure_is_idempotent_and_monotone():
    X = VectorConfig.from_rows([[1, 0, 1, 1], [0, 1, 1, -1]])
    for A, B in itertools.product(range(16), repeat=2):
        assert X.closure(X.closure(A)) == X.closure(A)
        if A & B == A:
            assert X.closure(A) & X.closure(B) == X.closure(A)
    assert to_mask([0, 3]) == 0b1001
