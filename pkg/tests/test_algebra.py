"""Exact linear algebra, polynomials as differential operators, kernels of generator lists."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zonotopal.errors import KernelCapExceeded
from zonotopal.ideals import kernel, kernel_direct
from zonotopal.linalg import Echelon, intersect, nullspace, rank, rref
from zonotopal.poly import NORMAL, MPoly, apply_diff, pairing, same_space, span_reduce
from zonotopal.series import HilbSeries, upoly_mul, upoly_pow

x, y = MPoly.var(2, 0), MPoly.var(2, 1)
Dx, Dy = MPoly.var(2, 0, NORMAL), MPoly.var(2, 1, NORMAL)


def test_rref_small():
    R, piv, rk = rref([[2, 4, 6], [1, 2, 4]])
    assert rk == 2 and piv == [0, 2]
    assert R == [[1, 2, 0], [0, 0, 1]]


def test_rank_and_nullspace():
    M = [[1, 1, 0], [0, 1, 1], [1, 2, 1]]
    assert rank(M) == 2
    (v,) = nullspace(M)
    assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in M)


def test_echelon_membership():
    e = Echelon(3)
    assert e.add([1, 0, 1]) and e.add([0, 1, 1])
    assert not e.add([1, 1, 2])
    assert e.contains([2, -1, 1]) and not e.contains([0, 0, 1])


def test_intersect_planes():
    # {z = 0} and {x = 0} in Q^3 meet in the y-axis
    common = intersect([[1, 0, 0], [0, 1, 0]], [[0, 1, 0], [0, 0, 1]])
    assert len(common) == 1 and common[0][0] == 0 and common[0][2] == 0


def test_apply_diff_and_pairing():
    assert apply_diff(Dx**2, x**3) == (x * 6) ** 1 * 1
    assert apply_diff(Dx * Dy, x * y) == MPoly.const(2, 1)
    assert apply_diff(Dy, x**2).is_zero()
    assert pairing(x**2, Dx**2) == 2
    assert pairing(x * y, Dx * Dy) == 1


def test_kernel_of_coordinate_squares():
    res = kernel([Dx**2, Dy**2], 2, cap=6)
    assert res.hilb == HilbSeries.of(1, 2, 1)
    assert res.basis.contains(x * y) and not res.basis.contains(x**2)


def test_kernel_cap_exceeded():
    with pytest.raises(KernelCapExceeded):
        kernel([Dx**5], 2, cap=3)


def test_hilb_series_arithmetic():
    a = HilbSeries.of(1, 2)
    assert (a + a.shift(1)).as_list() == [1, 3, 2]
    assert HilbSeries.from_laurent({0: 1, 2: 3}).as_list() == [1, 0, 3]
    with pytest.raises(ValueError):
        HilbSeries.from_laurent({-1: 1})
    assert a(Fraction(1, 2)) == 2


def test_univariate_helpers():
    assert upoly_mul([1, 1], [1, -1]) == [1, 0, -1]
    assert upoly_pow([1, 1], 3) == [1, 3, 3, 1]


linear_forms = st.lists(st.integers(-2, 2), min_size=2, max_size=2).filter(any)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.tuples(linear_forms, st.integers(1, 3)), min_size=2, max_size=4))
def test_incremental_kernel_matches_direct(gens):
    # every ideal here contains two independent powers, so the quotient is finite
    polys = [MPoly.linear(v, NORMAL) ** e for v, e in gens]
    if rank([v for v, _ in gens]) < 2:
        return
    a = kernel(polys, 2, cap=8).basis
    b = kernel_direct(polys, 2, cap=8)
    assert same_space(a, b)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=1, max_size=4))
def test_span_reduce_is_idempotent(rows):
    polys = [MPoly.linear(v) for v in rows if any(v)]
    A = span_reduce(polys, 3)
    assert A.dim == rank([v for v in rows if any(v)]) if polys else A.dim == 0
    assert same_space(A, span_reduce(A.polys(), 3))
