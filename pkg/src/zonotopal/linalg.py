"""Exact linear algebra over the rationals.

Matrices are plain lists of rows. Entries may be ``int`` or ``Fraction``;
results are always ``Fraction`` (or ``int`` for the integer helpers).
"""

from __future__ import annotations

from bisect import insort
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Matrix = list[list[Fraction]]


def as_fraction_matrix(rows: Iterable[Iterable]) -> Matrix:
    return [[Fraction(v) for v in row] for row in rows]


def rref(M: Sequence[Sequence]) -> tuple[Matrix, list[int], int]:
    """Reduced row-echelon form of ``M`` over Q.

    Returns ``(R, pivots, rank)``. ``R`` has the same shape as ``M``; zero rows
    are kept at the bottom.
    """
    R = as_fraction_matrix(M)
    nrows = len(R)
    ncols = len(R[0]) if nrows else 0
    pivots: list[int] = []
    row = 0
    for col in range(ncols):
        if row == nrows:
            break
        sel = next((i for i in range(row, nrows) if R[i][col] != 0), None)
        if sel is None:
            continue
        R[row], R[sel] = R[sel], R[row]
        p = R[row][col]
        if p != 1:
            R[row] = [v / p for v in R[row]]
        prow = R[row]
        for i in range(nrows):
            if i != row:
                f = R[i][col]
                if f != 0:
                    R[i] = [a - f * b for a, b in zip(R[i], prow)]
        pivots.append(col)
        row += 1
    return R, pivots, len(pivots)


def rank(M: Sequence[Sequence]) -> int:
    if not M:
        return 0
    ech = Echelon(len(M[0]))
    for row in M:
        ech.add(row)
    return ech.rank


def nullspace(M: Sequence[Sequence], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of the right null space; empty iff ``M`` has full column rank.

    ``ncols`` is needed when ``M`` has no rows.
    """
    if not M:
        if ncols is None:
            raise ValueError("ncols required for an empty matrix")
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    R, pivots, rk = rref(M)
    n = len(R[0])
    free = [c for c in range(n) if c not in set(pivots)]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -R[i][fc]
        basis.append(v)
    return basis


def primitive(vec: Sequence) -> list[int]:
    """Scale a rational vector to a primitive integer vector (same direction)."""
    den = 1
    for v in vec:
        if isinstance(v, Fraction) and v.denominator != 1:
            den = den * v.denominator // gcd(den, v.denominator)
    ints = [int(v * den) for v in vec]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return ints


class Echelon:
    """Incrementally built integer row-echelon basis of a row space.

    Rows are stored as primitive integer vectors keyed by pivot column, so
    membership and rank queries stay exact without fraction arithmetic.
    """

    __slots__ = ("ncols", "rows", "pivots")

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: dict[int, list[int]] = {}
        self.pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, vec: Sequence) -> list[int]:
        v = primitive(vec)
        rows = self.rows
        for c in self.pivots:
            a = v[c]
            if a:
                p = rows[c]
                b = p[c]
                v = [b * x - a * y for x, y in zip(v, p)]
                g = 0
                for x in v:
                    if x:
                        g = gcd(g, x)
                        if g == 1:
                            break
                if g > 1:
                    v = [x // g for x in v]
        return v

    def add(self, vec: Sequence) -> bool:
        """Insert ``vec``; return True iff it was independent of the current rows."""
        v = self.reduce(vec)
        for c, x in enumerate(v):
            if x:
                if x < 0:
                    v = [-y for y in v]
                self.rows[c] = v
                insort(self.pivots, c)
                return True
        return False

    def contains(self, vec: Sequence) -> bool:
        return not any(self.reduce(vec))

    def basis(self) -> list[list[int]]:
        return [self.rows[c] for c in self.pivots]

    def nullspace(self) -> list[list[Fraction]]:
        if not self.pivots:
            return nullspace([], self.ncols)
        return nullspace(self.basis())


def intersect(A: Sequence[Sequence], B: Sequence[Sequence]) -> list[list[Fraction]]:
    """Basis of span(A) ∩ span(B) for row-vector bases ``A`` and ``B`` (each independent)."""
    if not A or not B:
        return []
    # rows a_i, b_j: find (λ, μ) with Σλa = Σμb
    n = len(A[0])
    cols = [list(a) for a in A] + [[-x for x in b] for b in B]
    system = [[cols[j][i] for j in range(len(cols))] for i in range(n)]
    out = []
    for sol in nullspace(system):
        lam = sol[: len(A)]
        out.append([sum((l * a[i] for l, a in zip(lam, A)), Fraction(0)) for i in range(n)])
    ech = Echelon(n)
    return [v for v in out if ech.add(v)]
