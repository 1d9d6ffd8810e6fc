"""Bases, internal/external activity and the activity-indexed P-space bases."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .errors import check_k
from .matroid import (
    UpperSet,
    VectorConfig,
    members,
    permute_upper,
    popcount,
    to_mask,
)
from .poly import MPoly, linear_form_product


@dataclass(frozen=True)
class BasisRecord:
    members: int
    externally_active: int
    internally_active: int

    @property
    def indices(self) -> tuple[int, ...]:
        return members(self.members)


@dataclass(frozen=True)
class GammaElement:
    basis: BasisRecord
    I: int
    a: tuple[int, ...]  # exponents a_x for x in I, increasing x


def external_activity(X: VectorConfig, B: int) -> int:
    out = 0
    for x in range(X.N):
        if B >> x & 1:
            continue
        below = B & ((1 << (x + 1)) - 1)
        if X.rank(below | (1 << x)) == X.rank(below):
            out |= 1 << x
    return out


def internal_activity(X: VectorConfig, B: int) -> int:
    out = 0
    for b in members(B):
        cocircuit = X.full & ~X.closure(B & ~(1 << b))
        if cocircuit.bit_length() - 1 == b:
            out |= 1 << b
    return out


def basis_record(X: VectorConfig, B: int) -> BasisRecord:
    return BasisRecord(B, external_activity(X, B), internal_activity(X, B))


def enumerate_bases(X: VectorConfig) -> list[BasisRecord]:
    """All bases, lexicographic in their index tuples."""
    out = []
    for idx in itertools.combinations(range(X.N), X.r):
        B = to_mask(idx)
        if X.rank(B) == X.r:
            out.append(basis_record(X, B))
    return out


def _compositions(total_max: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Nonnegative integer vectors of length ``parts`` with sum <= total_max, lex order."""
    if total_max < 0:
        return
    if parts == 0:
        yield ()
        return
    for first in range(total_max + 1):
        for rest in _compositions(total_max - first, parts - 1):
            yield (first,) + rest


def gamma_set(X: VectorConfig, k: int, J: UpperSet) -> list[GammaElement]:
    check_k(k, minimum=0)
    out = []
    for rec in enumerate_bases(X):
        span = rec.members | rec.externally_active
        act = members(rec.internally_active)
        for size in range(len(act) + 1):
            for I in itertools.combinations(act, size):
                Imask = to_mask(I)
                bound = k + int(X.closure(span & ~Imask) in J) - 1
                for a in _compositions(bound, size):
                    out.append(GammaElement(rec, Imask, a))
    return out


def basis_polys(X: VectorConfig, k: int, J: UpperSet) -> list[MPoly]:
    """p_{X∖(B∪E(B))} · Π_{x∈I} p_x^{a_x+1}, parallel to ``gamma_set``."""
    out = []
    for g in gamma_set(X, k, J):
        rest = X.full & ~(g.basis.members | g.basis.externally_active)
        f = linear_form_product((X.columns[i] for i in members(rest)), X.r)
        for x, ax in zip(members(g.I), g.a):
            f = f * MPoly.linear(X.columns[x]) ** (ax + 1)
        out.append(f)
    return out


def semi_internal_bases(X: VectorConfig, J: UpperSet) -> list[BasisRecord]:
    """B₋(X, J) = {B : χ(B ∖ I(B)) = 1} with respect to the column order of X."""
    return [
        rec
        for rec in enumerate_bases(X)
        if X.closure(rec.members & ~rec.internally_active) in J
    ]


def tilde_b_minus(X: VectorConfig, J: UpperSet) -> list[MPoly]:
    """Heuristic candidates p_{X∖(B∪E(B))} for B ∈ B₋(X, J); not a basis in general."""
    return [
        linear_form_product(
            (X.columns[i] for i in members(X.full & ~(rec.members | rec.externally_active))), X.r
        )
        for rec in semi_internal_bases(X, J)
    ]


def hrx_order(X: VectorConfig, C0: int) -> list[int]:
    """Permutation placing a greedy maximal independent subset of C0 last.

    ``perm[j]`` is the original index at position ``j``.
    """
    indep = 0
    for i in members(C0):
        if X.rank(indep | (1 << i)) > popcount(indep):
            indep |= 1 << i
    top = members(indep)
    return [i for i in range(X.N) if not indep >> i & 1] + list(top)


def semi_internal_bases_hrx(X: VectorConfig, J: UpperSet, C0: int) -> tuple[VectorConfig, list[BasisRecord]]:
    """B₋ computed in the HRX order for ``C0``; records refer to the permuted config."""
    perm = hrx_order(X, C0)
    Xp = X.permuted(perm)
    return Xp, semi_internal_bases(Xp, permute_upper(J, perm))
