"""Vector configurations and their matroids.

Subsets of the ground set are bitmasks: bit ``i`` stands for the column
``x_{i+1}``. The column order is the activity order.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .errors import ZonotopalError
from .linalg import Echelon, nullspace, primitive


def to_mask(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def members(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def drop_bit(mask: int, x: int) -> int:
    """Remove position ``x`` from ``mask`` and shift higher bits down."""
    low = mask & ((1 << x) - 1)
    high = mask >> (x + 1)
    return low | (high << x)


@dataclass(frozen=True)
class Flat:
    mask: int
    rank: int

    @property
    def members(self) -> tuple[int, ...]:
        return members(self.mask)

    def __len__(self) -> int:
        return popcount(self.mask)


@dataclass(frozen=True, eq=False)
class VectorConfig:
    """Ordered columns spanning Q^r."""

    columns: tuple[tuple[Fraction, ...], ...]
    r: int
    _ranks: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if self.r < 1:
            raise ZonotopalError("configurations must live in dimension r >= 1", "BAD_DIMENSION")
        for c in self.columns:
            if len(c) != self.r:
                raise ZonotopalError("column length differs from r", "RAGGED")
        if self.rank(self.full) != self.r:
            raise ZonotopalError(
                f"columns span a {self.rank(self.full)}-dimensional space, need r = {self.r}",
                "NOT_SPANNING",
            )

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], r: int | None = None) -> "VectorConfig":
        cols = tuple(tuple(Fraction(v) for v in c) for c in cols)
        if r is None:
            if not cols:
                raise ZonotopalError("empty configuration", "NOT_SPANNING")
            r = len(cols[0])
        return cls(cols, r)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "VectorConfig":
        if not rows:
            raise ZonotopalError("empty matrix", "NOT_SPANNING")
        return cls.from_columns(list(zip(*rows)), len(rows))

    def __eq__(self, other) -> bool:
        return isinstance(other, VectorConfig) and (self.r, self.columns) == (other.r, other.columns)

    def __hash__(self) -> int:
        return hash((self.r, self.columns))

    def __repr__(self) -> str:
        rows = [[str(c[i]) for c in self.columns] for i in range(self.r)]
        return f"VectorConfig({rows})"

    @property
    def N(self) -> int:
        return len(self.columns)

    @property
    def full(self) -> int:
        return (1 << self.N) - 1

    def rows(self) -> list[list[Fraction]]:
        return [[c[i] for c in self.columns] for i in range(self.r)]

    @cached_property
    def int_columns(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(primitive(c)) for c in self.columns)

    # matroid structure -----------------------------------------------------

    def rank(self, mask: int) -> int:
        v = self._ranks.get(mask)
        if v is None:
            ech = Echelon(self.r)
            for i in members(mask):
                ech.add(self.int_columns[i])
                if ech.rank == self.r:
                    break
            v = self._ranks[mask] = ech.rank
        return v

    def closure(self, mask: int) -> int:
        rk = self.rank(mask)
        out = mask
        for i in range(self.N):
            bit = 1 << i
            if not mask & bit and self.rank(mask | bit) == rk:
                out |= bit
        return out

    def is_independent(self, mask: int) -> bool:
        return self.rank(mask) == popcount(mask)

    def is_loop(self, x: int) -> bool:
        return not any(self.columns[x])

    def is_coloop(self, x: int) -> bool:
        return self.rank(self.full & ~(1 << x)) < self.r

    @cached_property
    def loops(self) -> int:
        return to_mask(i for i in range(self.N) if self.is_loop(i))

    @cached_property
    def coloops(self) -> int:
        return to_mask(i for i in range(self.N) if self.is_coloop(i))

    @cached_property
    def lattice(self) -> "LatticeOfFlats":
        return LatticeOfFlats.build(self)

    def permuted(self, perm: Sequence[int]) -> "VectorConfig":
        """New configuration whose position ``j`` holds old column ``perm[j]``."""
        return VectorConfig(tuple(self.columns[p] for p in perm), self.r)


@dataclass
class LatticeOfFlats:
    flats: list[Flat]
    index: dict[int, int]

    @classmethod
    def build(cls, X: VectorConfig) -> "LatticeOfFlats":
        bottom = X.closure(0)
        seen = {bottom}
        frontier = [bottom]
        while frontier:
            nxt = []
            for F in frontier:
                for i in range(X.N):
                    if not F >> i & 1:
                        G = X.closure(F | (1 << i))
                        if G not in seen:
                            seen.add(G)
                            nxt.append(G)
            frontier = nxt
        flats = sorted((Flat(m, X.rank(m)) for m in seen), key=lambda f: (f.rank, f.members))
        return cls(flats, {f.mask: i for i, f in enumerate(flats)})

    def __iter__(self):
        return iter(self.flats)

    def __len__(self) -> int:
        return len(self.flats)

    def __contains__(self, mask: int) -> bool:
        return mask in self.index

    def of_rank(self, k: int) -> list[Flat]:
        return [f for f in self.flats if f.rank == k]

    @property
    def top(self) -> Flat:
        return self.flats[-1]

    @property
    def hyperplanes(self) -> list[Flat]:
        return self.of_rank(self.top.rank - 1)


def rank_of(X: VectorConfig, S: Iterable[int] | int) -> int:
    return X.rank(S if isinstance(S, int) else to_mask(S))


def closure(X: VectorConfig, S: Iterable[int] | int) -> Flat:
    m = X.closure(S if isinstance(S, int) else to_mask(S))
    return Flat(m, X.rank(m))


def flats(X: VectorConfig) -> LatticeOfFlats:
    return X.lattice


def loops(X: VectorConfig) -> tuple[int, ...]:
    return members(X.loops)


def coloops(X: VectorConfig) -> tuple[int, ...]:
    return members(X.coloops)


# upper sets ---------------------------------------------------------------


@dataclass(frozen=True)
class UpperSet:
    """Upward closed family of flats, stored as member bitmasks."""

    flats: frozenset[int]

    def __contains__(self, mask: int) -> bool:
        return mask in self.flats

    def __len__(self) -> int:
        return len(self.flats)

    def sorted_masks(self) -> list[int]:
        return sorted(self.flats, key=lambda m: (popcount(m), members(m)))


def upward_closure(X: VectorConfig, masks: Iterable[int]) -> UpperSet:
    gens = [X.closure(m) for m in masks]
    out = {X.full}
    for f in X.lattice:
        if any(f.mask & g == g for g in gens):
            out.add(f.mask)
    return UpperSet(frozenset(out))


def upper_set(X: VectorConfig, generators: Iterable[Iterable[int] | int]) -> UpperSet:
    """Upward closure of the closures of ``generators``; always contains X."""
    return upward_closure(X, (g if isinstance(g, int) else to_mask(g) for g in generators))


def central(X: VectorConfig) -> UpperSet:
    return UpperSet(frozenset({X.full}))


def full_lattice(X: VectorConfig) -> UpperSet:
    return UpperSet(frozenset(f.mask for f in X.lattice))


def above(X: VectorConfig, C0: int) -> UpperSet:
    """J_{C0}: all flats containing the flat ``C0``."""
    C0 = X.closure(C0)
    return UpperSet(frozenset(f.mask for f in X.lattice if f.mask & C0 == C0))


def from_hyperplane_mask(X: VectorConfig, b: Sequence[int]) -> UpperSet:
    """J_b: flats all of whose covering hyperplanes H have ``b_H = 1``."""
    hyps = X.lattice.hyperplanes
    if len(b) != len(hyps):
        raise ZonotopalError(
            f"hyperplane mask has length {len(b)}, expected {len(hyps)}", "MASK_LENGTH"
        )
    zero = [h.mask for h, bit in zip(hyps, b) if not bit]
    return UpperSet(
        frozenset(f.mask for f in X.lattice if not any(f.mask & h == f.mask for h in zero))
    )


def is_upper_set(X: VectorConfig, J: UpperSet) -> bool:
    if X.full not in J:
        return False
    for f in X.lattice:
        if f.mask in J:
            for g in X.lattice:
                if g.mask & f.mask == f.mask and g.mask not in J:
                    return False
    return all(m in X.lattice for m in J.flats)


def chi(X: VectorConfig, J: UpperSet, A: Iterable[int] | int) -> int:
    A = A if isinstance(A, int) else to_mask(A)
    return int(X.closure(A) in J)


def maximal_missing_flats(X: VectorConfig, J: UpperSet) -> list[Flat]:
    missing = [f for f in X.lattice if f.mask not in J]
    return [
        f
        for f in missing
        if not any(g.mask != f.mask and g.mask & f.mask == f.mask for g in missing)
    ]


def contains_all_hyperplanes(X: VectorConfig, J: UpperSet) -> bool:
    return all(h.mask in J for h in X.lattice.hyperplanes)


def m_of(X: VectorConfig, C: Flat | int) -> int:
    mask = C.mask if isinstance(C, Flat) else C
    return X.N - popcount(mask)


# defining normals ---------------------------------------------------------


def annihilator_basis(X: VectorConfig, mask: int) -> list[list[int]]:
    """Primitive integer basis of the covectors vanishing on the columns in ``mask``."""
    rows = [X.columns[i] for i in members(mask)]
    return [primitive(v) for v in nullspace(rows, X.r)] if rows else [
        [int(i == j) for i in range(X.r)] for j in range(X.r)
    ]


def _normalize_sign(v: list[int]) -> tuple[int, ...]:
    lead = next((x for x in v if x), 0)
    return tuple(-x for x in v) if lead < 0 else tuple(v)


def _is_defining(X: VectorConfig, mask: int, eta: Sequence[int]) -> bool:
    for i, col in enumerate(X.int_columns):
        zero = not sum(a * b for a, b in zip(eta, col))
        if zero != bool(mask >> i & 1):
            return False
    return True


def _box(c: int, n: int) -> list[tuple[int, ...]]:
    """Integer vectors of max-norm exactly ``n``, ordered by (l1 norm, graded-lex)."""
    cand = [
        v
        for v in itertools.product(range(-n, n + 1), repeat=c)
        if max(abs(x) for x in v) == n
    ]
    return sorted(cand, key=lambda v: (sum(abs(x) for x in v), tuple(-x for x in v)))


class NormalSelector:
    """Deterministic normal selector: first valid vector in growing coefficient boxes."""

    name = "auto"

    def __call__(self, X: VectorConfig, C: Flat | int) -> tuple[int, ...]:
        mask = C.mask if isinstance(C, Flat) else C
        if X.closure(mask) != mask:
            raise ZonotopalError("defining normals exist only for flats", "NOT_A_FLAT")
        if mask == X.full:
            raise ZonotopalError("the top flat has no defining normal", "NOT_A_FLAT")
        basis = annihilator_basis(X, mask)
        for eta in self._candidates(basis, mask):
            if _is_defining(X, mask, eta):
                return _normalize_sign(primitive(eta))
        raise AssertionError("unreachable: valid normals are Zariski dense")

    def _candidates(self, basis, mask):
        n = 1
        while True:
            for lam in _box(len(basis), n):
                yield [sum(l * b[i] for l, b in zip(lam, basis)) for i in range(len(basis[0]))]
            n += 1


class SeededSelector(NormalSelector):
    """Random integer combinations of the annihilator basis, reproducible from ``seed``."""

    def __init__(self, seed: int):
        self.seed = seed
        self.name = f"seeded:{seed}"

    def _candidates(self, basis, mask):
        rng = random.Random(self.seed * 1_000_003 + mask)
        bound = 3
        while True:
            lam = [rng.randint(-bound, bound) for _ in basis]
            yield [sum(l * b[i] for l, b in zip(lam, basis)) for i in range(len(basis[0]))]
            bound += 1


def selector_from_name(name: str) -> NormalSelector:
    if name == "auto":
        return NormalSelector()
    if name.startswith("seeded:"):
        return SeededSelector(int(name.split(":", 1)[1]))
    raise ZonotopalError(f"unknown selector {name!r}", "BAD_SELECTOR")


def defining_normal(X: VectorConfig, C: Flat | int, selector: NormalSelector | None = None):
    return (selector or NormalSelector())(X, C)


# minors -------------------------------------------------------------------


@dataclass
class Minor:
    """Deletion or contraction of one element together with the induced upper set.

    ``index_map`` sends old ground-set indices to new ones; ``var_map`` sends
    new coordinates to the old coordinate they are identified with.
    """

    config: VectorConfig
    upper: UpperSet | None
    index_map: dict[int, int]
    var_map: list[int]


def _index_map(N: int, x: int) -> dict[int, int]:
    return {i: (i if i < x else i - 1) for i in range(N) if i != x}


def delete(X: VectorConfig, J: UpperSet | None, x: int) -> Minor:
    if X.is_coloop(x):
        raise ZonotopalError(f"deleting coloop x{x + 1} would drop the rank", "DELETE_COLOOP")
    cols = X.columns[:x] + X.columns[x + 1 :]
    Y = VectorConfig(cols, X.r)
    upper = None
    if J is not None:
        bit = 1 << x
        upper = UpperSet(
            frozenset(
                drop_bit(C, x) for C in J.flats if X.closure(C & ~bit) == C
            )
        )
    return Minor(Y, upper, _index_map(X.N, x), list(range(X.r)))


def contract(X: VectorConfig, J: UpperSet | None, x: int) -> Minor:
    """Project the other columns onto the coordinate complement of span(x).

    The complement is spanned by the standard basis vectors other than
    ``e_p``, ``p`` the last nonzero coordinate of ``x`` (greedy basis
    extension of {x} by e_1, ..., e_r).
    """
    if X.is_loop(x):
        raise ZonotopalError(f"cannot contract loop x{x + 1}", "CONTRACT_LOOP")
    if X.r == 1:
        raise ZonotopalError("contraction would leave dimension 0", "BAD_DIMENSION")
    v = X.columns[x]
    p = max(i for i in range(X.r) if v[i])
    keep = [i for i in range(X.r) if i != p]
    cols = []
    for j, w in enumerate(X.columns):
        if j == x:
            continue
        c = w[p] / v[p]
        cols.append(tuple(w[i] - c * v[i] for i in keep))
    Y = VectorConfig(tuple(cols), X.r - 1)
    upper = None
    if J is not None:
        bit = 1 << x
        upper = UpperSet(frozenset(drop_bit(C, x) for C in J.flats if C & bit))
    return Minor(Y, upper, _index_map(X.N, x), keep)


def hat_j_over_x(X: VectorConfig, J: UpperSet, x: int) -> Minor:
    """Contraction by a coloop with the upper set {C̄ : x ∉ C ∈ J} ∪ {top}."""
    if not X.is_coloop(x):
        raise ZonotopalError(f"x{x + 1} is not a coloop", "NOT_COLOOP")
    minor = contract(X, None, x)
    bit = 1 << x
    fl = {drop_bit(C, x) for C in J.flats if not C & bit}
    fl.add(minor.config.full)
    minor.upper = UpperSet(frozenset(fl))
    return minor


def restrict_upper(J: UpperSet, index_map: dict[int, int]) -> UpperSet:
    out = set()
    for C in J.flats:
        out.add(to_mask(index_map[i] for i in members(C) if i in index_map))
    return UpperSet(frozenset(out))


def permute_upper(J: UpperSet, perm: Sequence[int]) -> UpperSet:
    """Upper set on ``X.permuted(perm)``: old index ``perm[j]`` becomes ``j``."""
    pos = {old: new for new, old in enumerate(perm)}
    return UpperSet(frozenset(to_mask(pos[i] for i in members(C)) for C in J.flats))


# multiplicities -----------------------------------------------------------


def expand_multiplicity(X: VectorConfig, a: Sequence[int]) -> tuple[VectorConfig, list[int]]:
    """X(a): each column repeated ``a_i`` times; returns the origin index of each new column."""
    if len(a) != X.N or any(ai < 0 for ai in a):
        raise ZonotopalError("multiplicity vector must have N nonnegative entries", "BAD_MULTIPLICITY")
    cols, origin = [], []
    for i, ai in enumerate(a):
        cols.extend([X.columns[i]] * ai)
        origin.extend([i] * ai)
    try:
        return VectorConfig(tuple(cols), X.r), origin
    except ZonotopalError as e:
        raise ZonotopalError(f"X(a) does not span: {e}", "RANK_DROP") from e


def lift_upper_set(X: VectorConfig, J: UpperSet, Xa: VectorConfig, origin: Sequence[int]) -> UpperSet:
    """Flats F of X(a) with clos_X(origin(F)) ∈ J."""
    out = set()
    for f in Xa.lattice:
        base = X.closure(to_mask(origin[i] for i in members(f.mask)))
        if base in J:
            out.add(f.mask)
    return UpperSet(frozenset(out))
