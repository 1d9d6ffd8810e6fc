"""Hilbert series by several routes, the Tutte polynomial, and Cox-module formulas."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .activity import enumerate_bases, hrx_order, semi_internal_bases_hrx
from .errors import MissingHyperplanes, ZonotopalError, check_k
from .ideals import kernel_of_i
from .matroid import (
    UpperSet,
    VectorConfig,
    above,
    central,
    contains_all_hyperplanes,
    contract,
    delete,
    expand_multiplicity,
    from_hyperplane_mask,
    hat_j_over_x,
    lift_upper_set,
    members,
    permute_upper,
    popcount,
)
from .series import HilbSeries, inv_t_minus_one_power, laurent_add

# Tutte polynomial -----------------------------------------------------------


@dataclass(frozen=True)
class TuttePoly:
    """coeffs[(i, j)] is the coefficient of x^i y^j."""

    coeffs: tuple[tuple[tuple[int, int], int], ...]

    @classmethod
    def from_dict(cls, d: dict[tuple[int, int], int]) -> "TuttePoly":
        return cls(tuple(sorted((k, v) for k, v in d.items() if v)))

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.coeffs)

    def __call__(self, x, y):
        return sum(c * x**i * y**j for (i, j), c in self.coeffs)

    def matrix(self) -> list[list[int]]:
        d = self.as_dict()
        if not d:
            return []
        nx = max(i for i, _ in d) + 1
        ny = max(j for _, j in d) + 1
        return [[d.get((i, j), 0) for j in range(ny)] for i in range(nx)]

    def __str__(self) -> str:
        parts = []
        for (i, j), c in sorted(self.coeffs, key=lambda t: (-(t[0][0] + t[0][1]), -t[0][0])):
            mono = "*".join(
                s for s in (
                    "" if i == 0 else "x" if i == 1 else f"x^{i}",
                    "" if j == 0 else "y" if j == 1 else f"y^{j}",
                ) if s
            )
            parts.append(str(c) if not mono else mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts) if parts else "0"


def _binom_shift(n: int) -> list[int]:
    """Coefficients of (z - 1)^n."""
    return [comb(n, j) * (-1) ** (n - j) for j in range(n + 1)]


def tutte(X: VectorConfig) -> TuttePoly:
    """Subset expansion Σ_A (x-1)^{r-rk A} (y-1)^{|A|-rk A}."""
    acc: dict[tuple[int, int], int] = {}
    counts: dict[tuple[int, int], int] = {}
    for A in range(1 << X.N):
        rk = X.rank(A)
        key = (X.r - rk, popcount(A) - rk)
        counts[key] = counts.get(key, 0) + 1
    for (a, b), n in counts.items():
        for i, ci in enumerate(_binom_shift(a)):
            for j, cj in enumerate(_binom_shift(b)):
                acc[(i, j)] = acc.get((i, j), 0) + n * ci * cj
    return TuttePoly.from_dict(acc)


def tutte_deletion_contraction(X: VectorConfig) -> TuttePoly:
    return TuttePoly.from_dict(_tutte_dc(X))


def _tutte_dc(X: VectorConfig) -> dict[tuple[int, int], int]:
    if X.N == 0:
        return {(0, 0): 1}
    x = 0
    if X.is_loop(x):
        rest = VectorConfig(X.columns[1:], X.r)
        return {(i, j + 1): c for (i, j), c in _tutte_dc(rest).items()}
    if X.is_coloop(x):
        if X.r == 1:
            # every other element is a loop
            return {(1, X.N - 1): 1}
        sub = _tutte_dc(contract(X, None, x).config)
        return {(i + 1, j): c for (i, j), c in sub.items()}
    out = dict(_tutte_dc(delete(X, None, x).config))
    # in rank 1 the contraction consists of N - 1 loops
    con = {(0, X.N - 1): 1} if X.r == 1 else _tutte_dc(contract(X, None, x).config)
    for key, c in con.items():
        out[key] = out.get(key, 0) + c
    return out


def tutte_hilb(T: TuttePoly, N: int, r: int, k: int) -> HilbSeries:
    """t^{N-r} T(1 + t·[k = 1], 1/t) for k in {0, 1}, and t^{N-r} T(0, 1/t) for k = -1."""
    acc: dict[int, int] = {}
    for (i, j), c in T.coeffs:
        # x^i y^j with y = 1/t gives t^{-j}; x = 1 + t expands binomially
        if k == -1:
            if i == 0:
                acc[N - r - j] = acc.get(N - r - j, 0) + c
        elif k == 0:
            acc[N - r - j] = acc.get(N - r - j, 0) + c
        elif k == 1:
            for m in range(i + 1):
                e = N - r - j + m
                acc[e] = acc.get(e, 0) + c * comb(i, m)
        else:
            raise ZonotopalError("Tutte specialization only for k in {-1, 0, 1}", "K_TOO_SMALL")
    return HilbSeries.from_laurent(acc)


# kernel route ---------------------------------------------------------------


def hilb_kernel(X: VectorConfig, k: int, J: UpperSet, cap: int | None = None) -> HilbSeries:
    return kernel_of_i(X, k, J, cap).hilb


# deletion-contraction recursion ---------------------------------------------


def _drop_loops(X: VectorConfig, J: UpperSet) -> tuple[VectorConfig, UpperSet]:
    while X.loops:
        x = members(X.loops)[0]
        m = delete(X, J, x)
        X, J = m.config, m.upper
    return X, J


def _canonical_key(X: VectorConfig, k: int, J: UpperSet):
    return (X.columns, X.r, k, tuple(J.sorted_masks()))


def hilb_recursive(X: VectorConfig, k: int, J: UpperSet) -> HilbSeries:
    """Deletion-contraction on the smallest non-coloop; coloops are split off first."""
    check_k(k)
    return _hilb_rec(X, k, J, {})


def _hilb_rec(X: VectorConfig, k: int, J: UpperSet, memo: dict) -> HilbSeries:
    X, J = _drop_loops(X, J)
    key = _canonical_key(X, k, J)
    if key in memo:
        return memo[key]
    if X.r == 0:
        # zero-dimensional space: Sym is the constants; I is generated by nothing
        res = HilbSeries.of(1) if X.full in J or k >= 0 else HilbSeries()
        memo[key] = res
        return res
    if X.r == 1:
        chi_empty = int(0 in J)
        res = HilbSeries(tuple([1] * max(X.N + k + chi_empty, 0)))
        memo[key] = res
        return res
    coloops = members(X.coloops)
    if coloops:
        x = coloops[0]
        rest_in_j = (X.full & ~(1 << x)) in J
        con = contract(X, J, x)
        base = _hilb_rec(con.config, k, con.upper, memo)
        if k == -1:
            res = base if rest_in_j else HilbSeries()
        else:
            hat = hat_j_over_x(X, J, x)
            res = base
            eps = 0 if rest_in_j else 1
            for j in range(k - eps + 1):
                res = res + _hilb_rec(hat.config, k - j, hat.upper, memo).shift(j + 1)
        memo[key] = res
        return res
    if k == -1 and not (contains_all_hyperplanes(X, J) or J == central(X)):
        raise MissingHyperplanes(
            "k = -1 recursion reached a node whose upper set contains some but not all hyperplanes"
        )
    x = 0
    dl = delete(X, J, x)
    ct = contract(X, J, x)
    res = _hilb_rec(dl.config, k, dl.upper, memo).shift(1) + _hilb_rec(ct.config, k, ct.upper, memo)
    memo[key] = res
    return res


# activity route -------------------------------------------------------------


def hilb_activity(X: VectorConfig, k: int, J: UpperSet) -> HilbSeries:
    check_k(k, minimum=0)
    acc = [0] * (X.N + k + 2)
    for rec in enumerate_bases(X):
        span = rec.members | rec.externally_active
        base = X.N - X.r - popcount(rec.externally_active)
        act = members(rec.internally_active)
        acc[base] += 1
        for size in range(1, len(act) + 1):
            for I in itertools.combinations(act, size):
                Imask = sum(1 << i for i in I)
                top = int(X.closure(span & ~Imask) in J) + k - 1
                for j in range(top + 1):
                    acc[base + size + j] += comb(j + size - 1, size - 1)
    return HilbSeries(tuple(acc))


# subset expansion (k = 0) ----------------------------------------------------


def hilb_subset(X: VectorConfig, J: UpperSet) -> HilbSeries:
    """t^{N-r} Σ_{χ(A)=1} t^{r-rk A} (1/t - 1)^{|A|-rk A}, as an honest polynomial."""
    acc: dict[int, int] = {}
    for A in range(1 << X.N):
        if X.closure(A) not in J:
            continue
        rk = X.rank(A)
        laurent_add(acc, inv_t_minus_one_power(popcount(A) - rk), shift=X.N - rk)
    return HilbSeries.from_laurent(acc)


def dim_semi_external(X: VectorConfig, J: UpperSet) -> int:
    return sum(
        1 for Y in range(1 << X.N) if X.is_independent(Y) and X.closure(Y) in J
    )


# semi-internal --------------------------------------------------------------


def hilb_semi_internal(X: VectorConfig, C0: int) -> HilbSeries:
    """Σ_{B ∈ B₋(X, J_{C0})} t^{N-r-|E(B)|} computed in the HRX order for C0."""
    C0 = X.closure(C0)
    Xp, recs = semi_internal_bases_hrx(X, above(X, C0), C0)
    acc = [0] * (X.N + 1)
    for rec in recs:
        acc[X.N - X.r - popcount(rec.externally_active)] += 1
    return HilbSeries(tuple(acc))


# Cox-module formulas --------------------------------------------------------


def noncontainment_matrix(X: VectorConfig) -> list[list[int]]:
    return [[0 if H.mask >> j & 1 else 1 for j in range(X.N)] for H in X.lattice.hyperplanes]


def j_from_hyperplane_mask(X: VectorConfig, b) -> UpperSet:
    return from_hyperplane_mask(X, b)


def cox_semiexternal_hilb(X: VectorConfig, a, b) -> HilbSeries:
    """Binomial formula t^{|a|-r} Σ_{χ(A)=1} t^{r-rk A} Σ_s Π C(a_i, s_i) (1/t - 1)^{|s|-rk A}.

    ``A`` runs over subsets of X; ``s`` over vectors with 1 ≤ s_i ≤ a_i on A and 0 elsewhere.
    """
    a = _check_multiplicity(X, a)
    J = j_from_hyperplane_mask(X, b)
    total = sum(a)
    acc: dict[int, int] = {}
    for A in range(1 << X.N):
        idx = members(A)
        if any(a[i] == 0 for i in idx) or X.closure(A) not in J:
            continue
        rk = X.rank(A)
        # group the s-vectors by |s|
        by_size = {0: 1}
        for i in idx:
            nxt: dict[int, int] = {}
            for sz, c in by_size.items():
                for si in range(1, a[i] + 1):
                    nxt[sz + si] = nxt.get(sz + si, 0) + c * comb(a[i], si)
            by_size = nxt
        for sz, c in by_size.items():
            laurent_add(acc, inv_t_minus_one_power(sz - rk), scale=c, shift=total - rk)
    return HilbSeries.from_laurent(acc)


def cox_semiexternal_reference(X: VectorConfig, a, b) -> HilbSeries:
    Xa, origin = expand_multiplicity(X, a)
    J = lift_upper_set(X, j_from_hyperplane_mask(X, b), Xa, origin)
    return hilb_subset(Xa, J)


def _check_multiplicity(X: VectorConfig, a) -> list[int]:
    a = list(a)
    if len(a) != X.N or any(v < 0 for v in a):
        raise ZonotopalError("multiplicity vector must have N nonnegative entries", "BAD_MULTIPLICITY")
    if X.rank(sum(1 << i for i in range(X.N) if a[i])) < X.r:
        raise ZonotopalError("multiplicity vector drops the rank", "RANK_DROP")
    return a


def _restrict_to_support(X: VectorConfig, a: list[int], C0: int) -> tuple[VectorConfig, list[int], int]:
    """Drop zero-multiplicity columns; C0 must keep its span inside the support."""
    supp = [i for i in range(X.N) if a[i]]
    Xs = VectorConfig(tuple(X.columns[i] for i in supp), X.r)
    c = sum(1 << j for j, i in enumerate(supp) if C0 >> i & 1)
    if Xs.rank(c) != X.rank(C0):
        raise ZonotopalError(
            "after dropping zero multiplicities the lifted upper set is not of the form J_C0",
            "NOT_SEMI_INTERNAL",
        )
    return Xs, [a[i] for i in supp], c


def cox_semiinternal_hilb(X: VectorConfig, a, C0: int) -> HilbSeries:
    """Hilbert series of ker I(X(a), -1, lifted J_{C0}) from bases of X.

    Uses the HRX order for C0 and copies ordered compatibly (largest copy first).
    Choosing copy s_b + 1 of b makes s_b copies of b externally active, so the
    degree is e(B, s) = Σ_{x_i ∉ E(B)} a_i - r - Σ_{b ∈ B} s_b. A copy of an
    internally active b stays internally active only for s_b = 0, so the
    membership test is χ(B ∖ {b ∈ I(B) : s_b = 0}) = 1.
    """
    a = _check_multiplicity(X, a)
    C0 = X.closure(C0)
    if any(v == 0 for v in a):
        X, a, C0 = _restrict_to_support(X, a, C0)
        C0 = X.closure(C0)
    perm = hrx_order(X, C0)
    ap = [a[i] for i in perm]
    Xp = X.permuted(perm)
    Jp = permute_upper(above(X, C0), perm)
    acc: dict[int, int] = {}
    for rec in enumerate_bases(Xp):
        e0 = sum(ap[i] for i in range(X.N) if not rec.externally_active >> i & 1) - X.r
        idx = rec.indices
        for s in itertools.product(*(range(ap[i]) for i in idx)):
            active = sum(1 << i for i, si in zip(idx, s) if si == 0 and rec.internally_active >> i & 1)
            if Xp.closure(rec.members & ~active) in Jp:
                e = e0 - sum(s)
                acc[e] = acc.get(e, 0) + 1
    return HilbSeries.from_laurent(acc)


def cox_semiinternal_literal(X: VectorConfig, a, C0: int) -> HilbSeries:
    """Σ_{B ∈ B₋(X, J_{C0})} Σ_{0 ≤ s_i ≤ a_i - 1} t^{e(B, s)}, summing every s for each B.

    Agrees with the kernel for a = (1, ..., 1) but undercounts once some a_i >= 2;
    kept for comparison only.
    """
    a = _check_multiplicity(X, a)
    C0 = X.closure(C0)
    perm = hrx_order(X, C0)
    ap = [a[i] for i in perm]
    _, recs = semi_internal_bases_hrx(X, above(X, C0), C0)
    acc: dict[int, int] = {}
    for rec in recs:
        e0 = sum(ap[i] for i in range(X.N) if not rec.externally_active >> i & 1) - X.r
        for s in itertools.product(*(range(ap[i]) for i in rec.indices)):
            e = e0 - sum(s)
            acc[e] = acc.get(e, 0) + 1
    return HilbSeries.from_laurent(acc)


def cox_semiinternal_reference(X: VectorConfig, a, C0: int) -> HilbSeries:
    Xa, origin = expand_multiplicity(X, a)
    J = lift_upper_set(X, above(X, X.closure(C0)), Xa, origin)
    return hilb_kernel(Xa, -1, J)


# all routes -----------------------------------------------------------------


METHODS = ("kernel", "recursive", "activity", "subset")


def hilb_all(X: VectorConfig, k: int, J: UpperSet, methods=METHODS) -> dict:
    """Run every applicable route; returns {"series": {...}, "agree": bool, "skipped": {...}}."""
    check_k(k)
    series: dict[str, HilbSeries] = {}
    skipped: dict[str, str] = {}
    for m in methods:
        if m == "kernel":
            series[m] = hilb_kernel(X, k, J)
        elif m == "recursive":
            try:
                series[m] = hilb_recursive(X, k, J)
            except MissingHyperplanes as exc:
                skipped[m] = exc.code
        elif m == "activity":
            if k >= 0:
                series[m] = hilb_activity(X, k, J)
            else:
                skipped[m] = "K_TOO_SMALL"
        elif m == "subset":
            if k == 0:
                series[m] = hilb_subset(X, J)
            else:
                skipped[m] = "ONLY_K_ZERO"
        else:
            raise ZonotopalError(f"unknown method {m!r}", "BAD_METHOD")
    values = list(series.values())
    return {"series": series, "agree": all(v == values[0] for v in values), "skipped": skipped}
