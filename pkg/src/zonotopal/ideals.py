"""Hierarchical zonotopal power ideals, their kernels, and P-spaces."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from .errors import KernelCapExceeded, MissingHyperplanes, ZonotopalError, check_k
from .linalg import Echelon, intersect
from .matroid import (
    Flat,
    Minor,
    NormalSelector,
    UpperSet,
    VectorConfig,
    above,
    annihilator_basis,
    central,
    contains_all_hyperplanes,
    contract,
    delete,
    m_of,
    maximal_missing_flats,
    members,
    popcount,
)
from .poly import (
    NORMAL,
    POINT,
    GradedBasis,
    apply_diff,
    MPoly,
    exponent_factorial,
    is_subspace,
    monomial_index,
    monomials,
    num_monomials,
    same_space,
    span_reduce,
)
from .series import HilbSeries

PURE = "pure"
POLARIZED = "polarized"


@dataclass(frozen=True)
class PowerGen:
    """D_η^e (PURE) or a product Π D_{η_i}^{α_i} over an annihilator basis (POLARIZED)."""

    kind: str
    flat: int
    normals: tuple[tuple[int, ...], ...]
    exponents: tuple[int, ...]

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @cached_property
    def poly(self) -> MPoly:
        r = len(self.normals[0])
        out = MPoly.const(r, 1, NORMAL)
        for eta, a in zip(self.normals, self.exponents):
            if a:
                out = out * MPoly.linear(eta, NORMAL) ** a
        return out


def exponent(X: VectorConfig, k: int, J: UpperSet, C: Flat | int) -> int:
    mask = C.mask if isinstance(C, Flat) else C
    return m_of(X, mask) + k + int(mask in J)


def _critical_flats(X: VectorConfig, J: UpperSet) -> list[Flat]:
    crit = {f.mask: f for f in X.lattice.hyperplanes}
    for f in maximal_missing_flats(X, J):
        crit.setdefault(f.mask, f)
    return sorted(crit.values(), key=lambda f: (f.rank, f.members))


def iprime_generators(
    X: VectorConfig, k: int, J: UpperSet, selector: NormalSelector | None = None
) -> list[PowerGen]:
    """One pure power per hyperplane and per maximal missing flat."""
    check_k(k)
    selector = selector or NormalSelector()
    out = []
    for C in _critical_flats(X, J):
        e = exponent(X, k, J, C)
        if e < 0:
            raise ZonotopalError(f"negative exponent {e} for flat {C.members}", "K_BELOW_MINUS_ONE")
        out.append(PowerGen(PURE, C.mask, (selector(X, C),), (e,)))
    return out


def _exponent_vectors(c: int, e: int) -> list[tuple[int, ...]]:
    return list(monomials(c, e))


def i_generators(X: VectorConfig, k: int, J: UpperSet) -> list[PowerGen]:
    """Finite presentation of I(X, k, J): per proper flat, every monomial of
    degree e(C) in a basis of the covectors vanishing on C."""
    check_k(k)
    out = []
    for C in X.lattice:
        if C.mask == X.full:
            continue
        e = exponent(X, k, J, C)
        basis = tuple(tuple(v) for v in annihilator_basis(X, C.mask))
        for alpha in _exponent_vectors(len(basis), e):
            out.append(PowerGen(POLARIZED, C.mask, basis, alpha))
    return out


# kernels -------------------------------------------------------------------


@dataclass
class KernelResult:
    basis: GradedBasis
    hilb: HilbSeries
    cap_hit: bool = False


@lru_cache(maxsize=None)
def _derivative_table(r: int, d: int) -> tuple[tuple[tuple[int, int, int], ...], ...]:
    """For each variable i: (index in degree d, multiplier a_i, index of a - e_i in degree d-1)."""
    prev = monomial_index(r, d - 1)
    table = []
    for i in range(r):
        entries = []
        for j, a in enumerate(monomials(r, d)):
            if a[i]:
                b = a[:i] + (a[i] - 1,) + a[i + 1 :]
                entries.append((j, a[i], prev[b]))
        table.append(tuple(entries))
    return tuple(table)


def _as_poly(g) -> MPoly:
    return g.poly if isinstance(g, PowerGen) else g


def default_cap(X: VectorConfig, k: int) -> int:
    return X.N + max(k, 0) + 1


def kernel(gens: Sequence, r: int, cap: int, strict: bool = True) -> KernelResult:
    """Inverse system of the ideal generated by ``gens`` (normal-variable polynomials).

    Degree ``d`` equations: the generators of degree ``d`` plus the degree
    ``d-1`` equations composed with each partial derivative. This is exact
    because the kernel is closed under differentiation. Stops at the first
    degree whose kernel is zero.
    """
    if not gens:
        raise ZonotopalError("kernel of the zero ideal is infinite-dimensional", "EMPTY_IDEAL")
    by_degree: dict[int, list] = defaultdict(list)
    for g in gens:
        by_degree[g.degree].append(g)
    parts: dict[int, list[MPoly]] = {}
    prev: Echelon | None = None
    for d in range(cap + 1):
        n = num_monomials(r, d)
        mons = monomials(r, d)
        ech = Echelon(n)
        if prev is not None:
            table = _derivative_table(r, d)
            for row in prev.basis():
                for entries in table:
                    vec = [0] * n
                    for j, mult, src in entries:
                        vec[j] = mult * row[src]
                    ech.add(vec)
                    if ech.rank == n:
                        break
                if ech.rank == n:
                    break
        if ech.rank < n:
            for g in by_degree.get(d, ()):
                q = _as_poly(g)
                ech.add([q.coeff(a) * exponent_factorial(a) for a in mons])
                if ech.rank == n:
                    break
        if ech.rank == n:
            basis = GradedBasis(r, parts)
            return KernelResult(basis, HilbSeries.from_dims(basis.dims))
        parts[d] = [MPoly.from_vector(r, d, v) for v in ech.nullspace()]
        prev = ech
    basis = GradedBasis(r, parts)
    if strict:
        raise KernelCapExceeded(f"kernel still nonzero in degree {cap}")
    return KernelResult(basis, HilbSeries.from_dims(basis.dims), cap_hit=True)


def kernel_direct(gens: Sequence, r: int, cap: int) -> GradedBasis:
    """Reference route: per degree, stack the maps f -> g f for every generator."""
    parts = {}
    for d in range(cap + 1):
        mons = monomials(r, d)
        ech = Echelon(num_monomials(r, d))
        for g in gens:
            q = _as_poly(g)
            e = g.degree
            if e > d:
                continue
            # coefficient of x^c in q·f, as a row over f's coefficients
            for c in monomials(r, d - e):
                row = []
                for a in mons:
                    b = tuple(x - y for x, y in zip(a, c))
                    if min(b) < 0:
                        row.append(0)
                    else:
                        row.append(q.coeff(b) * (exponent_factorial(a) // exponent_factorial(c)))
                ech.add(row)
        ns = ech.nullspace()
        if not ns:
            break
        parts[d] = [MPoly.from_vector(r, d, v) for v in ns]
    return GradedBasis(r, parts)


def ideal_component(gens: Sequence, r: int, d: int) -> Echelon:
    """Degree-``d`` slice of the ideal: span of monomial multiples of generators."""
    idx = monomial_index(r, d)
    ech = Echelon(num_monomials(r, d))
    for g in gens:
        e = g.degree
        if e > d:
            continue
        q = _as_poly(g)
        for c in monomials(r, d - e):
            vec = [0] * len(idx)
            for b, coef in q.terms.items():
                vec[idx[tuple(x + y for x, y in zip(b, c))]] += coef
            ech.add(vec)
            if ech.rank == len(idx):
                return ech
    return ech


def kernel_of_i(X: VectorConfig, k: int, J: UpperSet, cap: int | None = None) -> KernelResult:
    return kernel(i_generators(X, k, J), X.r, default_cap(X, k) if cap is None else cap)


def kernel_of_iprime(
    X: VectorConfig, k: int, J: UpperSet, selector: NormalSelector | None = None, cap: int | None = None
) -> KernelResult:
    gens = iprime_generators(X, k, J, selector)
    if cap is None:
        # hyperplane normals span V, so any r of the largest powers bound the socle degree
        top = sorted((g.degree for g in gens), reverse=True)[: X.r]
        cap = max(default_cap(X, k), sum(top) - X.r + 1)
    return kernel(gens, X.r, cap)


# spanning sets -------------------------------------------------------------


class ProductCache:
    """p_Y for subsets Y of the ground set, built incrementally."""

    def __init__(self, X: VectorConfig):
        self.X = X
        self._cache: dict[int, MPoly] = {0: MPoly.const(X.r)}

    def __call__(self, mask: int) -> MPoly:
        p = self._cache.get(mask)
        if p is None:
            low = mask & -mask
            i = low.bit_length() - 1
            p = self(mask ^ low) * MPoly.linear(self.X.columns[i])
            self._cache[mask] = p
        return p


@dataclass(frozen=True)
class SElement:
    Y: int
    monomial: tuple[int, ...]
    poly: MPoly


def _internal_ok(X: VectorConfig, J: UpperSet, Y: int, flats: Iterable[Flat]) -> bool:
    return all(popcount(Y & ~C.mask) < m_of(X, C) - 1 + int(C.mask in J) for C in flats)


def s_set_labeled(X: VectorConfig, k: int, J: UpperSet, products: ProductCache | None = None) -> list[SElement]:
    check_k(k)
    p = products or ProductCache(X)
    zero = (0,) * X.r
    out = []
    if k == -1:
        crit = _critical_flats(X, J)
        for Y in range(1 << X.N):
            if _internal_ok(X, J, Y, crit):
                out.append(SElement(Y, zero, p(Y)))
        return out
    for Y in range(1 << X.N):
        bound = int(X.closure(X.full & ~Y) in J) + k - 1
        for deg in range(bound + 1):
            for a in monomials(X.r, deg):
                out.append(SElement(Y, a, p(Y) * MPoly.monomial(a)))
    return out


def s_set(X: VectorConfig, k: int, J: UpperSet) -> list[MPoly]:
    return [s.poly for s in s_set_labeled(X, k, J)]


def s_set_internal_all_flats(X: VectorConfig, J: UpperSet) -> list[int]:
    """The k = -1 spanning set checked against every proper flat (reference route)."""
    proper = [f for f in X.lattice if f.mask != X.full]
    return [Y for Y in range(1 << X.N) if _internal_ok(X, J, Y, proper)]


def p_space(X: VectorConfig, k: int, J: UpperSet) -> GradedBasis:
    return span_reduce(s_set(X, k, J), X.r)


# structural checks ----------------------------------------------------------


@dataclass
class Check:
    name: str
    holds: bool
    asserted: bool = True
    detail: str = ""


@dataclass
class Report:
    checks: list[Check] = field(default_factory=list)
    dims: dict[str, list[int]] = field(default_factory=dict)

    def add(self, name: str, holds: bool, asserted: bool = True, detail: str = "") -> None:
        self.checks.append(Check(name, bool(holds), asserted, detail))

    @property
    def passed(self) -> bool:
        return all(c.holds for c in self.checks if c.asserted)

    def get(self, name: str) -> Check:
        return next(c for c in self.checks if c.name == name)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "checks": [
                {"name": c.name, "holds": c.holds, "asserted": c.asserted, "detail": c.detail}
                for c in self.checks
            ],
            "dims": self.dims,
        }


def verify_main_theorem(
    X: VectorConfig,
    k: int,
    J: UpperSet,
    selectors: Sequence[NormalSelector] | None = None,
    iprime_kernels: bool = False,
) -> Report:
    """P ⊆ ker I (= for k >= 0 or J ⊇ hyperplanes), ker I ⊆ ker I', and ker I = ker I'
    for k in {-1, 0}. For k >= 1 the I' kernels are only computed on request."""
    check_k(k)
    selectors = list(selectors) if selectors else [NormalSelector()]
    rep = Report()
    P = p_space(X, k, J)
    K = kernel_of_i(X, k, J).basis
    rep.dims["P"] = P.dims
    rep.dims["ker_I"] = K.dims
    rep.add("P_subset_ker_I", is_subspace(P, K))
    equality_claimed = k >= 0 or contains_all_hyperplanes(X, J)
    rep.add(
        "P_equals_ker_I",
        same_space(P, K),
        asserted=equality_claimed,
        detail="" if equality_claimed else "k = -1 and J misses a hyperplane: report only",
    )
    if k >= 1 and not iprime_kernels:
        # only inclusion is claimed: test that every I' generator kills ker I
        for sel in selectors:
            gens = iprime_generators(X, k, J, sel)
            kills = all(apply_diff(g.poly, f).is_zero() for g in gens for f in K.polys())
            rep.add(f"ker_I_subset_ker_I'[{sel.name}]", kills)
        return rep
    kprimes = []
    for sel in selectors:
        Kp = kernel_of_iprime(X, k, J, sel).basis
        kprimes.append(Kp)
        rep.dims[f"ker_I'[{sel.name}]"] = Kp.dims
        rep.add(f"ker_I_subset_ker_I'[{sel.name}]", is_subspace(K, Kp))
    if k in (-1, 0):
        rep.add("ker_I'_selector_independent", all(same_space(kprimes[0], Kp) for Kp in kprimes[1:]))
        rep.add("ker_I_equals_ker_I'", all(same_space(K, Kp) for Kp in kprimes))
    else:
        rep.add(
            "ker_I_equals_ker_I'",
            all(same_space(K, Kp) for Kp in kprimes),
            asserted=False,
            detail="k >= 1: only inclusion is claimed",
        )
    return rep


def embed_contraction(f: MPoly, minor: Minor, r: int) -> MPoly:
    """View a polynomial on the contraction as an element of Sym(W) ⊆ Sym(U)."""
    return f.rename(r, minor.var_map, POINT)


def project_to_contraction(f: MPoly, X: VectorConfig, x: int, minor: Minor) -> MPoly:
    """Sym(π_x): substitute e_p -> -x/x_p (restricted to W) and keep the other variables."""
    v = X.columns[x]
    keep = minor.var_map
    p = next(i for i in range(X.r) if i not in keep)
    rr = len(keep)
    image_p = MPoly.linear([-Fraction(v[i]) / v[p] for i in keep])
    out = MPoly(rr, {})
    powers = {0: MPoly.const(rr)}
    for a, c in f.terms.items():
        ap = a[p]
        if ap not in powers:
            powers[ap] = image_p ** ap
        rest = MPoly.monomial(tuple(a[i] for i in keep), c)
        out = out + rest * powers[ap]
    return out


def exact_sequence_precondition(X: VectorConfig, k: int, J: UpperSet, x: int) -> str | None:
    if X.is_loop(x) or X.is_coloop(x):
        return "x must be neither a loop nor a coloop"
    if k == -1 and not (contains_all_hyperplanes(X, J) or J == central(X)):
        return "k = -1 requires J to contain all or no hyperplanes"
    return None


def verify_exact_sequence(X: VectorConfig, k: int, J: UpperSet, x: int, force: bool = False) -> Report:
    """Check 0 -> ker I(X∖x)(-1) -> ker I(X) -> ker I(X/x) -> 0 for the maps
    multiplication by p_x and Sym(π_x), degreewise and as subspaces."""
    check_k(k)
    problem = exact_sequence_precondition(X, k, J, x)
    if problem and not force:
        if k == -1 and "hyperplanes" in problem:
            raise MissingHyperplanes(problem)
        raise ZonotopalError(problem, "BAD_ELEMENT")
    asserted = problem is None
    detail = problem or ""
    dl = delete(X, J, x)
    ct = contract(X, J, x)
    K = kernel_of_i(X, k, J)
    Kd = kernel_of_i(dl.config, k, dl.upper)
    Kc = kernel_of_i(ct.config, k, ct.upper)
    rep = Report()
    rep.dims.update({"ker": K.hilb.as_list(), "deletion": Kd.hilb.as_list(), "contraction": Kc.hilb.as_list()})
    rep.add("hilbert_identity", K.hilb == Kd.hilb.shift(1) + Kc.hilb, asserted, detail)

    px = MPoly.linear(X.columns[x])
    shifted = [px * f for f in Kd.basis.polys()]
    rep.add(
        "multiplication_into_kernel",
        all(K.basis.contains(f) for f in shifted),
        asserted,
        detail,
    )
    image = span_reduce([project_to_contraction(f, X, x, ct) for f in K.basis.polys()], ct.config.r)
    rep.dims["image"] = image.dims
    rep.add("projection_onto_contraction", same_space(image, Kc.basis), asserted, detail)
    # kernel of the projection restricted to ker I(X) has the size of p_x·ker(deletion)
    kd = [0] + Kd.hilb.as_list()
    kk = K.hilb.as_list()
    im = image.dims
    n = max(len(kk), len(kd), len(im))
    pad = lambda v: v + [0] * (n - len(v))
    rep.add(
        "middle_exactness",
        all(a - b == c for a, b, c in zip(pad(kk), pad(im), pad(kd))),
        asserted,
        detail,
    )
    exact = all(c.holds for c in rep.checks)
    rep.add("direct_sum_decomposition", exact, asserted, detail or "ker = p_x·ker(deletion) ⊕ complement mapping onto ker(contraction)")
    # the splitting through Sym(W) depends on the chosen complement: report only
    pieces = shifted + [embed_contraction(f, ct, X.r) for f in Kc.basis.polys()]
    S = span_reduce(pieces, X.r)
    rep.add(
        "direct_sum_via_complement",
        S.dim == len(pieces) and same_space(S, K.basis),
        asserted=False,
        detail="depends on the complement W of span(x)",
    )
    return rep


@dataclass
class ExternalDecomposition:
    summands: list[tuple[Flat, GradedBasis]]
    total_dims: list[int]
    external_dims: list[int]
    direct: bool

    @property
    def holds(self) -> bool:
        return self.direct and self.total_dims == self.external_dims


def external_decomposition(X: VectorConfig) -> ExternalDecomposition:
    """Summands p_{X∖C} · P(C, 0, {C}) over all flats C."""
    prod = ProductCache(X)
    summands = []
    everything = []
    for C in X.lattice:
        outside = prod(X.full & ~C.mask)
        polys = []
        sub = C.mask
        while True:
            if X.rank(C.mask & ~sub) == C.rank:
                polys.append(outside * prod(sub))
            if sub == 0:
                break
            sub = (sub - 1) & C.mask
        gb = span_reduce(list(reversed(polys)), X.r)
        summands.append((C, gb))
        everything.extend(gb.polys())
    union = span_reduce(everything, X.r)
    total = [0] * max((len(gb.dims) for _, gb in summands), default=0)
    for _, gb in summands:
        for d, v in enumerate(gb.dims):
            total[d] += v
    while total and total[-1] == 0:
        total.pop()
    ext = p_space(X, 1, central(X))
    direct = union.dim == sum(total) and same_space(union, ext)
    return ExternalDecomposition(summands, total, ext.dims, direct)


def central_space_of_deletion(X: VectorConfig, x: int, products: ProductCache | None = None) -> GradedBasis:
    """P(X∖x, 0, {X∖x}) inside Sym(U): span of p_Y, Y ⊆ X∖x with (X∖x)∖Y spanning U."""
    prod = products or ProductCache(X)
    rest = X.full & ~(1 << x)
    polys = []
    for Y in range(1 << X.N):
        if Y & ~rest:
            continue
        if X.rank(rest & ~Y) == X.r:
            polys.append(prod(Y))
    return span_reduce(polys, X.r)


def graded_intersection(A: GradedBasis, B: GradedBasis) -> GradedBasis:
    out = GradedBasis(A.r)
    for d in sorted(set(A.parts) & set(B.parts)):
        va = [p.coeff_vector(d) for p in A.parts[d]]
        vb = [p.coeff_vector(d) for p in B.parts[d]]
        common = intersect(va, vb)
        if common:
            out.parts[d] = [MPoly.from_vector(A.r, d, v) for v in common]
    return out


def semi_internal_kernel_check(X: VectorConfig, C0: int) -> Report:
    """ker I(X, -1, J_{C0}) against ⋂_{x ∈ C0} P(X∖x, 0, {X∖x})."""
    C0 = X.closure(C0)
    J = above(X, C0)
    K = kernel_of_i(X, -1, J).basis
    prod = ProductCache(X)
    core = [x for x in members(C0) if not X.is_loop(x)]
    if not core:
        inter = p_space(X, 0, central(X))
    else:
        inter = central_space_of_deletion(X, core[0], prod)
        for x in core[1:]:
            inter = graded_intersection(inter, central_space_of_deletion(X, x, prod))
    rep = Report()
    rep.dims["ker_I"] = K.dims
    rep.dims["intersection"] = inter.dims
    rep.add("kernel_equals_intersection", same_space(K, inter))
    return rep
