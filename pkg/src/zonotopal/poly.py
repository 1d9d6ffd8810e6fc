"""Sparse multivariate polynomials over Q and the differential pairing.

Polynomials in the point variables model Sym(U); polynomials in the normal
variables model Sym(V), acting on Sym(U) by differentiation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Mapping, Sequence

from .linalg import Echelon, primitive

POINT = "point"
NORMAL = "normal"

Exponent = tuple[int, ...]


@lru_cache(maxsize=None)
def monomials(r: int, d: int) -> tuple[Exponent, ...]:
    """Exponent vectors of degree ``d`` in ``r`` variables, graded-lex (x1^d first)."""
    if r == 0:
        return ((),) if d == 0 else ()
    if r == 1:
        return ((d,),)
    out = []
    for a in range(d, -1, -1):
        for rest in monomials(r - 1, d - a):
            out.append((a,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_index(r: int, d: int) -> dict[Exponent, int]:
    return {m: i for i, m in enumerate(monomials(r, d))}


def num_monomials(r: int, d: int) -> int:
    return comb(d + r - 1, r - 1) if r > 0 else int(d == 0)


@lru_cache(maxsize=None)
def exponent_factorial(a: Exponent) -> int:
    out = 1
    for x in a:
        out *= factorial(x)
    return out


@dataclass(frozen=True, eq=False)
class MPoly:
    """Polynomial with rational coefficients; ``terms`` never stores zeros."""

    r: int
    terms: Mapping[Exponent, Fraction] = field(default_factory=dict)
    space: str = POINT

    # construction -----------------------------------------------------------

    @classmethod
    def const(cls, r: int, c=1, space: str = POINT) -> "MPoly":
        c = Fraction(c)
        return cls(r, {(0,) * r: c} if c else {}, space)

    @classmethod
    def var(cls, r: int, i: int, space: str = POINT) -> "MPoly":
        e = [0] * r
        e[i] = 1
        return cls(r, {tuple(e): Fraction(1)}, space)

    @classmethod
    def linear(cls, coeffs: Sequence, space: str = POINT) -> "MPoly":
        r = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            if c:
                e = [0] * r
                e[i] = 1
                terms[tuple(e)] = Fraction(c)
        return cls(r, terms, space)

    @classmethod
    def monomial(cls, a: Exponent, c=1, space: str = POINT) -> "MPoly":
        return cls(len(a), {tuple(a): Fraction(c)}, space)

    @classmethod
    def from_vector(cls, r: int, d: int, vec: Sequence, space: str = POINT) -> "MPoly":
        mons = monomials(r, d)
        return cls(r, {m: Fraction(c) for m, c in zip(mons, vec) if c}, space)

    # basic queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        return {sum(a) for a in self.terms}

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(a) for a in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def component(self, d: int) -> "MPoly":
        return MPoly(self.r, {a: c for a, c in self.terms.items() if sum(a) == d}, self.space)

    def coeff_vector(self, d: int) -> list[Fraction]:
        """Coefficients of the degree-``d`` part in graded-lex monomial order."""
        return [self.terms.get(m, Fraction(0)) for m in monomials(self.r, d)]

    def coeff(self, a: Exponent) -> Fraction:
        return self.terms.get(tuple(a), Fraction(0))

    # arithmetic -------------------------------------------------------------

    def _check(self, other: "MPoly") -> None:
        if other.r != self.r:
            raise ValueError(f"variable count mismatch: {self.r} vs {other.r}")

    def __add__(self, other: "MPoly") -> "MPoly":
        self._check(other)
        terms = dict(self.terms)
        for a, c in other.terms.items():
            v = terms.get(a, 0) + c
            if v:
                terms[a] = v
            else:
                terms.pop(a, None)
        return MPoly(self.r, terms, self.space)

    def __neg__(self) -> "MPoly":
        return MPoly(self.r, {a: -c for a, c in self.terms.items()}, self.space)

    def __sub__(self, other: "MPoly") -> "MPoly":
        return self + (-other)

    def scale(self, c) -> "MPoly":
        c = Fraction(c)
        if not c:
            return MPoly(self.r, {}, self.space)
        return MPoly(self.r, {a: c * v for a, v in self.terms.items()}, self.space)

    def __mul__(self, other) -> "MPoly":
        if not isinstance(other, MPoly):
            return self.scale(other)
        self._check(other)
        terms: dict[Exponent, Fraction] = {}
        for a, c in self.terms.items():
            for b, d in other.terms.items():
                e = tuple(x + y for x, y in zip(a, b))
                v = terms.get(e, 0) + c * d
                if v:
                    terms[e] = v
                else:
                    del terms[e]
        return MPoly(self.r, terms, self.space)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MPoly":
        out = MPoly.const(self.r, 1, self.space)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.r == other.r and dict(self.terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash((self.r, frozenset(self.terms.items())))

    def rename(self, r: int, var_map: Sequence[int], space: str | None = None) -> "MPoly":
        """Embed into ``r`` variables sending variable ``i`` to ``var_map[i]``."""
        terms = {}
        for a, c in self.terms.items():
            e = [0] * r
            for i, x in enumerate(a):
                e[var_map[i]] += x
            terms[tuple(e)] = c
        return MPoly(r, terms, space or self.space)

    def derivative(self, i: int) -> "MPoly":
        terms = {}
        for a, c in self.terms.items():
            if a[i]:
                e = list(a)
                e[i] -= 1
                terms[tuple(e)] = c * a[i]
        return MPoly(self.r, terms, self.space)

    def __repr__(self) -> str:
        return f"MPoly({format_poly(self)})"


def format_poly(f: MPoly, names: Sequence[str] | None = None) -> str:
    if f.is_zero():
        return "0"
    if names is None:
        names = "xyz" if f.r <= 3 else [f"t{i + 1}" for i in range(f.r)]
    parts = []
    for a in sorted(f.terms, key=lambda e: (-sum(e), tuple(-x for x in e))):
        c = f.terms[a]
        mono = "".join(
            names[i] + (f"^{x}" if x > 1 else "") for i, x in enumerate(a) if x
        )
        if mono:
            coef = "" if c == 1 else "-" if c == -1 else f"{c}*"
            parts.append(coef + mono)
        else:
            parts.append(str(c))
    return " + ".join(parts).replace("+ -", "- ")


def apply_diff(q: MPoly, f: MPoly) -> MPoly:
    """Let ``q`` (normal variables) act on ``f`` (point variables) as a differential operator."""
    if q.r != f.r:
        raise ValueError("operator and polynomial live over different dimensions")
    terms: dict[Exponent, Fraction] = {}
    for b, c in q.terms.items():
        for a, d in f.terms.items():
            if all(x >= y for x, y in zip(a, b)):
                e = tuple(x - y for x, y in zip(a, b))
                w = c * d * (exponent_factorial(a) // exponent_factorial(e))
                v = terms.get(e, 0) + w
                if v:
                    terms[e] = v
                else:
                    del terms[e]
    return MPoly(f.r, terms, f.space)


def pairing(f: MPoly, q: MPoly) -> Fraction:
    """Degree-zero part of ``q`` applied to ``f``."""
    if q.r != f.r:
        raise ValueError("pairing across different dimensions")
    total = Fraction(0)
    for a, c in f.terms.items():
        d = q.terms.get(a)
        if d:
            total += c * d * exponent_factorial(a)
    return total


def linear_form_product(forms: Iterable[Sequence], r: int, space: str = POINT) -> MPoly:
    out = MPoly.const(r, 1, space)
    for v in forms:
        out = out * MPoly.linear(v, space)
    return out


@dataclass
class GradedBasis:
    """Per-degree linearly independent polynomial lists."""

    r: int
    parts: dict[int, list[MPoly]] = field(default_factory=dict)

    @property
    def dims(self) -> list[int]:
        if not self.parts:
            return []
        top = max(d for d, ps in self.parts.items() if ps) if any(self.parts.values()) else -1
        return [len(self.parts.get(d, [])) for d in range(top + 1)]

    @property
    def dim(self) -> int:
        return sum(len(ps) for ps in self.parts.values())

    def polys(self) -> list[MPoly]:
        return [p for d in sorted(self.parts) for p in self.parts[d]]

    def echelon(self, d: int) -> Echelon:
        ech = Echelon(num_monomials(self.r, d))
        for p in self.parts.get(d, []):
            ech.add(p.coeff_vector(d))
        return ech

    def contains(self, f: MPoly) -> bool:
        """Membership of an arbitrary (possibly inhomogeneous) polynomial."""
        for d in f.degrees():
            if not self.echelon(d).contains(f.coeff_vector(d)):
                return False
        return True


def span_reduce(polys: Iterable[MPoly], r: int | None = None) -> GradedBasis:
    """Select, per degree and in input order, a basis of the span of ``polys``.

    Inputs must be homogeneous; zero polynomials are skipped.
    """
    polys = list(polys)
    if r is None:
        if not polys:
            raise ValueError("cannot infer dimension from an empty list")
        r = polys[0].r
    echs: dict[int, Echelon] = {}
    out = GradedBasis(r)
    for f in polys:
        if f.is_zero():
            continue
        if not f.is_homogeneous():
            raise ValueError("span_reduce expects homogeneous polynomials")
        d = f.degree
        ech = echs.get(d)
        if ech is None:
            ech = echs[d] = Echelon(num_monomials(r, d))
        if ech.add(f.coeff_vector(d)):
            out.parts.setdefault(d, []).append(f)
    return out


def same_space(A: GradedBasis, B: GradedBasis) -> bool:
    """Graded equality of two spans."""
    if A.dims != B.dims:
        return False
    for d, ps in B.parts.items():
        ech = A.echelon(d)
        if not all(ech.contains(p.coeff_vector(d)) for p in ps):
            return False
    return True


def is_subspace(A: GradedBasis, B: GradedBasis) -> bool:
    """span A ⊆ span B."""
    for d, ps in A.parts.items():
        ech = B.echelon(d)
        if not all(ech.contains(p.coeff_vector(d)) for p in ps):
            return False
    return True


def normalized(f: MPoly) -> MPoly:
    """Primitive integer scaling of a homogeneous polynomial (for stable output)."""
    if f.is_zero():
        return f
    d = f.degree
    vec = primitive(f.coeff_vector(d))
    lead = next(x for x in vec if x)
    if lead < 0:
        vec = [-x for x in vec]
    return MPoly.from_vector(f.r, d, vec, f.space)
