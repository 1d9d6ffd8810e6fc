"""Hilbert series and small exact univariate/Laurent helpers."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Sequence


@dataclass(frozen=True)
class HilbSeries:
    """Polynomial Σ coeffs[d] t^d with nonnegative integer coefficients."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        if any(x < 0 for x in c):
            raise ValueError(f"negative Hilbert coefficient in {c}")
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c))

    @classmethod
    def of(cls, *coeffs: int) -> "HilbSeries":
        return cls(tuple(coeffs))

    @classmethod
    def from_dims(cls, dims: Iterable[int]) -> "HilbSeries":
        return cls(tuple(dims))

    @classmethod
    def from_laurent(cls, terms: Mapping[int, int]) -> "HilbSeries":
        """Accept a Laurent polynomial only if it is an honest nonnegative polynomial."""
        bad = {e: c for e, c in terms.items() if c and (e < 0 or c < 0)}
        if bad:
            raise ValueError(f"not a polynomial with nonnegative coefficients: {bad}")
        top = max((e for e, c in terms.items() if c), default=-1)
        return cls(tuple(terms.get(e, 0) for e in range(top + 1)))

    def __add__(self, other: "HilbSeries") -> "HilbSeries":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return HilbSeries(tuple(x + y for x, y in zip(a, b)))

    def shift(self, j: int) -> "HilbSeries":
        """Multiply by t^j."""
        if not self.coeffs:
            return self
        return HilbSeries((0,) * j + self.coeffs)

    def __call__(self, t):
        return sum(c * t**d for d, c in enumerate(self.coeffs))

    @property
    def dim(self) -> int:
        return sum(self.coeffs)

    def as_list(self) -> list[int]:
        return list(self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for d, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if d == 0 else "t" if d == 1 else f"t^{d}"
            parts.append(str(c) if not mono else (mono if c == 1 else f"{c}{mono}"))
        return " + ".join(parts)


def laurent_add(acc: dict[int, int], other: Mapping[int, int], scale: int = 1, shift: int = 0) -> None:
    for e, c in other.items():
        acc[e + shift] = acc.get(e + shift, 0) + scale * c


def inv_t_minus_one_power(n: int) -> dict[int, int]:
    """(1/t - 1)^n as {exponent: coefficient}."""
    return {-j: comb(n, j) * (-1) ** (n - j) for j in range(n + 1)}


# univariate polynomials as coefficient lists (index = degree) ---------------


def upoly_trim(p: Sequence) -> list:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def upoly_add(p: Sequence, q: Sequence) -> list:
    n = max(len(p), len(q))
    return upoly_trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def upoly_mul(p: Sequence, q: Sequence) -> list:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return upoly_trim(out)


def upoly_pow(p: Sequence, n: int) -> list:
    out = [1]
    for _ in range(n):
        out = upoly_mul(out, p)
    return out


def upoly_eval(p: Sequence, t):
    return sum(c * t**i for i, c in enumerate(p))


def upoly_str(p: Sequence, var: str = "t") -> str:
    p = upoly_trim(p)
    if not p:
        return "0"
    parts = []
    for d in range(len(p) - 1, -1, -1):
        c = p[d]
        if not c:
            continue
        mono = "" if d == 0 else var if d == 1 else f"{var}^{d}"
        if not mono:
            parts.append(str(c))
        elif c == 1:
            parts.append(mono)
        elif c == -1:
            parts.append("-" + mono)
        else:
            parts.append(f"{c}*{mono}")
    return " + ".join(parts).replace("+ -", "- ")


def as_int_if_integral(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x
