"""Small test corpora: loop-free {-1,0,1} configurations up to matroid isomorphism."""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

from .matroid import UpperSet, VectorConfig, to_mask, upward_closure


def directions(r: int) -> list[tuple[int, ...]]:
    """Nonzero vectors in {-1,0,1}^r with positive first nonzero entry."""
    out = []
    for v in itertools.product((-1, 0, 1), repeat=r):
        nz = [x for x in v if x]
        if nz and nz[0] > 0:
            out.append(v)
    return sorted(out, reverse=True)


def bases_masks(X: VectorConfig) -> frozenset[int]:
    return frozenset(
        to_mask(c) for c in itertools.combinations(range(X.N), X.r) if X.rank(to_mask(c)) == X.r
    )


def _element_invariant(bases: frozenset[int], N: int, i: int) -> tuple:
    inside = sum(1 for B in bases if B >> i & 1)
    # how many other elements each basis through i could swap i with
    pairs = sorted(sum(1 for B in bases if B >> i & 1 and B >> j & 1) for j in range(N) if j != i)
    return (inside, tuple(pairs))


def canonical_form(X: VectorConfig) -> tuple:
    """Lexicographically least relabelled bases family, searching only label
    orders consistent with a permutation-invariant element statistic."""
    bases = bases_masks(X)
    N = X.N
    inv = [_element_invariant(bases, N, i) for i in range(N)]
    classes: dict[tuple, list[int]] = {}
    for i in range(N):
        classes.setdefault(inv[i], []).append(i)
    keys = sorted(classes)
    best = None
    for choice in itertools.product(*(itertools.permutations(classes[k]) for k in keys)):
        order = [i for block in choice for i in block]
        pos = {old: new for new, old in enumerate(order)}
        relabelled = tuple(
            sorted(sum(1 << pos[i] for i in range(N) if B >> i & 1) for B in bases)
        )
        if best is None or relabelled < best:
            best = relabelled
    return (X.r, N, tuple(keys), best)


@lru_cache(maxsize=None)
def matroid_corpus(max_n: int = 6, max_r: int = 3, min_n: int = 1) -> tuple[VectorConfig, ...]:
    """One loop-free spanning configuration per matroid isomorphism class."""
    seen: set[tuple] = set()
    out: list[VectorConfig] = []
    for r in range(1, max_r + 1):
        dirs = directions(r)
        for n in range(max(r, min_n), max_n + 1):
            for combo in itertools.combinations_with_replacement(range(len(dirs)), n):
                cols = [dirs[i] for i in combo]
                try:
                    X = VectorConfig.from_columns(cols, r)
                except ValueError:
                    continue
                key = canonical_form(X)
                if key in seen:
                    continue
                seen.add(key)
                out.append(X)
    return tuple(out)


def random_upper_sets(X: VectorConfig, count: int, seed: int = 0) -> list[UpperSet]:
    """``count`` distinct-when-possible upper sets generated by random flats, seeded by X."""
    rng = random.Random(f"{seed}:{X.r}:{X.columns}")
    flats = [f.mask for f in X.lattice]
    out: list[UpperSet] = []
    attempts = 0
    while len(out) < count and attempts < 50 * count:
        attempts += 1
        gens = rng.sample(flats, rng.randint(1, min(3, len(flats))))
        J = upward_closure(X, gens)
        if J not in out:
            out.append(J)
    while len(out) < count:
        out.append(out[len(out) % max(len(out), 1)])
    return out
