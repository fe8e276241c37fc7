"""Exhaustive and seeded corpora of small monomial ideals."""

from __future__ import annotations

import random

from .core import MonomialIdeal, minimalize


def squarefree_ideals(n: int) -> list[MonomialIdeal]:
    """Every proper nonzero squarefree monomial ideal of K[x1..xn]."""
    subsets = list(range(1, 1 << n))
    out = []

    # antichains of nonempty subsets, extended in increasing order
    def extend(start: int, chosen: list[int]) -> None:
        if chosen:
            out.append(minimalize([[m >> i & 1 for i in range(n)] for m in chosen], n))
        for j in range(start, len(subsets)):
            m = subsets[j]
            if any(c & m == c or c & m == m for c in chosen):
                continue
            extend(j + 1, chosen + [m])

    extend(0, [])
    return out


def random_ideals(count: int, n_max: int = 3, e_max: int = 3, g_max: int = 4, seed: int = 0) -> list[MonomialIdeal]:
    """Seeded proper nonzero ideals with at most g_max generators of exponent <= e_max."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(1, n_max)
        gens = []
        for _ in range(rng.randint(1, g_max)):
            g = tuple(rng.randint(0, e_max) for _ in range(n))
            if any(g):
                gens.append(g)
        if gens:
            out.append(minimalize(gens, n))
    return out
