"""Exact Fourier-Motzkin elimination for homogeneous integer systems.

A system is a list of integer rows r, each meaning ``r . z <= 0``.  Projection
eliminates a prefix of the coordinates and returns rows over the rest, so
feasibility of the original system for fixed trailing coordinates is exactly
the truth of the projected rows there.
"""

from __future__ import annotations

from math import gcd
from typing import Sequence

Row = tuple[int, ...]


def _normalize(row: Sequence[int]) -> Row:
    g = 0
    for x in row:
        g = gcd(g, x)
    if g > 1:
        return tuple(x // g for x in row)
    return tuple(row)


def project(rows: Sequence[Sequence[int]], eliminate: int) -> list[Row]:
    """Eliminate coordinates ``0 .. eliminate-1``; return rows over the rest.

    Redundant rows are pruned with Chernikov's rule: a row derived from more
    than t+1 originals after t eliminations is implied by the others.
    """
    # each entry: normalized row -> frozenset of original row indices
    current: dict[Row, frozenset[int]] = {}
    for i, r in enumerate(rows):
        r = _normalize(r)
        if any(r):
            _keep(current, r, frozenset((i,)))
    remaining = list(range(eliminate))
    steps = 0
    while remaining:
        # cheapest variable first
        def cost(c: int) -> int:
            pos = sum(1 for r in current if r[c] > 0)
            neg = sum(1 for r in current if r[c] < 0)
            return pos * neg - pos - neg

        c = min(remaining, key=cost)
        remaining.remove(c)
        steps += 1
        pos = [(r, h) for r, h in current.items() if r[c] > 0]
        neg = [(r, h) for r, h in current.items() if r[c] < 0]
        nxt: dict[Row, frozenset[int]] = {r: h for r, h in current.items() if r[c] == 0}
        for rp, hp in pos:
            for rn, hn in neg:
                h = hp | hn
                if len(h) > steps + 1:
                    continue
                a, b = rp[c], -rn[c]
                comb = _normalize([b * x + a * y for x, y in zip(rp, rn)])
                if any(comb):
                    _keep(nxt, comb, h)
        current = _drop_dominated_histories(nxt)
    return [r[eliminate:] for r in current if any(r[eliminate:])]


def _keep(table: dict[Row, frozenset[int]], row: Row, hist: frozenset[int]) -> None:
    old = table.get(row)
    if old is None or len(hist) < len(old):
        table[row] = hist


def _drop_dominated_histories(table: dict[Row, frozenset[int]]) -> dict[Row, frozenset[int]]:
    items = sorted(table.items(), key=lambda kv: len(kv[1]))
    kept: list[tuple[Row, frozenset[int]]] = []
    for r, h in items:
        if any(k < h for _, k in kept):
            continue
        kept.append((r, h))
    return dict(kept)


def satisfies(rows: Sequence[Sequence[int]], point: Sequence[int]) -> bool:
    return all(sum(a * b for a, b in zip(r, point)) <= 0 for r in rows)
