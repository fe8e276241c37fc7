"""Exact matrix rank over the rationals or a prime field."""

from __future__ import annotations

from typing import Sequence

Field = int  # 0 for the rationals, a prime p for F_p


def parse_field(text: str) -> Field:
    """``q`` -> 0, ``fp:<p>`` -> p."""
    text = text.strip().lower()
    if text in ("q", "qq", "0"):
        return 0
    if text.startswith("fp:"):
        p = int(text[3:])
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        return p
    raise ValueError(f"unknown field {text!r}; use q or fp:<p>")


def field_name(field: Field) -> str:
    return "q" if field == 0 else f"fp:{field}"


def rank(matrix: Sequence[Sequence[int]], field: Field = 0) -> int:
    """Rank of an integer matrix; entries are reduced mod p when field = p."""
    if field:
        return _rank_mod_p(matrix, field)
    return _rank_bareiss(matrix)


def _rank_bareiss(matrix: Sequence[Sequence[int]]) -> int:
    # fraction-free Gaussian elimination; every division below is exact
    rows = [list(r) for r in matrix if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        for i in range(r + 1, len(rows)):
            ri = rows[i]
            f = ri[c]
            rr = rows[r]
            rows[i] = [(p * ri[j] - f * rr[j]) // prev for j in range(ncols)]
        prev = p
        r += 1
        if r == len(rows):
            break
    return r


def _rank_mod_p(matrix: Sequence[Sequence[int]], p: int) -> int:
    rows = [[x % p for x in r] for r in matrix]
    rows = [r for r in rows if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, p)
        rr = [(x * inv) % p for x in rows[r]]
        rows[r] = rr
        for i in range(r + 1, len(rows)):
            f = rows[i][c]
            if f:
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rr)]
        r += 1
        if r == len(rows):
            break
    return r
