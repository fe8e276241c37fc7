"""Stanley depth through interval partitions of the characteristic poset.

For a module I/J (S/I and I being special cases) and a cap vector g above all
generators, sdepth(I/J) is the largest k such that the monomials x^a with
0 <= a <= g and x^a in I minus J split into disjoint intervals [a, b] each
having at least k coordinates with b_i = g_i.

Any interval [a, b] splits into intervals of the form [c, c + (g - c) on Z]
with the same set Z = {i : b_i = g_i}, so the search only places such "flat"
intervals: one per remaining minimal element, for a chosen Z.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .core import Exponent, MonomialIdeal, lcm
from .homology import Kind, MultigradedModule

DEFAULT_BUDGET = 1_000_000
MEMO_LIMIT = 2_000_000


class UndecidedError(RuntimeError):
    """Search budget exhausted before an answer was found."""


@dataclass(frozen=True)
class CharacteristicPoset:
    module: MultigradedModule
    cap: Exponent

    @property
    def n(self) -> int:
        return self.module.n

    @cached_property
    def mask(self) -> np.ndarray:
        return self.module.basis_mask(self.cap)

    @cached_property
    def elements(self) -> list[Exponent]:
        pts = [tuple(int(x) for x in p) for p in np.argwhere(self.mask)]
        pts.sort(key=lambda p: (sum(p), p))
        return pts

    def __len__(self) -> int:
        return len(self.elements)


def characteristic_poset(
    kind: str | Kind, I: MonomialIdeal, J: MonomialIdeal | None = None, cap: Sequence[int] | None = None
) -> CharacteristicPoset:
    kind = Kind(kind)
    if kind is Kind.QUOTIENT_RING:
        M = MultigradedModule.quotient_ring(I)
    elif kind is Kind.IDEAL:
        M = MultigradedModule.ideal(I)
    else:
        if J is None:
            raise ValueError("idealQuotient needs J")
        M = MultigradedModule.ideal_quotient(I, J)
    g = lcm(M.top.gens + M.bottom.gens, M.n)
    if cap is not None:
        cap = tuple(cap)
        if any(c < x for c, x in zip(cap, g)):
            raise ValueError("cap must dominate every generator")
        g = cap
    return CharacteristicPoset(M, g)


def poset_of(M: MultigradedModule) -> CharacteristicPoset:
    return CharacteristicPoset(M, M.degree_bound)


Interval = tuple[Exponent, Exponent]


@dataclass
class Decision:
    """Outcome of a level-k search: True, False, or None (undecided)."""

    result: bool | None
    k: int
    certificate: list[Interval] | None = None
    nodes: int = 0

    def __bool__(self) -> bool:
        if self.result is None:
            raise UndecidedError(f"sdepth >= {self.k} undecided after {self.nodes} nodes")
        return self.result


def _flat_upper(a: Exponent, Z: Iterable[int], g: Exponent) -> Exponent:
    b = list(a)
    for i in Z:
        b[i] = g[i]
    return tuple(b)


def sdepth_decision(P: CharacteristicPoset, k: int, budget: int = DEFAULT_BUDGET) -> Decision:
    """Does some interval partition have every interval k-good?

    Depth-first search over the elements in (degree, lex) order; the first
    uncovered element must start a new interval, whose free coordinates are
    tried from the largest set downward.  Failed states are memoized by the
    uncovered set while the memo stays small.
    """
    n, g = P.n, P.cap
    if not 0 <= k <= n:
        raise ValueError("k out of range")
    order = P.elements
    if not order:
        return Decision(True, k, [], 0)
    free = P.mask.copy()
    total = len(order)
    memo: set[bytes] = set()
    use_memo = total <= 4096

    def candidates(a: Exponent) -> list[tuple[int, ...]]:
        top = [i for i in range(n) if a[i] == g[i]]
        rest = [i for i in range(n) if a[i] < g[i]]
        need = max(0, k - len(top))
        out = []
        for size in range(len(rest), need - 1, -1):
            for Z in itertools.combinations(rest, size):
                sl = tuple(slice(a[i], g[i] + 1) if i in Z else slice(a[i], a[i] + 1) for i in range(n))
                if free[sl].all():
                    out.append((Z, sl))
        return out

    # stack frames: [position in order, candidate list, next candidate index, placed slice]
    nodes = 0
    placed: list[tuple[Exponent, tuple[int, ...]]] = []
    stack: list[list] = []
    pos = 0

    def advance(start: int) -> int:
        while start < total and not free[order[start]]:
            start += 1
        return start

    pos = advance(0)
    if pos == total:
        return Decision(True, k, [], 0)
    stack.append([pos, candidates(order[pos]), 0, None])
    while stack:
        frame = stack[-1]
        p, cands, j, sl = frame
        if sl is not None:
            free[sl] = True
            placed.pop()
            frame[3] = None
        if j == len(cands) or (use_memo and j == 0 and _seen(memo, free)):
            if use_memo and len(memo) < MEMO_LIMIT:
                memo.add(free.tobytes())
            stack.pop()
            continue
        nodes += 1
        if nodes > budget:
            return Decision(None, k, None, nodes)
        Z, sl = cands[j]
        frame[2] = j + 1
        free[sl] = False
        frame[3] = sl
        placed.append((order[p], Z))
        nxt = advance(p + 1)
        if nxt == total:
            cert = [(a, _flat_upper(a, Z, g)) for a, Z in placed]
            return Decision(True, k, cert, nodes)
        stack.append([nxt, candidates(order[nxt]), 0, None])
    return Decision(False, k, None, nodes)


def _seen(memo: set[bytes], free: np.ndarray) -> bool:
    return free.tobytes() in memo


def sdepth_exact(P: CharacteristicPoset, budget: int = DEFAULT_BUDGET) -> int:
    """Largest k admitting a k-good partition (n + 1 never; empty poset -> inf is
    reported as n, callers check emptiness themselves)."""
    if not P.elements:
        raise ValueError("sdepth of the zero module is ∞ by convention")
    best = 0
    for k in range(1, P.n + 1):
        d = sdepth_decision(P, k, budget)
        if d.result is None:
            raise UndecidedError(f"sdepth >= {k} undecided after {d.nodes} nodes")
        if not d.result:
            break
        best = k
    return best


def sdepth(M: MultigradedModule, budget: int = DEFAULT_BUDGET) -> float:
    if M.is_zero:
        return float("inf")
    return sdepth_exact(poset_of(M), budget)


# -- decompositions ----------------------------------------------------------

StanleySpace = tuple[Exponent, frozenset[int]]


def partition_to_decomposition(P: CharacteristicPoset, intervals: Iterable[Interval]) -> list[StanleySpace]:
    """Each [a, b] becomes the spaces x^c K[Z], Z = {i : b_i = g_i}, for c in
    [a, b] with c_i = a_i on Z."""
    g = P.cap
    spaces = []
    for a, b in intervals:
        Z = frozenset(i for i in range(P.n) if b[i] == g[i])
        ranges = [range(a[i], a[i] + 1) if i in Z else range(a[i], b[i] + 1) for i in range(P.n)]
        for c in itertools.product(*ranges):
            spaces.append((tuple(c), Z))
    return spaces


@dataclass
class Verification:
    valid: bool
    value: int | None
    witness: Exponent | None = None
    reason: str = ""


def verify_decomposition(M: MultigradedModule, spaces: Sequence[StanleySpace]) -> Verification:
    """Degree-by-degree check that the spaces u K[Z] partition the monomials of M."""
    n = M.n
    upper = list(M.degree_bound)
    for u, _ in spaces:
        upper = [max(x, y) for x, y in zip(upper, u)]
    upper = tuple(x + 1 for x in upper)
    mask = M.basis_mask(upper)
    count = np.zeros(mask.shape, dtype=np.int64)
    for u, Z in spaces:
        if len(u) != n or any(i < 0 or i >= n for i in Z):
            return Verification(False, None, tuple(u), "malformed space")
        sl = tuple(slice(u[i], None) if i in Z else slice(u[i], u[i] + 1) for i in range(n))
        count[sl] += 1
    bad = np.argwhere(count != mask.astype(np.int64))
    if len(bad):
        c = tuple(int(x) for x in bad[0])
        reason = "uncovered" if mask[c] and count[c] == 0 else ("overlap" if mask[c] else "non-basis monomial covered")
        return Verification(False, None, c, reason)
    if not spaces:
        return Verification(True, None)
    return Verification(True, min(len(Z) for _, Z in spaces))


def verify_partition(P: CharacteristicPoset, intervals: Sequence[Interval]) -> Verification:
    return verify_decomposition(P.module, partition_to_decomposition(P, intervals))


def certificate_json(intervals: Sequence[Interval]) -> str:
    return json.dumps([{"lower": list(a), "upper": list(b)} for a, b in intervals])


def parse_certificate(text: str) -> list[Interval]:
    data = json.loads(text)
    return [(tuple(int(x) for x in d["lower"]), tuple(int(x) for x in d["upper"])) for d in data]
