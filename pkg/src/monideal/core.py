"""Exact monomial and monomial-ideal arithmetic.

Monomials are exponent vectors, stored as tuples of Python ints.  Variables
are indexed from 0 internally; the text format names them ``x1 .. xn``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

Exponent = tuple[int, ...]


class ArityError(ValueError):
    pass


def divides(a: Sequence[int], b: Sequence[int]) -> bool:
    """Componentwise a <= b."""
    return all(x <= y for x, y in zip(a, b))


def lcm(vectors: Iterable[Sequence[int]], n: int) -> Exponent:
    out = [0] * n
    for v in vectors:
        for i, e in enumerate(v):
            if e > out[i]:
                out[i] = e
    return tuple(out)


def add(a: Sequence[int], b: Sequence[int]) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def box(upper: Sequence[int], lower: Sequence[int] | None = None):
    """All integer points lower <= c <= upper, lexicographic order."""
    if lower is None:
        lower = (0,) * len(upper)
    return itertools.product(*(range(lo, hi + 1) for lo, hi in zip(lower, upper)))


def minimalize(gens: Iterable[Sequence[int]], n: int) -> "MonomialIdeal":
    """Divisibility-minimal, lexicographically sorted generating set."""
    vecs = set()
    for g in gens:
        g = tuple(int(e) for e in g)
        if len(g) != n:
            raise ArityError(f"generator {g} does not have arity {n}")
        if any(e < 0 for e in g):
            raise ValueError(f"negative exponent in {g}")
        vecs.add(g)
    # sorting by total degree first means a divisor is always seen before its multiples
    kept: list[Exponent] = []
    for g in sorted(vecs, key=lambda v: (sum(v), v)):
        if not any(divides(h, g) for h in kept):
            kept.append(g)
    return MonomialIdeal(n, tuple(sorted(kept)))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal of K[x_1..x_n] given by its minimal generators.

    Construct through :func:`minimalize` (or :meth:`from_gens`) unless the
    generator tuple is already canonical; equality is tuple equality.
    """

    n: int
    gens: tuple[Exponent, ...]

    @classmethod
    def from_gens(cls, gens: Iterable[Sequence[int]], n: int) -> "MonomialIdeal":
        return minimalize(gens, n)

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, ())

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls(n, ((0,) * n,))

    @classmethod
    def maximal(cls, n: int) -> "MonomialIdeal":
        return minimalize(unit_vectors(n), n)

    # -- predicates ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return self.gens == ((0,) * self.n,)

    @property
    def is_proper(self) -> bool:
        return not self.is_unit

    @property
    def mu(self) -> int:
        return len(self.gens)

    @cached_property
    def lcm(self) -> Exponent:
        return lcm(self.gens, self.n)

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.gens for e in g)

    @property
    def is_equigenerated(self) -> bool:
        return len({sum(g) for g in self.gens}) <= 1

    def _check(self, u: Sequence[int]) -> None:
        if len(u) != self.n:
            raise ArityError(f"monomial {tuple(u)} does not have arity {self.n}")

    def contains(self, u: Sequence[int]) -> bool:
        self._check(u)
        return any(divides(g, u) for g in self.gens)

    __contains__ = contains

    def issubset(self, other: "MonomialIdeal") -> bool:
        return all(other.contains(g) for g in self.gens)

    # -- arithmetic ---------------------------------------------------------

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        if other.n != self.n:
            raise ArityError("product of ideals in different rings")
        return minimalize((add(a, b) for a in self.gens for b in other.gens), self.n)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        if other.n != self.n:
            raise ArityError("sum of ideals in different rings")
        return minimalize(self.gens + other.gens, self.n)

    def power(self, k: int) -> "MonomialIdeal":
        if k < 0:
            raise ValueError("negative power")
        result = MonomialIdeal.unit(self.n)
        base = self
        # square-and-multiply; each product is minimalized so sizes stay small
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def colon(self, u: Sequence[int]) -> "MonomialIdeal":
        """(I : x^u)."""
        self._check(u)
        return minimalize(
            (tuple(max(gi - ui, 0) for gi, ui in zip(g, u)) for g in self.gens), self.n
        )

    def eliminate(self, i: int) -> tuple["MonomialIdeal", tuple[int, ...]]:
        """I intersected with K[x_j : j != i], re-labeled to arity n-1.

        Returns the ideal and the index map (new index -> old index).
        """
        if not 0 <= i < self.n:
            raise IndexError(f"variable index {i} out of range")
        keep = tuple(j for j in range(self.n) if j != i)
        gens = [tuple(g[j] for j in keep) for g in self.gens if g[i] == 0]
        return minimalize(gens, self.n - 1), keep

    def localize(self, P: Iterable[int]) -> tuple["MonomialIdeal", tuple[int, ...]]:
        """I(P): set x_i = 1 for i outside P; lives in K[x_i : i in P]."""
        keep = tuple(sorted(set(P)))
        if not keep:
            raise ValueError("localization at the empty variable set")
        if keep[0] < 0 or keep[-1] >= self.n:
            raise IndexError("variable index out of range")
        return minimalize((tuple(g[j] for j in keep) for g in self.gens), len(keep)), keep

    def embed(self, n: int, index_map: Sequence[int]) -> "MonomialIdeal":
        """Inverse of re-labeling: place variable j at index_map[j] in arity n."""
        gens = []
        for g in self.gens:
            v = [0] * n
            for j, e in zip(index_map, g):
                v[j] = e
            gens.append(v)
        return minimalize(gens, n)

    def radical(self) -> "MonomialIdeal":
        return minimalize((tuple(min(e, 1) for e in g) for g in self.gens), self.n)

    # -- display ------------------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(format_monomial(g) for g in self.gens) + ")"


def unit_vectors(n: int) -> list[Exponent]:
    return [tuple(int(i == j) for j in range(n)) for i in range(n)]


def format_monomial(u: Sequence[int], names: Sequence[str] | None = None) -> str:
    if names is None:
        names = [f"x{i + 1}" for i in range(len(u))]
    parts = []
    for name, e in zip(names, u):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


# -- associated primes -------------------------------------------------------


def _prime_of_colon(J: MonomialIdeal) -> frozenset[int] | None:
    """The variable set if J is generated by variables, else None."""
    if J.is_zero or J.is_unit:
        return None
    support = []
    for g in J.gens:
        nz = [i for i, e in enumerate(g) if e]
        if len(nz) != 1 or g[nz[0]] != 1:
            return None
        support.append(nz[0])
    return frozenset(support)


def associated_primes(I: MonomialIdeal, enlarge: int = 0) -> set[frozenset[int]]:
    """Ass(S/I) by witness search: every P = (I : x^u) with u in [0, lcm(G(I))].

    ``enlarge`` widens the witness box by that many units in every coordinate;
    it only exists to cross-check the default box.
    """
    if I.is_zero or I.is_unit:
        raise ValueError("no associated primes defined here")
    upper = tuple(e + enlarge for e in I.lcm)
    primes = set()
    for u in box(upper):
        if I.contains(u):
            continue
        P = _prime_of_colon(I.colon(u))
        if P is not None:
            primes.add(P)
    return primes


# -- text format -------------------------------------------------------------

_TERM = re.compile(r"^([A-Za-z_][A-Za-z_0-9]*)(?:\^(-?\d+))?$")


class ParseError(ValueError):
    pass


def parse_monomial(text: str, names: Sequence[str]) -> Exponent:
    text = text.strip()
    index = {name: i for i, name in enumerate(names)}
    exps = [0] * len(names)
    if text == "1":
        return tuple(exps)
    for factor in text.split("*"):
        m = _TERM.match(factor.strip())
        if not m:
            raise ParseError(f"cannot parse factor {factor!r}")
        name, exp = m.group(1), m.group(2)
        if name not in index:
            raise ParseError(f"unknown variable {name!r}")
        e = int(exp) if exp is not None else 1
        if e < 0:
            raise ParseError(f"negative exponent in {factor!r}")
        exps[index[name]] += e
    return tuple(exps)


def parse_ideal(text: str) -> tuple[MonomialIdeal, list[str]]:
    """Parse the one-ideal-per-file text format.

    First line ``vars: x1 x2 ... xn``; then one monomial per line.
    Blank lines and ``#`` comments are ignored.
    """
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or not lines[0].startswith("vars:"):
        raise ParseError("first line must be 'vars: x1 ... xn'")
    names = lines[0][len("vars:"):].split()
    if not names or len(set(names)) != len(names):
        raise ParseError("variable list empty or repeated")
    gens = [parse_monomial(ln, names) for ln in lines[1:]]
    return minimalize(gens, len(names)), names


def format_ideal(I: MonomialIdeal, names: Sequence[str] | None = None) -> str:
    if names is None:
        names = [f"x{i + 1}" for i in range(I.n)]
    out = ["vars: " + " ".join(names)]
    out.extend(format_monomial(g, names) for g in I.gens)
    return "\n".join(out) + "\n"


def ideal(*monomials: str, n: int | None = None, names: Sequence[str] | None = None) -> MonomialIdeal:
    """Convenience constructor: ``ideal("x1^2", "x1*x2", n=2)``."""
    if names is None:
        if n is None:
            raise ValueError("give n or names")
        names = [f"x{i + 1}" for i in range(n)]
    return minimalize((parse_monomial(m, names) for m in monomials), len(names))
