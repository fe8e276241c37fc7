"""Multigraded homological algebra over a field.

Depth is n minus the projective dimension, which is read off from Koszul
homology: Tor_i(K, M)_alpha is the homology of the complex whose i-th term is
spanned by the i-subsets F with x^(alpha - e_F) a basis monomial of M.
Takayama's degree complexes give local-cohomology dimensions per degree and
serve as an independent cross-check.
"""

from __future__ import annotations

import csv
import io
import itertools
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .core import Exponent, MonomialIdeal, box, lcm
from .linalg import Field, rank
from .newton import integral_closure_power


class ZeroModuleError(ValueError):
    def __init__(self):
        super().__init__("depth of zero module is ∞ by convention")


# -- simplicial complexes ----------------------------------------------------


def _bits(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def _mask(face: Iterable[int]) -> int:
    m = 0
    for v in face:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex on vertices 0..n-1 given by its facets (bitmasks).

    ``facets == ()`` is the void complex; ``facets == (0,)`` is {∅}.
    """

    n: int
    facets: tuple[int, ...]

    @classmethod
    def from_faces(cls, n: int, faces: Iterable[Iterable[int] | int]) -> "SimplicialComplex":
        masks = {f if isinstance(f, int) else _mask(f) for f in faces}
        facets = [f for f in masks if not any(f != g and f & g == f for g in masks)]
        return cls(n, tuple(sorted(facets)))

    @classmethod
    def void(cls, n: int = 0) -> "SimplicialComplex":
        return cls(n, ())

    @classmethod
    def irrelevant(cls, n: int = 0) -> "SimplicialComplex":
        return cls(n, (0,))

    @classmethod
    def simplex(cls, vertices: Iterable[int], n: int | None = None) -> "SimplicialComplex":
        m = _mask(vertices)
        return cls(n if n is not None else m.bit_length(), (m,))

    @property
    def is_void(self) -> bool:
        return not self.facets

    @cached_property
    def faces(self) -> frozenset[int]:
        out = set()
        for f in self.facets:
            # all submasks of f
            s = f
            while True:
                out.add(s)
                if s == 0:
                    break
                s = (s - 1) & f
        return frozenset(out)

    def face_sets(self) -> list[frozenset[int]]:
        return sorted((frozenset(_bits(f)) for f in self.faces), key=lambda s: (len(s), sorted(s)))

    def facet_sets(self) -> list[frozenset[int]]:
        return [frozenset(_bits(f)) for f in self.facets]

    @property
    def dimension(self) -> int:
        if self.is_void:
            return -2
        return max(bin(f).count("1") for f in self.facets) - 1


def subset_homology(cells: Iterable[int], field: Field = 0) -> dict[int, int]:
    """Homology ranks of the subset chain complex on the given bitmasks.

    Cells are graded by cardinality; the boundary sends F to the signed sum of
    F minus one element, dropping terms that are not cells.  Returns
    cardinality -> rank of homology (zero ranks omitted).
    """
    by_size: dict[int, list[int]] = {}
    for c in cells:
        by_size.setdefault(bin(c).count("1"), []).append(c)
    if not by_size:
        return {}
    index = {s: {c: j for j, c in enumerate(sorted(cs))} for s, cs in by_size.items()}
    ranks: dict[int, int] = {}
    for s, cs in by_size.items():
        lower = index.get(s - 1)
        if not lower:
            ranks[s] = 0
            continue
        mat = [[0] * len(cs) for _ in range(len(lower))]
        for col, F in enumerate(sorted(cs)):
            sign = 1
            for v in _bits(F):
                row = lower.get(F & ~(1 << v))
                if row is not None:
                    mat[row][col] = sign
                sign = -sign
        ranks[s] = rank(mat, field)
    out = {}
    for s, cs in by_size.items():
        h = len(cs) - ranks[s] - ranks.get(s + 1, 0)
        if h:
            out[s] = h
    return out


def reduced_homology(delta: SimplicialComplex, field: Field = 0) -> dict[int, int]:
    """Nonzero reduced Betti numbers, keyed by homological degree."""
    return {s - 1: h for s, h in subset_homology(delta.faces, field).items()}


def reduced_homology_rank(delta: SimplicialComplex, i: int, field: Field = 0) -> int:
    return reduced_homology(delta, field).get(i, 0)


# -- Takayama degree complexes -----------------------------------------------


def cosupport(alpha: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i, a in enumerate(alpha) if a < 0)


def degree_complex(I: MonomialIdeal, alpha: Sequence[int]) -> SimplicialComplex:
    """Faces F of [n] minus CS(alpha) with x^alpha not in I S_{F u CS(alpha)}."""
    n = I.n
    if len(alpha) != n:
        raise ValueError("arity mismatch")
    cs = _mask(cosupport(alpha))
    free = [i for i in range(n) if not cs >> i & 1]
    faces = []
    for r in range(len(free) + 1):
        for F in itertools.combinations(free, r):
            inverted = cs | _mask(F)
            hit = any(
                all(g[i] <= alpha[i] for i in range(n) if not inverted >> i & 1) for g in I.gens
            )
            if not hit:
                faces.append(_mask(F))
    return SimplicialComplex.from_faces(n, faces)


def takayama_rank(I: MonomialIdeal, i: int, alpha: Sequence[int], field: Field = 0) -> int:
    """dim H^i_m(S/I)_alpha."""
    delta = degree_complex(I, alpha)
    return reduced_homology_rank(delta, i - len(cosupport(alpha)) - 1, field)


def takayama_depth_scan(
    I: MonomialIdeal, lower: Sequence[int], upper: Sequence[int], field: Field = 0
) -> int | None:
    """Least i with H^i_m(S/I)_alpha != 0 for some alpha in [lower, upper]."""
    best = None
    for alpha in box(upper, lower):
        delta = degree_complex(I, alpha)
        if delta.is_void:
            continue
        shift = len(cosupport(alpha)) + 1
        for d in reduced_homology(delta, field):
            i = d + shift
            if best is None or i < best:
                best = i
    return best


# -- modules and Koszul homology ---------------------------------------------


class Kind(str, Enum):
    QUOTIENT_RING = "quotientRing"
    IDEAL = "ideal"
    IDEAL_QUOTIENT = "idealQuotient"


@dataclass(frozen=True)
class MultigradedModule:
    """S/I, I, or I/J (J inside I) as a span of monomials."""

    kind: Kind
    top: MonomialIdeal
    bottom: MonomialIdeal

    @classmethod
    def quotient_ring(cls, I: MonomialIdeal) -> "MultigradedModule":
        return cls(Kind.QUOTIENT_RING, MonomialIdeal.unit(I.n), I)

    @classmethod
    def ideal(cls, I: MonomialIdeal) -> "MultigradedModule":
        return cls(Kind.IDEAL, I, MonomialIdeal.zero(I.n))

    @classmethod
    def ideal_quotient(cls, I: MonomialIdeal, J: MonomialIdeal) -> "MultigradedModule":
        if I.n != J.n:
            raise ValueError("arity mismatch")
        if not J.issubset(I):
            raise ValueError("J is not contained in I")
        return cls(Kind.IDEAL_QUOTIENT, I, J)

    @property
    def n(self) -> int:
        return self.top.n

    @property
    def is_zero(self) -> bool:
        return self.top == self.bottom

    def is_basis(self, beta: Sequence[int]) -> bool:
        return all(b >= 0 for b in beta) and self.top.contains(beta) and not self.bottom.contains(beta)

    @cached_property
    def degree_bound(self) -> Exponent:
        return lcm(self.top.gens + self.bottom.gens, self.n)

    def basis_mask(self, upper: Sequence[int]) -> np.ndarray:
        shape = tuple(u + 1 for u in upper)
        return _ideal_mask(self.top, shape) & ~_ideal_mask(self.bottom, shape)


def _ideal_mask(I: MonomialIdeal, shape: tuple[int, ...]) -> np.ndarray:
    mask = np.zeros(shape, dtype=bool)
    for g in I.gens:
        if all(gi < s for gi, s in zip(g, shape)):
            mask[tuple(slice(gi, None) for gi in g)] = True
    return mask


def lcm_lattice(gens: Iterable[Sequence[int]], n: int) -> set[Exponent]:
    """All joins of subsets of ``gens`` (the empty join is 0)."""
    lattice = {(0,) * n}
    for g in gens:
        g = tuple(g)
        lattice |= {tuple(max(a, b) for a, b in zip(x, g)) for x in lattice}
    return lattice


def koszul_homology(M: MultigradedModule, alpha: Sequence[int], field: Field = 0, mask=None) -> dict[int, int]:
    """Tor_i(K, M)_alpha as a dict i -> rank (zeros omitted)."""
    support = [i for i, a in enumerate(alpha) if a > 0]
    cells = []
    for r in range(len(support) + 1):
        for F in itertools.combinations(support, r):
            beta = list(alpha)
            for i in F:
                beta[i] -= 1
            ok = mask[tuple(beta)] if mask is not None else M.is_basis(beta)
            if ok:
                cells.append(_mask(F))
    return subset_homology(cells, field)


BettiTable = dict[tuple[int, Exponent], int]


@dataclass(frozen=True)
class DepthResult:
    depth: int
    pd: int
    table: BettiTable


def betti_depth(
    M: MultigradedModule, field: Field = 0, prune: bool = True, check_shell: bool = False
) -> DepthResult:
    """Multigraded Betti numbers, projective dimension and depth of M.

    With ``prune`` only degrees in the lcm lattice of the generators are
    visited; elsewhere some variable acts bijectively on the Koszul strand, so
    the homology vanishes.  ``check_shell`` re-verifies vanishing on the
    degrees just outside the box and raises AssertionError otherwise.
    """
    if M.is_zero:
        raise ZeroModuleError()
    n = M.n
    B = M.degree_bound
    mask = M.basis_mask(tuple(b + 1 for b in B))
    if prune:
        degrees: Iterable[Exponent] = sorted(lcm_lattice(M.top.gens + M.bottom.gens, n))
    else:
        degrees = box(B)
    table: BettiTable = {}
    for alpha in degrees:
        for i, r in koszul_homology(M, alpha, field, mask).items():
            table[(i, alpha)] = r
    if check_shell:
        for alpha in _shell(B):
            if koszul_homology(M, alpha, field, mask):
                raise AssertionError(f"nonzero Koszul homology outside the lcm box at {alpha}")
    pd = max(i for i, _ in table)
    return DepthResult(n - pd, pd, table)


def _shell(B: Sequence[int]):
    for alpha in box(tuple(b + 1 for b in B)):
        if any(a == b + 1 for a, b in zip(alpha, B)):
            yield alpha


def depth(M: MultigradedModule, field: Field = 0) -> int:
    return betti_depth(M, field).depth


def betti_csv(table: BettiTable, n: int) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["i"] + [f"a{j + 1}" for j in range(n)] + ["rank"])
    for (i, alpha), r in sorted(table.items()):
        w.writerow([i, *alpha, r])
    return buf.getvalue()


# -- depth sequences ---------------------------------------------------------

VARIANTS = ("powers", "closures", "successiveQuotients", "closureSuccessiveQuotients")


def depth_sequence(I: MonomialIdeal, kmax: int, variant: str = "powers", field: Field = 0) -> list[int]:
    """Depths along powers or closures of powers.

    ``powers``/``closures``: S/I^k resp. S/closure(I^k) for k = 1..kmax.
    The successive-quotient variants run k = 0..kmax over I^k/I^(k+1),
    with k = 0 read as S/I.
    """
    if I.is_zero or I.is_unit:
        raise ValueError("depth sequence needs a proper nonzero ideal")
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    closed = variant.startswith("closure")

    def level(k: int) -> MonomialIdeal:
        if k == 0:
            return MonomialIdeal.unit(I.n)
        return integral_closure_power(I, k) if closed else I.power(k)

    if variant in ("powers", "closures"):
        return [depth(MultigradedModule.quotient_ring(level(k)), field) for k in range(1, kmax + 1)]
    out = []
    for k in range(0, kmax + 1):
        upper, lower = level(k), level(k + 1)
        if k == 0:
            out.append(depth(MultigradedModule.quotient_ring(lower), field))
        else:
            out.append(depth(MultigradedModule.ideal_quotient(upper, lower), field))
    return out


def field_disagreements(ideals: Iterable[MonomialIdeal], fields: Sequence[Field] = (0, 2, 3)) -> list[dict]:
    """Ideals whose depth(S/I) differs between coefficient fields."""
    out = []
    for I in ideals:
        depths = {f: depth(MultigradedModule.quotient_ring(I), f) for f in fields}
        if len(set(depths.values())) > 1:
            out.append({"ideal": str(I), "depths": depths})
    return out
