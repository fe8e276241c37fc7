"""Integral closure of monomial ideals and their powers.

x^a lies in the closure of I^k exactly when a is in k times the Newton
polyhedron conv(G(I)) + R^n_{>=0}.  That is decided exactly: the polyhedron's
inequalities come from Fourier-Motzkin projection of

    lambda >= 0,  sum(lambda) = k,  sum_j lambda_j g_j <= a

onto the (a, k) coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Sequence

import numpy as np

from . import fm
from .core import Exponent, MonomialIdeal, box, minimalize


class NotIntegralError(ValueError):
    pass


class CapExceededError(RuntimeError):
    pass


@dataclass(frozen=True)
class NewtonPolyhedron:
    n: int
    gens: tuple[Exponent, ...]

    @classmethod
    def of(cls, I: MonomialIdeal) -> "NewtonPolyhedron":
        if I.is_zero:
            raise ValueError("the zero ideal has no Newton polyhedron")
        return cls(I.n, I.gens)


@lru_cache(maxsize=4096)
def _inequalities(n: int, gens: tuple[Exponent, ...]) -> tuple[tuple[int, ...], ...]:
    """Rows (c_1..c_n, c_k) with c.a + c_k*k <= 0 on the scaled polyhedron."""
    m = len(gens)
    g0 = gens[0]
    # coordinates: lambda_1 .. lambda_{m-1} (lambda_0 substituted), a_1..a_n, k
    width = (m - 1) + n + 1
    rows = []
    for j in range(1, m):
        r = [0] * width
        r[j - 1] = -1
        rows.append(r)
    r = [0] * width
    for j in range(1, m):
        r[j - 1] = 1
    r[-1] = -1
    rows.append(r)
    for i in range(n):
        r = [0] * width
        for j in range(1, m):
            r[j - 1] = gens[j][i] - g0[i]
        r[m - 1 + i] = -1
        r[-1] = g0[i]
        rows.append(r)
    return tuple(fm.project(rows, m - 1))


def inequalities(P: NewtonPolyhedron) -> tuple[tuple[int, ...], ...]:
    return _inequalities(P.n, P.gens)


def closure_membership(I: MonomialIdeal, k: int, a: Sequence[int]) -> bool:
    """Whether x^a lies in the integral closure of I^k."""
    if k < 1:
        raise ValueError("k must be positive")
    if len(a) != I.n:
        raise ValueError("arity mismatch")
    if I.is_zero:
        return False
    point = tuple(a) + (k,)
    return fm.satisfies(_inequalities(I.n, I.gens), point)


def _closure_mask(I: MonomialIdeal, k: int, upper: Sequence[int]) -> np.ndarray:
    """Boolean array over the box [0, upper]: closure membership at each point."""
    shape = tuple(u + 1 for u in upper)
    rows = _inequalities(I.n, I.gens)
    bound = max((abs(x) for r in rows for x in r), default=0) * (max(upper, default=0) + k + 1) * (I.n + 1)
    if bound >= 2**62:
        mask = np.zeros(shape, dtype=bool)
        for a in box(upper):
            mask[a] = closure_membership(I, k, a)
        return mask
    grids = np.indices(shape, dtype=np.int64)
    mask = np.ones(shape, dtype=bool)
    for r in rows:
        val = np.full(shape, r[-1] * k, dtype=np.int64)
        for i in range(I.n):
            if r[i]:
                val += r[i] * grids[i]
        mask &= val <= 0
    return mask


def minimal_points(mask: np.ndarray) -> list[Exponent]:
    """Minimal elements of an up-closed boolean box array."""
    minimal = mask.copy()
    for i in range(mask.ndim):
        below = np.zeros_like(mask)
        idx_hi = [slice(None)] * mask.ndim
        idx_lo = [slice(None)] * mask.ndim
        idx_hi[i] = slice(1, None)
        idx_lo[i] = slice(None, -1)
        below[tuple(idx_hi)] = mask[tuple(idx_lo)]
        minimal &= ~below
    return [tuple(int(x) for x in p) for p in np.argwhere(minimal)]


@lru_cache(maxsize=1024)
def integral_closure_power(I: MonomialIdeal, k: int = 1) -> MonomialIdeal:
    """Minimal generators of the integral closure of I^k.

    Any minimal generator lies in the box [0, k*cmax]: beyond it some
    coordinate can be lowered without leaving k*NP(I).
    """
    if k < 1:
        raise ValueError("k must be positive")
    if I.is_zero:
        raise ValueError("closure of the zero ideal requested")
    if I.is_unit:
        return I
    upper = tuple(k * c for c in I.lcm)
    mask = _closure_mask(I, k, upper)
    return minimalize(minimal_points(mask), I.n)


def integral_closure(I: MonomialIdeal) -> MonomialIdeal:
    return integral_closure_power(I, 1)


def power_certificate(I: MonomialIdeal, t: int, u: Sequence[int]) -> tuple[Exponent, ...] | None:
    """t generators (with repetition) whose product divides x^u, or None."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    gens = I.gens
    m = len(gens)

    @lru_cache(maxsize=None)
    def search(j: int, left: int, rest: Exponent) -> tuple[int, ...] | None:
        if left == 0:
            return ()
        if j == m:
            return None
        g = gens[j]
        # most copies of g that fit
        most = left
        for gi, ri in zip(g, rest):
            if gi:
                most = min(most, ri // gi)
        for c in range(most, -1, -1):
            nxt = tuple(ri - c * gi for gi, ri in zip(g, rest))
            sub = search(j + 1, left - c, nxt)
            if sub is not None:
                return (c,) + sub
        return None

    counts = search(0, t, tuple(u))
    if counts is None:
        return None
    cert = []
    for g, c in zip(gens, counts):
        cert.extend([g] * c)
    return tuple(cert)


def power_membership(I: MonomialIdeal, t: int, u: Sequence[int]) -> bool:
    """Whether x^u lies in I^t, by integer search over generator counts."""
    if t < 1:
        raise ValueError("t must be positive")
    return power_certificate(I, t, u) is not None


@dataclass(frozen=True)
class WitnessReport:
    u: Exponent
    t: int
    certificate: tuple[Exponent, ...]


DEFAULT_WITNESS_CAP = 24


def default_cap(I: MonomialIdeal) -> int:
    """The power-witness bound mu(closure(I^(l-1))) when l is computable."""
    from .graphs import analytic_spread_equigenerated

    if I.is_equigenerated and not I.is_zero:
        ell = analytic_spread_equigenerated(I)
        if ell <= 1:
            return 1
        return integral_closure_power(I, ell - 1).mu
    return DEFAULT_WITNESS_CAP


def minimal_power_witness(I: MonomialIdeal, u: Sequence[int], cap: int | None = None) -> WitnessReport:
    """Least t with (x^u)^t in I^t, searched up to ``cap``."""
    u = tuple(u)
    if not closure_membership(I, 1, u):
        raise NotIntegralError(f"{u} is not integral over I")
    if cap is None:
        cap = default_cap(I)
    for t in range(1, cap + 1):
        cert = power_certificate(I, t, tuple(t * e for e in u))
        if cert is not None:
            return WitnessReport(u, t, cert)
    raise CapExceededError(f"cap exceeded: no power witness for {u} with t <= {cap}")


def closure_exponent(I: MonomialIdeal) -> int:
    """mu(closure(I^(l-1)))!, an s with u^s in I^s for every u in the closure."""
    return factorial(default_cap(I))


def is_integrally_closed(I: MonomialIdeal) -> bool:
    if I.is_zero:
        return True
    return integral_closure(I) == I


def is_normal_up_to(I: MonomialIdeal, K: int) -> bool:
    if I.is_zero:
        raise ValueError("normality of the zero ideal requested")
    return all(integral_closure_power(I, k) == I.power(k) for k in range(1, K + 1))


def reduction_witness(I: MonomialIdeal, kmax: int) -> int | None:
    """Least s < kmax with closure(I^k) = I^(k-s) closure(I^s) for s <= k <= kmax.

    s = kmax would hold vacuously, so it is not offered; None when no s in
    range passes.
    """
    if I.is_zero:
        raise ValueError("reduction of the zero ideal requested")
    closures = {k: integral_closure_power(I, k) for k in range(1, kmax + 1)}
    powers = {0: MonomialIdeal.unit(I.n)}
    for k in range(1, kmax + 1):
        powers[k] = powers[k - 1] * I
    for s in range(1, kmax):
        if all(closures[k] == powers[k - s] * closures[s] for k in range(s, kmax + 1)):
            return s
    return None
