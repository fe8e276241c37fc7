import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monideal.core import MonomialIdeal, box, ideal
from monideal.graphs import cycle, edge_ideal, path
from monideal.homology import MultigradedModule, depth
from monideal.stanley import (
    UndecidedError,
    certificate_json,
    characteristic_poset,
    parse_certificate,
    partition_to_decomposition,
    sdepth,
    sdepth_decision,
    sdepth_exact,
    verify_decomposition,
    verify_partition,
)

from conftest import small_ideals


def I2(*ms):
    return ideal(*ms, names=["x", "y"])


def brute_sdepth(P):
    """Exhaustive search over all interval partitions, intervals not restricted."""
    g = P.cap
    elems = set(P.elements)

    def intervals_from(a, free):
        for b in box(g, a):
            if all(c in free for c in box(b, a)):
                yield b

    best = -1

    def rec(free, value):
        nonlocal best
        if value <= best:
            return
        if not free:
            best = value
            return
        a = min(free, key=lambda p: (sum(p), p))
        for b in intervals_from(a, free):
            top = sum(1 for i in range(P.n) if b[i] == g[i])
            rec(free - set(box(b, a)), min(value, top))

    rec(frozenset(elems), P.n)
    return best


class TestCharacteristicPoset:
    def test_examples(self):
        P = characteristic_poset("ideal", I2("x", "y"))
        assert P.cap == (1, 1) and set(P.elements) == {(1, 0), (0, 1), (1, 1)}
        P = characteristic_poset("quotientRing", I2("x*y"))
        assert P.cap == (1, 1) and set(P.elements) == {(0, 0), (1, 0), (0, 1)}
        P = characteristic_poset("idealQuotient", I2("x"), I2("x^2", "x*y"))
        assert P.cap == (2, 1) and P.elements == [(1, 0)]

    def test_order_is_degree_then_lex(self):
        P = characteristic_poset("ideal", edge_ideal(path(3)).power(2))
        keys = [(sum(p), p) for p in P.elements]
        assert keys == sorted(keys)

    def test_rejects_non_containment(self):
        with pytest.raises(ValueError):
            characteristic_poset("idealQuotient", I2("x^2"), I2("x"))


class TestDecision:
    def test_examples(self):
        P = characteristic_poset("ideal", I2("x", "y"))
        d = sdepth_decision(P, 1)
        assert d.result is True
        assert verify_partition(P, d.certificate).value >= 1
        assert sdepth_decision(P, 2).result is False
        empty = characteristic_poset("idealQuotient", I2("x"), I2("x"))
        assert sdepth_decision(empty, 2).result is True and empty.elements == []
        P1 = characteristic_poset("ideal", ideal("x1", n=1))
        d = sdepth_decision(P1, 1)
        assert d.result and d.certificate == [((1,), (1,))]

    def test_budget_makes_undecided(self):
        P = characteristic_poset("ideal", MonomialIdeal.maximal(4))
        d = sdepth_decision(P, 3, budget=3)
        assert d.result is None
        with pytest.raises(UndecidedError):
            bool(d)

    @settings(max_examples=60, deadline=None)
    @given(small_ideals(n_max=3, e_max=2, g_max=3), st.sampled_from(["quotientRing", "ideal", "idealQuotient"]))
    def test_certificate_soundness_and_monotonicity(self, I, kind):
        J = I.power(2) if kind == "idealQuotient" else None
        P = characteristic_poset(kind, I, J)
        results = []
        for k in range(P.n + 1):
            d = sdepth_decision(P, k)
            results.append(d.result)
            if d.result:
                v = verify_partition(P, d.certificate)
                assert v.valid
                assert v.value is None or v.value >= k
                # flat intervals: the space (x^a, {i : b_i = g_i}) is exactly the interval's image
                spaces = [(a, frozenset(i for i in range(P.n) if b[i] == P.cap[i])) for a, b in d.certificate]
                assert verify_decomposition(P.module, spaces).valid
        # true for k implies true for all smaller k
        assert results == sorted(results, reverse=True)


class TestExact:
    def test_examples(self):
        assert sdepth_exact(characteristic_poset("quotientRing", I2("x*y"))) == 1
        assert sdepth_exact(characteristic_poset("ideal", MonomialIdeal.maximal(2))) == 1
        assert sdepth_exact(characteristic_poset("ideal", MonomialIdeal.maximal(3))) == 2
        assert sdepth_exact(characteristic_poset("quotientRing", MonomialIdeal.zero(3))) == 3

    def test_against_unrestricted_brute_force(self):
        cases = [
            characteristic_poset("quotientRing", I2("x*y")),
            characteristic_poset("ideal", MonomialIdeal.maximal(3)),
            characteristic_poset("ideal", I2("x^2", "x*y")),
            characteristic_poset("quotientRing", I2("x^2", "y^2")),
            characteristic_poset("idealQuotient", I2("x", "y"), I2("x", "y").power(2)),
            characteristic_poset("ideal", ideal("x1*x2", "x2*x3", n=3)),
            characteristic_poset("quotientRing", ideal("x1*x2", "x2*x3", "x1*x3", n=3)),
        ]
        for P in cases:
            assert sdepth_exact(P) == brute_sdepth(P), P.module

    @settings(max_examples=25, deadline=None)
    @given(small_ideals(n_max=3, e_max=2, g_max=3), st.sampled_from(["quotientRing", "ideal"]))
    def test_random_against_brute_force(self, I, kind):
        P = characteristic_poset(kind, I)
        if len(P) > 14:
            return
        assert sdepth_exact(P) == brute_sdepth(P)

    def test_maximal_ideal_half(self):
        # sdepth of the maximal ideal is ceil(n/2); used as a check only after the search
        for n in range(1, 6):
            assert sdepth_exact(characteristic_poset("ideal", MonomialIdeal.maximal(n))) == (n + 1) // 2

    def test_zero_module_is_infinite(self):
        I = I2("x")
        assert sdepth(MultigradedModule.ideal_quotient(I, I)) == float("inf")

    def test_stanley_inequality_small(self):
        for G in [path(3), path(4), cycle(4), cycle(5)]:
            I = edge_ideal(G)
            for M in (MultigradedModule.quotient_ring(I), MultigradedModule.ideal(I)):
                assert depth(M) <= sdepth(M)


class TestVerify:
    def test_examples(self):
        M = MultigradedModule.ideal(I2("x", "y"))
        v = verify_decomposition(M, [((1, 0), frozenset({0, 1})), ((0, 1), frozenset({1}))])
        assert v.valid and v.value == 1
        v = verify_decomposition(M, [((1, 0), frozenset({0})), ((0, 1), frozenset({1}))])
        assert not v.valid and v.witness == (1, 1) and v.reason == "uncovered"
        v = verify_decomposition(MultigradedModule.quotient_ring(I2("x*y")), [((0, 0), frozenset({0, 1}))])
        assert not v.valid and v.reason == "non-basis monomial covered"

    def test_overlap(self):
        M = MultigradedModule.ideal(I2("x"))
        v = verify_decomposition(M, [((1, 0), frozenset({0, 1})), ((1, 1), frozenset({1}))])
        assert not v.valid and v.reason == "overlap"

    def test_general_interval_expansion(self):
        # [x, x^2 y] under cap (2, 2) is not flat: y stops short of the cap
        P = characteristic_poset("ideal", I2("x"), cap=(2, 2))
        intervals = [((1, 0), (2, 1)), ((1, 2), (2, 2))]
        spaces = partition_to_decomposition(P, intervals)
        assert sorted(spaces) == [
            ((1, 0), frozenset({0})),
            ((1, 1), frozenset({0})),
            ((1, 2), frozenset({0, 1})),
        ]
        v = verify_partition(P, intervals)
        assert v.valid and v.value == 1

    def test_json_roundtrip(self):
        P = characteristic_poset("ideal", edge_ideal(cycle(4)))
        d = sdepth_decision(P, 2)
        text = certificate_json(d.certificate)
        assert parse_certificate(text) == d.certificate
        assert verify_partition(P, parse_certificate(text)).valid
