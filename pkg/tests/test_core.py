import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monideal.core import (
    ArityError,
    MonomialIdeal,
    ParseError,
    associated_primes,
    box,
    divides,
    format_ideal,
    ideal,
    minimalize,
    parse_ideal,
)
from monideal.graphs import cycle, delete_vertex, edge_ideal, path

from conftest import small_ideals


def I2(*ms):
    return ideal(*ms, names=["x", "y"])


def I3(*ms):
    return ideal(*ms, names=["x", "y", "z"])


class TestMinimalize:
    def test_drops_multiples(self):
        assert minimalize([(2, 0), (2, 1), (0, 1)], 2) == MonomialIdeal(2, ((0, 1), (2, 0)))
        assert minimalize([(2, 0), (2, 1), (0, 1)], 2).mu == 2

    def test_empty_is_zero_ideal(self):
        assert minimalize([], 3) == MonomialIdeal.zero(3)

    def test_squarefree_triangle(self):
        I = minimalize([(1, 1, 0), (0, 1, 1), (1, 0, 1), (1, 1, 1)], 3)
        assert set(I.gens) == {(1, 1, 0), (0, 1, 1), (1, 0, 1)}

    def test_arity_mismatch(self):
        with pytest.raises(ArityError):
            minimalize([(1, 0), (1, 0, 0)], 2)

    def test_unit(self):
        assert minimalize([(0, 0), (1, 2)], 2).is_unit

    @given(st.lists(st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4)), max_size=8))
    def test_idempotent_and_sorted(self, gens):
        I = minimalize(gens, 3)
        assert minimalize(I.gens, 3) == I
        assert list(I.gens) == sorted(I.gens)
        for a, b in itertools.permutations(I.gens, 2):
            assert not divides(a, b)
        # same ideal: every input is divisible by some kept generator
        assert all(I.contains(g) for g in gens)


class TestContains:
    def test_examples(self):
        I = I2("x^2", "y^2")
        assert I.contains((2, 1))
        assert not I.contains((1, 1))
        assert not MonomialIdeal.zero(2).contains((5, 5))


def _sums_of_k(gens, k, n):
    if k == 0:
        return {(0,) * n}
    return {tuple(map(sum, zip(*c))) for c in itertools.combinations_with_replacement(gens, k)}


class TestPower:
    def test_examples(self):
        assert I2("x", "y").power(2) == I2("x^2", "x*y", "y^2")
        assert I2("x^2", "y^2").power(2) == I2("x^4", "x^2*y^2", "y^4")
        I = I3("x*y", "y^2*z")
        assert I.power(1) == I
        assert I.power(0).is_unit

    @settings(max_examples=60)
    @given(small_ideals(), st.integers(0, 3))
    def test_membership_matches_enumeration(self, I, k):
        sums = _sums_of_k(I.gens, k, I.n)
        P = I.power(k)
        top = tuple(k * c + 1 for c in I.lcm)
        for u in box(top):
            assert P.contains(u) == any(divides(s, u) for s in sums)


class TestColon:
    def test_examples(self):
        I = ideal("x1*x2", "x2*x3", n=3)
        assert I.colon((1, 0, 0)) == ideal("x2", n=3)
        assert I.colon((0, 0, 0)) == I
        assert I2("x^2", "x*y").colon((1, 0)) == I2("x", "y")

    @settings(max_examples=60)
    @given(small_ideals(), st.data())
    def test_colon_law(self, I, data):
        u = data.draw(st.tuples(*[st.integers(0, 3)] * I.n))
        Q = I.colon(u)
        for w in box(I.lcm):
            assert Q.contains(w) == I.contains(tuple(a + b for a, b in zip(u, w)))


class TestEliminate:
    def test_examples(self):
        I = edge_ideal(path(4))  # x1x2, x2x3, x3x4
        J, keep = I.eliminate(0)
        assert keep == (1, 2, 3)
        assert J == ideal("x1*x2", "x2*x3", n=3)
        J, _ = ideal("x1", n=1).eliminate(0)
        assert J.is_zero and J.n == 0

    def test_cycle_square(self):
        I = edge_ideal(cycle(4)).power(2)
        J, _ = I.eliminate(0)
        H, _ = delete_vertex(cycle(4), 0)
        assert J == edge_ideal(H).power(2)
        assert H == path(3)

    @settings(max_examples=60)
    @given(small_ideals(), st.data())
    def test_elimination_law(self, I, data):
        i = data.draw(st.integers(0, I.n - 1))
        J, keep = I.eliminate(i)
        for w in box(I.lcm):
            if w[i] == 0:
                assert J.contains(tuple(w[j] for j in keep)) == I.contains(w)


class TestLocalize:
    def test_examples(self):
        J, keep = I2("x^2", "x*y").localize({0})
        assert J == ideal("x1", n=1) and keep == (0,)
        I = I3("x*y", "y*z", "x^2*z")
        assert I.localize({0, 1, 2})[0] == I
        assert I3("x*y", "y*z").localize({1})[0] == ideal("x1", n=1)

    def test_ass_localization_exhaustive(self):
        # Ass(S(P)/I(P)) = {Q in Ass(S/I) : Q within P}
        ideals = [
            I3("x^2", "x*y"),
            I3("x*y", "y*z", "x*z"),
            I3("x^2", "x*y^2", "y^3*z"),
            ideal("x1*x2", "x2^2*x3", "x3*x4^2", "x1^2*x4", n=4),
            edge_ideal(cycle(4)).power(2),
        ]
        for I in ideals:
            ass = associated_primes(I)
            for r in range(1, I.n + 1):
                for P in itertools.combinations(range(I.n), r):
                    J, keep = I.localize(P)
                    want = {Q for Q in ass if Q <= set(P)}
                    if J.is_unit:
                        assert want == set()
                        continue
                    got = {frozenset(keep[j] for j in Q) for Q in associated_primes(J)}
                    assert got == want, (I, P)


class TestAssociatedPrimes:
    def test_examples(self):
        assert associated_primes(I2("x^2", "x*y")) == {frozenset({0}), frozenset({0, 1})}
        assert associated_primes(ideal("x1", n=1)) == {frozenset({0})}
        got = associated_primes(I3("x*y", "y*z", "x*z"))
        assert got == {frozenset({0, 1}), frozenset({1, 2}), frozenset({0, 2})}

    def test_rejects_trivial(self):
        with pytest.raises(ValueError, match="no associated primes"):
            associated_primes(MonomialIdeal.zero(2))
        with pytest.raises(ValueError):
            associated_primes(MonomialIdeal.unit(2))

    @settings(max_examples=80, deadline=None)
    @given(small_ideals())
    def test_witness_box_agrees_with_enlarged_box(self, I):
        assert associated_primes(I) == associated_primes(I, enlarge=1)


class TestTextFormat:
    def test_roundtrip(self):
        I = I3("x^2*z", "y^3", "x*y*z")
        J, names = parse_ideal(format_ideal(I, ["x", "y", "z"]))
        assert J == I and names == ["x", "y", "z"]

    def test_parse(self):
        I, _ = parse_ideal("vars: x1 x2 x3\nx1^2*x3\nx2\n")
        assert I == ideal("x1^2*x3", "x2", n=3)
        unit, _ = parse_ideal("vars: x1 x2\n1\n")
        assert unit.is_unit
        zero, _ = parse_ideal("vars: x1 x2\n")
        assert zero.is_zero

    def test_rejects(self):
        with pytest.raises(ParseError, match="negative"):
            parse_ideal("vars: x y\nx^-1\n")
        with pytest.raises(ParseError):
            parse_ideal("x y\nx\n")
        with pytest.raises(ParseError):
            parse_ideal("vars: x y\nz\n")
