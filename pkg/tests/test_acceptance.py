"""Acceptance criteria, one test per criterion.

Each test prints a single ``ACCEPTANCE <n> PASS|FAIL`` line (shown even under
capture) before asserting.
"""

import random

import pytest

from monideal.core import MonomialIdeal, associated_primes, box, ideal, minimalize
from monideal.corpus import random_ideals, squarefree_ideals
from monideal.graphs import cycle, edge_ideal, enumerate_graphs
from monideal.homology import MultigradedModule, betti_depth, degree_complex, depth, takayama_depth_scan
from monideal.newton import CapExceededError, default_cap, integral_closure, integral_closure_power, minimal_power_witness
from monideal.suites import closure_depth_limit, closure_sdepth, girth_theorem, normality_bipartite


@pytest.fixture
def verdict(capsys):
    def say(n, ok, detail):
        with capsys.disabled():
            print(f"\nACCEPTANCE {n} {'PASS' if ok else 'FAIL'}: {detail}")
        return ok

    return say


HAND_PICKED = [
    ideal("x^2", "y^2", names=["x", "y"]),
    ideal("x^3", "y^3", names=["x", "y"]),
    ideal("x^3", "x*y", "y^2", names=["x", "y"]),
    ideal("x1^3", "x2^3", "x3^3", n=3),
    ideal("x1*x2", "x2*x3", "x1*x3", n=3),
    ideal("x1^2*x2", "x2^3", "x3^2", n=3),
    ideal("x1^3", "x1*x2*x3", "x3^2", n=3),
    ideal("x1^2", "x2^2", "x3^2", n=3),
    ideal("x1^3*x2", "x2^3*x3", "x1*x3^3", n=3),
    ideal("x1", n=1),
    ideal("x1^3", n=1),
]


def acceptance_corpus():
    return random_ideals(220, n_max=3, e_max=3, g_max=4, seed=2024) + HAND_PICKED


def oracle_cap(I):
    """mu(cl(I^(l-1))) where the analytic spread is available, else 6."""
    if I.is_equigenerated:
        return default_cap(I)
    return 6


def brute_closure(I, cap):
    powers = [I]
    pts = []
    for u in box(I.lcm):
        for m in range(1, cap + 1):
            while len(powers) < m:
                powers.append(powers[-1] * I)
            if powers[m - 1].contains(tuple(m * e for e in u)):
                pts.append(u)
                break
    return minimalize(pts, I.n)


def test_1_closure_oracle_equivalence(verdict):
    corpus = acceptance_corpus()
    bad = [I for I in corpus if integral_closure_power(I, 1) != brute_closure(I, oracle_cap(I))]
    ok = verdict(1, not bad, f"{len(corpus)} ideals, {len(bad)} mismatches {[str(I) for I in bad[:3]]}")
    assert ok


def test_2_bipartite_normality(verdict):
    rep = normality_bipartite(nmax=6, kmax=3)
    s = rep.summary
    ok = verdict(2, s["fail"] == 0 and s["undecided"] == 0 and s["pass"] > 0, f"{s} over {len(rep.rows)} graphs")
    assert ok


def test_3_girth_theorem(verdict):
    rep = girth_theorem(nmax=6)
    rows = [r for r in rep.rows if r.claim == "sdepth(I^k) >= 2"]
    fails = [r.id for r in rows if r.verdict == "fail"]
    undecided = [r.id for r in rows if r.verdict == "undecided"]
    ok = verdict(3, not fails and not undecided and rows,
                 f"{len(rows)} (G, k) cases, fails={fails[:3]}, undecided={len(undecided)}")
    assert ok


def test_4_closure_sdepth(verdict):
    rep = closure_sdepth(nmax=5, kmax=2)
    s = rep.summary
    fails = [(r.id, r.claim) for r in rep.rows if r.verdict != "pass"]
    ok = verdict(4, s["fail"] == 0 and s["undecided"] == 0, f"{s}; first non-pass {fails[:3]}")
    assert ok


def test_5_closure_depth_limits(verdict):
    rep = closure_depth_limit(nmax=5, kmax=4)
    bad = [(r.id, r.values) for r in rep.rows if r.verdict != "pass"]
    late = sum(1 for r in rep.rows if r.values["closures_stable_from"] == 4)
    ok = verdict(5, not bad and rep.rows,
                 f"{len(rep.rows)} connected graphs, {len(bad)} tail mismatches, {late} only constant at k = 4")
    assert ok


def squarefree_corpus():
    return [I for n in range(1, 5) for I in squarefree_ideals(n)]


def test_6_dnormal2(verdict):
    violations = []
    corpus = squarefree_corpus()
    for I in corpus:
        d1 = depth(MultigradedModule.quotient_ring(I))
        for m in (2, 3):
            dm = depth(MultigradedModule.quotient_ring(I.power(m)))
            if dm > d1:
                violations.append((str(I), m, dm, d1))
    ok = verdict(6, not violations, f"{len(corpus)} squarefree ideals, m <= 3, {len(violations)} violations")
    assert ok


def test_7_ass_containment(verdict):
    bad = []
    corpus = squarefree_corpus()
    for I in corpus:
        base = associated_primes(I)
        for m in (2, 3):
            if not base <= associated_primes(I.power(m)):
                bad.append((str(I), m))
    ok = verdict(7, not bad, f"{len(corpus)} squarefree ideals, m <= 3, {len(bad)} containment failures")
    assert ok


def test_8_power_witness_bound(verdict):
    corpus = [I for I in acceptance_corpus() if I.is_equigenerated]
    corpus += [edge_ideal(G) for n in range(2, 6) for G in enumerate_graphs(n, up_to_isomorphism=True) if G.edges]
    violations, checked = [], 0
    for I in corpus:
        bound = default_cap(I)
        for u in integral_closure(I).gens:
            checked += 1
            try:
                t = minimal_power_witness(I, u, cap=max(bound, 24)).t
            except CapExceededError:
                t = None
            if t is None or t > bound:
                violations.append((str(I), u, t, bound))
    ok = verdict(8, not violations, f"{len(corpus)} equigenerated ideals, {checked} generators, "
                 f"{len(violations)} violations {violations[:3]}")
    assert ok


def test_9_degree_complex_identity(verdict):
    I = ideal("x^2", "y^2", names=["x", "y"])
    C = integral_closure(I)
    # s = 2 works: every closure generator u has u^2 in I^2
    assert all(minimal_power_witness(I, u).t <= 2 for u in C.gens)
    rng = random.Random(9)
    alphas = [(rng.randint(-2, 4), rng.randint(-2, 4)) for _ in range(20)]
    bad = []
    for m in (1, 2):
        P = I.power(2 * m)
        for a in alphas:
            if degree_complex(C, a) != degree_complex(P, tuple(2 * m * x for x in a)):
                bad.append((m, a))
    ok = verdict(9, not bad, f"20 alphas in [-2, 4]^2, m = 1, 2, {len(bad)} mismatches")
    assert ok


def test_10_homology_ground_truths(verdict):
    details, ok = [], True
    for n in range(1, 6):
        r = betti_depth(MultigradedModule.quotient_ring(MonomialIdeal.maximal(n)))
        if (r.pd, r.depth) != (n, 0):
            ok = False
            details.append(f"maximal ideal n={n}: pd={r.pd} depth={r.depth}")
    for n, want in ((4, 1), (6, 1)):
        I = edge_ideal(cycle(n))
        koszul = betti_depth(MultigradedModule.quotient_ring(I)).depth
        scan = takayama_depth_scan(I, (-1,) * n, (1,) * n)
        details.append(f"C{n}: koszul={koszul} takayama={scan} expected={want}")
        if not (koszul == scan == want):
            ok = False
    verdict(10, ok, "; ".join(details))
    assert ok
