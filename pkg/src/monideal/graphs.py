"""Simple graphs, their edge ideals and the combinatorics behind analytic spread.

Vertices are 0..n-1 internally; the text format and built-in names use 1..n.
"""

from __future__ import annotations

import itertools
import math
import random
import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

from .core import MonomialIdeal, minimalize
from .homology import SimplicialComplex
from .linalg import rank

Edge = tuple[int, int]

GRAPH_CAP = 7
PREDICATES = ("all", "connected", "bipartite", "connectedBipartite", "nonBipartite")


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge]

    def __post_init__(self):
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"bad edge {(u, v)} for {self.n} vertices")

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        es = set()
        for u, v in edges:
            if u == v:
                raise ValueError("loops are not allowed")
            es.add((min(u, v), max(u, v)))
        return cls(n, frozenset(es))

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def __str__(self) -> str:
        es = " ".join(f"{u + 1}-{v + 1}" for u, v in self.sorted_edges())
        return f"G(n={self.n}; {es})"


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def disjoint_union(*graphs: Graph) -> Graph:
    edges, offset = [], 0
    for G in graphs:
        edges.extend((u + offset, v + offset) for u, v in G.edges)
        offset += G.n
    return Graph.from_edges(offset, edges)


def edge_ideal(G: Graph) -> MonomialIdeal:
    gens = []
    for u, v in G.edges:
        g = [0] * G.n
        g[u] = g[v] = 1
        gens.append(g)
    return minimalize(gens, G.n)


# -- structure ---------------------------------------------------------------


@dataclass(frozen=True)
class Component:
    vertices: tuple[int, ...]
    bipartite: bool
    girth: float  # math.inf for forests


@dataclass(frozen=True)
class ComponentInfo:
    components: tuple[Component, ...]

    @property
    def count(self) -> int:
        return len(self.components)

    @property
    def p(self) -> int:
        """Number of bipartite components (isolated vertices included)."""
        return sum(c.bipartite for c in self.components)

    @property
    def g(self) -> float:
        return max((c.girth for c in self.components), default=math.inf)

    @property
    def bipartite(self) -> bool:
        return all(c.bipartite for c in self.components)

    @property
    def connected(self) -> bool:
        return self.count <= 1

    @property
    def girth(self) -> float:
        return min((c.girth for c in self.components), default=math.inf)


def _girth(G: Graph, vertices) -> float:
    best = math.inf
    adj = G.adjacency
    for s in vertices:
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def analyze(G: Graph) -> ComponentInfo:
    adj = G.adjacency
    seen = [False] * G.n
    comps = []
    for s in range(G.n):
        if seen[s]:
            continue
        color = {s: 0}
        seen[s] = True
        queue = deque([s])
        bip = True
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in color:
                    color[w] = 1 - color[u]
                    seen[w] = True
                    queue.append(w)
                elif color[w] == color[u]:
                    bip = False
        verts = tuple(sorted(color))
        comps.append(Component(verts, bip, _girth(G, verts)))
    return ComponentInfo(tuple(comps))


def girth(G: Graph) -> float:
    return analyze(G).girth


def is_bipartite(G: Graph) -> bool:
    return analyze(G).bipartite


def is_connected(G: Graph) -> bool:
    return analyze(G).connected


def analytic_spread_edge_ideal(G: Graph) -> int:
    """l(I(G)) = n - p."""
    if not G.edges:
        raise ValueError("analytic spread of the zero ideal is undefined here")
    return G.n - analyze(G).p


def analytic_spread_equigenerated(I: MonomialIdeal) -> int:
    """Rank of the generator exponent matrix (equigenerated ideals only)."""
    if I.is_zero:
        raise ValueError("analytic spread of the zero ideal is undefined here")
    if not I.is_equigenerated:
        raise ValueError("analytic spread unsupported for non-equigenerated ideals")
    return rank([list(g) for g in I.gens])


def delete_vertex(G: Graph, v: int) -> tuple[Graph, tuple[int, ...]]:
    """G minus v, re-labeled; the map sends new labels to old ones."""
    if not 0 <= v < G.n:
        raise IndexError("vertex out of range")
    keep = tuple(u for u in range(G.n) if u != v)
    new = {old: i for i, old in enumerate(keep)}
    edges = [(new[a], new[b]) for a, b in G.edges if v not in (a, b)]
    return Graph.from_edges(G.n - 1, edges), keep


def independence_complex(G: Graph) -> SimplicialComplex:
    adj = [sum(1 << w for w in a) for a in G.adjacency]
    independent = []
    for mask in range(1 << G.n):
        if all(not (adj[v] & mask) for v in range(G.n) if mask >> v & 1):
            independent.append(mask)
    return SimplicialComplex.from_faces(G.n, independent)


def stanley_reisner_ideal(delta: SimplicialComplex) -> MonomialIdeal:
    faces = delta.faces
    gens = []
    for mask in range(1 << delta.n):
        if mask not in faces:
            gens.append([mask >> i & 1 for i in range(delta.n)])
    return minimalize(gens, delta.n)


# -- enumeration -------------------------------------------------------------


def _matches(G: Graph, predicate: str) -> bool:
    if predicate not in PREDICATES:
        raise ValueError(f"unknown predicate {predicate!r}")
    if predicate == "all":
        return True
    info = analyze(G)
    return {
        "connected": info.connected,
        "bipartite": info.bipartite,
        "connectedBipartite": info.connected and info.bipartite,
        "nonBipartite": not info.bipartite,
    }[predicate]


def enumerate_graphs(
    n: int, predicate: str = "all", up_to_isomorphism: bool = False, cap: int = GRAPH_CAP
) -> Iterator[Graph]:
    """All graphs on n vertices matching ``predicate``, in a fixed order.

    Labeled graphs are ordered by edge bitmask over the lexicographic edge
    list.  With ``up_to_isomorphism`` one representative per class is taken
    from the networkx graph atlas, in atlas order.
    """
    if n > cap:
        raise ValueError(f"n = {n} exceeds the enumeration cap {cap}")
    if predicate not in PREDICATES:
        raise ValueError(f"unknown predicate {predicate!r}")
    if up_to_isomorphism:
        yield from (G for G in _atlas(n) if _matches(G, predicate))
        return
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        G = Graph(n, frozenset(p for j, p in enumerate(pairs) if bits >> j & 1))
        if _matches(G, predicate):
            yield G


def _atlas(n: int) -> list[Graph]:
    from networkx.generators.atlas import graph_atlas_g

    if n > 7:
        raise ValueError("the graph atlas stops at 7 vertices")
    return [Graph.from_edges(n, H.edges()) for H in graph_atlas_g() if H.number_of_nodes() == n]


def random_graphs(n: int, count: int, seed: int, predicate: str = "all", p: float = 0.5) -> Iterator[Graph]:
    """Seeded G(n, p) samples matching ``predicate`` (rejection sampling)."""
    rng = random.Random(seed)
    pairs = list(itertools.combinations(range(n), 2))
    produced, tries = 0, 0
    while produced < count:
        tries += 1
        if tries > 10000 * max(count, 1):
            raise RuntimeError("random sampler could not meet the predicate")
        G = Graph(n, frozenset(e for e in pairs if rng.random() < p))
        if _matches(G, predicate):
            produced += 1
            yield G


def canonical_form(G: Graph) -> tuple[Edge, ...]:
    """Lexicographically least relabeled edge list (brute force over n!)."""
    best = None
    for perm in itertools.permutations(range(G.n)):
        es = tuple(sorted((min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in G.edges))
        if best is None or es < best:
            best = es
    return best or ()


# -- text formats ------------------------------------------------------------

_BUILTIN = re.compile(r"^(?:([CPK])(\d+)|K(\d+),(\d+))$")


def builtin_graph(name: str) -> Graph:
    m = _BUILTIN.match(name.strip())
    if not m:
        raise ValueError(f"unknown graph name {name!r}")
    if m.group(1):
        kind, n = m.group(1), int(m.group(2))
        if kind == "C":
            if n < 3:
                raise ValueError("cycles need at least 3 vertices")
            return cycle(n)
        return path(n) if kind == "P" else complete(n)
    return complete_bipartite(int(m.group(3)), int(m.group(4)))


def parse_graph(text: str) -> Graph:
    """``n <count>`` followed by one ``u v`` pair (1-based) per line."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty graph file")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "n":
        raise ValueError("first line must be 'n <count>'")
    n = int(head[1])
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line {ln!r}")
        u, v = int(parts[0]) - 1, int(parts[1]) - 1
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"vertex out of range in {ln!r}")
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def format_graph(G: Graph) -> str:
    return "".join([f"n {G.n}\n"] + [f"{u + 1} {v + 1}\n" for u, v in G.sorted_edges()])
