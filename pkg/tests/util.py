"""Shared brute-force oracles for the test suite.

Everything here is deliberately independent of the library's fast paths:
plain itertools enumeration over all maps / permutations.
"""

import itertools
import random
from fractions import Fraction

from homdist.graphs import Graph


def isomorphic(g: Graph, h: Graph) -> bool:
    """Brute-force isomorphism test (permutation enumeration)."""
    if g.vertex_count != h.vertex_count or g.edge_count != h.edge_count:
        return False
    n = g.vertex_count
    for perm in itertools.permutations(range(n)):
        if all(h.has_edge(perm[u], perm[v]) for u, v in g.edges):
            return True
    return False


def hom_exists_brute(g: Graph, h: Graph) -> bool:
    """Existence of a homomorphism by full map enumeration."""
    if g.vertex_count == 0:
        return True
    if h.vertex_count == 0:
        return False
    for assignment in itertools.product(range(h.vertex_count),
                                        repeat=g.vertex_count):
        if all(h.has_edge(assignment[u], assignment[v]) for u, v in g.edges):
            return True
    return False


def mc_brute(h: Graph, g: Graph, weights) -> Fraction:
    """Max H-Col optimum by full map enumeration, exact."""
    best = Fraction(-1)
    for assignment in itertools.product(range(h.vertex_count),
                                        repeat=g.vertex_count):
        score = sum((w for e, w in weights.items()
                     if h.has_edge(assignment[e[0]], assignment[e[1]])),
                    Fraction(0))
        best = max(best, score)
    return best


def random_graph(rng: random.Random, n_max: int, require_edge=True) -> Graph:
    while True:
        n = rng.randint(1 if not require_edge else 2, n_max)
        p = rng.uniform(0.3, 0.9)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if rng.random() < p]
        if edges or not require_edge:
            return Graph(n, frozenset(edges))


def random_weights(rng: random.Random, g: Graph) -> dict:
    while True:
        w = {e: Fraction(rng.randint(0, 6), rng.randint(1, 6))
             for e in g.edges}
        if sum(w.values()) > 0:
            return w


def girth(g: Graph) -> int:
    """Length of a shortest cycle, by breadth-first search from each vertex."""
    import collections
    best = 0
    for src in range(g.vertex_count):
        dist = {src: 0}
        parent = {src: -1}
        queue = collections.deque([src])
        adj = g.adjacency()
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif parent[u] != v:
                    cyc = dist[u] + dist[v] + 1
                    if best == 0 or cyc < best:
                        best = cyc
    return best
