"""Automorphism groups and their action on edges.

The group is found by backtracking over vertex images with degree and
neighbourhood pruning; this is comfortably fast up to the vertex cap.
Edge orbits are the components of a union-find driven by every group
element, and are reported in a canonical order (by size, then by smallest
edge) so downstream orbit-indexed vectors mean the same thing across runs.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import config
from .errors import DomainError, SizeLimitError
from .graphs import Graph


@dataclass(frozen=True)
class Automorphism:
    graph: Graph
    permutation: tuple[int, ...]

    def apply_edge(self, e: tuple[int, int]) -> tuple[int, int]:
        u, v = self.permutation[e[0]], self.permutation[e[1]]
        return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class OrbitPartition:
    graph: Graph
    orbits: tuple[frozenset[tuple[int, int]], ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(o) for o in self.orbits)

    def orbit_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, o in enumerate(self.orbits) for e in o}


def automorphisms(G: Graph, vertex_cap: int | None = None) -> list[Automorphism]:
    """The full automorphism group of G, identity first, sorted."""
    if vertex_cap is None:
        vertex_cap = config.vertex_cap()
    n = G.vertex_count
    if n > vertex_cap:
        raise SizeLimitError(
            f"automorphism search capped at {vertex_cap} vertices, got {n}")

    adj = [set(a) for a in G.adjacency()]
    deg = [len(a) for a in adj]
    # invariant per vertex: (degree, sorted multiset of neighbour degrees)
    nbr_deg = [tuple(sorted(deg[u] for u in adj[v])) for v in range(n)]
    inv = [(deg[v], nbr_deg[v]) for v in range(n)]

    perms: list[tuple[int, ...]] = []
    image = [-1] * n
    used = [False] * n

    def extend(v: int):
        if v == n:
            perms.append(tuple(image))
            return
        for w in range(n):
            if used[w] or inv[v] != inv[w]:
                continue
            ok = True
            for u in adj[v]:
                if u < v and image[u] not in adj[w]:
                    ok = False
                    break
            if ok:
                # non-adjacency must be preserved too; |adj| equality plus
                # the adjacency check above covers it at completion, but
                # prune early on mapped non-neighbours
                for u in range(v):
                    if u not in adj[v] and image[u] in adj[w]:
                        ok = False
                        break
            if ok:
                image[v] = w
                used[w] = True
                extend(v + 1)
                used[w] = False
                image[v] = -1

    extend(0)
    perms.sort()
    return [Automorphism(G, p) for p in perms]


def edge_orbits(G: Graph, vertex_cap: int | None = None) -> OrbitPartition:
    """Partition E(G) into automorphism orbits, canonically ordered."""
    if G.edge_count == 0:
        raise DomainError("edge_orbits: graph has no edges")
    group = automorphisms(G, vertex_cap)
    edges = G.sorted_edges()
    index = {e: i for i, e in enumerate(edges)}

    parent = list(range(len(edges)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra

    for pi in group:
        for e in edges:
            union(index[e], index[pi.apply_edge(e)])

    buckets: dict[int, list[tuple[int, int]]] = {}
    for e in edges:
        buckets.setdefault(find(index[e]), []).append(e)
    orbits = sorted(buckets.values(), key=lambda o: (len(o), min(o)))
    return OrbitPartition(G, tuple(frozenset(o) for o in orbits))


def is_edge_transitive(G: Graph, vertex_cap: int | None = None) -> bool:
    return len(edge_orbits(G, vertex_cap).orbits) == 1
