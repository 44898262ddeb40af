"""Backtracking search for graph homomorphisms.

The search assigns source vertices in descending-degree order and prunes a
partial map as soon as some already-embedded edge fails to land on a target
edge.  Candidate images are tried in ascending index order, so the witness
returned for a given input never changes between runs.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import config
from .errors import ResourceLimitError
from .graphs import Graph


@dataclass(frozen=True)
class VertexMap:
    source: Graph
    target: Graph
    assignment: tuple[int, ...]

    def __post_init__(self):
        if len(self.assignment) != self.source.vertex_count:
            raise ValueError("assignment must cover every source vertex")
        for img in self.assignment:
            if not 0 <= img < self.target.vertex_count:
                raise ValueError(f"image {img} outside target vertex range")

    def __call__(self, v: int) -> int:
        return self.assignment[v]


def verify_homomorphism(m: VertexMap) -> bool:
    """True iff every source edge maps to a target edge."""
    a = m.assignment
    return all(m.target.has_edge(a[u], a[v]) for u, v in m.source.edges)


def find_homomorphism(G: Graph, H: Graph,
                      node_budget: int | None = None) -> VertexMap | None:
    """Return a homomorphism G -> H, or None if there is none.

    Raises ResourceLimitError when the search visits more than node_budget
    nodes (default: the global enumeration budget).
    """
    if node_budget is None:
        node_budget = config.enum_budget()
    n = G.vertex_count
    if n == 0:
        return VertexMap(G, H, ())
    if G.edge_count > 0 and H.edge_count == 0:
        return None
    if H.vertex_count == 0:
        return None

    order = sorted(range(n), key=lambda v: (-G.degree(v), v))
    pos = {v: i for i, v in enumerate(order)}
    adj = G.adjacency()
    # neighbours of order[i] already placed when position i is assigned
    placed_nbrs = [[u for u in adj[order[i]] if pos[u] < i] for i in range(n)]

    image = [-1] * n
    nodes = 0
    level = 0
    cand = [0] * n
    while True:
        if cand[level] >= H.vertex_count:
            # backtrack
            cand[level] = 0
            level -= 1
            if level < 0:
                return None
            image[order[level]] = -1
            cand[level] += 1
            continue
        nodes += 1
        if nodes > node_budget:
            raise ResourceLimitError(
                f"homomorphism search exceeded {node_budget} nodes")
        v = order[level]
        img = cand[level]
        ok = all(H.has_edge(img, image[u]) for u in placed_nbrs[level])
        if not ok:
            cand[level] += 1
            continue
        image[v] = img
        if level == n - 1:
            return VertexMap(G, H, tuple(image))
        level += 1


def compose(f: VertexMap, g: VertexMap) -> VertexMap:
    """g after f: a map f.source -> g.target (requires f.target == g.source)."""
    if f.target != g.source:
        raise ValueError("maps do not compose")
    return VertexMap(f.source, g.target,
                     tuple(g.assignment[x] for x in f.assignment))


def hom_equivalent(G: Graph, H: Graph, node_budget: int | None = None):
    """Test homomorphic equivalence G = H.

    Returns (True, fwd, bwd) with witnesses in both directions, or
    (False, None, None).
    """
    fwd = find_homomorphism(G, H, node_budget)
    if fwd is None:
        return False, None, None
    bwd = find_homomorphism(H, G, node_budget)
    if bwd is None:
        return False, None, None
    return True, fwd, bwd
