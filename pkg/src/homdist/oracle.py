"""Exact brute-force Max H-Col: mc values, solution vectors, weights.

All values are fractions.Fraction; the enumeration kernels work on weights
scaled to a common integer denominator, so nothing here ever rounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import config, kernels
from .errors import DomainError, ResourceLimitError
from .graphs import Graph, complete
from .homomorphism import VertexMap
from .symmetry import OrbitPartition, automorphisms, edge_orbits


@dataclass(frozen=True)
class WeightFunction:
    graph: Graph
    weights: dict[tuple[int, int], Fraction]

    def __post_init__(self):
        if set(self.weights) != set(self.graph.edges):
            raise DomainError("weights must be defined on exactly the edge set")
        for e, w in self.weights.items():
            if w < 0:
                raise DomainError(f"negative weight on edge {e}")
        if self.total() <= 0:
            raise DomainError("total weight must be positive")

    def total(self) -> Fraction:
        return sum(self.weights.values(), Fraction(0))

    def __getitem__(self, e: tuple[int, int]) -> Fraction:
        u, v = e
        return self.weights[(u, v) if u < v else (v, u)]

    @classmethod
    def uniform(cls, graph: Graph) -> "WeightFunction":
        """Uniform weights 1/e(G), total 1."""
        if graph.edge_count == 0:
            raise DomainError("uniform weights need at least one edge")
        w = Fraction(1, graph.edge_count)
        return cls(graph, {e: w for e in graph.edges})

    @classmethod
    def unit(cls, graph: Graph) -> "WeightFunction":
        """Weight 1 on every edge."""
        if graph.edge_count == 0:
            raise DomainError("unit weights need at least one edge")
        return cls(graph, {e: Fraction(1) for e in graph.edges})


@dataclass(frozen=True)
class SymmetricWeightFunction(WeightFunction):
    """A weight function with total 1 that is constant on edge orbits."""
    orbits: OrbitPartition = None

    def __post_init__(self):
        super().__post_init__()
        if self.orbits is None or self.orbits.graph != self.graph:
            raise DomainError("orbit partition must belong to the same graph")
        if self.total() != 1:
            raise DomainError("symmetric weight functions must have total 1")
        for orbit in self.orbits.orbits:
            vals = {self.weights[e] for e in orbit}
            if len(vals) != 1:
                raise DomainError("weights not constant on an orbit")

    def orbit_weights(self) -> tuple[Fraction, ...]:
        return tuple(self.weights[min(o)] for o in self.orbits.orbits)


def measure(m: VertexMap, w: WeightFunction) -> Fraction:
    """Total weight of source edges whose images are target edges."""
    if w.graph != m.source:
        raise DomainError("weight function not defined on the map's source")
    a = m.assignment
    return sum((w[e] for e in m.source.edges
                if m.target.has_edge(a[e[0]], a[e[1]])), Fraction(0))


def _scaled_int_weights(w: WeightFunction, edges):
    scale = math.lcm(*(w[e].denominator for e in edges))
    vals = [int(w[e] * scale) for e in edges]
    if sum(vals) >= 2**62:
        raise DomainError("scaled weights overflow the integer kernels")
    return scale, vals


def _check_budget(n_maps: int, budget: int | None):
    if budget is None:
        budget = config.enum_budget()
    if n_maps > budget:
        raise ResourceLimitError(
            f"{n_maps} vertex maps exceed the enumeration budget {budget}")


def mc(H: Graph, G: Graph, w: WeightFunction,
       budget: int | None = None) -> tuple[Fraction, VertexMap]:
    """Exact optimum of Max H-Col on the instance (G, w), with a witness.

    The witness is the first optimal map in mixed-radix ascending order.
    """
    if w.graph != G:
        raise DomainError("weight function not defined on G")
    if H.vertex_count == 0:
        raise DomainError("target graph must have at least one vertex")
    _check_budget(H.vertex_count ** G.vertex_count, budget)
    edges = G.sorted_edges()
    scale, vals = _scaled_int_weights(w, edges)
    best, assignment = kernels.max_weight_map(
        G.vertex_count, H.vertex_count, edges, vals, kernels.adjacency(H))
    witness = VertexMap(G, H, tuple(int(x) for x in assignment))
    return Fraction(best, scale), witness


def pareto_maximal(vectors):
    """Coordinatewise-maximal members of a set of integer tuples,
    deduplicated and sorted lexicographically."""
    vs = sorted(set(map(tuple, vectors)))
    keep = []
    for v in vs:
        dominated = any(u != v and all(a >= b for a, b in zip(u, v))
                        for u in vs)
        if not dominated:
            keep.append(v)
    return keep


def solution_vectors(M: Graph, N: Graph, orbits: OrbitPartition | None = None,
                     budget: int | None = None) -> list[tuple[int, ...]]:
    """Pareto-maximal per-orbit preserved-edge count vectors over all maps
    V(N) -> V(M)."""
    if orbits is None:
        orbits = edge_orbits(N)
    if orbits.graph != N:
        raise DomainError("orbit partition does not belong to N")
    _check_budget(M.vertex_count ** N.vertex_count, budget)
    sizes = orbits.sizes
    # place values: encode a count vector as sum f_i * mult[i]
    mult = []
    m = 1
    for s in sizes:
        mult.append(m)
        m *= s + 1
    code_space = m
    index = orbits.orbit_index()
    edges = N.sorted_edges()
    codes = [mult[index[e]] for e in edges]
    occurring = kernels.orbit_vector_codes(
        N.vertex_count, M.vertex_count, edges, codes,
        kernels.adjacency(M), code_space)
    vectors = []
    for code in occurring:
        code = int(code)
        vectors.append(tuple((code // mult[i]) % (sizes[i] + 1)
                             for i in range(len(sizes))))
    return pareto_maximal(vectors)


def induced_weight(f: VertexMap, w: WeightFunction,
                   optimum: Fraction) -> WeightFunction:
    """Push an optimal solution's weight forward onto the target graph.

    Each target edge receives the weight of its preimage edges, divided by
    the optimum; the result has total 1.  Rejects maps whose measure does
    not equal the claimed optimum.
    """
    if optimum <= 0:
        raise DomainError("induced weight needs a positive optimum")
    if measure(f, w) != optimum:
        raise DomainError("map is not optimal for the supplied value")
    N = f.target
    a = f.assignment
    out = {e: Fraction(0) for e in N.edges}
    for u, v in f.source.edges:
        iu, iv = a[u], a[v]
        if N.has_edge(iu, iv):
            e = (iu, iv) if iu < iv else (iv, iu)
            out[e] += w[(u, v)] / optimum
    return WeightFunction(N, out)


def symmetrize(w: WeightFunction) -> SymmetricWeightFunction:
    """Normalise to total 1, then average over the automorphism group."""
    total = w.total()
    group = automorphisms(w.graph)
    out = {e: Fraction(0) for e in w.graph.edges}
    for pi in group:
        for e in w.graph.edges:
            out[e] += w[pi.apply_edge(e)]
    k = len(group) * total
    out = {e: x / k for e, x in out.items()}
    return SymmetricWeightFunction(w.graph, out, orbits=edge_orbits(w.graph))


def bipartite_density(H: Graph, budget: int | None = None) -> Fraction:
    """Largest fraction of edges in a bipartite subgraph of H."""
    if H.edge_count == 0:
        raise DomainError("bipartite density needs at least one edge")
    value, _ = mc(complete(2), H, WeightFunction.uniform(H), budget)
    return value
