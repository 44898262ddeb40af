"""Graph values, named-family constructors and edge-list I/O.

Graphs are immutable: vertices are the dense integers 0..n-1 and the edge
set is a frozenset of sorted pairs.  Loops and duplicate edges are rejected
everywhere, including at file-parse time.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import GraphSpecError


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        object.__setattr__(self, "edges", frozenset(self.edges))
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < v < self.vertex_count):
                raise ValueError(f"bad edge ({u},{v}) for n={self.vertex_count}")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edges

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def degree_sequence(self) -> list[int]:
        return sorted((self.degree(v) for v in range(self.vertex_count)),
                      reverse=True)

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj


def _edges(pairs) -> frozenset[tuple[int, int]]:
    return frozenset((min(u, v), max(u, v)) for u, v in pairs)


def complete(n: int) -> Graph:
    """K_n: every pair of the n vertices joined."""
    if n < 1:
        raise ValueError("complete: n >= 1 required")
    return Graph(n, _edges((u, v) for u in range(n) for v in range(u + 1, n)))


def cycle(n: int) -> Graph:
    """C_n for n >= 3."""
    if n < 3:
        raise ValueError("cycle: n >= 3 required")
    return Graph(n, _edges((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    """P_n: path on n vertices."""
    if n < 1:
        raise ValueError("path: n >= 1 required")
    return Graph(n, _edges((i, i + 1) for i in range(n - 1)))


def wheel(k: int) -> Graph:
    """W_k on k vertices: hub 0 joined to the (k-1)-cycle on 1..k-1.

    Edges split into k-1 spokes and k-1 outer edges, 2(k-1) in total.
    """
    if k < 4:
        raise ValueError("wheel: k >= 4 required")
    rim = [(i, 1 + (i % (k - 1))) for i in range(1, k)]
    spokes = [(0, i) for i in range(1, k)]
    return Graph(k, _edges(rim + spokes))


def rational_complete(p: int, q: int) -> Graph:
    """K_{p/q}: vertices 0..p-1 on a circle, edge whenever the circular
    distance is at least q.  Requires p >= 2q; K_{p/1} = K_p."""
    if q < 1 or p < 2 * q:
        raise ValueError("rational_complete: p >= 2q >= 2 required")
    es = []
    for u in range(p):
        for v in range(u + 1, p):
            dist = min(v - u, p - (v - u))
            if dist >= q:
                es.append((u, v))
    return Graph(p, _edges(es))


def turan(n: int, r: int) -> Graph:
    """Turán graph T(n,r): balanced complete r-partite graph on n vertices."""
    if not 1 <= r <= n:
        raise ValueError("turan: 1 <= r <= n required")
    part = []
    base, extra = divmod(n, r)
    v = 0
    for i in range(r):
        size = base + (1 if i < extra else 0)
        part.extend([i] * size)
        v += size
    es = [(u, w) for u in range(n) for w in range(u + 1, n) if part[u] != part[w]]
    return Graph(n, _edges(es))


def petersen() -> Graph:
    """The Petersen graph: outer C_5 on 0..4, inner pentagram on 5..9."""
    es = []
    for i in range(5):
        es.append((i, (i + 1) % 5))
        es.append((i, i + 5))
        es.append((5 + i, 5 + (i + 2) % 5))
    return Graph(10, _edges(es))


_FAMILY_RE = re.compile(
    r"""^(?:
        K(?P<kp>\d+)/(?P<kq>\d+) |
        K(?P<kn>\d+) |
        C(?P<cn>\d+) |
        P(?P<pn>\d+) |
        W(?P<wn>\d+) |
        T(?P<tn>\d+),(?P<tr>\d+) |
        (?P<pet>petersen)
    )$""",
    re.VERBOSE,
)


def parse_spec(spec: str) -> Graph:
    """Parse a graph spec string.

    Grammar: K<n> | C<n> | P<n> | W<n> | K<p>/<q> | T<n>,<r> | petersen
    | @<path-to-edge-list-file>.
    """
    spec = spec.strip()
    if spec.startswith("@"):
        graph, _ = read_edge_list(spec[1:])
        return graph
    m = _FAMILY_RE.match(spec)
    if m is None:
        raise GraphSpecError(f"unrecognised graph spec {spec!r}")
    try:
        if m.group("pet"):
            return petersen()
        if m.group("kp"):
            return rational_complete(int(m.group("kp")), int(m.group("kq")))
        if m.group("kn"):
            return complete(int(m.group("kn")))
        if m.group("cn"):
            return cycle(int(m.group("cn")))
        if m.group("pn"):
            return path(int(m.group("pn")))
        if m.group("wn"):
            return wheel(int(m.group("wn")))
        return turan(int(m.group("tn")), int(m.group("tr")))
    except ValueError as exc:
        raise GraphSpecError(f"bad parameters in spec {spec!r}: {exc}") from exc


def read_edge_list(filename: str):
    """Read a graph (and optional rational edge weights) from a file.

    Format: optional '#' comment lines; first data line 'n m'; then exactly
    m lines 'u v'; then optionally lines 'u v p/q' assigning weights.
    Unlisted edges default to weight 1.  Returns (Graph, weights | None).
    """
    try:
        with open(filename) as fh:
            raw = fh.readlines()
    except OSError as exc:
        raise GraphSpecError(f"cannot read {filename!r}: {exc}") from exc
    return parse_edge_list(raw, origin=filename)


def parse_edge_list(lines, origin: str = "<input>"):
    data = []
    for lineno, line in enumerate(lines, start=1):
        stripped = line.split("#", 1)[0].strip()
        if stripped:
            data.append((lineno, stripped))
    if not data:
        raise GraphSpecError(f"{origin}: empty edge-list file")

    def fail(lineno, msg):
        raise GraphSpecError(f"{origin}:{lineno}: {msg}")

    lineno, header = data[0]
    parts = header.split()
    if len(parts) != 2:
        fail(lineno, "header must be 'n m'")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        fail(lineno, "header must be two integers")
    if n < 0 or m < 0:
        fail(lineno, "negative counts in header")
    if len(data) < 1 + m:
        fail(lineno, f"expected {m} edge lines, found {len(data) - 1}")

    edges = []
    seen = set()
    for lineno, text in data[1:1 + m]:
        parts = text.split()
        if len(parts) != 2:
            fail(lineno, "edge line must be 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            fail(lineno, "edge endpoints must be integers")
        if u == v:
            fail(lineno, f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            fail(lineno, f"vertex index out of range in edge ({u},{v})")
        e = (min(u, v), max(u, v))
        if e in seen:
            fail(lineno, f"duplicate edge ({u},{v})")
        seen.add(e)
        edges.append(e)
    graph = Graph(n, frozenset(edges))

    weights = None
    if len(data) > 1 + m:
        weights = {}
        for lineno, text in data[1 + m:]:
            parts = text.split()
            if len(parts) != 3:
                fail(lineno, "weight line must be 'u v p/q'")
            try:
                u, v = int(parts[0]), int(parts[1])
                w = Fraction(parts[2])
            except (ValueError, ZeroDivisionError):
                fail(lineno, "bad weight line")
            e = (min(u, v), max(u, v))
            if e not in seen:
                fail(lineno, f"weight for non-edge ({u},{v})")
            if e in weights:
                fail(lineno, f"duplicate weight for edge ({u},{v})")
            if w < 0:
                fail(lineno, "negative weight")
            weights[e] = w
        for e in graph.sorted_edges():
            weights.setdefault(e, Fraction(1))
    return graph, weights


def render_edge_list(graph: Graph) -> str:
    """Serialise a graph in the edge-list file format (no weights)."""
    lines = [f"{graph.vertex_count} {graph.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in graph.sorted_edges())
    return "\n".join(lines) + "\n"
