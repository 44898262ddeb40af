"""Brute-force vertex-map enumeration kernels.

Two interchangeable backends compute the same results:

  * a numba @njit depth-first scan (default when numba imports), and
  * a chunked vectorised numpy scan.

Select with HOMDIST_BACKEND=numba|numpy.  Both enumerate vertex maps
V(G) -> V(H) in mixed-radix ascending order with digit 0 most significant,
so the reported argmax is the first optimal map in that order either way.

Weights enter as int64 (callers scale exact rationals to a common
denominator), which keeps the kernels exact.
"""

from __future__ import annotations

import os

import numpy as np

_requested = os.environ.get("HOMDIST_BACKEND", "").strip().lower()
if _requested not in ("", "numba", "numpy"):
    raise ValueError(f"HOMDIST_BACKEND must be 'numba' or 'numpy', got {_requested!r}")

if _requested != "numpy":
    try:
        from numba import njit
        _HAVE_NUMBA = True
    except ImportError:
        if _requested == "numba":
            raise
        _HAVE_NUMBA = False
else:
    _HAVE_NUMBA = False


def backend_name() -> str:
    return "numba" if _HAVE_NUMBA else "numpy"


def _edge_arrays(n_src: int, edges, values):
    """Group edges by their larger endpoint for the DFS kernels.

    Returns (start, other, val, suffix): edges with larger endpoint p sit in
    slots start[p]:start[p+1]; suffix[p] is the total value of edges whose
    larger endpoint is >= p (an optimistic bound for pruning).
    """
    by_pos = [[] for _ in range(n_src)]
    for (u, v), w in zip(edges, values):
        by_pos[max(u, v)].append((min(u, v), w))
    start = np.zeros(n_src + 1, dtype=np.int64)
    other = np.zeros(len(edges), dtype=np.int64)
    val = np.zeros(len(edges), dtype=np.int64)
    j = 0
    for p in range(n_src):
        for o, w in by_pos[p]:
            other[j] = o
            val[j] = w
            j += 1
        start[p + 1] = j
    suffix = np.zeros(n_src + 1, dtype=np.int64)
    for p in range(n_src - 1, -1, -1):
        suffix[p] = suffix[p + 1] + val[start[p]:start[p + 1]].sum()
    return start, other, val, suffix


if _HAVE_NUMBA:

    @njit(cache=True)
    def _max_dfs(n_src, n_tgt, start, other, val, suffix, adj):
        choice = np.full(n_src, -1, dtype=np.int64)
        score = np.zeros(n_src + 1, dtype=np.int64)
        best = np.int64(-1)
        best_map = np.zeros(n_src, dtype=np.int64)
        pos = 0
        while pos >= 0:
            choice[pos] += 1
            if choice[pos] >= n_tgt:
                choice[pos] = -1
                pos -= 1
                continue
            s = score[pos]
            c = choice[pos]
            for j in range(start[pos], start[pos + 1]):
                if adj[choice[other[j]], c]:
                    s += val[j]
            if pos == n_src - 1:
                if s > best:
                    best = s
                    best_map[:] = choice
                continue
            if s + suffix[pos + 1] <= best:
                continue
            score[pos + 1] = s
            pos += 1
        return best, best_map

    @njit(cache=True)
    def _mark_dfs(n_src, n_tgt, start, other, val, adj, seen):
        choice = np.full(n_src, -1, dtype=np.int64)
        score = np.zeros(n_src + 1, dtype=np.int64)
        pos = 0
        while pos >= 0:
            choice[pos] += 1
            if choice[pos] >= n_tgt:
                choice[pos] = -1
                pos -= 1
                continue
            s = score[pos]
            c = choice[pos]
            for j in range(start[pos], start[pos + 1]):
                if adj[choice[other[j]], c]:
                    s += val[j]
            if pos == n_src - 1:
                seen[s] = 1
                continue
            score[pos + 1] = s
            pos += 1


_CHUNK = 1 << 17


def _digits_of(indices: np.ndarray, n_src: int, n_tgt: int) -> np.ndarray:
    pows = n_tgt ** (n_src - 1 - np.arange(n_src, dtype=np.int64))
    return (indices[:, None] // pows[None, :]) % n_tgt


def _scores_numpy(digits, eu, ev, ew, adj):
    sc = np.zeros(digits.shape[0], dtype=np.int64)
    for e in range(len(eu)):
        sc += ew[e] * adj[digits[:, eu[e]], digits[:, ev[e]]]
    return sc


def max_weight_map(n_src, n_tgt, edges, weights, adj):
    """Maximise the total weight of preserved edges over all vertex maps.

    edges: list of (u, v) source edges; weights: matching int64 values;
    adj: boolean adjacency matrix of the target (see `adjacency`).
    Returns (best_value, assignment ndarray of length n_src).
    """
    ew = np.asarray(weights, dtype=np.int64)
    if n_src == 0:
        return 0, np.zeros(0, dtype=np.int64)
    if _HAVE_NUMBA:
        start, other, val, suffix = _edge_arrays(n_src, edges, ew)
        best, best_map = _max_dfs(n_src, np.int64(n_tgt), start, other, val,
                                  suffix, adj)
        return int(best), best_map
    eu = np.array([u for u, _ in edges], dtype=np.int64)
    ev = np.array([v for _, v in edges], dtype=np.int64)
    total = n_tgt ** n_src
    best = -1
    best_idx = 0
    for lo in range(0, total, _CHUNK):
        idx = np.arange(lo, min(lo + _CHUNK, total), dtype=np.int64)
        sc = _scores_numpy(_digits_of(idx, n_src, n_tgt), eu, ev, ew, adj)
        m = int(sc.max())
        if m > best:
            best = m
            best_idx = lo + int(np.argmax(sc))
    digits = _digits_of(np.array([best_idx], dtype=np.int64), n_src, n_tgt)
    return best, digits[0]


def orbit_vector_codes(n_src, n_tgt, edges, codes, adj, code_space):
    """Enumerate all maps and collect the distinct preserved-edge code sums.

    Each edge carries an int64 code (a place value identifying its orbit);
    the sum over preserved edges encodes the per-orbit count vector.
    code_space bounds the largest possible sum + 1.  Returns a sorted
    ndarray of the codes that occur.
    """
    ew = np.asarray(codes, dtype=np.int64)
    if _HAVE_NUMBA:
        seen = np.zeros(code_space, dtype=np.uint8)
        start, other, val, _ = _edge_arrays(n_src, edges, ew)
        _mark_dfs(n_src, np.int64(n_tgt), start, other, val, adj, seen)
        return np.nonzero(seen)[0]
    eu = np.array([u for u, _ in edges], dtype=np.int64)
    ev = np.array([v for _, v in edges], dtype=np.int64)
    total = n_tgt ** n_src
    seen = np.zeros(code_space, dtype=bool)
    for lo in range(0, total, _CHUNK):
        idx = np.arange(lo, min(lo + _CHUNK, total), dtype=np.int64)
        sc = _scores_numpy(_digits_of(idx, n_src, n_tgt), eu, ev, ew, adj)
        seen[np.unique(sc)] = True
    return np.nonzero(seen)[0]


def adjacency(graph) -> np.ndarray:
    """Boolean adjacency matrix of a Graph, for the kernels."""
    n = graph.vertex_count
    adj = np.zeros((n, n), dtype=np.bool_)
    for u, v in graph.edges:
        adj[u, v] = True
        adj[v, u] = True
    return adj
