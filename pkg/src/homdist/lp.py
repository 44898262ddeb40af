"""Exact rational simplex, specialised to the orbit program.

The program has variables w_1..w_r (one weight per edge orbit) and s:

    min s
    sum_i f_i * w_i <= s      for each maximal count vector f
    sum_i |A_i| * w_i = 1
    w_i, s >= 0

Everything runs over fractions.Fraction with Bland's rule, so solves are
exact and cannot cycle.  Among optimal weight vectors the lexicographically
smallest is reported; only the optimum s is contractually meaningful.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError


@dataclass(frozen=True)
class OrbitLp:
    orbit_sizes: tuple[int, ...]
    vectors: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        r = len(self.orbit_sizes)
        if r < 1:
            raise DomainError("orbit LP needs at least one orbit")
        if any(s < 1 for s in self.orbit_sizes):
            raise DomainError("orbit sizes must be positive")
        if not self.vectors:
            raise DomainError("orbit LP needs a nonempty vector set")
        for f in self.vectors:
            if len(f) != r:
                raise DomainError("vector length does not match orbit count")
            if any(x < 0 or x > s for x, s in zip(f, self.orbit_sizes)):
                raise DomainError(f"vector {f} outside orbit bounds")


@dataclass(frozen=True)
class LpSolution:
    optimum: Fraction
    weights: tuple[Fraction, ...]
    tight_vectors: tuple[int, ...]


class _Infeasible(Exception):
    pass


class _Unbounded(Exception):
    pass


def _pivot(T, basis, i, j):
    piv = T[i][j]
    T[i] = [x / piv for x in T[i]]
    for k in range(len(T)):
        if k != i and T[k][j] != 0:
            f = T[k][j]
            T[k] = [a - f * b for a, b in zip(T[k], T[i])]
    basis[i] = j


def _optimise(T, basis, cost):
    """Run Bland-rule simplex on tableau T for the given cost vector."""
    ncols = len(T[0]) - 1
    while True:
        # reduced costs relative to the current basis
        y = [cost[b] for b in basis]
        entering = -1
        for j in range(ncols):
            rj = cost[j] - sum(yi * T[i][j] for i, yi in enumerate(y))
            if rj < 0:
                entering = j
                break
        if entering < 0:
            return
        leaving = -1
        best = None
        for i in range(len(T)):
            if T[i][entering] > 0:
                ratio = T[i][-1] / T[i][entering]
                key = (ratio, basis[i])
                if best is None or key < best:
                    best = key
                    leaving = i
        if leaving < 0:
            raise _Unbounded
        _pivot(T, basis, leaving, entering)


def solve_lp(c, a_ub, b_ub, a_eq, b_eq):
    """min c.x  s.t.  a_ub x <= b_ub, a_eq x = b_eq, x >= 0 (exact).

    Returns (optimum, x).  Raises _Infeasible / _Unbounded.
    """
    n = len(c)
    rows = [(list(r), Fraction(b), True) for r, b in zip(a_ub, b_ub)]
    rows += [(list(r), Fraction(b), False) for r, b in zip(a_eq, b_eq)]
    m = len(rows)
    n_slack = len(a_ub)
    ncols = n + n_slack + m  # original + slacks + artificials

    T = []
    basis = []
    slack_at = 0
    for i, (r, b, is_ub) in enumerate(rows):
        row = [Fraction(x) for x in r] + [Fraction(0)] * (n_slack + m) + [b]
        if is_ub:
            row[n + slack_at] = Fraction(1)
            slack_at += 1
        if row[-1] < 0:
            row = [-x for x in row]
        row[n + n_slack + i] = Fraction(1)
        T.append(row)
        basis.append(n + n_slack + i)

    # phase 1: drive the artificials to zero
    phase1 = [Fraction(0)] * (n + n_slack) + [Fraction(1)] * m + [Fraction(0)]
    _optimise(T, basis, phase1)
    if sum(T[i][-1] for i in range(m) if basis[i] >= n + n_slack) != 0:
        raise _Infeasible
    # pivot remaining (degenerate) artificials out of the basis
    for i in range(m):
        if basis[i] >= n + n_slack:
            for j in range(n + n_slack):
                if T[i][j] != 0:
                    _pivot(T, basis, i, j)
                    break

    # rows whose artificial could not be pivoted out are redundant zero rows
    keep = [i for i in range(m) if basis[i] < n + n_slack]
    T = [T[i] for i in keep]
    basis = [basis[i] for i in keep]

    # phase 2, with artificial columns disabled
    drop = set(range(n + n_slack, ncols))
    for i in range(len(T)):
        T[i] = [x for j, x in enumerate(T[i][:-1]) if j not in drop] + [T[i][-1]]
    phase2 = [Fraction(x) for x in c] + [Fraction(0)] * n_slack + [Fraction(0)]
    _optimise(T, basis, phase2)

    x = [Fraction(0)] * n
    for i, b in enumerate(basis):
        if b < n:
            x[b] = T[i][-1]
    opt = sum(ci * xi for ci, xi in zip(c, x))
    return opt, x


def _orbit_constraints(p: OrbitLp):
    r = len(p.orbit_sizes)
    a_ub = [[Fraction(fi) for fi in f] + [Fraction(-1)] for f in p.vectors]
    b_ub = [Fraction(0)] * len(p.vectors)
    a_eq = [[Fraction(s) for s in p.orbit_sizes] + [Fraction(0)]]
    b_eq = [Fraction(1)]
    return r, a_ub, b_ub, a_eq, b_eq


def solve_orbit_lp(p: OrbitLp) -> LpSolution:
    """Exact optimum of the orbit program, with the lexicographically
    smallest optimal weight vector as certificate."""
    r, a_ub, b_ub, a_eq, b_eq = _orbit_constraints(p)
    c = [Fraction(0)] * r + [Fraction(1)]
    try:
        opt, _ = solve_lp(c, a_ub, b_ub, a_eq, b_eq)
    except _Infeasible:  # uniform weights are always feasible
        raise DomainError("orbit LP unexpectedly infeasible")

    # pin s at the optimum, then minimise w_1, w_2, ... in turn
    a_eq = a_eq + [[Fraction(0)] * r + [Fraction(1)]]
    b_eq = b_eq + [opt]
    weights = []
    for j in range(r):
        cj = [Fraction(0)] * (r + 1)
        cj[j] = Fraction(1)
        wj, _ = solve_lp(cj, a_ub, b_ub, a_eq, b_eq)
        weights.append(wj)
        fix = [Fraction(0)] * (r + 1)
        fix[j] = Fraction(1)
        a_eq = a_eq + [fix]
        b_eq = b_eq + [wj]

    tight = tuple(i for i, f in enumerate(p.vectors)
                  if sum(Fraction(fi) * w for fi, w in zip(f, weights)) == opt)
    return LpSolution(opt, tuple(weights), tight)


def verify_solution(p: OrbitLp, sol: LpSolution) -> bool:
    """Certificate check: feasibility of sol plus optimality by re-solve."""
    try:
        w = [Fraction(x) for x in sol.weights]
        s = Fraction(sol.optimum)
    except (TypeError, ValueError):
        return False
    if len(w) != len(p.orbit_sizes):
        return False
    if s < 0 or any(x < 0 for x in w):
        return False
    if sum(a * x for a, x in zip(p.orbit_sizes, w)) != 1:
        return False
    values = [sum(fi * x for fi, x in zip(f, w)) for f in p.vectors]
    if any(v > s for v in values):
        return False
    if not any(v == s for v in values):
        return False
    return solve_orbit_lp(p).optimum == s


def format_orbit_lp(p: OrbitLp) -> str:
    """Human-readable dump of the program, one line per constraint."""
    r = len(p.orbit_sizes)

    def terms(coeffs):
        return " + ".join(f"{c}*w{i + 1}" for i, c in enumerate(coeffs))

    lines = ["min s"]
    for f in p.vectors:
        lines.append(f"  {terms(f)} <= s")
    lines.append(f"  {terms(p.orbit_sizes)} = 1")
    lines.append(f"  w1..w{r}, s >= 0")
    return "\n".join(lines)
