"""Approximation-guarantee constants and their transfer along the metric.

The semidefinite rounding algorithms themselves are out of scope; only
their published guarantees are evaluated, and guarantees move between
target graphs through the factor 1 - d(M,N).  All logarithms are natural.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from scipy.optimize import minimize_scalar

from .distance import distance
from .errors import DomainError
from .graphs import Graph, complete, cycle, turan, wheel

# sharpest published constants for small k; anything larger falls back to
# the asymptotic expression and is flagged as an estimate
ALPHA_TABLE = {2: 0.878567, 3: 0.836008}


def alpha_gw(tolerance: float = 1e-9) -> float:
    """Max-cut guarantee: minimum of (theta/pi) / ((1-cos theta)/2)."""
    if tolerance < 1e-12:
        raise ValueError("tolerance below 1e-12 is not supported")

    def objective(theta):
        return (theta / math.pi) / ((1 - math.cos(theta)) / 2)

    res = minimize_scalar(objective, bounds=(1e-9, math.pi - 1e-9),
                          method="bounded", options={"xatol": tolerance})
    return float(res.fun)


def alpha_k(k: int) -> tuple[float, str]:
    """Max k-cut guarantee; (value, "tabulated" | "asymptotic")."""
    if k < 2:
        raise ValueError("alpha_k needs k >= 2")
    if k in ALPHA_TABLE:
        return ALPHA_TABLE[k], "tabulated"
    return 1 - 1 / k + 2 * math.log(k) / k**2, "asymptotic"


def hastad_bound(H: Graph, c: Fraction | int = 0):
    """Guarantee of the general Max 2-CSP algorithm on Max H-Col.

    Evaluates 1 - t/d^2 * (1 - c/(d^2 ln d)) with d = v(H) and
    t = d^2 - 2 e(H).  The absolute constant c is unknown; c = 0 gives the
    conservative value 2 e(H)/d^2, returned as an exact rational.
    """
    d = H.vertex_count
    if d < 2:
        raise DomainError("hastad_bound needs at least 2 vertices")
    c = Fraction(c)
    if c < 0:
        raise ValueError("c must be nonnegative")
    t = d * d - 2 * H.edge_count
    if c == 0:
        return 1 - Fraction(t, d * d)
    return 1 - (t / d**2) * (1 - float(c) / (d**2 * math.log(d)))


@dataclass(frozen=True)
class GuaranteeReport:
    target: str
    algorithm: str
    lower_bound: float
    via: str | None = None
    upper_bound: float | None = None
    exact_factor: Fraction | None = None    # the rational s/d part, if any
    flags: tuple[str, ...] = ()
    derivation: tuple[str, ...] = ()


def transfer_guarantee(algorithm: str, M: Graph, N: Graph, k: int = 2,
                       budget: int | None = None,
                       m_spec: str = "", n_spec: str = "") -> GuaranteeReport:
    """Carry a base guarantee for Max M-Col over to Max N-Col.

    algorithm is "GW" (Max cut, requires M = K_2 semantics with k = 2) or
    "FJ" with the cut count k.  The transferred bound is alpha * (1 - d).
    """
    if algorithm == "GW":
        base, flag = ALPHA_TABLE[2], "tabulated"
        name = "GW"
    elif algorithm == "FJ":
        base, flag = alpha_k(k)
        name = f"FJ{k}"
    else:
        raise ValueError(f"unknown base algorithm {algorithm!r}")
    rep = distance(M, N, budget)
    factor = 1 - rep.d
    lower = base * float(factor)
    flags = [flag] if flag == "asymptotic" else []
    return GuaranteeReport(
        target=n_spec or "N",
        algorithm=name,
        via=m_spec or "M",
        lower_bound=lower,
        exact_factor=factor,
        flags=tuple(flags),
        derivation=(f"base {name} guarantee {base}",
                    f"1 - d(M,N) = {factor}"))


def inapprox_transfer(beta: Fraction | float, N: Graph, K: Graph,
                      budget: int | None = None,
                      n_spec: str = "", k_spec: str = "") -> GuaranteeReport:
    """Conditional upper bound beta / (1 - d(N,K)), capped at 1."""
    rep = distance(N, K, budget)
    factor = 1 - rep.d
    if factor == 0:
        raise DomainError("no bound derivable: d(N,K) = 1")
    upper = min(1.0, float(beta) / float(factor))
    return GuaranteeReport(
        target=n_spec or "N",
        algorithm="hardness-transfer",
        via=k_spec or "K",
        lower_bound=0.0,
        upper_bound=upper,
        exact_factor=factor,
        flags=("conditional",),
        derivation=(f"base hardness threshold {beta}",
                    f"1 - d(N,K) = {factor}"))


@dataclass(frozen=True)
class SweepRow:
    family: str
    param: tuple[int, ...]
    fj: float
    fj_exact_factor: Fraction
    fj_flags: tuple[str, ...]
    hastad: object     # Fraction when c == 0, float otherwise
    fj_label: str = "FJ2"


def family_sweep(family: str, lo: int, hi: int, c: Fraction | int = 0,
                 r: int = 2) -> list[SweepRow]:
    """FJ-vs-Hastad comparison rows over a parametrised graph family.

    cycles: odd k in [lo,hi];  wheels: even k in [lo,hi];  complete: n in
    [lo,hi];  turan: n in [lo,hi] with the part count r.  The FJ column
    uses the closed forms for the family s-values.
    """
    if lo > hi:
        raise ValueError("empty parameter range")
    rows = []
    if family == "cycles":
        for k in range(lo, hi + 1):
            if k < 3 or k % 2 == 0:
                continue
            if k == 3:
                # C_3 = K_3: the problem is exactly Max 3-cut, so the best
                # FJ bound is alpha_3 itself rather than the K_2 transfer
                base, flag = alpha_k(3)
                rows.append(SweepRow("cycles", (k,), base, Fraction(1),
                                     (flag,) if flag == "asymptotic" else (),
                                     hastad_bound(cycle(k), c), "FJ3"))
                continue
            base, flag = alpha_k(2)
            factor = Fraction(k - 1, k)
            rows.append(SweepRow("cycles", (k,), base * float(factor), factor,
                                 (flag,) if flag == "asymptotic" else (),
                                 hastad_bound(cycle(k), c), "FJ2"))
    elif family == "wheels":
        for k in range(lo, hi + 1):
            if k < 6 or k % 2 == 1:
                continue
            base, flag = alpha_k(3)
            factor = Fraction(2 * k - 3, 2 * k - 2)
            rows.append(SweepRow("wheels", (k,), base * float(factor), factor,
                                 (flag,) if flag == "asymptotic" else (),
                                 hastad_bound(wheel(k), c), "FJ3"))
    elif family == "complete":
        for n in range(max(lo, 2), hi + 1):
            base, flag = alpha_k(n)
            rows.append(SweepRow("complete", (n,), base, Fraction(1),
                                 (flag,) if flag == "asymptotic" else (),
                                 hastad_bound(complete(n), c), f"FJ{n}"))
    elif family == "turan":
        for n in range(max(lo, r), hi + 1):
            base, flag = alpha_k(n)
            t_edges = turan(n, r).edge_count
            factor = Fraction(t_edges, n * (n - 1) // 2)
            rows.append(SweepRow("turan", (n, r), base * float(factor), factor,
                                 (flag,) if flag == "asymptotic" else (),
                                 hastad_bound(turan(n, r), c), f"FJ{n}"))
    else:
        raise ValueError(f"unknown family {family!r}")
    if not rows:
        raise ValueError("parameter range produced no rows")
    return rows
