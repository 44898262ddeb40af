"""The distance d(M,N) = 1 - s(N,M)*s(M,N) and its certificates.

s(M,N) dispatch: if N -> M then s = 1; else if N is edge-transitive, s is
the uniform-weight optimum mc_M(N, 1/e(N)); else the orbit LP over the
Pareto-maximal count vectors is solved exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError
from .graphs import Graph
from .homomorphism import VertexMap, find_homomorphism
from .lp import LpSolution, OrbitLp, solve_orbit_lp
from .oracle import WeightFunction, mc, solution_vectors
from .symmetry import edge_orbits


@dataclass(frozen=True)
class SValue:
    value: Fraction
    method: str                      # "hom" | "uniform" | "lp"
    witness_hom: VertexMap | None = None     # N -> M when method == "hom"
    optimal_map: VertexMap | None = None     # when method == "uniform"
    program: OrbitLp | None = None           # when method == "lp"
    solution: LpSolution | None = None

    def certificate_weights(self) -> tuple[Fraction, ...] | None:
        if self.method == "lp":
            return self.solution.weights
        return None


@dataclass(frozen=True)
class DistanceReport:
    M: Graph
    N: Graph
    s_mn: SValue
    s_nm: SValue
    hom_m_to_n: bool
    hom_n_to_m: bool
    m_spec: str = ""
    n_spec: str = ""

    @property
    def d(self) -> Fraction:
        return 1 - self.s_nm.value * self.s_mn.value


def _require_edges(*graphs: Graph):
    for g in graphs:
        if g.edge_count == 0:
            raise DomainError("distance operations need graphs with edges")


def s_value(M: Graph, N: Graph, budget: int | None = None,
            vertex_cap: int | None = None) -> SValue:
    """Exact s(M,N), the worst-case ratio mc_M/mc_N, with certificate."""
    _require_edges(M, N)
    witness = find_homomorphism(N, M, budget)
    if witness is not None:
        return SValue(Fraction(1), "hom", witness_hom=witness)
    orbits = edge_orbits(N, vertex_cap)
    if len(orbits.orbits) == 1:
        value, opt = mc(M, N, WeightFunction.uniform(N), budget)
        return SValue(value, "uniform", optimal_map=opt)
    vectors = solution_vectors(M, N, orbits, budget)
    program = OrbitLp(orbits.sizes, tuple(vectors))
    solution = solve_orbit_lp(program)
    return SValue(solution.optimum, "lp", program=program, solution=solution)


def distance(M: Graph, N: Graph, budget: int | None = None,
             vertex_cap: int | None = None,
             m_spec: str = "", n_spec: str = "") -> DistanceReport:
    """Full report: both s values, d, and hom flags."""
    _require_edges(M, N)
    s_mn = s_value(M, N, budget, vertex_cap)
    s_nm = s_value(N, M, budget, vertex_cap)
    return DistanceReport(
        M=M, N=N, s_mn=s_mn, s_nm=s_nm,
        hom_m_to_n=(s_nm.method == "hom"),
        hom_n_to_m=(s_mn.method == "hom"),
        m_spec=m_spec, n_spec=n_spec)


def sandwich_bounds(M: Graph, H: Graph, N: Graph,
                    budget: int | None = None) -> tuple[Fraction, Fraction]:
    """Lower bounds on s(M,H) and s(H,N) when M -> H -> N.

    Both premises are verified by search; the bounds equal s(M,N).
    """
    _require_edges(M, H, N)
    if find_homomorphism(M, H, budget) is None:
        raise DomainError("sandwich premise fails: no homomorphism M -> H")
    if find_homomorphism(H, N, budget) is None:
        raise DomainError("sandwich premise fails: no homomorphism H -> N")
    bound = s_value(M, N, budget).value
    return bound, bound


@dataclass
class MetricCheckReport:
    pool_size: int
    axioms: dict[str, bool] = field(default_factory=dict)
    violations: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(self.axioms.values())


def check_metric_axioms(pool: list[Graph], budget: int | None = None,
                        vertex_cap: int | None = None,
                        labels: list[str] | None = None) -> MetricCheckReport:
    """Exhaustively verify the metric axioms on a pool of graphs.

    Checks nonnegativity, symmetry, identity-iff-hom-equivalence, the
    triangle inequality over all ordered triples, and submultiplicativity
    s(M,N)*s(N,K) <= s(M,K).
    """
    n = len(pool)
    if n < 1:
        raise DomainError("metric check needs a nonempty pool")
    if labels is None:
        labels = [f"G{i}" for i in range(n)]
    report = MetricCheckReport(pool_size=n)

    s = [[Fraction(1)] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j:
                s[i][j] = s_value(pool[i], pool[j], budget, vertex_cap).value

    def d(i, j):
        return 1 - s[j][i] * s[i][j]

    def check(name, condition, witness):
        if not condition:
            report.axioms[name] = False
            report.violations.append(f"{name}: {witness}")
        else:
            report.axioms.setdefault(name, True)

    for i in range(n):
        for j in range(n):
            check("nonnegativity", 0 <= d(i, j) <= 1,
                  f"d({labels[i]},{labels[j]}) = {d(i, j)}")
            check("symmetry", d(i, j) == d(j, i),
                  f"({labels[i]},{labels[j]})")
            equivalent = s[i][j] == 1 and s[j][i] == 1
            check("identity", (d(i, j) == 0) == equivalent,
                  f"d({labels[i]},{labels[j]}) = {d(i, j)}, "
                  f"hom-equivalent = {equivalent}")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                check("triangle", d(i, k) <= d(i, j) + d(j, k),
                      f"d({labels[i]},{labels[k]}) > "
                      f"d({labels[i]},{labels[j]}) + d({labels[j]},{labels[k]})")
                check("submultiplicative", s[i][j] * s[j][k] <= s[i][k],
                      f"s({labels[i]},{labels[j]})*s({labels[j]},{labels[k]}) "
                      f"> s({labels[i]},{labels[k]})")
    return report
