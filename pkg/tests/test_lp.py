from fractions import Fraction
from itertools import product

import pytest

from homdist.errors import DomainError
from homdist.graphs import complete, rational_complete, wheel
from homdist.lp import (LpSolution, OrbitLp, format_orbit_lp, solve_orbit_lp,
                        verify_solution)
from homdist.oracle import SymmetricWeightFunction, mc, solution_vectors
from homdist.symmetry import edge_orbits


def wheel_lp(k):
    return OrbitLp((k - 1, k - 1), ((k - 1, k - 2), (k - 2, k - 1)))


K83_LP = OrbitLp((4, 8), ((0, 8), (4, 6)))


def test_wheel_example():
    for k in (6, 8, 10):
        sol = solve_orbit_lp(wheel_lp(k))
        assert sol.optimum == Fraction(2 * k - 3, 2 * k - 2)
        assert sol.weights == (Fraction(1, 2 * k - 2),) * 2
        assert sol.tight_vectors == (0, 1)


def test_k83_example():
    sol = solve_orbit_lp(K83_LP)
    assert sol.optimum == Fraction(4, 5)
    assert sol.weights == (Fraction(1, 20), Fraction(1, 10))


def test_single_orbit():
    sol = solve_orbit_lp(OrbitLp((7,), ((6,),)))
    assert sol.optimum == Fraction(6, 7)
    assert sol.weights == (Fraction(1, 7),)


def test_invariance_under_permutation_and_domination():
    base = solve_orbit_lp(K83_LP).optimum
    permuted = OrbitLp((4, 8), ((4, 6), (0, 8)))
    assert solve_orbit_lp(permuted).optimum == base
    padded = OrbitLp((4, 8), ((0, 8), (4, 6), (0, 7), (3, 6), (1, 1)))
    assert solve_orbit_lp(padded).optimum == base


def test_uniform_weights_upper_bound():
    for p in (wheel_lp(6), K83_LP, OrbitLp((3, 4, 5), ((3, 2, 4), (1, 4, 5)))):
        total = sum(p.orbit_sizes)
        uniform_value = max(sum(Fraction(fi, total) for fi in f)
                            for f in p.vectors)
        assert solve_orbit_lp(p).optimum <= uniform_value


def test_s_equals_one_iff_full_vector():
    full = OrbitLp((4, 8), ((0, 8), (4, 8)))
    assert solve_orbit_lp(full).optimum == 1
    assert solve_orbit_lp(K83_LP).optimum < 1


def test_verify_solution():
    sol = solve_orbit_lp(wheel_lp(6))
    assert verify_solution(wheel_lp(6), sol)
    # equality constraint broken
    perturbed = LpSolution(Fraction(4, 5),
                           (Fraction(1, 20) + Fraction(1, 100), Fraction(1, 10)),
                           (0, 1))
    assert not verify_solution(K83_LP, perturbed)
    # claimed optimum infeasible: (4,6).(1/20,1/10) = 4/5 > 3/4
    low = LpSolution(Fraction(3, 4), (Fraction(1, 20), Fraction(1, 10)), (0, 1))
    assert not verify_solution(K83_LP, low)
    # feasible but suboptimal
    uniform = LpSolution(Fraction(11, 12), (Fraction(1, 12), Fraction(1, 12)),
                         ())
    assert not verify_solution(K83_LP, uniform)


def test_grid_cross_validation():
    # the LP optimum matches a dense scan over symmetric weights
    for m_graph, n_graph in ((complete(3), wheel(6)),
                             (complete(2), rational_complete(8, 3))):
        orbits = edge_orbits(n_graph)
        vectors = solution_vectors(m_graph, n_graph, orbits)
        lp_opt = solve_orbit_lp(OrbitLp(orbits.sizes, tuple(vectors))).optimum
        sizes = orbits.sizes
        denom = 60
        best = None
        for a in range(denom + 1):
            # w1 = a/(denom*|A_1|) of the equality budget, w2 takes the rest
            w1 = Fraction(a, denom * sizes[0])
            rest = 1 - w1 * sizes[0]
            w2 = rest / sizes[1]
            value = max(f[0] * w1 + f[1] * w2 for f in vectors)
            best = value if best is None else min(best, value)
        assert lp_opt <= best
        assert best - lp_opt <= Fraction(1, denom)
        # and exact agreement with brute-force mc at the LP weights
        sol = solve_orbit_lp(OrbitLp(sizes, tuple(vectors)))
        weights = {}
        for orbit, w in zip(orbits.orbits, sol.weights):
            for e in orbit:
                weights[e] = w
        value, _ = mc(m_graph, n_graph,
                      SymmetricWeightFunction(n_graph, weights, orbits=orbits))
        assert value == sol.optimum


def test_malformed_programs():
    with pytest.raises(DomainError):
        OrbitLp((), ())
    with pytest.raises(DomainError):
        OrbitLp((3,), ())
    with pytest.raises(DomainError):
        OrbitLp((3,), ((4,),))
    with pytest.raises(DomainError):
        OrbitLp((3, 3), ((1,),))


def test_format_orbit_lp():
    text = format_orbit_lp(K83_LP)
    assert text.splitlines()[0] == "min s"
    assert "4*w1 + 6*w2 <= s" in text
    assert "4*w1 + 8*w2 = 1" in text


def test_lexicographically_smallest_weights():
    # degenerate program with an optimal face: any (w1, w2) with
    # w1 + w2 = 1/2 and max constraint 1 is optimal; smallest w1 is 0
    p = OrbitLp((2, 2), ((2, 2),))
    sol = solve_orbit_lp(p)
    assert sol.optimum == 1
    assert sol.weights == (Fraction(0), Fraction(1, 2))
