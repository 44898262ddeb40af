import math
from fractions import Fraction

import numpy as np
import pytest

from homdist.bounds import (alpha_gw, alpha_k, family_sweep, hastad_bound,
                            inapprox_transfer, transfer_guarantee)
from homdist.errors import DomainError
from homdist.graphs import Graph, complete, cycle, wheel


def gw_objective(theta):
    return (theta / np.pi) / ((1 - np.cos(theta)) / 2)


def test_alpha_gw_against_dense_scan():
    thetas = np.arange(1e-6, math.pi, 1e-6)
    values = gw_objective(thetas)
    scan_min = float(values.min())
    assert abs(alpha_gw(1e-9) - scan_min) <= 1e-9
    assert abs(alpha_gw(1e-9) - 0.878567) <= 1e-6
    # minimising angle
    assert abs(thetas[int(values.argmin())] - 2.331122) <= 1e-4


def test_gw_objective_sanity_point():
    assert gw_objective(np.pi / 2) == pytest.approx(1.0)
    assert gw_objective(np.pi / 2) > alpha_gw(1e-9)


def test_alpha_k():
    assert alpha_k(3) == (0.836008, "tabulated")
    assert alpha_k(2) == (0.878567, "tabulated")
    value, flag = alpha_k(10)
    assert flag == "asymptotic"
    assert value == pytest.approx(1 - 0.1 + 2 * math.log(10) / 100)
    with pytest.raises(ValueError):
        alpha_k(1)


def test_hastad_bound_values():
    assert hastad_bound(cycle(5), 0) == Fraction(2, 5)
    assert hastad_bound(wheel(6), 0) == Fraction(5, 9)
    for n in (3, 4, 6):
        assert hastad_bound(complete(n), 0) == 1 - Fraction(1, n)
    with pytest.raises(DomainError):
        hastad_bound(complete(1), 0)


def test_hastad_monotonicity():
    # nondecreasing in e(H) at fixed v(H)
    edges = [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2), (1, 3)]
    prev = None
    for m in range(1, len(edges) + 1):
        value = hastad_bound(Graph(4, frozenset(edges[:m])), 0)
        if prev is not None:
            assert value >= prev
        prev = value
    # nondecreasing in c at fixed H
    values = [float(hastad_bound(cycle(5), c)) for c in (0, 1, 2, 5)]
    assert values == sorted(values)


def test_transfer_guarantee_c11():
    rep = transfer_guarantee("GW", complete(2), cycle(11),
                             m_spec="K2", n_spec="C11")
    assert rep.exact_factor == Fraction(10, 11)
    assert rep.lower_bound == pytest.approx(0.798697, abs=1e-6)
    assert not rep.flags


def test_transfer_guarantee_fj3_wheel():
    rep = transfer_guarantee("FJ", complete(3), wheel(6), k=3)
    assert rep.exact_factor == Fraction(9, 10)
    assert rep.lower_bound == pytest.approx(0.836008 * 0.9, abs=1e-9)


def test_transfer_to_self_is_base():
    rep = transfer_guarantee("FJ", complete(3), complete(3), k=3)
    assert rep.exact_factor == 1
    assert rep.lower_bound == 0.836008
    rep = transfer_guarantee("FJ", complete(5), complete(5), k=5)
    assert "asymptotic" in rep.flags
    assert rep.lower_bound <= 1


def test_inapprox_transfer():
    rep = inapprox_transfer(Fraction(878567, 1000000), cycle(9), complete(2))
    assert rep.upper_bound == pytest.approx(0.878567 * 9 / 8, abs=1e-9)
    assert "conditional" in rep.flags
    rep = inapprox_transfer(Fraction(1, 2), complete(3), complete(3))
    assert rep.upper_bound == 0.5
    # 102/103 * 10/9 > 1, so the reported bound is capped
    rep = inapprox_transfer(Fraction(102, 103), wheel(6), complete(3))
    assert rep.exact_factor == Fraction(9, 10)
    assert rep.upper_bound == 1.0


def test_family_sweep_cycles_dominance():
    rows = family_sweep("cycles", 3, 11)
    assert [r.param for r in rows] == [(3,), (5,), (7,), (9,), (11,)]
    for row in rows:
        assert row.fj > float(row.hastad)
    # the C_3 row is Max 3-cut itself and is labelled accordingly
    assert rows[0].fj_label == "FJ3" and rows[0].fj == 0.836008
    assert all(r.fj_label == "FJ2" for r in rows[1:])


def test_family_sweep_wheels():
    rows = family_sweep("wheels", 6, 10)
    assert [r.param for r in rows] == [(6,), (8,), (10,)]
    assert rows[0].fj == pytest.approx(0.752407, abs=1e-6)
    assert rows[0].hastad == Fraction(5, 9)
    for row in rows:
        assert row.fj > float(row.hastad)


def test_family_sweep_complete_and_turan():
    rows = family_sweep("complete", 2, 6)
    assert rows[1].fj == 0.836008
    rows = family_sweep("turan", 4, 7, r=3)
    for row in rows:
        n = row.param[0]
        assert row.fj_exact_factor == Fraction(
            (1 - Fraction(1, 3)) * n * n // 2, n * (n - 1) // 2)
    with pytest.raises(ValueError):
        family_sweep("cycles", 4, 4)   # no odd k in range
    with pytest.raises(ValueError):
        family_sweep("moebius", 3, 5)
