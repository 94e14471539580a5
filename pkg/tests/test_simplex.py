import random
from fractions import Fraction

import pytest

from barypoly.linalg import dot, mat_vec
from barypoly.simplex import convex_membership, feasible_point, solve_lp

F = Fraction


def test_feasible_point_square_center():
    a = [
        [F(0), F(1), F(1), F(0)],
        [F(0), F(0), F(1), F(1)],
        [F(1), F(1), F(1), F(1)],
    ]
    b = [F(1, 2), F(1, 2), F(1)]
    res = feasible_point(a, b)
    assert res.status == "optimal"
    assert mat_vec(a, res.x) == b
    assert all(x >= 0 for x in res.x)


def test_feasible_point_deterministic():
    a = [[F(0), F(1), F(1), F(0)],
         [F(0), F(0), F(1), F(1)],
         [F(1), F(1), F(1), F(1)]]
    b = [F(1, 3), F(2, 3), F(1)]
    assert feasible_point(a, b).x == feasible_point(a, b).x


def test_infeasible_farkas_certificate():
    # x1 + x2 = -1 with x >= 0 is infeasible
    a = [[F(1), F(1)]]
    b = [F(-1)]
    res = feasible_point(a, b)
    assert res.status == "infeasible"
    y = res.farkas
    for col in zip(*a):
        assert dot(y, col) <= 0
    assert dot(y, b) > 0


def test_farkas_outside_square():
    a = [
        [F(0), F(1), F(1), F(0)],
        [F(0), F(0), F(1), F(1)],
        [F(1), F(1), F(1), F(1)],
    ]
    b = [F(2), F(2), F(1)]
    res = feasible_point(a, b)
    assert res.status == "infeasible"
    y = res.farkas
    for col in zip(*a):
        assert dot(y, col) <= 0
    assert dot(y, b) > 0


def test_solve_lp_simple_min():
    # min x1 subject to x1 + x2 = 1
    res = solve_lp([[F(1), F(1)]], [F(1)], [F(1), F(0)])
    assert res.status == "optimal"
    assert res.objective == 0
    assert res.x == [F(0), F(1)]


def test_solve_lp_transport_like():
    # min x1 + 2 x2 + 3 x3 s.t. x1 + x2 + x3 = 1, x2 + 2 x3 = 1
    a = [[F(1), F(1), F(1)], [F(0), F(1), F(2)]]
    b = [F(1), F(1)]
    res = solve_lp(a, b, [F(1), F(2), F(3)])
    assert res.status == "optimal"
    assert mat_vec(a, res.x) == b
    # optimum at x = (1/2, 0, 1/2): objective 2; beats (0,1,0) with 2? equal;
    # simplex must return an optimal basic solution with objective exactly 2
    assert res.objective == F(2)


def test_solve_lp_unbounded():
    # min -x1 subject to x1 - x2 = 0: both can grow without bound
    res = solve_lp([[F(1), F(-1)]], [F(0)], [F(-1), F(0)])
    assert res.status == "unbounded"


def test_redundant_rows():
    # duplicated constraint row must not break feasibility handling
    a = [[F(1), F(1)], [F(1), F(1)], [F(2), F(2)]]
    b = [F(1), F(1), F(2)]
    res = feasible_point(a, b)
    assert res.status == "optimal"
    assert mat_vec(a, res.x) == b


def test_degenerate_systems_random():
    rng = random.Random(99)
    for _ in range(40):
        m, n = rng.randint(1, 4), rng.randint(1, 6)
        a = [[F(rng.randint(-4, 4), 2) for _ in range(n)] for _ in range(m)]
        x0 = [F(rng.randint(0, 5), 3) for _ in range(n)]
        b = mat_vec(a, x0)  # feasible by construction
        res = feasible_point(a, b)
        assert res.status == "optimal"
        assert mat_vec(a, res.x) == b
        assert all(x >= 0 for x in res.x)


def test_solve_lp_against_scipy():
    linprog = pytest.importorskip("scipy.optimize").linprog
    rng = random.Random(64)
    for _ in range(100):
        m, n = rng.randint(1, 4), rng.randint(2, 7)
        a = [[F(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(n)]
             for _ in range(m)]
        x0 = [F(rng.randint(0, 4), 2) for _ in range(n)]
        b = mat_vec(a, x0)  # feasible by construction
        c = [F(rng.randint(-6, 6), 2) for _ in range(n)]
        mine = solve_lp(a, b, c)
        ref = linprog([float(x) for x in c],
                      A_eq=[[float(x) for x in r] for r in a],
                      b_eq=[float(x) for x in b],
                      bounds=(0, None), method="highs")
        if mine.status == "optimal":
            assert ref.status == 0
            assert abs(float(mine.objective) - ref.fun) < 1e-7
        else:
            assert mine.status == "unbounded" and ref.status == 3


def test_convex_membership():
    square = [(F(0), F(0)), (F(1), F(0)), (F(1), F(1)), (F(0), F(1))]
    w = convex_membership(square, (F(1, 4), F(1, 4)))
    assert w is not None
    assert sum(w) == 1 and all(x >= 0 for x in w)
    assert sum(wi * v[0] for wi, v in zip(w, square)) == F(1, 4)
    assert sum(wi * v[1] for wi, v in zip(w, square)) == F(1, 4)
    assert convex_membership(square, (F(2), F(0))) is None
