from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ehrlab.simplex import INFEASIBLE, OPTIMAL, UNBOUNDED, ExactSimplex


@st.composite
def lp_strategy(draw, max_rows=3, max_cols=4):
    m = draw(st.integers(min_value=1, max_value=max_rows))
    n = draw(st.integers(min_value=1, max_value=max_cols))
    entry = st.integers(min_value=-3, max_value=3)
    a = [[Fraction(draw(entry)) for _ in range(n)] for _ in range(m)]
    b = [Fraction(draw(st.integers(min_value=-5, max_value=5))) for _ in range(m)]
    return a, b


def residual(a, b, x):
    return [sum(aij * xj for aij, xj in zip(row, x)) - bi for row, bi in zip(a, b)]


def assert_farkas(a, b, y):
    n = len(a[0])
    assert all(sum(y[i] * a[i][j] for i in range(len(a))) <= 0 for j in range(n))
    assert sum(yi * bi for yi, bi in zip(y, b)) > 0


def test_feasible_point():
    a = [[Fraction(1), Fraction(1)], [Fraction(1), Fraction(-1)]]
    b = [Fraction(1), Fraction(0)]
    solution = ExactSimplex(a, b).find_feasible()
    assert solution.status == OPTIMAL
    assert solution.x == (Fraction(1, 2), Fraction(1, 2))


def test_negative_right_hand_side():
    solution = ExactSimplex([[Fraction(-1)]], [Fraction(-3)]).find_feasible()
    assert solution.status == OPTIMAL
    assert solution.x == (Fraction(3),)


def test_infeasible_has_farkas_vector():
    a = [[Fraction(1), Fraction(1)], [Fraction(1), Fraction(1)]]
    b = [Fraction(1), Fraction(2)]
    solution = ExactSimplex(a, b).find_feasible()
    assert solution.status == INFEASIBLE
    assert_farkas(a, b, solution.farkas)


def test_minimize_vertex():
    # max x1 + x2 over x1 + 2 x2 <= 4, 3 x1 + x2 <= 6, with slacks.
    a = [[1, 2, 1, 0], [3, 1, 0, 1]]
    b = [4, 6]
    solution = ExactSimplex(a, b).minimize([-1, -1, 0, 0])
    assert solution.status == OPTIMAL
    assert solution.x[:2] == (Fraction(8, 5), Fraction(6, 5))
    assert solution.objective == Fraction(-14, 5)


def test_minimize_unbounded():
    solution = ExactSimplex([[1, -1]], [1]).minimize([-1, 0])
    assert solution.status == UNBOUNDED


def test_minimize_with_redundant_row():
    solution = ExactSimplex([[1, 1], [2, 2]], [1, 2]).minimize([1, 0])
    assert solution.status == OPTIMAL
    assert solution.objective == 0
    assert solution.x == (Fraction(0), Fraction(1))


def test_shape_errors():
    with pytest.raises(ValueError):
        ExactSimplex([[1, 2]], [1, 2])
    with pytest.raises(ValueError):
        ExactSimplex([[1, 2]], [1]).minimize([1])


@settings(max_examples=200, deadline=None)
@given(lp_strategy())
def test_phase_one_answer_is_certified(lp):
    a, b = lp
    solution = ExactSimplex(a, b).find_feasible()
    if solution.status == OPTIMAL:
        assert all(x >= 0 for x in solution.x)
        assert all(r == 0 for r in residual(a, b, solution.x))
    else:
        assert solution.status == INFEASIBLE
        assert_farkas(a, b, solution.farkas)


@settings(max_examples=100, deadline=None)
@given(lp_strategy(), st.lists(st.integers(min_value=-3, max_value=3), min_size=4, max_size=4))
def test_minimize_beats_any_feasible_point(lp, costs):
    a, b = lp
    c = [Fraction(v) for v in costs[:len(a[0])]]
    feasible = ExactSimplex(a, b).find_feasible()
    solution = ExactSimplex(a, b).minimize(c)
    if feasible.status == INFEASIBLE:
        assert solution.status == INFEASIBLE
        return
    assert solution.status in (OPTIMAL, UNBOUNDED)
    if solution.status == OPTIMAL:
        assert all(x >= 0 for x in solution.x)
        assert all(r == 0 for r in residual(a, b, solution.x))
        assert solution.objective <= sum(ci * xi for ci, xi in zip(c, feasible.x))
