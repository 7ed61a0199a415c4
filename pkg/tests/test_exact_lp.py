from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from oracles import lp_value_float
from srw.exact_lp import EQ, GE, LE, make_row, solve, solve_integer


def test_textbook_max_problem():
    # max 3x + 5y s.t. x ≤ 4, 2y ≤ 12, 3x + 2y ≤ 18  ->  36 at (2, 6)
    rows = [make_row([1, 0], LE, 4), make_row([0, 2], LE, 12), make_row([3, 2], LE, 18)]
    res = solve([-3, -5], rows)
    assert res.value == -36 and res.x == (2, 6)


def test_equality_and_negative_rhs():
    rows = [make_row([1, 1], EQ, 3), make_row([-1, 0], LE, -1)]  # x ≥ 1
    res = solve([1, 2], rows)
    assert res.value == 3 and res.x == (3, 0)
    # the dual multipliers reproduce the optimum
    assert sum(y * r.rhs for y, r in zip(res.duals, rows)) == res.value


def test_infeasible():
    rows = [make_row([1], LE, 1), make_row([1], GE, 2)]
    assert solve([1], rows).status == "infeasible"


def test_fractional_vertex():
    rows = [make_row([1, 1, 0], GE, 1), make_row([0, 1, 1], GE, 1), make_row([1, 0, 1], GE, 1)]
    res = solve([1, 1, 1], rows)
    assert res.value == Fraction(3, 2)
    assert all(isinstance(v, Fraction) for v in res.x)


def test_ilp_triangle_cover():
    rows = [make_row([1, 1, 0], GE, 1), make_row([0, 1, 1], GE, 1), make_row([1, 0, 1], GE, 1)]
    res = solve_integer([1, 1, 1], rows)
    assert res.value == 2 and res.lp_value == Fraction(3, 2)


def test_ilp_keeps_incumbent_on_ties():
    rows = [make_row([1, 1], GE, 1)]
    assert solve_integer([1, 1], rows, incumbent=[0, 1]).x == (0, 1)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 5).flatmap(lambda n: st.lists(
    st.lists(st.integers(0, 1), min_size=n, max_size=n).filter(any),
    min_size=1, max_size=7)))
def test_cover_lp_matches_floating_oracle(rows):
    n = len(rows[0])
    res = solve([1] * n, [make_row(r, GE, 1) for r in rows])
    assert float(res.value) == pytest.approx(lp_value_float(rows, n), abs=1e-9)
    # exact strong duality
    assert sum(res.duals) == res.value
    assert all(y >= 0 for y in res.duals)


def test_ilp_brute_force_small():
    from itertools import product
    rows = [[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1], [1, 0, 0, 1], [1, 0, 1, 0]]
    for rhs in (1, 2, 3):
        res = solve_integer([1] * 4, [make_row(r, GE, rhs) for r in rows])
        best = min(sum(x) for x in product(range(rhs + 1), repeat=4)
                   if all(sum(a * b for a, b in zip(r, x)) >= rhs for r in rows))
        assert res.value == best
