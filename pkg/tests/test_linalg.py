"""Exact elimination and feasibility against brute force and scipy."""

import random
from fractions import Fraction

import numpy as np
import pytest
from scipy.optimize import linprog

from qmeasure.errors import InputError, ResourceCapError
from qmeasure.linalg import (
    MAX_COLS,
    MAX_ROWS,
    rank_and_nullspace,
    solve_feasibility,
    solve_unique,
)

F = Fraction


def random_matrix(rng: random.Random, rows: int, cols: int) -> list[list[Fraction]]:
    return [
        [F(rng.randint(-3, 3), rng.choice((1, 1, 2))) for _ in range(cols)]
        for _ in range(rows)
    ]


def test_rank_identity():
    eye = [[F(int(i == j)) for j in range(3)] for i in range(3)]
    rank, basis = rank_and_nullspace(eye)
    assert rank == 3
    assert basis == []


def test_rank_single_row_nullspace():
    rank, basis = rank_and_nullspace([[F(1), F(-1)]])
    assert rank == 1
    assert len(basis) == 1
    v = basis[0]
    assert v[0] == v[1] != 0


def test_rank_nullity_and_exact_kernel(rng):
    for _ in range(60):
        m = rng.randint(1, 5)
        n = rng.randint(1, 6)
        mat = random_matrix(rng, m, n)
        rank, basis = rank_and_nullspace(mat)
        assert rank + len(basis) == n
        for v in basis:
            for row in mat:
                assert sum(a * x for a, x in zip(row, v)) == 0
        # rank agrees with numpy on these small integers-over-2 matrices
        np_rank = np.linalg.matrix_rank(np.array([[float(a) for a in r] for r in mat]))
        assert rank == np_rank


def test_solve_unique_inverts_full_rank_systems(rng):
    for _ in range(40):
        n = rng.randint(1, 5)
        while True:
            mat = random_matrix(rng, n, n)
            if rank_and_nullspace(mat)[0] == n:
                break
        x = [F(rng.randint(-4, 4), rng.choice((1, 2, 3))) for _ in range(n)]
        rhs = [sum(a * b for a, b in zip(row, x)) for row in mat]
        got = solve_unique(mat, rhs)
        assert got == x


def test_solve_unique_rejects_underdetermined():
    with pytest.raises(InputError):
        solve_unique([[F(1), F(1)]], [F(1)])


def test_solve_unique_none_on_inconsistent():
    assert solve_unique([[F(1)], [F(1)]], [F(1), F(2)]) is None


def test_feasibility_sign_obstruction():
    res = solve_feasibility([[F(1)]], [F(-1)])
    assert not res.feasible
    y = res.certificate
    assert len(y) == 1 and y[0] < 0


def test_feasibility_small_golden():
    # x2 + x3 = 1 each, x1 free at zero
    rows = [
        [F(1), F(1), F(0)],
        [F(1), F(0), F(1)],
    ]
    res = solve_feasibility(rows, [F(1), F(1)])
    assert res.feasible
    x = res.solution
    assert x[0] + x[1] == 1 and x[0] + x[2] == 1
    assert all(v >= 0 for v in x)


def test_feasibility_substitution_and_farkas_hold(rng):
    """Every verdict carries its own exact proof."""
    for _ in range(150):
        m = rng.randint(1, 4)
        n = rng.randint(1, 6)
        mat = random_matrix(rng, m, n)
        if rng.random() < 0.5:
            x0 = [F(rng.randint(0, 3)) for _ in range(n)]
            rhs = [sum(a * b for a, b in zip(row, x0)) for row in mat]
        else:
            rhs = [F(rng.randint(-3, 3)) for _ in range(m)]
        res = solve_feasibility(mat, rhs)
        if res.feasible:
            x = res.solution
            assert all(v >= 0 for v in x)
            for row, b in zip(mat, rhs):
                assert sum(a * v for a, v in zip(row, x)) == b
            assert sum(1 for v in x if v != 0) <= rank_and_nullspace(mat)[0]
        else:
            y = res.certificate
            for j in range(n):
                assert sum(y[i] * mat[i][j] for i in range(m)) <= 0
            assert sum(y[i] * rhs[i] for i in range(m)) > 0


def test_feasibility_agrees_with_scipy(rng):
    """Float LP as an independent oracle on integer instances."""
    agree = 0
    for _ in range(80):
        m = rng.randint(1, 3)
        n = rng.randint(1, 5)
        mat = [[F(rng.randint(-2, 2)) for _ in range(n)] for _ in range(m)]
        rhs = [F(rng.randint(-2, 2)) for _ in range(m)]
        res = solve_feasibility(mat, rhs)
        lp = linprog(
            np.zeros(n),
            A_eq=np.array([[float(a) for a in row] for row in mat]),
            b_eq=np.array([float(b) for b in rhs]),
            bounds=[(0, None)] * n,
            method="highs",
        )
        scipy_feasible = lp.status == 0
        assert res.feasible == scipy_feasible
        agree += 1
    assert agree == 80


def test_feasibility_deterministic():
    rows = [[F(1), F(2), F(1)], [F(0), F(1), F(3)]]
    rhs = [F(3), F(4)]
    first = solve_feasibility(rows, rhs)
    second = solve_feasibility(rows, rhs)
    assert first.solution == second.solution
    assert first.pivots == second.pivots


def test_dimension_mismatch_is_input_error():
    with pytest.raises(InputError):
        solve_feasibility([[F(1)]], [F(1), F(2)])


def test_resource_caps():
    with pytest.raises(ResourceCapError):
        solve_feasibility([[F(0)]] * (MAX_ROWS + 1), [F(0)] * (MAX_ROWS + 1))
    with pytest.raises(ResourceCapError):
        solve_feasibility([[F(0)] * (MAX_COLS + 1)], [F(0)])
