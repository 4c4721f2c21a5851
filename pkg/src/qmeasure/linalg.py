"""Exact rational linear algebra: rank, nullspace, and LP feasibility.

Everything here works on fractions.Fraction and never touches floats.
solve_feasibility decides {x >= 0 : Ax = b} by a dense phase-1 simplex
with Bland's rule, so it terminates deterministically; an infeasible
system yields a Farkas certificate y with y.A <= 0 and y.b > 0. Both the
solution and the certificate are verified by substitution before they
are returned.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import InputError, ResourceCapError, SolverDefectError

logger = logging.getLogger(__name__)

MAX_ROWS = 1 << 10
MAX_COLS = 1 << 16

Vector = list[Fraction]
Matrix = list[list[Fraction]]


def _copy_matrix(rows: Sequence[Sequence[Fraction]]) -> Matrix:
    if not rows:
        return []
    width = len(rows[0])
    out = []
    for row in rows:
        if len(row) != width:
            raise InputError("matrix rows have unequal lengths")
        out.append([Fraction(v) for v in row])
    return out


def rank_and_nullspace(rows: Sequence[Sequence[Fraction]]) -> tuple[int, list[Vector]]:
    """Exact rank and a basis of the right nullspace, via reduced row echelon form."""
    m = _copy_matrix(rows)
    if not m:
        return 0, []
    ncols = len(m[0])
    pivot_cols: list[int] = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][col]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                factor = m[i][col]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivot_cols.append(col)
        r += 1
        if r == len(m):
            break
    basis: list[Vector] = []
    pivot_set = set(pivot_cols)
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for row_idx, pc in enumerate(pivot_cols):
            v[pc] = -m[row_idx][free]
        basis.append(v)
    return r, basis


def solve_unique(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> Optional[Vector]:
    """Solve Ax = b when A has full column rank. None means inconsistent.

    Raises InputError if the system is underdetermined; callers are
    expected to have established full column rank beforehand.
    """
    m = _copy_matrix(rows)
    if len(m) != len(rhs):
        raise InputError("right-hand side length does not match row count")
    b = [Fraction(v) for v in rhs]
    if not m:
        if any(v != 0 for v in b):
            return None
        return []
    ncols = len(m[0])
    pivot_cols: list[int] = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        b[r], b[pivot] = b[pivot], b[r]
        inv = 1 / m[r][col]
        m[r] = [v * inv for v in m[r]]
        b[r] = b[r] * inv
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                factor = m[i][col]
                m[i] = [a - factor * c for a, c in zip(m[i], m[r])]
                b[i] -= factor * b[r]
        pivot_cols.append(col)
        r += 1
        if r == len(m):
            break
    if r < ncols:
        raise InputError("system is underdetermined, columns are not independent")
    for i in range(r, len(m)):
        if b[i] != 0:
            return None
    x = [Fraction(0)] * ncols
    for row_idx, pc in enumerate(pivot_cols):
        x[pc] = b[row_idx]
    return x


@dataclass(frozen=True)
class FeasibilityResult:
    """Outcome of a nonnegative feasibility solve.

    Exactly one of solution / certificate is set. solution satisfies
    Ax = b, x >= 0 with at most rank(A) nonzero entries; certificate y
    satisfies y.A <= 0 componentwise and y.b > 0.
    """

    feasible: bool
    solution: Optional[tuple[Fraction, ...]]
    certificate: Optional[tuple[Fraction, ...]]
    pivots: int


def solve_feasibility(
    rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]
) -> FeasibilityResult:
    """Decide whether Ax = b has a solution with x >= 0, exactly."""
    a_orig = _copy_matrix(rows)
    b_orig = [Fraction(v) for v in rhs]
    m = len(a_orig)
    if m != len(b_orig):
        raise InputError("right-hand side length does not match row count")
    ncols = len(a_orig[0]) if a_orig else 0
    if m > MAX_ROWS:
        raise ResourceCapError(f"{m} rows exceeds the cap of {MAX_ROWS}")
    if ncols > MAX_COLS:
        raise ResourceCapError(f"{ncols} columns exceeds the cap of {MAX_COLS}")

    # Orient every row so the right-hand side is nonnegative.
    sign = [Fraction(-1) if b_orig[i] < 0 else Fraction(1) for i in range(m)]
    tab = [[sign[i] * v for v in a_orig[i]] for i in range(m)]
    b = [sign[i] * b_orig[i] for i in range(m)]
    # Artificial identity block.
    for i in range(m):
        tab[i].extend(Fraction(1) if k == i else Fraction(0) for k in range(m))
        tab[i].append(b[i])
    width = ncols + m
    rhs_col = width
    basis = [ncols + i for i in range(m)]

    # Reduced cost row for the phase-1 objective (minimize the artificial sum).
    obj = [Fraction(0)] * (width + 1)
    for j in range(ncols):
        obj[j] = -sum(tab[i][j] for i in range(m))
    obj[rhs_col] = -sum(b)

    pivots = 0
    while True:
        entering = next((j for j in range(width) if obj[j] < 0), None)
        if entering is None:
            break
        leaving_row = None
        best_ratio: Optional[Fraction] = None
        for i in range(m):
            coeff = tab[i][entering]
            if coeff > 0:
                ratio = tab[i][rhs_col] / coeff
                if (
                    best_ratio is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[i] < basis[leaving_row])
                ):
                    best_ratio = ratio
                    leaving_row = i
        if leaving_row is None:
            raise SolverDefectError("phase-1 objective unbounded below, tableau corrupt")
        _pivot(tab, obj, basis, leaving_row, entering, rhs_col)
        pivots += 1

    objective = -obj[rhs_col]
    logger.debug("phase-1 finished after %d pivots, objective %s", pivots, objective)

    if objective > 0:
        # Farkas certificate from the duals: y_i = 1 - reduced cost of artificial i.
        y = [sign[i] * (Fraction(1) - obj[ncols + i]) for i in range(m)]
        for j in range(ncols):
            if sum(y[i] * a_orig[i][j] for i in range(m)) > 0:
                raise SolverDefectError("Farkas certificate failed substitution")
        if sum(y[i] * b_orig[i] for i in range(m)) <= 0:
            raise SolverDefectError("Farkas certificate does not separate the rhs")
        return FeasibilityResult(False, None, tuple(y), pivots)

    # Drive artificial variables out of the basis where a structural pivot exists.
    for i in range(m):
        if basis[i] >= ncols:
            entering = next((j for j in range(ncols) if tab[i][j] != 0), None)
            if entering is not None:
                _pivot(tab, obj, basis, i, entering, rhs_col)
                pivots += 1

    x = [Fraction(0)] * ncols
    for i in range(m):
        if basis[i] < ncols:
            x[basis[i]] = tab[i][rhs_col]
    for i in range(m):
        lhs = sum(a_orig[i][j] * x[j] for j in range(ncols) if x[j] != 0)
        if lhs != b_orig[i]:
            raise SolverDefectError("feasible point failed substitution")
    if any(v < 0 for v in x):
        raise SolverDefectError("feasible point has a negative coordinate")
    return FeasibilityResult(True, tuple(x), None, pivots)


def _pivot(tab: Matrix, obj: Vector, basis: list[int], row: int, col: int, rhs_col: int) -> None:
    inv = 1 / tab[row][col]
    tab[row] = [v * inv for v in tab[row]]
    pivot_row = tab[row]
    for i in range(len(tab)):
        if i != row and tab[i][col] != 0:
            factor = tab[i][col]
            tab[i] = [a - factor * b for a, b in zip(tab[i], pivot_row)]
    if obj[col] != 0:
        factor = obj[col]
        for j in range(rhs_col + 1):
            obj[j] -= factor * pivot_row[j]
    basis[row] = col
