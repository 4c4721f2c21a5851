"""Pure q-measures, extreme points of the bounded set, and decomposition.

A q-measure is pure when every event value is 0 or 1; pure measures and
coevents with grade-2 additive truth values are the same objects read
two ways. Every pure measure is an extreme point of the convex set of
q-measures bounded above by one. The converse holds for n <= 3, where
the extreme points are exactly the pure measures (checked here by two
independent routes: a rank test on binding constraints, and exhaustive
vertex enumeration of the constraint polytope), but fails from n = 4
on: the polytope acquires vertices with fractional values, for example
singles (1/2, 0, 0, 1) with doubles {1,2}, {1,4}, {3,4} at 1 and the
rest 0. Consequently a q-measure on four or more outcomes need not
split as a positive combination of pure measures whose weights sum to
its largest value; when it does, the split is found by exact LP over
the pure list.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .coevents import Coevent
from .errors import InputError, ResourceCapError, SolverDefectError
from .linalg import rank_and_nullspace, solve_feasibility
from .measures import SignedQMeasure, dirac, iter_pairs, pair_count, pair_index
from .space import Event, OutcomeSpace

ENUMERATE_MAX_N = 6
VERTICES_MAX_N = 3
VERTICES_SLOW_MAX_N = 4


@dataclass(frozen=True)
class PureQMeasure:
    """A pure q-measure together with the coevent sharing its 0/1 values."""

    measure: SignedQMeasure
    coevent: Coevent


@dataclass(frozen=True)
class Decomposition:
    """Positive pure terms (weight, pure) summing back to the source measure;
    the weights sum to the source's largest event value."""

    space: OutcomeSpace
    terms: tuple[tuple[Fraction, PureQMeasure], ...]

    def total_weight(self) -> Fraction:
        return sum((w for w, _ in self.terms), Fraction(0))


def is_pure(m: SignedQMeasure) -> bool:
    """True when every event value is 0 or 1."""
    return purity_defect(m) is None


def purity_defect(m: SignedQMeasure) -> Optional[tuple[Event, Fraction]]:
    """First event (ascending bitmask) whose value leaves {0, 1}, with the
    value; None for pure measures."""
    for ev in m.space.iter_events():
        v = m(ev)
        if v != 0 and v != 1:
            return ev, v
    return None


def measure_to_coevent(m: SignedQMeasure) -> Coevent:
    """Read a pure measure as a truth function."""
    defect = purity_defect(m)
    if defect is not None:
        ev, v = defect
        raise InputError(f"measure is not pure: value {v} at {{{ev}}}")
    truth = 0
    for ev in m.space.iter_events(nonempty_only=True):
        if m(ev) == 1:
            truth |= 1 << ev.bits
    return Coevent(m.space, truth)


def coevent_to_measure(phi: Coevent) -> SignedQMeasure:
    """The grade-2 measure built from a coevent's singleton and doubleton
    truth values. It reproduces the whole truth table exactly when the
    coevent is pure, and only then."""
    space = phi.space
    n = space.n
    singles = tuple(Fraction(phi(space.singleton(i))) for i in range(1, n + 1))
    doubles = tuple(Fraction(phi(space.doubleton(i, j))) for i, j in iter_pairs(n))
    return SignedQMeasure(space, singles, doubles)


def is_pure_coevent(phi: Coevent) -> bool:
    """Whether the coevent's truth values form a grade-2 additive measure."""
    m = coevent_to_measure(phi)
    return all(
        m(ev) == phi(ev) for ev in phi.space.iter_events(nonempty_only=True)
    )


@lru_cache(maxsize=None)
def _enumerate_pure_cached(n: int) -> tuple[PureQMeasure, ...]:
    space = OutcomeSpace(n)
    found: list[tuple[tuple[int, ...], tuple[int, ...]]] = []

    # Depth-first over outcomes: a pure assignment restricted to the first m
    # outcomes is pure on the smaller space, so prefixes prune exactly.
    # S[mask] and P[mask] hold the running singleton sum and pairwise sum of
    # each event mask over the outcomes placed so far.
    def extend(m: int, s_vals: list[int], d_rows: list[int], s_sum: list[int], p_sum: list[int]) -> None:
        if m == n:
            found.append((tuple(s_vals), tuple(d_rows)))
            return
        size = 1 << m
        for s_new in (0, 1):
            for dsel in range(1 << m):
                new_s = s_sum + [0] * size
                new_p = p_sum + [0] * size
                d_of = [0] * size
                ok = True
                for mask in range(size):
                    if mask:
                        low = mask & -mask
                        d_of[mask] = d_of[mask ^ low] + (dsel >> (low.bit_length() - 1) & 1)
                    idx = size | mask
                    new_s[idx] = s_sum[mask] + s_new
                    new_p[idx] = p_sum[mask] + d_of[mask]
                    k = mask.bit_count() + 1
                    if k >= 3 and new_p[idx] - (k - 2) * new_s[idx] not in (0, 1):
                        ok = False
                        break
                if ok:
                    extend(m + 1, s_vals + [s_new], d_rows + [dsel], new_s, new_p)

    for first in (0, 1):
        extend(1, [first], [], [0, first], [0, 0])

    out = []
    for s_vals, d_rows in found:
        singles = tuple(Fraction(v) for v in s_vals)
        doubles = [Fraction(0)] * pair_count(n)
        for j in range(2, n + 1):
            row = d_rows[j - 2]
            for i in range(1, j):
                doubles[pair_index(i, j, n)] = Fraction(row >> (i - 1) & 1)
        measure = SignedQMeasure(space, singles, tuple(doubles))
        out.append(PureQMeasure(measure, measure_to_coevent(measure)))
    out.sort(key=lambda p: p.measure.coordinates())
    return tuple(out)


def enumerate_pure(space: OutcomeSpace) -> list[PureQMeasure]:
    """All pure q-measures, sorted by coordinate tuple."""
    if space.n > ENUMERATE_MAX_N:
        raise ResourceCapError(
            f"pure enumeration is capped at n <= {ENUMERATE_MAX_N}, got {space.n}"
        )
    return list(_enumerate_pure_cached(space.n))


def _functional_row(space: OutcomeSpace, bits: int) -> list[Fraction]:
    """Coefficients of mu(A) as a linear functional of the coordinate vector
    (singleton values then doubleton values)."""
    n = space.n
    outs = [i + 1 for i in range(n) if bits >> i & 1]
    k = len(outs)
    row = [Fraction(0)] * (n + pair_count(n))
    for i in outs:
        row[i - 1] = Fraction(2 - k)
    for a in range(k):
        for b in range(a + 1, k):
            row[n + pair_index(outs[a], outs[b], n)] = Fraction(1)
    return row


def _binding_matrix(m: SignedQMeasure) -> list[list[Fraction]]:
    rows = []
    for ev in m.space.iter_events(nonempty_only=True):
        v = m(ev)
        if v == 0 or v == 1:
            rows.append(_functional_row(m.space, ev.bits))
    return rows


def _check_bounded_q_measure(m: SignedQMeasure) -> None:
    flag = m.is_q_measure()
    if not flag.is_q_measure:
        raise InputError(
            f"not a q-measure: negative value at {{{flag.witness}}}"
        )
    top = m.max_value()
    if top > 1:
        raise InputError(f"measure is not bounded by one, largest value is {top}")


def is_extremal(m: SignedQMeasure) -> bool:
    """Extreme-point test inside the set of q-measures bounded by one.

    Independent of purity: collects the events whose values sit at the 0/1
    bounds and asks whether those functionals pin the coordinate vector
    (trivial nullspace). A measure is extreme exactly when no nonzero
    perturbation direction keeps all binding values fixed.
    """
    return extremal_defect(m) is None


def extremal_defect(m: SignedQMeasure) -> Optional[SignedQMeasure]:
    """A nonzero direction along which the measure can move both ways while
    keeping every binding value; None when the measure is extreme."""
    _check_bounded_q_measure(m)
    n = m.space.n
    dim = n + pair_count(n)
    rows = _binding_matrix(m)
    if not rows:
        eta = [Fraction(0)] * dim
        eta[0] = Fraction(1)
    else:
        rank, basis = rank_and_nullspace(rows)
        if rank == dim:
            return None
        eta = basis[0]
    return SignedQMeasure(m.space, tuple(eta[:n]), tuple(eta[n:]))


def polytope_vertices(
    space: OutcomeSpace, *, allow_slow: bool = False
) -> list[PureQMeasure]:
    """Vertices of {0 <= mu(A) <= 1 for every nonempty A}, by exhaustive
    active-set enumeration over the event functionals.

    Cross-checks the vertex set against enumerate_pure before returning,
    raising the defect error on disagreement. The two agree for n <= 3.
    At n = 4 (minutes; requires allow_slow=True) the polytope genuinely
    has vertices that are not pure, so the cross-check reports them and
    raises rather than returning a set that is not what the name claims.
    """
    n = space.n
    if n > VERTICES_SLOW_MAX_N:
        raise ResourceCapError(
            f"vertex enumeration is capped at n <= {VERTICES_SLOW_MAX_N}, got {n}"
        )
    if n > VERTICES_MAX_N and not allow_slow:
        raise ResourceCapError(
            f"vertex enumeration at n={n} takes minutes, pass allow_slow=True"
        )
    dim = n + pair_count(n)
    # Wide events first so the unit coordinate rows land late in the DFS,
    # where dependent rows are rejected cheaply.
    masks = sorted(range(1, 1 << n), key=lambda b: (-b.bit_count(), b))
    functionals = [_functional_row(space, b) for b in masks]

    solutions: set[tuple[Fraction, ...]] = set()
    vertices: set[tuple[Fraction, ...]] = set()
    # Elimination state: pivot column -> normalized augmented row.
    pivots: dict[int, list[Fraction]] = {}

    def feasible(coords: tuple[Fraction, ...]) -> bool:
        mm = SignedQMeasure(space, coords[:n], coords[n:])
        for ev in space.iter_events(nonempty_only=True):
            v = mm(ev)
            if v < 0 or v > 1:
                return False
        return True

    def back_substitute() -> tuple[Fraction, ...]:
        x = [Fraction(0)] * dim
        for col in sorted(pivots, reverse=True):
            row = pivots[col]
            acc = row[dim]
            for c in range(col + 1, dim):
                if row[c] != 0:
                    acc -= row[c] * x[c]
            x[col] = acc
        return tuple(x)

    def reduce_row(row: list[Fraction]) -> Optional[tuple[int, list[Fraction]]]:
        work = list(row)
        for col in range(dim):
            if work[col] != 0 and col in pivots:
                factor = work[col]
                prow = pivots[col]
                for c in range(col, dim + 1):
                    if prow[c] != 0:
                        work[c] -= factor * prow[c]
        lead = next((c for c in range(dim) if work[c] != 0), None)
        if lead is None:
            return None
        inv = 1 / work[lead]
        return lead, [v * inv for v in work]

    def descend(idx: int) -> None:
        need = dim - len(pivots)
        if need == 0:
            coords = back_substitute()
            if coords not in solutions:
                solutions.add(coords)
                if feasible(coords):
                    vertices.add(coords)
            return
        if len(functionals) - idx < need:
            return
        # branch: skip this functional entirely
        descend(idx + 1)
        for bound in (Fraction(0), Fraction(1)):
            reduced = reduce_row(functionals[idx] + [bound])
            if reduced is None:
                # dependent row: consistent duplicates add nothing, an
                # inconsistent bound cannot be active here
                continue
            lead, row = reduced
            pivots[lead] = row
            descend(idx + 1)
            del pivots[lead]

    descend(0)

    ordered = sorted(vertices)
    expected = {p.measure.coordinates() for p in _enumerate_pure_cached(n)}
    if set(ordered) != expected:
        extra = sorted(set(ordered) - expected)
        missing = sorted(expected - set(ordered))
        sample = ", ".join(str(v) for v in extra[0]) if extra else "none"
        raise SolverDefectError(
            f"vertex enumeration found {len(ordered)} vertices but there are "
            f"{len(expected)} pure measures ({len(extra)} vertices are not "
            f"pure, {len(missing)} pures were not reached); first non-pure "
            f"vertex coordinates: ({sample}). Non-pure vertices exist from "
            "n = 4 on, so the pure set no longer spans the polytope there."
        )
    out = []
    for coords in ordered:
        measure = SignedQMeasure(space, coords[:n], coords[n:])
        out.append(PureQMeasure(measure, measure_to_coevent(measure)))
    return out


def pure_decomposition(m: SignedQMeasure) -> Decomposition:
    """Split a q-measure into positive pure terms via exact LP.

    The weights are M times the convex coefficients of m / M over the pure
    list, M being the largest event value, so they sum to M. For n <= 3
    this always succeeds: the pure measures are exactly the vertices of
    the bounded-by-one polytope, so m / M is a convex combination of them.
    From n = 4 on the polytope has vertices that are not pure, so some
    q-measures lie outside the convex hull of the pure set and no such
    decomposition exists; that genuine infeasibility raises the defect
    error with the situation spelled out.
    """
    flag = m.is_q_measure()
    if not flag.is_q_measure:
        raise InputError(f"not a q-measure: negative value at {{{flag.witness}}}")
    space = m.space
    if space.n > ENUMERATE_MAX_N:
        raise ResourceCapError(
            f"decomposition is capped at n <= {ENUMERATE_MAX_N}, got {space.n}"
        )
    top = m.max_value()
    if top == 0:
        return Decomposition(space, ())
    if all(m.interference(i, j) == 0 for i, j in iter_pairs(space.n)):
        # Additive measures split over the point measures directly; this
        # also keeps the transfer of an ordinary measure on the evaluation
        # maps instead of whatever basis the solver would pick.
        terms = []
        for i in range(1, space.n + 1):
            w = m.single(i)
            if w != 0:
                d = dirac(space, i)
                terms.append((w, PureQMeasure(d, measure_to_coevent(d))))
        return Decomposition(space, tuple(terms))
    pures = _enumerate_pure_cached(space.n)
    target = [v / top for v in m.coordinates()]
    dim = len(target)
    rows = []
    for c in range(dim):
        rows.append([p.measure.coordinates()[c] for p in pures])
    rows.append([Fraction(1)] * len(pures))
    rhs = target + [Fraction(1)]
    result = solve_feasibility(rows, rhs)
    if not result.feasible:
        raise SolverDefectError(
            "the measure lies outside the convex hull of the pure measures "
            "(certificate verified); no decomposition with weights summing "
            "to the maximum value exists. Scaled by its maximum, the measure "
            "is a vertex of, or sits behind a non-pure vertex of, the "
            "bounded-by-one polytope, which happens from n = 4 on."
        )
    terms = tuple(
        (top * lam, pures[idx])
        for idx, lam in enumerate(result.solution)
        if lam != 0
    )
    return Decomposition(space, terms)
