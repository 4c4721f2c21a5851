"""Pure q-measures, extreme points, and convex decomposition.

The forward direction (pure implies extremal) holds at every n. The
converse holds up to n = 3 and genuinely fails from n = 4 on; the
regression tests below pin a concrete fractional extreme point and the
decomposition failure it forces.
"""

import random
from fractions import Fraction

import pytest

from qmeasure.coevents import enumerate_logic, zero_coevent
from qmeasure.errors import InputError, ResourceCapError, SolverDefectError
from qmeasure.extremal import (
    ENUMERATE_MAX_N,
    VERTICES_MAX_N,
    VERTICES_SLOW_MAX_N,
    coevent_to_measure,
    enumerate_pure,
    extremal_defect,
    is_extremal,
    is_pure,
    is_pure_coevent,
    measure_to_coevent,
    polytope_vertices,
    pure_decomposition,
    purity_defect,
)
from qmeasure.measures import (
    SignedQMeasure,
    dirac,
    doubleton_dirac,
    ordinary_measure,
    pair_count,
    recompose,
)
from qmeasure.space import OutcomeSpace

F = Fraction

PURE_COUNTS = {1: 2, 2: 8, 3: 35, 4: 111, 5: 276, 6: 582}


def fractional_extreme_point() -> SignedQMeasure:
    """A vertex of the bounded-by-one polytope at n = 4 that is not pure:
    four events take the value 1/2, yet the binding events pin all ten
    coordinates."""
    space = OutcomeSpace(4)
    return SignedQMeasure(
        space,
        (F(1, 2), F(0), F(0), F(1)),
        (F(1), F(0), F(1), F(0), F(0), F(1)),
    )


def zero_measure(space: OutcomeSpace) -> SignedQMeasure:
    return SignedQMeasure(
        space, (F(0),) * space.n, (F(0),) * pair_count(space.n)
    )


def test_purity_goldens():
    space = OutcomeSpace(3)
    assert is_pure(dirac(space, 2))
    assert is_pure(doubleton_dirac(space, 1, 3))
    assert is_pure(zero_measure(space))
    half = ordinary_measure(space, ["1/2", "1/2", 0])
    defect = purity_defect(half)
    assert defect == (space.singleton(1), F(1, 2))
    assert not is_pure(half)


def test_measure_coevent_roundtrip():
    for n in (1, 2, 3, 4):
        space = OutcomeSpace(n)
        for pure in enumerate_pure(space):
            phi = measure_to_coevent(pure.measure)
            assert phi == pure.coevent
            back = coevent_to_measure(phi)
            assert back == pure.measure
            assert is_pure_coevent(phi)
            for ev in space.iter_events():
                assert pure.measure(ev) == phi(ev)


def test_measure_to_coevent_rejects_impure():
    space = OutcomeSpace(2)
    with pytest.raises(InputError, match="not pure"):
        measure_to_coevent(ordinary_measure(space, ["1/2", 0]))


def test_pure_counts():
    for n, count in PURE_COUNTS.items():
        assert len(enumerate_pure(OutcomeSpace(n))) == count


def test_pure_coevent_flag_matches_enumeration():
    """is_pure_coevent carves exactly the enumerated set out of the full
    logic, zero included."""
    space = OutcomeSpace(3)
    flagged = {
        phi for phi in enumerate_logic(space, "full") if is_pure_coevent(phi)
    }
    enumerated = {p.coevent for p in enumerate_pure(space)}
    assert flagged == enumerated
    assert len(flagged) == 35
    assert zero_coevent(space) in flagged


def test_enumerated_pures_are_valid_and_sorted():
    for n in (2, 3, 4):
        space = OutcomeSpace(n)
        pures = enumerate_pure(space)
        coords = [p.measure.coordinates() for p in pures]
        assert coords == sorted(coords)
        assert len(set(coords)) == len(coords)
        for p in pures:
            assert is_pure(p.measure)
            assert p.measure.is_q_measure().is_q_measure
            assert p.measure.max_value() <= 1


def test_pure_coevents_have_degree_at_most_two():
    for n in (2, 3, 4, 5):
        space = OutcomeSpace(n)
        for p in enumerate_pure(space):
            assert p.coevent.degree <= 2, p.coevent.format()


def test_quadratic_degree_does_not_imply_pure():
    space = OutcomeSpace(3)
    impure_quadratics = [
        phi
        for phi in enumerate_logic(space, "quadratic")
        if not is_pure_coevent(phi)
    ]
    assert len(impure_quadratics) == 64 - 35


def test_pure_implies_extremal():
    """Forward direction, exhaustive through n = 4."""
    for n in (1, 2, 3, 4):
        space = OutcomeSpace(n)
        for p in enumerate_pure(space):
            assert is_extremal(p.measure), p.measure.coordinates()


def test_vertices_equal_pures_up_to_three():
    for n in (1, 2, 3):
        space = OutcomeSpace(n)
        verts = {p.measure.coordinates() for p in polytope_vertices(space)}
        pures = {p.measure.coordinates() for p in enumerate_pure(space)}
        assert verts == pures
    onepoint = OutcomeSpace(1)
    verts = {p.measure.coordinates() for p in polytope_vertices(onepoint)}
    assert verts == {(F(0),), (F(1),)}


@pytest.mark.slow
def test_vertex_enumeration_detects_fractional_vertices_at_four():
    """The vertex set at n = 4 is strictly larger than the pure set; the
    enumerator reports the mismatch instead of returning it."""
    with pytest.raises(SolverDefectError, match="[Nn]on-pure"):
        polytope_vertices(OutcomeSpace(4), allow_slow=True)


def test_fractional_extreme_point_regression():
    """The pinned counterexample: a q-measure bounded by one, not pure,
    extreme, and outside the convex hull of the pure measures."""
    w = fractional_extreme_point()
    flag = w.is_q_measure()
    assert flag.is_q_measure
    assert w.max_value() == 1
    assert not is_pure(w)
    ev, v = purity_defect(w)
    assert v == F(1, 2)
    assert is_extremal(w)
    assert extremal_defect(w) is None
    with pytest.raises(SolverDefectError, match="convex hull"):
        pure_decomposition(w)


def test_extremal_defect_is_a_two_sided_direction(rng):
    """Whenever a defect direction exists, small moves both ways stay
    inside the polytope and binding events keep their values."""
    space = OutcomeSpace(3)
    pures = enumerate_pure(space)
    exercised = 0
    for _ in range(120):
        k = rng.randint(2, 4)
        chosen = rng.sample(pures, k)
        weights = [F(rng.randint(1, 5), 20) for _ in range(k)]
        m = zero_measure(space)
        for wgt, p in zip(weights, chosen):
            m = m + wgt * p.measure
        if m.max_value() > 1 or not m.is_q_measure().is_q_measure:
            continue
        eta = extremal_defect(m)
        if eta is None:
            assert is_extremal(m)
            continue
        exercised += 1
        assert any(v != 0 for v in eta.coordinates())
        binding = [
            ev
            for ev in space.iter_events(nonempty_only=True)
            if m(ev) == 0 or m(ev) == 1
        ]
        for ev in binding:
            assert eta(ev) == 0
        slack = min(
            min(m(ev), 1 - m(ev))
            for ev in space.iter_events(nonempty_only=True)
            if ev not in binding
        )
        scale = max(abs(eta(ev)) for ev in space.iter_events(nonempty_only=True))
        eps = slack / (2 * scale)
        for sign in (1, -1):
            shifted = m + (sign * eps) * eta
            assert shifted.is_q_measure().is_q_measure
            assert shifted.max_value() <= 1
    assert exercised >= 20


def test_extremal_input_validation():
    space = OutcomeSpace(2)
    with pytest.raises(InputError, match="not a q-measure"):
        is_extremal(recompose(space, [1, 1], [-4]))
    with pytest.raises(InputError, match="bounded"):
        is_extremal(ordinary_measure(space, [2, 0]))


def test_decomposition_goldens():
    space = OutcomeSpace(2)
    m = SignedQMeasure(space, (F(1, 2), F(1, 2)), (F(2),))
    dec = pure_decomposition(m)
    assert dec.total_weight() == 2 == m.max_value()
    rebuilt = zero_measure(space)
    for wgt, p in dec.terms:
        assert wgt > 0
        assert is_pure(p.measure)
        rebuilt = rebuilt + wgt * p.measure
    assert rebuilt == m

    flat = SignedQMeasure(space, (F(1, 2), F(1, 2)), (F(1),))
    dec = pure_decomposition(flat)
    assert dec.total_weight() == 1
    rebuilt = zero_measure(space)
    for wgt, p in dec.terms:
        rebuilt = rebuilt + wgt * p.measure
    assert rebuilt == flat


def test_decomposition_of_pure_and_zero():
    space = OutcomeSpace(3)
    p = enumerate_pure(space)[5]
    dec = pure_decomposition(p.measure)
    assert dec.total_weight() == 1
    rebuilt = zero_measure(space)
    for wgt, q in dec.terms:
        rebuilt = rebuilt + wgt * q.measure
    assert rebuilt == p.measure
    assert pure_decomposition(zero_measure(space)).terms == ()


def test_random_decompositions_are_exact(rng):
    """Every q-measure decomposes at n <= 3; at n = 4 each trial either
    decomposes exactly or raises the verified infeasibility."""
    for n in (2, 3, 4):
        space = OutcomeSpace(n)
        done = 0
        refused = 0
        while done + refused < 30:
            singles = tuple(F(rng.randint(0, 4), 4) for _ in range(n))
            doubles = tuple(
                F(rng.randint(0, 8), 4) for _ in range(pair_count(n))
            )
            m = SignedQMeasure(space, singles, doubles)
            if not m.is_q_measure().is_q_measure or m.max_value() == 0:
                continue
            try:
                dec = pure_decomposition(m)
            except SolverDefectError:
                assert n >= 4
                refused += 1
                continue
            done += 1
            assert dec.total_weight() == m.max_value()
            rebuilt = zero_measure(space)
            for wgt, p in dec.terms:
                assert wgt > 0
                rebuilt = rebuilt + wgt * p.measure
            assert rebuilt == m
        if n <= 3:
            assert refused == 0


def test_decomposition_input_validation():
    space = OutcomeSpace(2)
    with pytest.raises(InputError, match="not a q-measure"):
        pure_decomposition(recompose(space, [1, 1], [-4]))


def test_resource_caps():
    with pytest.raises(ResourceCapError):
        enumerate_pure(OutcomeSpace(ENUMERATE_MAX_N + 1))
    with pytest.raises(ResourceCapError):
        pure_decomposition(zero_measure(OutcomeSpace(ENUMERATE_MAX_N + 1)))
    with pytest.raises(ResourceCapError):
        polytope_vertices(OutcomeSpace(VERTICES_MAX_N + 1))
    with pytest.raises(ResourceCapError):
        polytope_vertices(OutcomeSpace(VERTICES_SLOW_MAX_N + 1), allow_slow=True)
