"""Coevent algebra over GF(2) and the structural classification."""

import random
from itertools import combinations

import pytest

from qmeasure.coevents import (
    FULL_LOGIC_MAX_N,
    Coevent,
    classify,
    constant_true,
    enumerate_logic,
    evaluation_map,
    from_monomials,
    logic_size,
    parse_coevent,
    subset_xor_transform,
    zero_coevent,
)
from qmeasure.errors import InputError, ResourceCapError
from qmeasure.space import OutcomeSpace


def test_subset_xor_transform_is_self_inverse(rng):
    for n in (1, 2, 3, 4):
        size = 1 << (1 << n)
        for _ in range(40):
            word = rng.randrange(size)
            assert subset_xor_transform(subset_xor_transform(word, n), n) == word


def test_representations_agree(rng):
    """Truth-table and polynomial constructions describe the same object."""
    space = OutcomeSpace(3)
    for truth in range(0, 1 << 8, 2):
        phi = Coevent(space, truth)
        rebuilt = Coevent(space, None, phi.monomials)
        assert rebuilt == phi
        for bits in range(8):
            assert rebuilt.truth_bit(bits) == truth >> bits & 1


def test_polynomial_evaluation_matches_truth(rng):
    space = OutcomeSpace(4)
    for _ in range(30):
        monos = frozenset(
            rng.randint(1, space.n_events - 1) for _ in range(rng.randint(0, 5))
        )
        phi = Coevent(space, None, monos)
        for bits in range(space.n_events):
            by_poly = 0
            for mono in monos:
                if mono & ~bits == 0:
                    by_poly ^= 1
            assert phi(bits) == by_poly


def test_evaluation_maps_indicate_membership():
    space = OutcomeSpace(4)
    for i in range(1, 5):
        phi = evaluation_map(space, i)
        assert phi.monomials == frozenset((1 << (i - 1),))
        for ev in space.iter_events():
            assert phi(ev) == (1 if i in ev.outcomes() else 0)


def test_homomorphisms_are_exactly_the_evaluation_maps():
    """Brute force over all 128 coevents at n = 3."""
    space = OutcomeSpace(3)
    homs = [
        phi for phi in enumerate_logic(space, "full") if classify(phi).homomorphism
    ]
    assert len(homs) == 3
    assert set(homs) == {evaluation_map(space, i) for i in (1, 2, 3)}


def test_xor_and_product_are_pointwise(rng):
    space = OutcomeSpace(3)
    for _ in range(25):
        a = Coevent(space, rng.randrange(0, 1 << 8) & ~1)
        b = Coevent(space, rng.randrange(0, 1 << 8) & ~1)
        for bits in range(8):
            assert (a ^ b)(bits) == a(bits) ^ b(bits)
            assert (a * b)(bits) == a(bits) & b(bits)


def test_xor_is_the_group_operation():
    space = OutcomeSpace(3)
    phi = parse_coevent(space, "1;2,3")
    assert (phi ^ phi).is_zero
    assert (phi ^ zero_coevent(space)) == phi


def test_classification_flags_against_semantic_definitions():
    """degree <= 1 is exactly respecting disjoint unions; one monomial at
    most is exactly respecting intersections. Checked on all of n = 3."""
    space = OutcomeSpace(3)
    events = list(space.iter_events())
    for phi in enumerate_logic(space, "full"):
        flags = classify(phi)
        respects_unions = all(
            phi(a | b) == phi(a) ^ phi(b)
            for a, b in combinations(events, 2)
            if a.disjoint(b)
        )
        respects_meets = all(
            phi(a & b) == phi(a) & phi(b) for a, b in combinations(events, 2)
        )
        assert flags.additive == respects_unions
        assert flags.multiplicative == respects_meets
        assert flags.unital == (phi(space.full) == 1)
        assert flags.quadratic == (flags.degree <= 2)
        assert flags.homomorphism == (
            flags.unital and flags.additive and flags.multiplicative
        )
        assert flags.zero == phi.is_zero


def test_zero_and_constant_true_conventions():
    space = OutcomeSpace(3)
    zero = zero_coevent(space)
    flags = classify(zero)
    assert flags.zero and flags.additive and flags.multiplicative and flags.quadratic
    assert not flags.unital and not flags.homomorphism
    assert flags.degree == 0
    top = constant_true(space)
    assert all(top(ev) == 1 for ev in space.iter_events() if not ev.is_empty)
    assert top(space.empty) == 0


def test_logic_sizes_and_membership():
    for n in (2, 3):
        space = OutcomeSpace(n)
        full = enumerate_logic(space, "full")
        assert len(full) == logic_size(space, "full") == 1 << (space.n_events - 1)
        assert len(set(full)) == len(full)
        quad = enumerate_logic(space, "quadratic")
        assert len(quad) == logic_size(space, "quadratic") == 1 << (n * (n + 1) // 2)
        assert all(phi.degree <= 2 for phi in quad)
        assert set(quad) == {phi for phi in full if phi.degree <= 2}
        add = enumerate_logic(space, "additive")
        assert len(add) == logic_size(space, "additive") == 1 << n
        assert set(add) == {phi for phi in full if classify(phi).additive}
        mult = enumerate_logic(space, "multiplicative")
        assert len(mult) == logic_size(space, "multiplicative") == 1 << n
        assert set(mult) == {phi for phi in full if classify(phi).multiplicative}


def test_format_parse_roundtrip(rng):
    space = OutcomeSpace(4)
    assert zero_coevent(space).format() == "0"
    assert parse_coevent(space, "0") == zero_coevent(space)
    for _ in range(30):
        monos = frozenset(
            rng.randint(1, space.n_events - 1) for _ in range(rng.randint(1, 4))
        )
        phi = Coevent(space, None, monos)
        assert parse_coevent(space, phi.format()) == phi
    assert parse_coevent(space, "1;2,3").monomials == frozenset((0b0001, 0b0110))


def test_from_monomials_input_forms():
    space = OutcomeSpace(3)
    a = from_monomials(space, [0b011, [3]])
    b = from_monomials(space, [[1, 2], 0b100])
    assert a == b
    with pytest.raises(InputError, match="duplicate"):
        from_monomials(space, [[1, 2], 0b011])


def test_invalid_constructions_rejected():
    space = OutcomeSpace(2)
    with pytest.raises(InputError):
        Coevent(space, 1)  # would map the empty event to 1
    with pytest.raises(InputError):
        Coevent(space, 1 << 4)
    with pytest.raises(InputError):
        Coevent(space)
    with pytest.raises(InputError):
        from_monomials(space, [0])


def test_cross_space_combination_rejected():
    a = zero_coevent(OutcomeSpace(2))
    b = zero_coevent(OutcomeSpace(3))
    with pytest.raises(InputError):
        a ^ b


def test_enumeration_caps():
    with pytest.raises(ResourceCapError):
        enumerate_logic(OutcomeSpace(FULL_LOGIC_MAX_N + 1), "full")
    with pytest.raises(ResourceCapError):
        enumerate_logic(OutcomeSpace(7), "quadratic")
    with pytest.raises(InputError):
        enumerate_logic(OutcomeSpace(3), "prime")
