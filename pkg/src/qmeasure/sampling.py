"""Seeded random generators for measures and outcome functions.

Every generator takes an explicit random.Random so runs reproduce exactly
from a seed. Grids are small rational lattices; nothing here draws floats.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional, Sequence

from .measures import (
    ComplexAmplitude,
    SignedQMeasure,
    from_amplitude,
    iter_pairs,
    pair_count,
)
from .space import OutcomeFunction, OutcomeSpace

QUARTERS = tuple(Fraction(k, 4) for k in range(5))
SIGNED_HALVES = tuple(Fraction(k, 2) for k in range(-2, 3))
_REJECTION_TRIES = 200


def random_nonneg_combination(
    space: OutcomeSpace,
    rng: random.Random,
    grid: Sequence[Fraction] = QUARTERS,
) -> SignedQMeasure:
    """Nonnegative combination of point masses and pair masses.

    Coefficient c_i on the point mass at outcome i and d_ij on the pair mass
    of {i, j} gives singleton values c_i and doubleton values c_i + c_j +
    d_ij. Always a q-measure; the interferences d_ij are all nonnegative.
    """
    n = space.n
    grid = tuple(grid)
    c = [rng.choice(grid) for _ in range(n)]
    d = [rng.choice(grid) for _ in range(pair_count(n))]
    doubles = tuple(
        c[i - 1] + c[j - 1] + d[k] for k, (i, j) in enumerate(iter_pairs(n))
    )
    return SignedQMeasure(space, tuple(c), doubles)


def random_amplitude_measure(
    space: OutcomeSpace,
    rng: random.Random,
    grid: Sequence[Fraction] = SIGNED_HALVES,
) -> SignedQMeasure:
    """Squared modulus of a random rational complex amplitude. Always a
    q-measure; interferences may be negative."""
    grid = tuple(grid)
    values = tuple((rng.choice(grid), rng.choice(grid)) for _ in range(space.n))
    return from_amplitude(space, ComplexAmplitude(values))


def random_signed_q_measure(
    space: OutcomeSpace,
    rng: random.Random,
    grid: Sequence[Fraction] = SIGNED_HALVES,
) -> SignedQMeasure:
    """Unconstrained grade-2 measure with grid-valued coordinates."""
    grid = tuple(grid)
    singles = tuple(rng.choice(grid) for _ in range(space.n))
    doubles = tuple(rng.choice(grid) for _ in range(pair_count(space.n)))
    return SignedQMeasure(space, singles, doubles)


def random_q_measure(space: OutcomeSpace, rng: random.Random) -> SignedQMeasure:
    """Random q-measure from a three-way mixture: nonnegative combinations,
    amplitude squares, and rejection-sampled grid measures. Rejection keeps
    negative-interference examples in the stream; it falls back to a
    nonnegative combination when no grid draw passes."""
    kind = rng.randrange(3)
    if kind == 0:
        return random_nonneg_combination(space, rng)
    if kind == 1:
        return random_amplitude_measure(space, rng)
    found = _rejection_grid_measure(space, rng)
    if found is not None:
        return found
    return random_nonneg_combination(space, rng)


def _rejection_grid_measure(
    space: OutcomeSpace, rng: random.Random
) -> Optional[SignedQMeasure]:
    for _ in range(_REJECTION_TRIES):
        m = random_signed_q_measure(space, rng)
        if m.is_q_measure().is_q_measure:
            return m
    return None


def random_outcome_function(
    space: OutcomeSpace,
    rng: random.Random,
    values: Sequence[Fraction] = tuple(Fraction(k, 4) for k in range(9)),
) -> OutcomeFunction:
    """Outcome function with grid-valued entries (nonnegative by default)."""
    values = tuple(values)
    return space.outcome_function([rng.choice(values) for _ in range(space.n)])
