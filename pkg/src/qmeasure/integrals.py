"""Quantum integrals of rational outcome functions against signed q-measures.

Two independent routes are provided. The layer-cake route sorts the
distinct values of a nonnegative function into a canonical simple form
and telescopes the measure of the upper level sets; the min-form route
sums min(f(w_i), f(w_j)) against the symmetric kernel of the measure.
They agree on every signed q-measure, and the test suite checks that
equivalence rather than assuming it. Neither route calls the other.

The q-integral is homogeneous and additive in the measure but not
linear in the integrand.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError
from .measures import SignedQMeasure
from .space import Event, OutcomeFunction


@dataclass(frozen=True)
class CanonicalSimpleForm:
    """f = sum of level_k over cell_k with strictly ascending distinct levels;
    the cells partition the whole space (a zero level appears when f
    vanishes somewhere)."""

    levels: tuple[Fraction, ...]
    cells: tuple[Event, ...]


def canonical_form(f: OutcomeFunction) -> CanonicalSimpleForm:
    """Canonical simple form of a nonnegative outcome function."""
    if not f.is_nonnegative():
        bad = next(i for i, v in enumerate(f.values, start=1) if v < 0)
        raise InputError(
            f"canonical form needs a nonnegative function, value at outcome {bad} "
            f"is {f.values[bad - 1]}; split into positive and negative parts first"
        )
    n = f.n
    levels = sorted(set(f.values))
    cells = []
    for level in levels:
        bits = 0
        for i, v in enumerate(f.values):
            if v == level:
                bits |= 1 << i
        cells.append(Event(bits, n))
    return CanonicalSimpleForm(tuple(levels), tuple(cells))


def q_integral(f: OutcomeFunction, m: SignedQMeasure) -> Fraction:
    """Layer-cake integral of a nonnegative function against the measure."""
    if f.n != m.space.n:
        raise InputError(f"function over n={f.n} against measure over n={m.space.n}")
    form = canonical_form(f)
    k = len(form.levels)
    # suffix_bits[i] = union of cells i..k-1 (the upper level set of level i)
    suffix_bits = [0] * (k + 1)
    for i in range(k - 1, -1, -1):
        suffix_bits[i] = suffix_bits[i + 1] | form.cells[i].bits
    total = Fraction(0)
    for i in range(k):
        upper = m(Event(suffix_bits[i], f.n))
        above = m(Event(suffix_bits[i + 1], f.n))
        total += form.levels[i] * (upper - above)
    return total


def q_integral_min_form(f: OutcomeFunction, m: SignedQMeasure) -> Fraction:
    """Integral via the symmetric kernel: sum of min(f_i, f_j) alpha(i, j)
    over all ordered outcome pairs."""
    if f.n != m.space.n:
        raise InputError(f"function over n={f.n} against measure over n={m.space.n}")
    if not f.is_nonnegative():
        raise InputError("min-form integral needs a nonnegative function")
    n = f.n
    total = Fraction(0)
    for i in range(1, n + 1):
        total += m.single(i) * f.at(i)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            total += m.interference(i, j) * min(f.at(i), f.at(j))
    return total


def q_integral_signed(f: OutcomeFunction, m: SignedQMeasure) -> Fraction:
    """Integral of an arbitrary rational function: integral of the positive
    part minus integral of the negative part, each by the layer cake."""
    if f.is_nonnegative():
        return q_integral(f, m)
    return q_integral(f.positive_part(), m) - q_integral(f.negative_part(), m)


def q_integral_over_event(f: OutcomeFunction, m: SignedQMeasure, event: Event) -> Fraction:
    """Integral of f restricted to an event (f times the indicator)."""
    if event.n != f.n:
        raise InputError(f"event over n={event.n} against function over n={f.n}")
    return q_integral_signed(f.restrict(event), m)
