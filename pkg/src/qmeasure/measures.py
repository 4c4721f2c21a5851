"""Grade-2 additive signed measures on a finite outcome space.

A signed q-measure is determined by its values on singletons and
doubletons: the value on a k-element event A (k >= 2) is

    mu(A) = sum over pairs {i,j} in A of mu({w_i, w_j})
            - (k - 2) * sum over i in A of mu({w_i}).

These measures form a linear space with the dirac and doubleton-dirac
measures spanning it; the interference term I_ij = mu({w_i,w_j}) -
mu(w_i) - mu(w_j) measures the failure of ordinary additivity on a pair.
Every signed q-measure also extends uniquely to a symmetric signed
measure on the product space whose diagonal rectangles reproduce it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Union

from .errors import InputError
from .space import Event, OutcomeSpace, parse_rational

Scalar = Union[Fraction, int]


def pair_index(i: int, j: int, n: int) -> int:
    """Flat index of the unordered pair {i, j} (1-based, i != j) in upper
    triangular order: (1,2), (1,3), ..., (1,n), (2,3), ..., (n-1,n)."""
    if i == j:
        raise InputError(f"pair needs two distinct outcomes, got {i} twice")
    if i > j:
        i, j = j, i
    if i < 1 or j > n:
        raise InputError(f"pair ({i},{j}) out of range for n={n}")
    return (i - 1) * (2 * n - i) // 2 + (j - i - 1)


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


def iter_pairs(n: int):
    """Ascending (i, j) with i < j, matching the pair_index order."""
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            yield i, j


@dataclass(frozen=True)
class QMeasureFlag:
    """Result of the nonnegativity scan. witness is the lexicographically
    smallest event with a negative value, None when the measure passes."""

    is_q_measure: bool
    witness: Optional[Event]


@dataclass(frozen=True)
class SignedQMeasure:
    """A grade-2 additive signed measure, stored by its singleton and
    doubleton values."""

    space: OutcomeSpace
    singles: tuple[Fraction, ...]
    doubles: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        n = self.space.n
        if len(self.singles) != n:
            raise InputError(f"expected {n} singleton values, got {len(self.singles)}")
        if len(self.doubles) != pair_count(n):
            raise InputError(
                f"expected {pair_count(n)} doubleton values, got {len(self.doubles)}"
            )
        if not all(isinstance(v, Fraction) for v in self.singles):
            object.__setattr__(self, "singles", tuple(parse_rational(v) for v in self.singles))
        if not all(isinstance(v, Fraction) for v in self.doubles):
            object.__setattr__(self, "doubles", tuple(parse_rational(v) for v in self.doubles))

    def single(self, i: int) -> Fraction:
        if not 1 <= i <= self.space.n:
            raise InputError(f"outcome {i} exceeds n={self.space.n}")
        return self.singles[i - 1]

    def double(self, i: int, j: int) -> Fraction:
        return self.doubles[pair_index(i, j, self.space.n)]

    def interference(self, i: int, j: int) -> Fraction:
        """I_ij: the doubleton value minus the two singleton values."""
        return self.double(i, j) - self.single(i) - self.single(j)

    def __call__(self, event: Event) -> Fraction:
        if event.n != self.space.n:
            raise InputError(
                f"event over n={event.n} evaluated against a measure over n={self.space.n}"
            )
        outs = event.outcomes()
        k = len(outs)
        if k == 0:
            return Fraction(0)
        if k == 1:
            return self.singles[outs[0] - 1]
        total = Fraction(0)
        for a in range(k):
            for b in range(a + 1, k):
                total += self.doubles[pair_index(outs[a], outs[b], self.space.n)]
        return total + (2 - k) * sum(self.singles[o - 1] for o in outs)

    def coordinates(self) -> tuple[Fraction, ...]:
        """The n(n+1)/2 determining values: singletons then doubletons."""
        return self.singles + self.doubles

    def full_table(self) -> dict[Event, Fraction]:
        return {ev: self(ev) for ev in self.space.iter_events()}

    def is_q_measure(self) -> QMeasureFlag:
        """Exhaustive nonnegativity scan over all 2^n events, ascending."""
        for ev in self.space.iter_events():
            if self(ev) < 0:
                return QMeasureFlag(False, ev)
        return QMeasureFlag(True, None)

    def max_value(self) -> Fraction:
        return max(self(ev) for ev in self.space.iter_events())

    def basis_coefficients(self) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
        """Coefficients (c_i; d_ij) of the dirac / doubleton-dirac expansion:
        c_i is the singleton value, d_ij the interference term."""
        n = self.space.n
        d = tuple(self.interference(i, j) for i, j in iter_pairs(n))
        return self.singles, d

    def symmetric_measure(self) -> "SymmetricSignedMeasure":
        """The unique symmetric signed measure on the product space whose
        diagonal rectangles reproduce this measure."""
        n = self.space.n
        alpha = [[Fraction(0)] * n for _ in range(n)]
        for i in range(1, n + 1):
            alpha[i - 1][i - 1] = self.single(i)
        for i, j in iter_pairs(n):
            half = self.interference(i, j) / 2
            alpha[i - 1][j - 1] = half
            alpha[j - 1][i - 1] = half
        return SymmetricSignedMeasure(self.space, tuple(tuple(row) for row in alpha))

    def __add__(self, other: "SignedQMeasure") -> "SignedQMeasure":
        if not isinstance(other, SignedQMeasure):
            return NotImplemented
        if other.space != self.space:
            raise InputError("cannot add measures over different spaces")
        return SignedQMeasure(
            self.space,
            tuple(a + b for a, b in zip(self.singles, other.singles)),
            tuple(a + b for a, b in zip(self.doubles, other.doubles)),
        )

    def __sub__(self, other: "SignedQMeasure") -> "SignedQMeasure":
        return self + (-1) * other

    def __neg__(self) -> "SignedQMeasure":
        return (-1) * self

    def __rmul__(self, scalar: Scalar) -> "SignedQMeasure":
        c = Fraction(scalar)
        return SignedQMeasure(
            self.space,
            tuple(c * v for v in self.singles),
            tuple(c * v for v in self.doubles),
        )


@dataclass(frozen=True)
class SymmetricSignedMeasure:
    """A symmetric signed measure on the product of the space with itself,
    determined by its kernel on outcome pairs."""

    space: OutcomeSpace
    alpha: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        n = self.space.n
        if len(self.alpha) != n or any(len(row) != n for row in self.alpha):
            raise InputError(f"kernel must be {n}x{n}")
        for i in range(n):
            for j in range(i + 1, n):
                if self.alpha[i][j] != self.alpha[j][i]:
                    raise InputError(f"kernel is not symmetric at ({i + 1},{j + 1})")

    def at(self, i: int, j: int) -> Fraction:
        n = self.space.n
        if not (1 <= i <= n and 1 <= j <= n):
            raise InputError(f"kernel index ({i},{j}) out of range for n={n}")
        return self.alpha[i - 1][j - 1]

    def rectangle(self, a: Event, b: Event) -> Fraction:
        """Value on the rectangle A x B: the kernel summed over A x B."""
        if a.n != self.space.n or b.n != self.space.n:
            raise InputError("rectangle events must come from the measure's space")
        total = Fraction(0)
        for i in a.outcomes():
            row = self.alpha[i - 1]
            for j in b.outcomes():
                total += row[j - 1]
        return total


def dirac(space: OutcomeSpace, i: int) -> SignedQMeasure:
    """The point measure of outcome i: value 1 on events containing it."""
    n = space.n
    if not 1 <= i <= n:
        raise InputError(f"outcome {i} exceeds n={n}")
    singles = tuple(Fraction(1 if k == i else 0) for k in range(1, n + 1))
    doubles = tuple(Fraction(1 if i in (a, b) else 0) for a, b in iter_pairs(n))
    return SignedQMeasure(space, singles, doubles)


def doubleton_dirac(space: OutcomeSpace, i: int, j: int) -> SignedQMeasure:
    """The product of two dirac measures: value 1 exactly on events
    containing both outcomes. Grade-2 additive but not additive."""
    n = space.n
    if i == j:
        raise InputError(f"doubleton dirac needs two distinct outcomes, got {i} twice")
    for k in (i, j):
        if not 1 <= k <= n:
            raise InputError(f"outcome {k} exceeds n={n}")
    singles = (Fraction(0),) * n
    target = pair_index(i, j, n)
    doubles = tuple(Fraction(1 if idx == target else 0) for idx in range(pair_count(n)))
    return SignedQMeasure(space, singles, doubles)


def ordinary_measure(space: OutcomeSpace, weights: Iterable) -> SignedQMeasure:
    """The additive measure with the given outcome weights (no interference)."""
    w = tuple(parse_rational(v) for v in weights)
    if len(w) != space.n:
        raise InputError(f"expected {space.n} weights, got {len(w)}")
    doubles = tuple(w[i - 1] + w[j - 1] for i, j in iter_pairs(space.n))
    return SignedQMeasure(space, w, doubles)


def recompose(
    space: OutcomeSpace, point_coeffs: Iterable, pair_coeffs: Iterable
) -> SignedQMeasure:
    """Sum c_i * dirac_i + d_ij * doubleton_dirac_ij, the inverse of
    basis_coefficients."""
    c = tuple(parse_rational(v) for v in point_coeffs)
    d = tuple(parse_rational(v) for v in pair_coeffs)
    if len(c) != space.n or len(d) != pair_count(space.n):
        raise InputError("coefficient lengths do not match the space")
    total = SignedQMeasure(
        space, (Fraction(0),) * space.n, (Fraction(0),) * pair_count(space.n)
    )
    for i in range(1, space.n + 1):
        if c[i - 1] != 0:
            total = total + c[i - 1] * dirac(space, i)
    for idx, (i, j) in enumerate(iter_pairs(space.n)):
        if d[idx] != 0:
            total = total + d[idx] * doubleton_dirac(space, i, j)
    return total


def from_full_table(
    space: OutcomeSpace, table: Mapping[Event, Fraction]
) -> SignedQMeasure:
    """Build a measure from a complete event table, verifying grade-2
    additivity. The error for an inconsistent table names the first
    violating disjoint triple in ascending bitmask order."""
    n = space.n
    values: dict[int, Fraction] = {}
    for ev, raw in table.items():
        if not isinstance(ev, Event) or ev.n != n:
            raise InputError(f"table key {ev!r} is not an event of this space")
        if ev.bits in values:
            raise InputError(f"duplicate table entry for event {{{ev}}}")
        values[ev.bits] = parse_rational(raw)
    if 0 in values and values[0] != 0:
        raise InputError("the empty event must carry value 0")
    for bits in range(1, 1 << n):
        if bits not in values:
            raise InputError(f"table is missing event {{{space.event(bits)}}}")

    singles = tuple(values[1 << (i - 1)] for i in range(1, n + 1))
    doubles = tuple(
        values[(1 << (i - 1)) | (1 << (j - 1))] for i, j in iter_pairs(n)
    )
    measure = SignedQMeasure(space, singles, doubles)

    # Values on larger events are forced by the singleton and doubleton
    # entries; a full-table mismatch is exactly a grade-2 violation.
    mismatch = None
    for bits in range(1, 1 << n):
        if measure(space.event(bits)) != values[bits]:
            mismatch = bits
            break
    if mismatch is None:
        return measure

    full = (1 << n) - 1
    for a_bits in range(1, full + 1):
        for b_bits in range(a_bits + 1, full + 1):
            if b_bits & a_bits:
                continue
            rest_ab = full & ~(a_bits | b_bits)
            for c_bits in range(b_bits + 1, full + 1):
                if c_bits & ~rest_ab:
                    continue
                union = a_bits | b_bits | c_bits
                lhs = values[union]
                rhs = (
                    values[a_bits | b_bits]
                    + values[a_bits | c_bits]
                    + values[b_bits | c_bits]
                    - values[a_bits]
                    - values[b_bits]
                    - values[c_bits]
                )
                if lhs != rhs:
                    tr = (space.event(a_bits), space.event(b_bits), space.event(c_bits))
                    raise InputError(
                        "table is not grade-2 additive: violated by the disjoint "
                        f"triple ({{{tr[0]}}}, {{{tr[1]}}}, {{{tr[2]}}})"
                    )
    raise InputError(
        f"table disagrees with its own singleton/doubleton data at "
        f"{{{space.event(mismatch)}}}"
    )


@dataclass(frozen=True)
class ComplexAmplitude:
    """A complex amplitude on the outcomes with exact rational parts."""

    values: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self) -> None:
        fixed = tuple(
            (parse_rational(re), parse_rational(im)) for re, im in self.values
        )
        object.__setattr__(self, "values", fixed)

    @property
    def n(self) -> int:
        return len(self.values)

    def total(self, event: Event) -> tuple[Fraction, Fraction]:
        """The summed amplitude over an event, as (re, im)."""
        if event.n != self.n:
            raise InputError(f"event over n={event.n} against amplitude over n={self.n}")
        re = sum((self.values[o - 1][0] for o in event.outcomes()), Fraction(0))
        im = sum((self.values[o - 1][1] for o in event.outcomes()), Fraction(0))
        return re, im

    def squared_modulus(self, event: Event) -> Fraction:
        re, im = self.total(event)
        return re * re + im * im


def from_amplitude(space: OutcomeSpace, amplitude: ComplexAmplitude) -> SignedQMeasure:
    """The squared-modulus measure of a complex amplitude. Always a q-measure."""
    if amplitude.n != space.n:
        raise InputError(f"amplitude over n={amplitude.n} against space n={space.n}")
    singles = tuple(
        amplitude.squared_modulus(space.singleton(i)) for i in range(1, space.n + 1)
    )
    doubles = tuple(
        amplitude.squared_modulus(space.doubleton(i, j)) for i, j in iter_pairs(space.n)
    )
    return SignedQMeasure(space, singles, doubles)
