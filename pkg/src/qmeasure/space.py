"""Finite outcome spaces, events as bitmasks, and exact rational helpers.

An outcome space holds n outcomes, numbered 1..n externally. An event is a
subset of outcomes stored as an int bitmask where outcome i occupies bit
i-1. The event grammar used by the CLI and all JSON formats is a
comma-separated list of outcome indices; the empty string denotes the
empty event.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import InputError

MAX_OUTCOMES = 24

Rational = Fraction


def parse_rational(text: str) -> Fraction:
    """Parse a rational literal like '3/4', '-2' or '0' into a Fraction."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise InputError(f"expected a rational literal, got {type(text).__name__}")
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"not a rational literal: {text!r}") from exc


def format_rational(value: Fraction) -> str:
    """Canonical text form: lowest terms, '/' only when the denominator is not 1."""
    return str(Fraction(value))


@dataclass(frozen=True, slots=True)
class Event:
    """A subset of outcomes of an n-outcome space, stored as a bitmask."""

    bits: int
    n: int

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_OUTCOMES:
            raise InputError(f"outcome count must be between 1 and {MAX_OUTCOMES}, got {self.n}")
        if not 0 <= self.bits < (1 << self.n):
            raise InputError(f"event bits {self.bits:#x} out of range for n={self.n}")

    def _check(self, other: "Event") -> None:
        if self.n != other.n:
            raise InputError(f"events from different spaces: n={self.n} vs n={other.n}")

    def __or__(self, other: "Event") -> "Event":
        self._check(other)
        return Event(self.bits | other.bits, self.n)

    def __and__(self, other: "Event") -> "Event":
        self._check(other)
        return Event(self.bits & other.bits, self.n)

    def __sub__(self, other: "Event") -> "Event":
        self._check(other)
        return Event(self.bits & ~other.bits, self.n)

    def __invert__(self) -> "Event":
        return Event(((1 << self.n) - 1) ^ self.bits, self.n)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter(self.outcomes())

    def __le__(self, other: "Event") -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def __lt__(self, other: "Event") -> bool:
        self._check(other)
        return self.bits != other.bits and self <= other

    @property
    def is_empty(self) -> bool:
        return self.bits == 0

    def contains(self, outcome: int) -> bool:
        """Membership of a 1-based outcome index."""
        if not 1 <= outcome <= self.n:
            raise InputError(f"outcome {outcome} exceeds n={self.n}")
        return bool(self.bits >> (outcome - 1) & 1)

    def disjoint(self, other: "Event") -> bool:
        self._check(other)
        return self.bits & other.bits == 0

    def outcomes(self) -> tuple[int, ...]:
        """Members as ascending 1-based indices."""
        return tuple(i + 1 for i in range(self.n) if self.bits >> i & 1)

    def format(self) -> str:
        """Canonical text form: ascending indices joined by commas, '' for empty."""
        return ",".join(str(i) for i in self.outcomes())

    def __str__(self) -> str:
        return self.format()


class OutcomeSpace:
    """The sample space {omega_1, ..., omega_n} with its full event algebra."""

    __slots__ = ("n",)

    def __init__(self, n: int) -> None:
        if not isinstance(n, int) or isinstance(n, bool):
            raise InputError(f"outcome count must be an int, got {type(n).__name__}")
        if not 1 <= n <= MAX_OUTCOMES:
            raise InputError(f"outcome count must be between 1 and {MAX_OUTCOMES}, got {n}")
        object.__setattr__(self, "n", n)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("OutcomeSpace is immutable")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, OutcomeSpace) and other.n == self.n

    def __hash__(self) -> int:
        return hash(("OutcomeSpace", self.n))

    def __repr__(self) -> str:
        return f"OutcomeSpace({self.n})"

    @property
    def n_events(self) -> int:
        return 1 << self.n

    def event(self, bits: int) -> Event:
        return Event(bits, self.n)

    @property
    def empty(self) -> Event:
        return Event(0, self.n)

    @property
    def full(self) -> Event:
        return Event((1 << self.n) - 1, self.n)

    def singleton(self, i: int) -> Event:
        if not 1 <= i <= self.n:
            raise InputError(f"outcome {i} exceeds n={self.n}")
        return Event(1 << (i - 1), self.n)

    def doubleton(self, i: int, j: int) -> Event:
        if i == j:
            raise InputError(f"doubleton needs two distinct outcomes, got {i} twice")
        return self.singleton(i) | self.singleton(j)

    def from_outcomes(self, outcomes: Iterable[int]) -> Event:
        bits = 0
        for i in outcomes:
            if not isinstance(i, int) or isinstance(i, bool):
                raise InputError(f"outcome index must be an int, got {i!r}")
            if i < 1:
                raise InputError(f"outcome {i} is not a valid index, outcomes count from 1")
            if i > self.n:
                raise InputError(f"outcome {i} exceeds n={self.n}")
            bits |= 1 << (i - 1)
        return Event(bits, self.n)

    def parse_event(self, text: str) -> Event:
        """Parse '1,3' style event text. '' is the empty event, duplicates collapse."""
        if not isinstance(text, str):
            raise InputError(f"event text must be a string, got {type(text).__name__}")
        stripped = text.strip()
        if not stripped:
            return self.empty
        indices = []
        for token in stripped.split(","):
            token = token.strip()
            try:
                indices.append(int(token))
            except ValueError as exc:
                raise InputError(f"not an outcome index: {token!r}") from exc
        return self.from_outcomes(indices)

    def iter_events(self, nonempty_only: bool = False) -> Iterator[Event]:
        start = 1 if nonempty_only else 0
        for bits in range(start, 1 << self.n):
            yield Event(bits, self.n)

    def events(self, nonempty_only: bool = False) -> list[Event]:
        """All events in ascending bitmask order."""
        return list(self.iter_events(nonempty_only))

    def outcome_function(self, values: Iterable) -> "OutcomeFunction":
        f = OutcomeFunction(tuple(parse_rational(v) for v in values))
        if f.n != self.n:
            raise InputError(f"expected {self.n} values, got {f.n}")
        return f


@dataclass(frozen=True, slots=True)
class OutcomeFunction:
    """A rational-valued function on the outcomes, given by its value tuple."""

    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.values) == 0:
            raise InputError("an outcome function needs at least one value")
        if not all(isinstance(v, Fraction) for v in self.values):
            object.__setattr__(
                self, "values", tuple(parse_rational(v) for v in self.values)
            )

    @property
    def n(self) -> int:
        return len(self.values)

    def at(self, outcome: int) -> Fraction:
        if not 1 <= outcome <= self.n:
            raise InputError(f"outcome {outcome} exceeds n={self.n}")
        return self.values[outcome - 1]

    def is_nonnegative(self) -> bool:
        return all(v >= 0 for v in self.values)

    def restrict(self, event: Event) -> "OutcomeFunction":
        """Pointwise product with the indicator of the event."""
        if event.n != self.n:
            raise InputError(f"event over n={event.n} against function over n={self.n}")
        return OutcomeFunction(
            tuple(v if event.bits >> i & 1 else Fraction(0) for i, v in enumerate(self.values))
        )

    def positive_part(self) -> "OutcomeFunction":
        return OutcomeFunction(tuple(v if v > 0 else Fraction(0) for v in self.values))

    def negative_part(self) -> "OutcomeFunction":
        return OutcomeFunction(tuple(-v if v < 0 else Fraction(0) for v in self.values))
