"""Coevents: truth functions from the event algebra to Z_2.

A coevent phi assigns 0 or 1 to every event with phi(empty) = 0. The
truth table is packed into a single int whose bit at position A (an
event bitmask) is phi(A). Every coevent is also a polynomial over GF(2)
in the outcome evaluation maps w_i*; the two representations are linked
by the self-inverse subset-XOR transform, and a coevent built from
either keeps the other lazily.

Classification flags: unital (phi(Omega)=1), additive (degree <= 1,
equivalently phi respects disjoint unions), multiplicative (at most one
monomial, equivalently phi respects intersections), quadratic (degree
<= 2). The zero coevent is additive, multiplicative and quadratic but
not unital; the homomorphisms are exactly the evaluation maps.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Literal, Optional, Union

from .errors import InputError, ResourceCapError
from .space import Event, OutcomeSpace

CLASSIFY_MAX_N = 12
FULL_LOGIC_MAX_N = 4
QUADRATIC_LOGIC_MAX_N = 6
LINEAR_LOGIC_MAX_N = 20

LogicKind = Literal["full", "additive", "multiplicative", "quadratic"]


@lru_cache(maxsize=None)
def _low_bit_positions_mask(n: int, i: int) -> int:
    """Mask over the 2^n table positions whose position index has bit i clear."""
    block = (1 << (1 << i)) - 1
    period = 1 << (i + 1)
    out = 0
    for start in range(0, 1 << n, period):
        out |= block << start
    return out


def subset_xor_transform(word: int, n: int) -> int:
    """Self-inverse GF(2) transform between a truth table and its polynomial
    coefficient table, both packed as 2^n-bit ints indexed by event mask."""
    for i in range(n):
        clear = _low_bit_positions_mask(n, i)
        word ^= (word & clear) << (1 << i)
    return word


def _monomial_mask(space: OutcomeSpace, monomial: Union[int, Iterable[int]]) -> int:
    if isinstance(monomial, bool):
        raise InputError(f"monomial must be an event mask or outcome list, got {monomial!r}")
    if isinstance(monomial, int):
        bits = monomial
        if not 0 <= bits < (1 << space.n):
            raise InputError(f"monomial mask {bits:#x} out of range for n={space.n}")
    elif isinstance(monomial, Event):
        if monomial.n != space.n:
            raise InputError("monomial event from a different space")
        bits = monomial.bits
    else:
        bits = space.from_outcomes(monomial).bits
    if bits == 0:
        raise InputError("the empty monomial is not allowed, it would force a value at the empty event")
    return bits


@dataclass(frozen=True)
class Coevent:
    """A truth function on the event algebra, with lazy dual representation."""

    space: OutcomeSpace
    truth: Optional[int] = None
    _monomials: Optional[frozenset[int]] = field(default=None, repr=False)

    def __post_init__(self) -> None:
        if self.truth is None and self._monomials is None:
            raise InputError("a coevent needs a truth table or a monomial set")
        if self.truth is not None:
            if not 0 <= self.truth < (1 << self.space.n_events):
                raise InputError("truth table out of range for this space")
            if self.truth & 1:
                raise InputError("a coevent must map the empty event to 0")
        if self._monomials is not None:
            for bits in self._monomials:
                if not isinstance(bits, int) or not 0 < bits < self.space.n_events:
                    raise InputError(f"invalid monomial mask {bits!r} for n={self.space.n}")

    def _truth_table(self) -> int:
        t = self.truth
        if t is None:
            word = 0
            for bits in self._monomials:  # type: ignore[union-attr]
                word |= 1 << bits
            t = subset_xor_transform(word, self.space.n)
            object.__setattr__(self, "truth", t)
        return t

    @property
    def monomials(self) -> frozenset[int]:
        """Monomial masks of the GF(2) polynomial form."""
        mono = self._monomials
        if mono is None:
            word = subset_xor_transform(self._truth_table(), self.space.n)
            mono = frozenset(
                bits for bits in range(1, self.space.n_events) if word >> bits & 1
            )
            object.__setattr__(self, "_monomials", mono)
        return mono

    @property
    def degree(self) -> int:
        """Largest monomial size; 0 for the zero coevent."""
        return max((bits.bit_count() for bits in self.monomials), default=0)

    def truth_bit(self, bits: int) -> int:
        if self.truth is not None:
            return self.truth >> bits & 1
        # evaluate straight off the polynomial, cheap for sparse coevents
        acc = 0
        for mono in self._monomials:  # type: ignore[union-attr]
            if mono & ~bits == 0:
                acc ^= 1
        return acc

    def __call__(self, event: Union[Event, int]) -> int:
        if isinstance(event, Event):
            if event.n != self.space.n:
                raise InputError(
                    f"event over n={event.n} against a coevent over n={self.space.n}"
                )
            bits = event.bits
        else:
            bits = event
            if not 0 <= bits < self.space.n_events:
                raise InputError(f"event mask {bits:#x} out of range for n={self.space.n}")
        return self.truth_bit(bits)

    @property
    def is_zero(self) -> bool:
        if self.truth is not None:
            return self.truth == 0
        return not self._monomials

    def __xor__(self, other: "Coevent") -> "Coevent":
        """Pointwise GF(2) sum."""
        if not isinstance(other, Coevent):
            return NotImplemented
        if other.space != self.space:
            raise InputError("cannot combine coevents over different spaces")
        return Coevent(self.space, self._truth_table() ^ other._truth_table())

    def __mul__(self, other: "Coevent") -> "Coevent":
        """Pointwise GF(2) product."""
        if not isinstance(other, Coevent):
            return NotImplemented
        if other.space != self.space:
            raise InputError("cannot combine coevents over different spaces")
        return Coevent(self.space, self._truth_table() & other._truth_table())

    def sorted_monomials(self) -> tuple[tuple[int, ...], ...]:
        """Monomials as ascending outcome-index tuples, sorted by bitmask."""
        return tuple(
            Event(bits, self.space.n).outcomes() for bits in sorted(self.monomials)
        )

    def format(self) -> str:
        """Text form: monomials joined by ';', outcomes by ','; '0' when zero.
        Example: '1;2,3' is w1* + w2*w3*."""
        if self.is_zero:
            return "0"
        return ";".join(
            ",".join(str(i) for i in mono) for mono in self.sorted_monomials()
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Coevent):
            return NotImplemented
        if self.space != other.space:
            return False
        if self._monomials is not None and other._monomials is not None:
            return self._monomials == other._monomials
        return self._truth_table() == other._truth_table()

    def __hash__(self) -> int:
        return hash((self.space, self._truth_table()))


def zero_coevent(space: OutcomeSpace) -> Coevent:
    return Coevent(space, 0)


def constant_true(space: OutcomeSpace) -> Coevent:
    """The coevent that is 1 on every nonempty event."""
    return Coevent(space, ((1 << space.n_events) - 1) & ~1)


def evaluation_map(space: OutcomeSpace, i: int) -> Coevent:
    """w_i*: truth on exactly the events containing outcome i."""
    if not 1 <= i <= space.n:
        raise InputError(f"outcome {i} exceeds n={space.n}")
    full = (1 << space.n_events) - 1
    truth = full & ~_low_bit_positions_mask(space.n, i - 1)
    return Coevent(space, truth)


def parse_coevent(space: OutcomeSpace, text: str) -> Coevent:
    """Parse the text form written by Coevent.format."""
    body = text.strip()
    if body in ("", "0"):
        return zero_coevent(space)
    monomials = []
    for part in body.split(";"):
        try:
            outcomes = [int(tok) for tok in part.split(",") if tok.strip()]
        except ValueError:
            raise InputError(f"cannot parse monomial {part!r}") from None
        monomials.append(outcomes)
    return from_monomials(space, monomials)


def from_monomials(
    space: OutcomeSpace, monomials: Iterable[Union[int, Iterable[int]]]
) -> Coevent:
    """Build a coevent from its GF(2) polynomial. Monomials are events given
    as masks, Events, or outcome-index iterables; duplicates are rejected
    since the polynomial is a set."""
    seen: set[int] = set()
    for mono in monomials:
        bits = _monomial_mask(space, mono)
        if bits in seen:
            raise InputError(
                f"duplicate monomial {{{Event(bits, space.n)}}} in polynomial"
            )
        seen.add(bits)
    return Coevent(space, None, frozenset(seen))


@dataclass(frozen=True)
class CoeventClass:
    """Structural flags of a coevent."""

    zero: bool
    unital: bool
    additive: bool
    multiplicative: bool
    quadratic: bool
    homomorphism: bool
    degree: int


def classify(phi: Coevent) -> CoeventClass:
    """Classify via the polynomial form (degree bounds and monomial count)."""
    n = phi.space.n
    if n > CLASSIFY_MAX_N:
        raise ResourceCapError(f"classification is capped at n <= {CLASSIFY_MAX_N}, got {n}")
    mono = phi.monomials
    degree = max((b.bit_count() for b in mono), default=0)
    zero = len(mono) == 0
    unital = phi.truth_bit((1 << n) - 1) == 1
    additive = degree <= 1
    multiplicative = len(mono) <= 1
    quadratic = degree <= 2
    homomorphism = unital and additive and multiplicative
    return CoeventClass(zero, unital, additive, multiplicative, quadratic, homomorphism, degree)


def enumerate_logic(space: OutcomeSpace, kind: LogicKind) -> list[Coevent]:
    """All coevents of the requested kind, ordered by ascending polynomial
    (monomial bitmasks read as a combined binary index)."""
    n = space.n
    if kind == "full":
        if n > FULL_LOGIC_MAX_N:
            raise ResourceCapError(
                f"full logic enumeration is capped at n <= {FULL_LOGIC_MAX_N}, got {n}"
            )
        allowed = list(range(1, 1 << n))
    elif kind == "quadratic":
        if n > QUADRATIC_LOGIC_MAX_N:
            raise ResourceCapError(
                f"quadratic logic enumeration is capped at n <= {QUADRATIC_LOGIC_MAX_N}, got {n}"
            )
        allowed = [b for b in range(1, 1 << n) if b.bit_count() <= 2]
    elif kind == "additive":
        if n > LINEAR_LOGIC_MAX_N:
            raise ResourceCapError(
                f"additive logic enumeration is capped at n <= {LINEAR_LOGIC_MAX_N}, got {n}"
            )
        allowed = [1 << i for i in range(n)]
    elif kind == "multiplicative":
        if n > LINEAR_LOGIC_MAX_N:
            raise ResourceCapError(
                f"multiplicative logic enumeration is capped at n <= {LINEAR_LOGIC_MAX_N}, got {n}"
            )
        # single-monomial coevents, plus the zero coevent for the empty choice
        out = [zero_coevent(space)]
        for bits in range(1, 1 << n):
            out.append(Coevent(space, None, frozenset((bits,))))
        return out
    else:
        raise InputError(f"unknown logic kind {kind!r}")

    out = []
    for selector in range(1 << len(allowed)):
        chosen = frozenset(
            allowed[t] for t in range(len(allowed)) if selector >> t & 1
        )
        out.append(Coevent(space, None, chosen))
    return out


def logic_size(space: OutcomeSpace, kind: LogicKind) -> int:
    """Size of the logic without enumerating it."""
    n = space.n
    if kind == "full":
        return 1 << ((1 << n) - 1)
    if kind == "quadratic":
        return 1 << (n * (n + 1) // 2)
    if kind in ("additive", "multiplicative"):
        return 1 << n
    raise InputError(f"unknown logic kind {kind!r}")
