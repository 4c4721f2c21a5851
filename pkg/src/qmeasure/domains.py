"""Subalgebras of the event algebra and classicality of coevents on them.

The center of a coevent phi is the family of events A that split every
event B cleanly: phi(B) = phi(B & A) xor phi(B & ~A). The center is
always a subalgebra and phi is additive on it. A classical subdomain is
a subalgebra on which phi is unital, additive and multiplicative (a
homomorphism); a classical domain is an inclusion-maximal one. Domains
are found by exhausting all subalgebras, which are in bijection with
pairs (top event, partition of the top into atoms).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .coevents import Coevent
from .errors import InputError, ResourceCapError
from .space import Event, OutcomeSpace

CENTER_MAX_N = 12
DOMAIN_MAX_N = 6


@dataclass(frozen=True)
class SubalgebraCheck:
    """Closure report: ok, or the first violation in lexicographic scan order.

    missing_empty flags an absent empty event. witness is (a, b, operation)
    where operation names the set operation whose result left the family.
    """

    ok: bool
    missing_empty: bool = False
    witness: Optional[tuple[Event, Event, str]] = None


def check_subalgebra(space: OutcomeSpace, members: Iterable[Event]) -> SubalgebraCheck:
    """Check closure under union, intersection and difference, with the
    empty event present. Scans ordered pairs ascending by bitmask."""
    masks = set()
    for ev in members:
        if not isinstance(ev, Event) or ev.n != space.n:
            raise InputError(f"{ev!r} is not an event of this space")
        masks.add(ev.bits)
    if 0 not in masks:
        return SubalgebraCheck(False, missing_empty=True)
    ordered = sorted(masks)
    for a in ordered:
        for b in ordered:
            for op_name, result in (
                ("union", a | b),
                ("intersection", a & b),
                ("difference", a & ~b),
            ):
                if result not in masks:
                    return SubalgebraCheck(
                        False,
                        witness=(space.event(a), space.event(b), op_name),
                    )
    return SubalgebraCheck(True)


@dataclass(frozen=True)
class Subalgebra:
    """A finite subalgebra of the event algebra, listed by its members.

    members are ascending by bitmask; top is their union and atoms are the
    minimal nonempty members, which always partition the top.
    """

    space: OutcomeSpace
    members: tuple[Event, ...]
    top: Event
    atoms: tuple[Event, ...]

    @classmethod
    def from_members(cls, space: OutcomeSpace, members: Iterable[Event]) -> "Subalgebra":
        check = check_subalgebra(space, members)
        if not check.ok:
            if check.missing_empty:
                raise InputError("a subalgebra must contain the empty event")
            a, b, op = check.witness  # type: ignore[misc]
            raise InputError(
                f"not a subalgebra: {op} of {{{a}}} and {{{b}}} is missing"
            )
        masks = sorted({ev.bits for ev in members})
        top_bits = 0
        for m in masks:
            top_bits |= m
        nonzero = [m for m in masks if m]
        atoms = [
            m
            for m in nonzero
            if not any(other != m and other & ~m == 0 for other in nonzero)
        ]
        return cls(
            space,
            tuple(space.event(m) for m in masks),
            space.event(top_bits),
            tuple(space.event(m) for m in sorted(atoms)),
        )

    def __contains__(self, event: Event) -> bool:
        return any(ev.bits == event.bits for ev in self.members)

    def member_masks(self) -> tuple[int, ...]:
        return tuple(ev.bits for ev in self.members)

    def __len__(self) -> int:
        return len(self.members)

    def contains_all(self, other: "Subalgebra") -> bool:
        mine = set(self.member_masks())
        return all(m in mine for m in other.member_masks())


def center(phi: Coevent) -> Subalgebra:
    """The center of a coevent: every event that splits all events cleanly."""
    space = phi.space
    n = space.n
    if n > CENTER_MAX_N:
        raise ResourceCapError(f"center computation is capped at n <= {CENTER_MAX_N}, got {n}")
    size = 1 << n
    truth = phi._truth_table()
    full = size - 1
    members = []
    for a in range(size):
        comp = full ^ a
        ok = True
        for b in range(size):
            if (truth >> b ^ truth >> (b & a) ^ truth >> (b & comp)) & 1:
                ok = False
                break
        if ok:
            members.append(a)
    return Subalgebra.from_members(space, [space.event(m) for m in members])


def restriction_is_additive(phi: Coevent, sub: Subalgebra) -> bool:
    """Whether phi respects disjoint unions inside the subalgebra."""
    masks = sub.member_masks()
    for a in masks:
        for b in masks:
            if a & b == 0 and (phi(a | b) ^ phi(a) ^ phi(b)):
                return False
    return True


@dataclass(frozen=True)
class ClassicalityReport:
    """Verdict on one subalgebra: classical subdomain or first failure.

    failing_condition is one of 'unital', 'additive', 'multiplicative';
    failing_members carries the events that witnessed the failure.
    """

    subalgebra: Subalgebra
    is_subdomain: bool
    failing_condition: Optional[str] = None
    failing_members: Optional[tuple[Event, ...]] = None


def is_classical_subdomain(phi: Coevent, sub: Subalgebra) -> ClassicalityReport:
    """Check that phi restricted to the subalgebra is a homomorphism onto
    Z_2, with the subalgebra's own top playing the unit."""
    if sub.space != phi.space:
        raise InputError("subalgebra and coevent live on different spaces")
    if phi(sub.top) != 1:
        return ClassicalityReport(sub, False, "unital", (sub.top,))
    masks = sub.member_masks()
    space = phi.space
    for a in masks:
        for b in masks:
            if a & b == 0 and (phi(a | b) ^ phi(a) ^ phi(b)):
                return ClassicalityReport(
                    sub, False, "additive", (space.event(a), space.event(b))
                )
    for a in masks:
        for b in masks:
            if phi(a & b) != (phi(a) & phi(b)):
                return ClassicalityReport(
                    sub, False, "multiplicative", (space.event(a), space.event(b))
                )
    return ClassicalityReport(sub, True)


def center_subdomains(phi: Coevent) -> list[Subalgebra]:
    """The classical subdomains carved out of the center.

    On its center phi is additive, hence a GF(2) sum of atom indicators
    over the atoms where phi is 1. For each such atom A_i the subalgebra
    generated by A_i together with all phi-null atoms is a classical
    subdomain. Returns one subalgebra per contributing atom; empty when
    phi vanishes on the whole center.
    """
    if phi.is_zero:
        raise InputError("the zero coevent has no classical subdomains")
    z = center(phi)
    hot = [a for a in z.atoms if phi(a) == 1]
    cold = [a for a in z.atoms if phi(a) == 0]
    out = []
    for atom in hot:
        generators = [atom] + cold
        members = []
        for selector in range(1 << len(generators)):
            bits = 0
            for t in range(len(generators)):
                if selector >> t & 1:
                    bits |= generators[t].bits
            members.append(phi.space.event(bits))
        out.append(Subalgebra.from_members(phi.space, members))
    return out


def _set_partitions(items: Sequence[int]) -> Iterator[list[list[int]]]:
    """All partitions of the item list into nonempty blocks, deterministic
    order: each item joins an existing block or opens a new one."""
    k = len(items)
    if k == 0:
        return
    blocks: list[list[int]] = []

    def descend(idx: int) -> Iterator[list[list[int]]]:
        if idx == k:
            yield [list(b) for b in blocks]
            return
        for b in blocks:
            b.append(items[idx])
            yield from descend(idx + 1)
            b.pop()
        blocks.append([items[idx]])
        yield from descend(idx + 1)
        blocks.pop()

    yield from descend(0)


def enumerate_subalgebras(space: OutcomeSpace) -> list[Subalgebra]:
    """Every subalgebra with a nonempty top, via (top, atom partition)."""
    n = space.n
    if n > DOMAIN_MAX_N + 2:
        raise ResourceCapError(
            f"subalgebra enumeration is capped at n <= {DOMAIN_MAX_N + 2}, got {n}"
        )
    out = []
    for top_bits in range(1, 1 << n):
        outcomes = [i for i in range(n) if top_bits >> i & 1]
        for blocks in _set_partitions(outcomes):
            atom_masks = []
            for block in blocks:
                bits = 0
                for i in block:
                    bits |= 1 << i
                atom_masks.append(bits)
            members = []
            for selector in range(1 << len(atom_masks)):
                bits = 0
                for t in range(len(atom_masks)):
                    if selector >> t & 1:
                        bits |= atom_masks[t]
                members.append(space.event(bits))
            out.append(Subalgebra.from_members(space, members))
    return out


def classical_domains(phi: Coevent) -> list[Subalgebra]:
    """All inclusion-maximal classical subdomains of a coevent."""
    space = phi.space
    if space.n > DOMAIN_MAX_N:
        raise ResourceCapError(
            f"classical domain search is capped at n <= {DOMAIN_MAX_N}, got {space.n}"
        )
    classical = [
        sub
        for sub in enumerate_subalgebras(space)
        if is_classical_subdomain(phi, sub).is_subdomain
    ]
    maximal = [
        sub
        for sub in classical
        if not any(other is not sub and other.contains_all(sub) for other in classical)
    ]
    maximal.sort(key=lambda s: (s.top.bits, s.member_masks()))
    return maximal
