"""Transfer of a q-measure to a classical measure on a coevent logic.

A transfer measure nu assigns nonnegative weights to coevents so that for
every nonempty event A the weight of {phi : phi(A) = 1} equals mu(A). The
constructive route rides the pure decomposition and works whenever the
logic contains every pure coevent. The general route is an exact LP
feasibility problem; when no transfer exists it returns a certificate
vector y over events with y.col(phi) <= 0 for all phi in the logic and
y.mu > 0, which refutes feasibility by inspection.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .coevents import Coevent, classify, enumerate_logic, from_monomials
from .errors import InputError, ResourceCapError, SolverDefectError
from .extremal import enumerate_pure, pure_decomposition
from .linalg import MAX_COLS, solve_feasibility
from .measures import SignedQMeasure
from .space import Event, OutcomeSpace

LOGIC_KINDS = ("additive", "multiplicative", "quadratic", "full", "pure")

LogicSelection = Union[str, Sequence[Coevent]]


def select_logic(space: OutcomeSpace, logic: LogicSelection) -> tuple[Coevent, ...]:
    """Resolve a logic selection to a duplicate-free coevent tuple.

    Strings name a built-in family; a sequence of coevents is taken as-is
    after space and duplicate checks.
    """
    if isinstance(logic, str):
        if logic == "pure":
            return tuple(p.coevent for p in enumerate_pure(space))
        if logic not in LOGIC_KINDS:
            raise InputError(
                f"unknown logic {logic!r}, expected one of {', '.join(LOGIC_KINDS)}"
            )
        return tuple(enumerate_logic(space, logic))
    out: list[Coevent] = []
    seen: set[int] = set()
    for phi in logic:
        if not isinstance(phi, Coevent):
            raise InputError("logic entries must be coevents")
        if phi.space != space:
            raise InputError(
                f"coevent on n={phi.space.n} cannot enter a logic on n={space.n}"
            )
        key = phi._truth_table()
        if key in seen:
            continue
        seen.add(key)
        out.append(phi)
    return tuple(out)


def _support_key(phi: Coevent) -> tuple[int, ...]:
    return tuple(sorted(phi.monomials))


@dataclass(frozen=True)
class TransferMeasure:
    """Nonnegative weights on coevents, sorted by monomial masks."""

    space: OutcomeSpace
    weights: tuple[tuple[Coevent, Fraction], ...]

    def __post_init__(self) -> None:
        for phi, w in self.weights:
            if phi.space != self.space:
                raise InputError("weighted coevent lives on a different space")
            if w <= 0:
                raise InputError(f"transfer weights must be positive, got {w}")
        ordered = tuple(
            sorted(self.weights, key=lambda item: _support_key(item[0]))
        )
        object.__setattr__(self, "weights", ordered)

    def support(self) -> tuple[Coevent, ...]:
        return tuple(phi for phi, _ in self.weights)

    def weight(self, phi: Coevent) -> Fraction:
        for other, w in self.weights:
            if other == phi:
                return w
        return Fraction(0)

    def total(self) -> Fraction:
        return sum((w for _, w in self.weights), Fraction(0))

    def event_mass(self, event: Event) -> Fraction:
        """Weight of the coevent set {phi : phi(event) = 1}."""
        return sum(
            (w for phi, w in self.weights if phi(event)), Fraction(0)
        )

    def satisfies_contract(self, m: SignedQMeasure) -> bool:
        """Whether event_mass reproduces m on every nonempty event."""
        if m.space != self.space:
            return False
        return all(
            self.event_mass(ev) == m(ev)
            for ev in self.space.iter_events(nonempty_only=True)
        )


Certificate = tuple[tuple[Event, Fraction], ...]


@dataclass(frozen=True)
class TransferResult:
    """Outcome of a transfer attempt: a measure, or a refuting certificate."""

    feasible: bool
    nu: Optional[TransferMeasure] = None
    certificate: Optional[Certificate] = None


def certificate_refutes(
    certificate: Certificate,
    m: SignedQMeasure,
    logic: Sequence[Coevent],
) -> bool:
    """Check a certificate by substitution: every logic column is pushed to
    a nonpositive value while the measure side stays positive."""
    for phi in logic:
        if sum((y for ev, y in certificate if phi(ev)), Fraction(0)) > 0:
            return False
    return sum((y * m(ev) for ev, y in certificate), Fraction(0)) > 0


def transfer_feasible(
    m: SignedQMeasure, logic: LogicSelection
) -> TransferResult:
    """Exact LP transfer over an arbitrary logic.

    Zero coevents are dropped from the variable list (their column is zero).
    Feasible results are substitution-checked against the contract before
    returning; infeasible results carry the nonzero certificate entries.
    """
    flag = m.is_q_measure()
    if not flag.is_q_measure:
        raise InputError(
            f"not a q-measure: negative value at {{{flag.witness}}}"
        )
    space = m.space
    coevents = [
        phi for phi in select_logic(space, logic) if not phi.is_zero
    ]
    if len(coevents) > MAX_COLS:
        raise ResourceCapError(
            f"logic has {len(coevents)} coevents, transfer is capped at {MAX_COLS}"
        )
    events = list(space.iter_events(nonempty_only=True))
    rows = [
        [Fraction(1 if phi(ev) else 0) for phi in coevents] for ev in events
    ]
    rhs = [m(ev) for ev in events]
    result = solve_feasibility(rows, rhs)
    if result.feasible:
        weights = tuple(
            (phi, w)
            for phi, w in zip(coevents, result.solution)
            if w != 0
        )
        nu = TransferMeasure(space, weights)
        if not nu.satisfies_contract(m):
            raise SolverDefectError("transfer weights fail the event contract")
        return TransferResult(feasible=True, nu=nu)
    certificate = tuple(
        (ev, y) for ev, y in zip(events, result.certificate) if y != 0
    )
    if not certificate_refutes(certificate, m, coevents):
        raise SolverDefectError("infeasibility certificate fails substitution")
    return TransferResult(feasible=False, certificate=certificate)


def _pure_outside_logic(
    space: OutcomeSpace, logic: LogicSelection
) -> Optional[Coevent]:
    """First pure coevent missing from the logic, None when all present."""
    pures = [p.coevent for p in enumerate_pure(space)]
    if isinstance(logic, str):
        if logic in ("full", "pure"):
            return None
        if logic not in LOGIC_KINDS:
            raise InputError(
                f"unknown logic {logic!r}, expected one of {', '.join(LOGIC_KINDS)}"
            )
        for phi in pures:
            cls = classify(phi)
            if logic == "quadratic" and not cls.quadratic:
                return phi
            if logic == "additive" and not cls.additive:
                return phi
            if logic == "multiplicative" and not cls.multiplicative:
                return phi
        return None
    present = {phi._truth_table() for phi in select_logic(space, logic)}
    for phi in pures:
        if phi._truth_table() not in present:
            return phi
    return None


def transfer_constructive(
    m: SignedQMeasure, logic: LogicSelection = "pure"
) -> TransferMeasure:
    """Transfer through the pure decomposition.

    Needs the logic to contain every pure coevent (checked); the weights are
    the decomposition weights, with any weight on the zero coevent dropped.
    """
    missing = _pure_outside_logic(m.space, logic)
    if missing is not None:
        raise InputError(
            "the constructive route needs every pure coevent in the logic; "
            f"the pure coevent {missing.format()} is outside it"
        )
    dec = pure_decomposition(m)
    weights = tuple(
        (term.coevent, w)
        for w, term in dec.terms
        if not term.coevent.is_zero
    )
    return TransferMeasure(m.space, weights)


def two_point_additive_transfer(m: SignedQMeasure) -> TransferResult:
    """Closed-form additive-logic transfer on a two-outcome space.

    A transfer exists exactly when the whole-space value lies between
    |mu(w1) - mu(w2)| and mu(w1) + mu(w2); the weights on the three nonzero
    additive coevents then have half-sum closed forms. Outside the interval
    a hand-built certificate is returned.
    """
    space = m.space
    if space.n != 2:
        raise InputError(
            f"the closed-form additive transfer needs n=2, got n={space.n}"
        )
    flag = m.is_q_measure()
    if not flag.is_q_measure:
        raise InputError(
            f"not a q-measure: negative value at {{{flag.witness}}}"
        )
    s1 = m.single(1)
    s2 = m.single(2)
    t = m(space.full)
    e1 = space.singleton(1)
    e2 = space.singleton(2)
    e12 = space.full
    if t > s1 + s2:
        cert = ((e1, Fraction(-1)), (e2, Fraction(-1)), (e12, Fraction(1)))
        return TransferResult(feasible=False, certificate=cert)
    if s1 - s2 > t:
        cert = ((e1, Fraction(1)), (e2, Fraction(-1)), (e12, Fraction(-1)))
        return TransferResult(feasible=False, certificate=cert)
    if s2 - s1 > t:
        cert = ((e1, Fraction(-1)), (e2, Fraction(1)), (e12, Fraction(-1)))
        return TransferResult(feasible=False, certificate=cert)
    phi1 = from_monomials(space, [e1])
    phi2 = from_monomials(space, [e2])
    phi_xor = phi1 ^ phi2
    pairs = (
        (phi1, (t + s1 - s2) / 2),
        (phi2, (t - s1 + s2) / 2),
        (phi_xor, (s1 + s2 - t) / 2),
    )
    nu = TransferMeasure(space, tuple((p, w) for p, w in pairs if w != 0))
    return TransferResult(feasible=True, nu=nu)


def support_is_quadratic(nu: TransferMeasure) -> bool:
    """Whether every supported coevent has degree at most two.

    Guards the structural fact that multiplicative-logic transfers never
    weight a monomial of three or more outcomes. The input must come from a
    multiplicative logic (single-monomial support), or the question is not
    the one this answers.
    """
    for phi in nu.support():
        if len(phi.monomials) > 1:
            raise InputError(
                "support check applies to multiplicative-logic transfers; "
                f"{phi.format()} has several monomials"
            )
    return all(phi.degree <= 2 for phi in nu.support())
