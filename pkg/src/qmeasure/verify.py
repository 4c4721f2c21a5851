"""Golden self-checks over worked values the library must reproduce.

Every check pins concrete numbers that were derived by hand: interference
of the destructive two-outcome measure, q-integrals of two-point
functions, squared-length closed forms, centers and classical domains of
named coevents, pure-measure counts, and transfer weights with their
infeasibility certificates. Randomized checks draw from a seeded stream,
so a run is reproducible from (seed, tolerance, panels) alone. The CLI
exposes the suite as the verify subcommand; it exits nonzero when any
check fails, since a failure means the library contradicts facts it is
built to reproduce.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import exp as _exp
from typing import Callable

from .coevents import (
    classify,
    enumerate_logic,
    evaluation_map,
    from_monomials,
    logic_size,
)
from .domains import center, center_subdomains, classical_domains
from .errors import QuantumMeasureError
from .extremal import (
    coevent_to_measure,
    enumerate_pure,
    extremal_defect,
    is_extremal,
    is_pure_coevent,
    polytope_vertices,
    pure_decomposition,
    purity_defect,
)
from .integrals import q_integral, q_integral_min_form, q_integral_signed
from .lebesgue_squared import (
    Integrand,
    Interval,
    QuadratureConfig,
    exp_closed_form,
    integrate_general,
    integrate_monotone,
    inverse_power_closed_form,
    power_closed_form,
)
from .measures import (
    ComplexAmplitude,
    SignedQMeasure,
    dirac,
    doubleton_dirac,
    from_amplitude,
    iter_pairs,
    ordinary_measure,
    pair_count,
)
from .sampling import (
    random_nonneg_combination,
    random_outcome_function,
    random_q_measure,
    random_signed_q_measure,
)
from .space import OutcomeSpace
from .transfer import (
    TransferMeasure,
    certificate_refutes,
    select_logic,
    support_is_quadratic,
    transfer_feasible,
    two_point_additive_transfer,
)

DEFAULT_TOLERANCE = 1e-6
DEFAULT_PANELS = 2048


class CheckFailure(AssertionError):
    pass


def expect(condition: bool, message: str) -> None:
    if not condition:
        raise CheckFailure(message)


def expect_eq(got: object, want: object, label: str) -> None:
    if got != want:
        raise CheckFailure(f"{label}: got {got!r}, want {want!r}")


def expect_close(got: float, want: float, tol: float, label: str) -> None:
    if abs(got - want) > tol:
        raise CheckFailure(f"{label}: |{got!r} - {want!r}| > {tol!r}")


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    ok: bool
    detail: str


@dataclass(frozen=True)
class CheckContext:
    seed: int
    tolerance: float
    panels: int

    def rng(self, check_id: str) -> random.Random:
        return random.Random(f"{self.seed}:{check_id}")


CheckFn = Callable[[CheckContext], str]
CHECKS: list[tuple[str, CheckFn]] = []


def _check(check_id: str) -> Callable[[CheckFn], CheckFn]:
    def register(fn: CheckFn) -> CheckFn:
        CHECKS.append((check_id, fn))
        return fn

    return register


def _frac_measure(n: int, singles, doubles) -> SignedQMeasure:
    space = OutcomeSpace(n)
    return SignedQMeasure(
        space,
        tuple(Fraction(v) for v in singles),
        tuple(Fraction(v) for v in doubles),
    )


@_check("two-outcome-interference-measure")
def _two_outcome(ctx: CheckContext) -> str:
    m = _frac_measure(2, (1, 1), (0,))
    expect(m.is_q_measure().is_q_measure, "destructive pair must be a q-measure")
    expect_eq(m.interference(1, 2), Fraction(-2), "interference")
    expect_eq(m.symmetric_measure().at(1, 2), Fraction(-1), "kernel entry")
    expect_eq(m.symmetric_measure().rectangle(m.space.full, m.space.full), Fraction(0), "rectangle on the whole space")
    return "I(1,2) = -2, kernel -1, whole-space value 0"


@_check("triple-xor-grade2-value")
def _triple_xor_value(ctx: CheckContext) -> str:
    space = OutcomeSpace(3)
    gamma = from_monomials(space, [[1], [2], [3]])
    m = coevent_to_measure(gamma)
    expect_eq(m(space.full), Fraction(-3), "whole-space value")
    flag = m.is_q_measure()
    expect(not flag.is_q_measure, "three-way xor measure must fail nonnegativity")
    expect_eq(flag.witness, space.full, "negativity witness")
    return "derived measure hits -3 on the whole space"


@_check("doubleton-dirac-is-q-measure")
def _doubleton_dirac_flag(ctx: CheckContext) -> str:
    m = doubleton_dirac(OutcomeSpace(3), 1, 3)
    expect(m.is_q_measure().is_q_measure, "pair mass must be a q-measure")
    expect_eq(m.max_value(), Fraction(1), "largest value")
    expect(purity_defect(m) is None, "pair mass must be pure")
    return "pair mass at {1,3} is a pure q-measure"


@_check("doubleton-dirac-values")
def _doubleton_dirac_values(ctx: CheckContext) -> str:
    space = OutcomeSpace(3)
    m = doubleton_dirac(space, 1, 3)
    pair = space.doubleton(1, 3)
    for ev in space.iter_events():
        want = Fraction(1 if pair <= ev else 0)
        expect_eq(m(ev), want, f"value at {{{ev}}}")
    return "indicator of events containing both 1 and 3"


@_check("amplitude-pair-interference")
def _amplitude_pair(ctx: CheckContext) -> str:
    space = OutcomeSpace(2)
    amp = ComplexAmplitude(((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))))
    m = from_amplitude(space, amp)
    expect_eq(m.single(1), Fraction(1), "first singleton")
    expect_eq(m.single(2), Fraction(1), "second singleton")
    expect_eq(m(space.full), Fraction(2), "whole-space value")
    expect_eq(m.interference(1, 2), Fraction(0), "interference")
    return "orthogonal pair (1, i) is interference-free"


@_check("amplitude-basis-coefficients")
def _amplitude_basis(ctx: CheckContext) -> str:
    rng = ctx.rng("amplitude-basis-coefficients")
    space = OutcomeSpace(4)
    grid = tuple(Fraction(k, 2) for k in range(-3, 4))
    count = 0
    for _ in range(20):
        values = tuple((rng.choice(grid), rng.choice(grid)) for _ in range(4))
        m = from_amplitude(space, ComplexAmplitude(values))
        for i, j in iter_pairs(4):
            re_i, im_i = values[i - 1]
            re_j, im_j = values[j - 1]
            want = 2 * (re_i * re_j + im_i * im_j)
            expect_eq(m.interference(i, j), want, f"I({i},{j})")
            count += 1
    return f"{count} interference terms match the amplitude cross terms"


@_check("interference-free-iff-additive")
def _interference_free(ctx: CheckContext) -> str:
    rng = ctx.rng("interference-free-iff-additive")
    space = OutcomeSpace(4)
    grid = tuple(Fraction(k, 4) for k in range(9))
    for _ in range(10):
        m = ordinary_measure(space, [rng.choice(grid) for _ in range(4)])
        for i, j in iter_pairs(4):
            expect_eq(m.interference(i, j), Fraction(0), f"I({i},{j})")
        for a in space.iter_events(nonempty_only=True):
            for b in space.iter_events(nonempty_only=True):
                if a.disjoint(b):
                    expect_eq(m(a | b), m(a) + m(b), f"additivity at {{{a}}},{{{b}}}")
    skew = doubleton_dirac(space, 1, 2)
    e1, e2 = space.singleton(1), space.singleton(2)
    expect(skew(e1 | e2) != skew(e1) + skew(e2), "nonzero interference must break additivity")
    return "zero interference and additivity coincide"


@_check("q-integral-two-point-doubleton")
def _q_integral_two_point(ctx: CheckContext) -> str:
    space = OutcomeSpace(2)
    f = space.outcome_function([2, 5])
    m = doubleton_dirac(space, 1, 2)
    expect_eq(q_integral(f, m), Fraction(2), "layer-cake value")
    restricted = f.restrict(space.singleton(1))
    expect_eq(q_integral(restricted, m), Fraction(0), "value over the first outcome")
    return "integral of (2, 5) against the pair mass is 2"


@_check("q-integral-min-form-two-point")
def _q_integral_min_two_point(ctx: CheckContext) -> str:
    space = OutcomeSpace(2)
    f = space.outcome_function([2, 5])
    m = doubleton_dirac(space, 1, 2)
    expect_eq(q_integral_min_form(f, m), Fraction(2), "min-form value")
    signed = space.outcome_function([-1, 2])
    expect_eq(q_integral_signed(signed, dirac(space, 1)), Fraction(-1), "signed split value")
    return "min-form gives 2 as well; signed split gives -1 on a point mass"


@_check("lebesgue-squared-identity")
def _leb2_identity(ctx: CheckContext) -> str:
    iv = Interval(0.0, 1.0)
    expect_close(power_closed_form(1, 0.0, 1.0), 1.0 / 3.0, 1e-12, "closed form")
    got = integrate_monotone(Integrand.power(1), iv, QuadratureConfig(ctx.panels))
    expect_close(got, 1.0 / 3.0, ctx.tolerance, "midpoint value")
    return f"integral of x over [0,1] is 1/3 (quadrature {got!r})"


@_check("lebesgue-squared-exponential")
def _leb2_exponential(ctx: CheckContext) -> str:
    iv = Interval(0.0, 1.0)
    want = 2.0 * _exp(1.0) - 4.0
    expect_close(exp_closed_form(0.0, 1.0), want, 1e-12, "closed form")
    got = integrate_monotone(Integrand.exponential(), iv, QuadratureConfig(ctx.panels))
    expect_close(got, want, ctx.tolerance, "midpoint value")
    return "integral of exp over [0,1] is 2e - 4"


@_check("lebesgue-squared-inverse-cube")
def _leb2_inverse_cube(ctx: CheckContext) -> str:
    expect_close(inverse_power_closed_form(3, 1.0, 2.0), 0.25, 1e-12, "value on [1,2]")
    expect_close(inverse_power_closed_form(3, 0.5, 1.0), 0.5, 1e-12, "value on [1/2,1]")
    got = integrate_monotone(
        Integrand.inverse_power(3), Interval(0.5, 1.0), QuadratureConfig(ctx.panels)
    )
    expect_close(got, 0.5, ctx.tolerance, "midpoint value on [1/2,1]")
    other = integrate_general(
        Integrand.inverse_power(3), Interval(0.5, 1.0), QuadratureConfig(min(ctx.panels, 1024))
    )
    expect_close(other, 0.5, max(ctx.tolerance, 1e-5), "min-kernel value on [1/2,1]")
    return "inverse cube integrates to 1/4 on [1,2] and 1/2 on [1/2,1]"


@_check("evaluation-map-is-homomorphism")
def _evaluation_homomorphism(ctx: CheckContext) -> str:
    space = OutcomeSpace(3)
    for i in (1, 2, 3):
        cls = classify(evaluation_map(space, i))
        expect(cls.homomorphism, f"evaluation map {i} must be a homomorphism")
    hits = [phi for phi in enumerate_logic(space, "full") if classify(phi).homomorphism]
    expect_eq(len(hits), 3, "homomorphism count in the full logic")
    return "exactly the 3 evaluation maps are homomorphisms at n=3"


@_check("product-coevent-truth")
def _product_truth(ctx: CheckContext) -> str:
    space = OutcomeSpace(3)
    prod = evaluation_map(space, 1) * evaluation_map(space, 2)
    expect_eq(prod, from_monomials(space, [[1, 2]]), "product polynomial")
    pair = space.doubleton(1, 2)
    for ev in space.iter_events():
        expect_eq(prod(ev), 1 if pair <= ev else 0, f"truth at {{{ev}}}")
    return "w1* w2* is true exactly on events containing both outcomes"


@_check("coevent-counts")
def _coevent_counts(ctx: CheckContext) -> str:
    for n in (2, 3):
        space = OutcomeSpace(n)
        for kind in ("full", "additive", "multiplicative", "quadratic"):
            listed = enumerate_logic(space, kind)
            expect_eq(len(listed), logic_size(space, kind), f"{kind} count at n={n}")
            expect_eq(len(set(listed)), len(listed), f"{kind} dedup at n={n}")
    space = OutcomeSpace(3)
    expect_eq(logic_size(space, "full"), 128, "full size at n=3")
    expect_eq(logic_size(space, "quadratic"), 64, "quadratic size at n=3")
    expect_eq(logic_size(space, "additive"), 8, "additive size at n=3")
    return "logic sizes 2^(2^n-1), 2^n, 2^n, 2^(n(n+1)/2) all match"


def _member_masks(subs) -> list[tuple[int, ...]]:
    return [s.member_masks() for s in subs]


@_check("center-of-product-pair")
def _center_product(ctx: CheckContext) -> str:
    space = OutcomeSpace(3)
    phi = from_monomials(space, [[1, 2]])
    sub = center(phi)
    expect_eq(sub.member_masks(), (0, 0b011, 0b100, 0b111), "center members")
    subs = center_subdomains(phi)
    expect_eq(_member_masks(subs), [(0, 0b011, 0b100, 0b111)], "center subdomains")
    return "center of w1*w2* is {0, {1,2}, {3}, all}"


@_check("center-of-xor-pair")
def _center_xor(ctx: CheckContext) -> str:
    space = OutcomeSpace(3)
    psi = from_monomials(space, [[1], [2]])
    sub = center(psi)
    expect_eq(len(sub), 8, "center size")
    expect_eq(sub.member_masks(), tuple(range(8)), "center is the whole algebra")
    return "an additive coevent has the whole algebra as center"


@_check("center-subdomains-of-triple-xor")
def _center_subdomains_triple(ctx: CheckContext) -> str:
    space = OutcomeSpace(3)
    gamma = from_monomials(space, [[1], [2], [3]])
    subs = center_subdomains(gamma)
    expect_eq(_member_masks(subs), [(0, 1), (0, 2), (0, 4)], "subdomain list")
    return "one two-member subdomain per outcome"


@_check("classical-domains-of-triple-product")
def _domains_triple_product(ctx: CheckContext) -> str:
    space = OutcomeSpace(3)
    delta = from_monomials(space, [[1, 2, 3]])
    expect_eq(center(delta).member_masks(), (0, 0b111), "center of the triple product")
    doms = classical_domains(delta)
    expect_eq(_member_masks(doms), [(0, 0b111)], "maximal domains")
    return "only the trivial algebra is classical for w1*w2*w3*"


@_check("classical-domains-listing")
def _domains_listing(ctx: CheckContext) -> str:
    space = OutcomeSpace(3)
    cases = [
        ([[1, 2]], [(0, 0b011, 0b100, 0b111)]),
        ([[1], [2]], [(0, 0b001, 0b100, 0b101), (0, 0b010, 0b100, 0b110)]),
        (
            [[1], [2], [3]],
            [
                (0, 0b001, 0b110, 0b111),
                (0, 0b010, 0b101, 0b111),
                (0, 0b011, 0b100, 0b111),
            ],
        ),
        ([[1, 2, 3]], [(0, 0b111)]),
    ]
    for monomials, want in cases:
        phi = from_monomials(space, monomials)
        expect_eq(_member_masks(classical_domains(phi)), want, f"domains of {phi.format()}")
    return "maximal classical domains match the worked n=3 lists"


@_check("pure-counts")
def _pure_counts(ctx: CheckContext) -> str:
    counts = {n: len(enumerate_pure(OutcomeSpace(n))) for n in (1, 2, 3)}
    expect_eq(counts[1], 2, "pure count at n=1")
    expect_eq(counts[2], 8, "pure count at n=2")
    # All 0/1 assignments to singles and doubles whose derived event
    # values stay in {0,1}. The zero measure qualifies and is counted,
    # so n=3 gives 35: the 34 nonzero pure measures plus zero.
    expect_eq(counts[3], 35, "pure count at n=3")
    nonzero = [p for p in enumerate_pure(OutcomeSpace(3)) if p.measure.max_value() > 0]
    expect_eq(len(nonzero), 34, "nonzero pure count at n=3")
    return "pure q-measure counts are 2, 8, 35 (34 nonzero at n=3)"


@_check("unit-interval-vertices")
def _unit_vertices(ctx: CheckContext) -> str:
    verts = polytope_vertices(OutcomeSpace(1))
    coords = sorted(p.measure.coordinates() for p in verts)
    expect_eq(coords, [(Fraction(0),), (Fraction(1),)], "vertex coordinates")
    return "the n=1 polytope has vertices 0 and the point mass"


@_check("non-pure-triple-xor")
def _non_pure_triple(ctx: CheckContext) -> str:
    space = OutcomeSpace(3)
    gamma = from_monomials(space, [[1], [2], [3]])
    expect(not is_pure_coevent(gamma), "three-way xor must not be pure")
    defect = purity_defect(coevent_to_measure(gamma))
    expect(defect is not None, "derived measure must have a defect")
    ev, value = defect
    expect_eq(ev, space.full, "defect event")
    expect_eq(value, Fraction(-3), "defect value")
    return "derived value -3 on the whole space breaks purity"


@_check("non-pure-mixed-coevent")
def _non_pure_mixed(ctx: CheckContext) -> str:
    space = OutcomeSpace(3)
    psi = from_monomials(space, [[1], [2, 3]])
    expect(not is_pure_coevent(psi), "w1* + w2*w3* must not be pure")
    m = coevent_to_measure(psi)
    expect(m.is_q_measure().is_q_measure, "its derived measure is still a q-measure")
    defect = purity_defect(m)
    expect(defect is not None, "derived measure must have a defect")
    ev, value = defect
    expect_eq(ev, space.full, "defect event")
    expect_eq(value, Fraction(2), "defect value")
    expect_eq(psi(space.full), 0, "coevent value on the whole space")
    return "derived value 2 disagrees with the coevent value 0"


@_check("half-dirac-not-extremal")
def _half_dirac(ctx: CheckContext) -> str:
    space = OutcomeSpace(1)
    m = SignedQMeasure(space, (Fraction(1, 2),), ())
    expect(not is_extremal(m), "the half point mass must not be extreme")
    expect(extremal_defect(m) is not None, "a perturbation direction must exist")
    dec = pure_decomposition(m)
    expect_eq(dec.total_weight(), Fraction(1, 2), "decomposition weight total")
    expect_eq(
        [(w, term.measure.coordinates()) for w, term in dec.terms],
        [(Fraction(1, 2), (Fraction(1),))],
        "decomposition terms",
    )
    return "mu = 1/2 splits as one half of the point mass"


@_check("additive-decomposition")
def _additive_decomposition(ctx: CheckContext) -> str:
    space = OutcomeSpace(2)
    m = _frac_measure(2, (Fraction(1, 2), Fraction(1, 2)), (1,))
    half = Fraction(1, 2)
    combo = half * dirac(space, 1) + half * dirac(space, 2)
    expect_eq(combo, m, "hand decomposition identity")
    dec = pure_decomposition(m)
    expect_eq(dec.total_weight(), Fraction(1), "weight total equals the largest value")
    acc = SignedQMeasure(space, (Fraction(0),) * 2, (Fraction(0),))
    for w, term in dec.terms:
        expect(w > 0, "weights must be positive")
        expect(purity_defect(term.measure) is None, "terms must be pure")
        acc = acc + w * term.measure
    expect_eq(acc, m, "solver decomposition recomposes")
    return "(1/2, 1/2; 1) is half of each point mass"


@_check("ordinary-measure-transfer")
def _ordinary_transfer(ctx: CheckContext) -> str:
    rng = ctx.rng("ordinary-measure-transfer")
    space = OutcomeSpace(3)
    grid = tuple(Fraction(k, 4) for k in range(9))
    for _ in range(8):
        weights = [rng.choice(grid) for _ in range(3)]
        m = ordinary_measure(space, weights)
        hand = TransferMeasure(
            space,
            tuple(
                (evaluation_map(space, i), w)
                for i, w in enumerate(weights, start=1)
                if w != 0
            ),
        )
        expect(hand.satisfies_contract(m), "diagonal weights must transfer an additive measure")
        result = transfer_feasible(m, "additive")
        expect(result.feasible, "additive logic must accept an additive measure")
        assert result.nu is not None
        expect(result.nu.satisfies_contract(m), "solver weights must meet the contract")
    return "additive measures transfer onto the evaluation maps"


@_check("destructive-pair-transfer-witness")
def _destructive_witness(ctx: CheckContext) -> str:
    space = OutcomeSpace(2)
    m = _frac_measure(2, (1, 1), (0,))
    phi4 = from_monomials(space, [[1, 2]])
    phi5 = from_monomials(space, [[1], [1, 2]])
    phi6 = from_monomials(space, [[2], [1, 2]])
    result = transfer_feasible(m, [phi4, phi5, phi6])
    expect(result.feasible, "the three-coevent logic must accept the destructive pair")
    nu = result.nu
    assert nu is not None
    expect_eq(nu.weight(phi4), Fraction(0), "weight on the product coevent")
    expect_eq(nu.weight(phi5), Fraction(1), "weight on the first mixed coevent")
    expect_eq(nu.weight(phi6), Fraction(1), "weight on the second mixed coevent")
    expect(nu.satisfies_contract(m), "contract")
    return "forced weights (0, 1, 1) on the three-coevent logic"


@_check("destructive-pair-xor-weight")
def _destructive_xor(ctx: CheckContext) -> str:
    space = OutcomeSpace(2)
    m = _frac_measure(2, (1, 1), (0,))
    result = transfer_feasible(m, "additive")
    expect(result.feasible, "additive logic must accept the destructive pair")
    nu = result.nu
    assert nu is not None
    xor = from_monomials(space, [[1], [2]])
    expect_eq(nu.weight(xor), Fraction(1), "weight on the two-outcome xor")
    expect_eq(len(nu.weights), 1, "support size")
    closed = two_point_additive_transfer(m)
    expect(closed.feasible, "closed form agrees on feasibility")
    assert closed.nu is not None
    expect_eq(closed.nu.weights, nu.weights, "closed form weights")
    return "all the weight sits on w1* + w2*"


@_check("multiplicative-infeasible-certificate")
def _mult_infeasible(ctx: CheckContext) -> str:
    space = OutcomeSpace(2)
    m = _frac_measure(2, (1, 1), (0,))
    result = transfer_feasible(m, "multiplicative")
    expect(not result.feasible, "negative interference must block multiplicative transfer")
    assert result.certificate is not None
    logic = [phi for phi in select_logic(space, "multiplicative") if not phi.is_zero]
    expect(certificate_refutes(result.certificate, m, logic), "certificate substitution")
    return "certificate refutes the destructive pair on products"


@_check("multiplicative-feasible-weights")
def _mult_feasible(ctx: CheckContext) -> str:
    space = OutcomeSpace(2)
    m = _frac_measure(2, (Fraction(1, 4), Fraction(1, 4)), (1,))
    result = transfer_feasible(m, "multiplicative")
    expect(result.feasible, "constructive interference must pass")
    nu = result.nu
    assert nu is not None
    expect_eq(nu.weight(evaluation_map(space, 1)), Fraction(1, 4), "weight on w1*")
    expect_eq(nu.weight(evaluation_map(space, 2)), Fraction(1, 4), "weight on w2*")
    expect_eq(nu.weight(from_monomials(space, [[1, 2]])), Fraction(1, 2), "weight on w1*w2*")
    expect(support_is_quadratic(nu), "support degrees")
    return "weights (1/4, 1/4, 1/2) on the product logic"


@_check("additive-transfer-closed-forms")
def _additive_closed_forms(ctx: CheckContext) -> str:
    space = OutcomeSpace(2)
    m = _frac_measure(2, (Fraction(1, 2), Fraction(1, 4)), (Fraction(1, 2),))
    result = two_point_additive_transfer(m)
    expect(result.feasible, "interval condition holds here")
    nu = result.nu
    assert nu is not None
    phi1 = evaluation_map(space, 1)
    phi2 = evaluation_map(space, 2)
    expect_eq(nu.weight(phi1), Fraction(3, 8), "weight on w1*")
    expect_eq(nu.weight(phi2), Fraction(1, 8), "weight on w2*")
    expect_eq(nu.weight(phi1 ^ phi2), Fraction(1, 8), "weight on the xor")
    expect(nu.satisfies_contract(m), "contract")
    return "half-sum closed forms give (3/8, 1/8, 1/8)"


@_check("additive-transfer-interval")
def _additive_interval(ctx: CheckContext) -> str:
    space = OutcomeSpace(2)
    logic = [phi for phi in select_logic(space, "additive") if not phi.is_zero]
    grid = [Fraction(k, 4) for k in range(5)]
    feasible_count = 0
    for s1 in grid:
        for s2 in grid:
            for t in grid:
                m = SignedQMeasure(space, (s1, s2), (t,))
                result = two_point_additive_transfer(m)
                want = abs(s1 - s2) <= t <= s1 + s2
                expect_eq(result.feasible, want, f"interval at ({s1},{s2},{t})")
                if result.feasible:
                    assert result.nu is not None
                    expect(result.nu.satisfies_contract(m), "contract")
                    feasible_count += 1
                else:
                    assert result.certificate is not None
                    expect(
                        certificate_refutes(result.certificate, m, logic),
                        f"certificate at ({s1},{s2},{t})",
                    )
    return f"|mu(1)-mu(2)| <= mu(all) <= mu(1)+mu(2) over 125 grid points ({feasible_count} feasible)"


@_check("quadratic-support-of-transfers")
def _quadratic_support(ctx: CheckContext) -> str:
    rng = ctx.rng("quadratic-support-of-transfers")
    checked = 0
    for n in (3, 4):
        space = OutcomeSpace(n)
        for _ in range(8):
            m = random_nonneg_combination(space, rng)
            result = transfer_feasible(m, "multiplicative")
            expect(result.feasible, "nonnegative combinations transfer on products")
            nu = result.nu
            assert nu is not None
            expect(support_is_quadratic(nu), "support degree must stay at most 2")
            for i in range(1, n + 1):
                expect_eq(
                    nu.weight(evaluation_map(space, i)), m.single(i), f"weight on w{i}*"
                )
            for i, j in iter_pairs(n):
                expect_eq(
                    nu.weight(from_monomials(space, [[i, j]])),
                    m.interference(i, j),
                    f"weight on w{i}*w{j}*",
                )
            checked += 1
    return f"{checked} product-logic transfers with forced degree <= 2 weights"


@_check("pure-decomposition-roundtrip")
def _decomposition_roundtrip(ctx: CheckContext) -> str:
    rng = ctx.rng("pure-decomposition-roundtrip")
    rounds = 0
    for n in (2, 3):
        space = OutcomeSpace(n)
        zero = SignedQMeasure(
            space, (Fraction(0),) * n, (Fraction(0),) * pair_count(n)
        )
        for _ in range(6):
            m = random_q_measure(space, rng)
            dec = pure_decomposition(m)
            expect_eq(dec.total_weight(), m.max_value(), "weight total")
            acc = zero
            for w, term in dec.terms:
                expect(w > 0, "weights must be positive")
                expect(purity_defect(term.measure) is None, "terms must be pure")
                acc = acc + w * term.measure
            expect_eq(acc, m, "recomposition")
            rounds += 1
    return f"{rounds} random q-measures recompose from pure terms"


@_check("min-form-equivalence")
def _min_form_equivalence(ctx: CheckContext) -> str:
    rng = ctx.rng("min-form-equivalence")
    pairs = 0
    for n in range(2, 7):
        space = OutcomeSpace(n)
        for _ in range(12):
            m = random_signed_q_measure(space, rng)
            f = random_outcome_function(space, rng)
            expect_eq(q_integral(f, m), q_integral_min_form(f, m), f"routes at n={n}")
            pairs += 1
    return f"layer-cake and min-form agree on {pairs} random pairs"


@_check("symmetric-kernel-contract")
def _symmetric_kernel(ctx: CheckContext) -> str:
    rng = ctx.rng("symmetric-kernel-contract")
    space = OutcomeSpace(4)
    for _ in range(8):
        m = random_signed_q_measure(space, rng)
        lam = m.symmetric_measure()
        for ev in space.iter_events():
            expect_eq(lam.rectangle(ev, ev), m(ev), f"diagonal at {{{ev}}}")
        for a in space.iter_events():
            for b in space.iter_events():
                expect_eq(lam.rectangle(a, b), lam.rectangle(b, a), "symmetry")
    return "rectangle values reproduce the measure on the diagonal"


def run_checks(
    seed: int = 0,
    tolerance: float = DEFAULT_TOLERANCE,
    panels: int = DEFAULT_PANELS,
) -> list[CheckResult]:
    """Run every golden check; never raises for a failing check."""
    ctx = CheckContext(seed=seed, tolerance=tolerance, panels=panels)
    results = []
    for check_id, fn in CHECKS:
        try:
            detail = fn(ctx)
            results.append(CheckResult(check_id, True, detail))
        except CheckFailure as exc:
            results.append(CheckResult(check_id, False, str(exc)))
        except QuantumMeasureError as exc:
            results.append(CheckResult(check_id, False, f"{type(exc).__name__}: {exc}"))
    return results
