"""Transferring a q-measure to a classical measure on coevents.

A measure nu on a logic transfers mu when nu{phi: phi(A) = 1} = mu(A)
for every event. Feasibility is an exact rational linear program; an
infeasible answer comes with a Farkas certificate that refutes the
system by substitution.
"""

from fractions import Fraction as F

from qmeasure import (
    Coevent,
    OutcomeSpace,
    SignedQMeasure,
    TransferMeasure,
    certificate_refutes,
    select_logic,
    transfer_constructive,
    transfer_feasible,
)

space = OutcomeSpace(2)
# total destructive interference: both singletons weigh 1, the whole space 0
m = SignedQMeasure(space, (F(1), F(1)), (F(0),))

print("mu = (1, 1; 0) on two outcomes")
for kind in ("additive", "multiplicative", "quadratic", "full"):
    res = transfer_feasible(m, kind)
    if res.feasible:
        parts = ", ".join(f"nu({phi.format()}) = {w}" for phi, w in res.nu.weights)
        print(f"  {kind:<15} feasible: {parts}")
    else:
        ok = certificate_refutes(res.certificate, m, select_logic(space, kind))
        print(f"  {kind:<15} infeasible, certificate verified: {ok}")

print()
print("feasibility on the quarter grid (a, b = 1/2):")
print("  c       additive  multiplicative")
for k in range(5):
    c = F(k, 4)
    mc = SignedQMeasure(space, (F(1, 2), F(1, 2)), (c,))
    add = transfer_feasible(mc, "additive").feasible
    mult = transfer_feasible(mc, "multiplicative").feasible
    print(f"  {str(c):<6}  {str(add):<8}  {mult}")
# additive needs |a - b| <= c <= a + b, multiplicative needs c >= a + b

print()
print("constructive route through the pure decomposition:")
m3 = SignedQMeasure(OutcomeSpace(3), (F(1, 4), F(1, 4), F(0)), (F(1), F(1, 4), F(1, 4)))
nu = transfer_constructive(m3)
for phi, w in nu.weights:
    print(f"  nu({phi.format()}) = {w}")
print(f"  total mass {nu.total()}")

print()
print("a q-measure at n = 4 that no pure-logic measure represents:")
space4 = OutcomeSpace(4)
u = SignedQMeasure(
    space4,
    (F(0), F(1), F(1), F(0)),
    (F(0), F(0), F(1), F(3), F(0), F(0)),
)
for kind in ("pure", "quadratic"):
    res = transfer_feasible(u, kind)
    ok = certificate_refutes(res.certificate, u, select_logic(space4, kind))
    print(f"  {kind:<10} infeasible, certificate verified: {ok}")

# the full logic still takes it: weight u(A) on the coevent whose truth
# table is 1 at A alone, for every event with positive mass
indicators = [
    (Coevent(space4, 1 << ev.bits), u(ev))
    for ev in space4.iter_events(nonempty_only=True)
    if u(ev) > 0
]
nu_full = TransferMeasure(space4, tuple(indicators))
exact = all(nu_full.event_mass(ev) == u(ev) for ev in space4.iter_events())
print(f"  full       feasible; single-event indicators transfer it: {exact}")
res = transfer_feasible(u, [phi for phi, _ in indicators])
print(f"  LP over those {len(indicators)} indicator coevents agrees: {res.feasible}")
