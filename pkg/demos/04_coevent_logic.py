"""Coevents: GF(2) truth functions on the event algebra.

Every coevent is a polynomial in the evaluation maps w1*, ..., wn* with
XOR as addition. The text format writes XOR as ';' and products with
commas, so '1;2,3' is w1* + w2*w3*. Classification (additive,
multiplicative, quadratic, homomorphism) reads off the monomial list.
"""

from qmeasure import (
    OutcomeSpace,
    classify,
    enumerate_logic,
    evaluation_map,
    logic_size,
    parse_coevent,
)

space = OutcomeSpace(3)

phi = parse_coevent(space, "1;2,3")
print(f"phi = {phi.format()}")
print("truth table:")
for ev in space.iter_events():
    print(f"  phi({{{ev.format()}}}) = {phi(ev)}")

c = classify(phi)
print(f"degree {c.degree}, additive {c.additive}, multiplicative "
      f"{c.multiplicative}, homomorphism {c.homomorphism}")

print()
print("algebra of coevents:")
w1 = evaluation_map(space, 1)
w2 = evaluation_map(space, 2)
print(f"  w1 ^ w2   = {(w1 ^ w2).format()}")
print(f"  w1 * w2   = {(w1 * w2).format()}")
print(f"  (w1^w2)^2 = {((w1 ^ w2) * (w1 ^ w2)).format()}  (idempotent)")

print()
print("the homomorphisms are exactly the evaluation maps:")
homs = [p for p in enumerate_logic(space, "full") if classify(p).homomorphism]
print(f"  {[h.format() for h in homs]}")

print()
print("logic sizes at n = 3:")
for kind in ("additive", "multiplicative", "quadratic", "full"):
    print(f"  {kind:<15} {logic_size(space, kind)}")
