"""Pure measures, extreme points, and where the two notions part ways.

A q-measure is pure when every event value is 0 or 1; pure measures
correspond one to one with a family of coevents. Pure measures are
always extreme points of the set of q-measures bounded by one. Up to
n = 3 the converse holds too. From n = 4 on it does not, and this
script exhibits an extreme point with value 1/2.
"""

from fractions import Fraction as F

from qmeasure import (
    OutcomeSpace,
    SignedQMeasure,
    SolverDefectError,
    enumerate_pure,
    extremal_defect,
    is_extremal,
    measure_to_coevent,
    polytope_vertices,
    pure_decomposition,
    purity_defect,
)

print("pure counts by n:")
for n in range(1, 7):
    print(f"  n = {n}: {len(enumerate_pure(OutcomeSpace(n)))}")

space3 = OutcomeSpace(3)
verts = polytope_vertices(space3)
print(f"\nat n = 3 the polytope vertices are exactly the pures: {len(verts)}")

p = enumerate_pure(space3)[20]
print(f"a pure measure and its coevent: singles {p.measure.singles} "
      f"-> {p.coevent.format()}")

print()
print("decomposing a non-pure q-measure over the pures:")
m = SignedQMeasure(space3, (F(1, 2), F(1, 2), F(0)), (F(2), F(1, 2), F(1, 2)))
dec = pure_decomposition(m)
for w, term in dec.terms:
    print(f"  weight {w} on {term.coevent.format()}")
print(f"  weights sum to max value {dec.total_weight()}")

print()
print("an extreme point at n = 4 that is not pure:")
space4 = OutcomeSpace(4)
w = SignedQMeasure(
    space4,
    (F(1, 2), F(0), F(0), F(1)),
    (F(1), F(0), F(1), F(0), F(0), F(1)),
)
event, value = purity_defect(w)
print(f"  value {value} at {{{event.format()}}}, so not pure")
print(f"  is_extremal: {is_extremal(w)}")
print(f"  perturbation direction: {extremal_defect(w)}")
try:
    pure_decomposition(w)
except SolverDefectError as exc:
    print(f"  no convex combination of pures reaches it:\n    {exc}")

# consequence: measure_to_coevent must reject it as well
try:
    measure_to_coevent(w)
except Exception as exc:
    print(f"  coevent extraction refuses: {exc}")
