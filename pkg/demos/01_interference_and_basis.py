"""Grade-2 additive measures from three directions.

A signed q-measure on n outcomes is pinned down by its singleton and
doubleton values; every other event value follows from the grade-2
identity. This script builds the same kind of object three ways (point
masses, a squared amplitude, a raw table) and shows where the additivity
breaks and by how much.
"""

from fractions import Fraction as F

from qmeasure import (
    ComplexAmplitude,
    OutcomeSpace,
    SignedQMeasure,
    dirac,
    doubleton_dirac,
    from_amplitude,
    from_full_table,
)

space = OutcomeSpace(3)

print("== point masses ==")
d1 = dirac(space, 1)
dd23 = doubleton_dirac(space, 2, 3)
m = d1 + 2 * dd23
for ev in space.iter_events():
    print(f"  mu({{{ev.format()}}}) = {m(ev)}")
# delta_1 is additive; the doubleton mass is what carries interference
print("interference pairs:")
for i, j in ((1, 2), (1, 3), (2, 3)):
    print(f"  I({i},{j}) = {m.interference(i, j)}")

print()
print("== squared amplitude ==")
# the standard source of q-measures: |sum of amplitudes| squared
amp = ComplexAmplitude(((F(1), F(0)), (F(-1), F(0)), (F(1, 2), F(1, 2))))
mu = from_amplitude(space, amp)
print(f"  mu(1) = {mu(space.singleton(1))}, mu(2) = {mu(space.singleton(2))}")
print(f"  mu(1,2) = {mu(space.from_outcomes([1, 2]))}  (destructive)")
print(f"  mu(omega) = {mu(space.full)}")
flag = mu.is_q_measure()
print(f"  q-measure: {flag.is_q_measure}")

print()
print("== from a full table ==")
table = {
    "": 0, "1": 1, "2": 1, "3": 0,
    "1,2": 4, "1,3": 1, "2,3": 1, "1,2,3": 4,
}
mt = from_full_table(space, {space.parse_event(k): F(v) for k, v in table.items()})
print(f"  accepted; singles {mt.basis_coefficients()[0]}")
print(f"  interference coefficients {mt.basis_coefficients()[1]}")

# the table must satisfy the grade-2 identity on every triple, so a
# one-entry edit is enough to make it unrepresentable
bad = dict(table)
bad["1,2,3"] = 5
try:
    from_full_table(space, {space.parse_event(k): F(v) for k, v in bad.items()})
except Exception as exc:
    print(f"  perturbed table rejected: {exc}")
