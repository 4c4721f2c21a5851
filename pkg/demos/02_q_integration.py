"""The q-integral of a simple function, two ways.

The layer-cake route integrates the measure of the level sets; the
min-form route is a double sum over the canonical parts weighted by the
symmetric kernel. They agree on every nonnegative function. The integral
is linear in the measure and positively homogeneous in the integrand,
but additivity in the integrand fails, and that failure is the quantum
part of the story.
"""

from fractions import Fraction as F

from qmeasure import OutcomeSpace, SignedQMeasure, canonical_form, q_integral, q_integral_min_form

space = OutcomeSpace(2)
# constructive interference: mu(omega) = 4 while the singletons carry 1 each
m = SignedQMeasure(space, (F(1), F(1)), (F(4),))

f = space.outcome_function([F(3), F(1)])
g = space.outcome_function([F(1), F(3)])

cf = canonical_form(f)
levels = [str(v) for v in cf.levels]
print(f"canonical form of f: levels {levels} on {[e.format() for e in cf.cells]}")
print(f"layer-cake  integral of f: {q_integral(f, m)}")
print(f"min-form    integral of f: {q_integral_min_form(f, m)}")

print()
print("additivity in the integrand fails:")
fg = space.outcome_function([F(4), F(4)])
lhs = q_integral(fg, m)
rhs = q_integral(f, m) + q_integral(g, m)
print(f"  integral(f + g) = {lhs}")
print(f"  integral(f) + integral(g) = {rhs}")

print()
print("but it is linear in the measure:")
m2 = SignedQMeasure(space, (F(0), F(2)), (F(1),))
both = q_integral(f, m + m2)
split = q_integral(f, m) + q_integral(f, m2)
print(f"  integral over (mu + nu) = {both}, split = {split}")

print()
print("positive scaling of the integrand does pass through:")
for c in (1, 2, 3):
    fc = space.outcome_function([F(3 * c), F(c)])
    print(f"  integral({c}*f) = {q_integral(fc, m)}")
