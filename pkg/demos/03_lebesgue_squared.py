"""Quantum integrals against the squared-length measure on [0, 1].

mu([a, b]) = (b - a)^2 is a q-measure on the interval. For monotone
integrands the q-integral collapses to a single weighted integral; the
general route is a double integral of the pointwise minimum. Both are
midpoint rules here, checked against closed forms.
"""

import math

from qmeasure import (
    Integrand,
    Interval,
    QuadratureConfig,
    closed_form,
    integrate_general,
    integrate_monotone,
)

unit = Interval(0.0, 1.0)

print("integrand        closed form      monotone rule    general rule")
for kind, exponent in (("power", 1), ("power", 2), ("power", 5), ("exp", None)):
    if kind == "power":
        f = Integrand.power(exponent)
    else:
        f = Integrand.exponential()
    want = closed_form(kind, unit, exponent)
    mono = integrate_monotone(f, unit)
    gen = integrate_general(f, unit)
    print(f"{f.label:<14}  {want:>14.10f}  {mono:>14.10f}  {gen:>14.10f}")

print()
print(f"integral of x on [0,1] is 1/3, not 1/2: {closed_form('power', unit, 1)}")
print(f"integral of exp is 2e - 4 = {2 * math.e - 4:.10f}")

print()
print("decreasing integrand x^-3 on [1/2, 1]:")
half = Interval(0.5, 1.0)
f = Integrand.inverse_power(3)
print(f"  closed form {closed_form('inverse_power', half, 3)}")
print(f"  monotone rule {integrate_monotone(f, half):.10f}")

print()
print("midpoint error falls like 1/panels^2 (non-monotone integrand):")
bump = Integrand.polynomial([0.0, 4.0, -4.0])  # 4x(1 - x), peak at 1/2
ref = integrate_general(bump, unit, QuadratureConfig(panels=4096))
prev = None
for panels in (64, 128, 256, 512):
    err = abs(integrate_general(bump, unit, QuadratureConfig(panels=panels)) - ref)
    ratio = "" if prev is None else f"  ratio {prev / err:.1f}"
    print(f"  panels {panels:>4}: error {err:.3e}{ratio}")
    prev = err
