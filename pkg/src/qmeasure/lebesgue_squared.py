"""Quantum integration against the squared-length measure on [0, 1].

The measure of a subinterval [a, b] is (b - a)^2, a grade-2 analogue of
Lebesgue measure. For nonnegative integrands the quantum integral has a
double-integral form over the min kernel,

    integral = sum over the square of min(f(x), f(y)) dx dy,

which collapses for monotone integrands to a single weighted integral:
2 * integral of f(x) (b - x) dx when f is increasing on [a, b], and
2 * integral of f(x) (x - a) dx when f is decreasing. This module is the
one floating-point corner of the package: composite midpoint quadrature
plus closed forms for the power, exponential and inverse-power families.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from .errors import InputError

MIN_PANELS = 16
DEFAULT_PANELS = 2048
MONOTONE_SPOT_POINTS = 64
_GENERAL_CHUNK = 512

MONOTONICITIES = ("increasing", "decreasing", "general")


@dataclass(frozen=True)
class Interval:
    """Subinterval of the unit interval."""

    a: float
    b: float

    def __post_init__(self) -> None:
        if not (0.0 <= self.a < self.b <= 1.0):
            raise InputError(
                f"need 0 <= a < b <= 1, got a={self.a}, b={self.b}"
            )

    @property
    def length(self) -> float:
        return self.b - self.a


def squared_length(interval: Interval) -> float:
    """Measure of the interval itself."""
    return (interval.b - interval.a) ** 2


@dataclass(frozen=True)
class Integrand:
    """Nonnegative integrand with a declared monotonicity tag.

    The tag selects the integration route; a wrong tag gives a wrong value,
    so monotone routes spot-check it and warn on contradiction.
    """

    evaluate: Callable[[np.ndarray], np.ndarray]
    monotonicity: str
    label: str = field(default="")

    def __post_init__(self) -> None:
        if self.monotonicity not in MONOTONICITIES:
            raise InputError(
                f"monotonicity must be one of {MONOTONICITIES}, got {self.monotonicity!r}"
            )

    @staticmethod
    def power(exponent: int) -> "Integrand":
        if exponent < 0:
            raise InputError("power integrand needs exponent >= 0")
        return Integrand(
            lambda x: np.asarray(x, dtype=float) ** exponent,
            "increasing",
            f"x^{exponent}",
        )

    @staticmethod
    def exponential() -> "Integrand":
        return Integrand(lambda x: np.exp(np.asarray(x, dtype=float)), "increasing", "exp(x)")

    @staticmethod
    def inverse_power(exponent: int) -> "Integrand":
        if exponent < 3:
            raise InputError("inverse power integrand needs exponent >= 3")
        return Integrand(
            lambda x: np.asarray(x, dtype=float) ** (-exponent),
            "decreasing",
            f"x^-{exponent}",
        )

    @staticmethod
    def polynomial(coefficients: Sequence[float], monotonicity: str = "general") -> "Integrand":
        coeffs = tuple(float(c) for c in coefficients)

        def ev(x: np.ndarray) -> np.ndarray:
            xs = np.asarray(x, dtype=float)
            acc = np.zeros_like(xs)
            for c in reversed(coeffs):
                acc = acc * xs + c
            return acc

        label = "poly(" + ",".join(repr(c) for c in coeffs) + ")"
        return Integrand(ev, monotonicity, label)

    @staticmethod
    def constant(value: float) -> "Integrand":
        v = float(value)
        if v < 0:
            raise InputError("integrands must be nonnegative")
        return Integrand(
            lambda x: np.full_like(np.asarray(x, dtype=float), v),
            "increasing",
            f"const({v!r})",
        )


@dataclass(frozen=True)
class QuadratureConfig:
    """Composite midpoint rule parameters."""

    panels: int = DEFAULT_PANELS

    def __post_init__(self) -> None:
        if self.panels < MIN_PANELS:
            raise InputError(f"need at least {MIN_PANELS} panels, got {self.panels}")


def _midpoints(interval: Interval, panels: int) -> tuple[np.ndarray, float]:
    h = interval.length / panels
    xs = interval.a + h * (np.arange(panels, dtype=float) + 0.5)
    return xs, h


def _samples(f: Integrand, xs: np.ndarray) -> np.ndarray:
    fx = np.asarray(f.evaluate(xs), dtype=float)
    if fx.shape != xs.shape:
        # the callable does not vectorize; fall back to pointwise calls
        fx = np.asarray([float(np.asarray(f.evaluate(x), dtype=float)) for x in xs])
    if np.any(fx < 0):
        raise InputError("integrand takes negative values on the interval")
    return fx


def _spot_check_monotone(f: Integrand, interval: Interval) -> None:
    xs, _ = _midpoints(interval, MONOTONE_SPOT_POINTS)
    fx = _samples(f, xs)
    diffs = np.diff(fx)
    scale = float(np.max(np.abs(fx))) + 1.0
    tol = 1e-12 * scale
    if f.monotonicity == "increasing" and np.any(diffs < -tol):
        warnings.warn(
            f"integrand {f.label or '<unnamed>'} is tagged increasing but decreases "
            "on the interval; the monotone route will be wrong",
            stacklevel=3,
        )
    if f.monotonicity == "decreasing" and np.any(diffs > tol):
        warnings.warn(
            f"integrand {f.label or '<unnamed>'} is tagged decreasing but increases "
            "on the interval; the monotone route will be wrong",
            stacklevel=3,
        )


def integrate_monotone(
    f: Integrand,
    interval: Interval,
    config: QuadratureConfig = QuadratureConfig(),
) -> float:
    """Quantum integral of a monotone integrand by the single-integral form.

    Midpoint error on these smooth weights falls like 1 / panels^2.
    """
    if f.monotonicity not in ("increasing", "decreasing"):
        raise InputError(
            f"monotone route needs an increasing or decreasing tag, got {f.monotonicity!r}"
        )
    _spot_check_monotone(f, interval)
    xs, h = _midpoints(interval, config.panels)
    fx = _samples(f, xs)
    if f.monotonicity == "increasing":
        weight = interval.b - xs
    else:
        weight = xs - interval.a
    return 2.0 * h * float(np.sum(fx * weight))


def integrate_general(
    f: Integrand,
    interval: Interval,
    config: QuadratureConfig = QuadratureConfig(),
) -> float:
    """Quantum integral by the min-kernel double integral; works for any
    nonnegative integrand, monotone or not. Cost grows with panels^2; the
    kernel is accumulated in fixed-size row blocks."""
    xs, h = _midpoints(interval, config.panels)
    fx = _samples(f, xs)
    total = 0.0
    for start in range(0, len(fx), _GENERAL_CHUNK):
        block = fx[start : start + _GENERAL_CHUNK]
        total += float(np.sum(np.minimum(block[:, None], fx[None, :])))
    return total * h * h


def integrate(
    f: Integrand,
    interval: Interval,
    config: QuadratureConfig = QuadratureConfig(),
) -> float:
    """Route on the monotonicity tag."""
    if f.monotonicity == "general":
        return integrate_general(f, interval, config)
    return integrate_monotone(f, interval, config)


def power_closed_form(exponent: int, a: float, b: float) -> float:
    """Exact integral of x^exponent over [a, b], any 0 <= a < b."""
    if exponent < 0:
        raise InputError("power closed form needs exponent >= 0")
    if not 0.0 <= a < b:
        raise InputError(f"need 0 <= a < b, got a={a}, b={b}")
    n = exponent
    return (2.0 / ((n + 1) * (n + 2))) * (
        b ** (n + 2) - a ** (n + 1) * ((n + 2) * b - (n + 1) * a)
    )


def exp_closed_form(a: float, b: float) -> float:
    """Exact integral of exp(x) over [a, b], any a < b."""
    if not a < b:
        raise InputError(f"need a < b, got a={a}, b={b}")
    return 2.0 * math.exp(b) - 2.0 * math.exp(a) * (b - a + 1.0)


def inverse_power_closed_form(exponent: int, a: float, b: float) -> float:
    """Exact integral of x^-exponent over [a, b], exponent >= 3 and a > 0."""
    if exponent < 3:
        raise InputError("inverse power closed form needs exponent >= 3")
    if not 0.0 < a < b:
        raise InputError(f"need 0 < a < b, got a={a}, b={b}")
    n = exponent
    return (2.0 / ((n - 1) * (n - 2))) * (
        b ** (1 - n) * ((n - 2) * a - (n - 1) * b) + a ** (2 - n)
    )


CLOSED_FORM_KINDS = ("power", "exp", "inverse_power")


def closed_form(kind: str, interval: Interval, exponent: Optional[int] = None) -> float:
    """Dispatch the closed forms over a unit-interval subinterval."""
    if kind == "power":
        if exponent is None:
            raise InputError("power closed form needs an exponent")
        return power_closed_form(exponent, interval.a, interval.b)
    if kind == "exp":
        return exp_closed_form(interval.a, interval.b)
    if kind == "inverse_power":
        if exponent is None:
            raise InputError("inverse power closed form needs an exponent")
        return inverse_power_closed_form(exponent, interval.a, interval.b)
    raise InputError(f"unknown closed form {kind!r}, expected one of {CLOSED_FORM_KINDS}")


def integrand_for(kind: str, exponent: Optional[int] = None) -> Integrand:
    """Integrand matching a closed-form kind."""
    if kind == "power":
        if exponent is None:
            raise InputError("power integrand needs an exponent")
        return Integrand.power(exponent)
    if kind == "exp":
        return Integrand.exponential()
    if kind == "inverse_power":
        if exponent is None:
            raise InputError("inverse power integrand needs an exponent")
        return Integrand.inverse_power(exponent)
    raise InputError(f"unknown closed form {kind!r}, expected one of {CLOSED_FORM_KINDS}")
