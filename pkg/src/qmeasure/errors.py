"""Exception hierarchy shared by every module in the package.

Three failure classes matter to callers: bad input, a refused computation
whose cost would exceed a documented cap, and an internal invariant that
did not hold. The CLI maps them to exit codes 1, 2 and 3.
"""


class QuantumMeasureError(Exception):
    """Base class for all errors raised by this package."""


class InputError(QuantumMeasureError, ValueError):
    """The caller supplied a value outside the documented domain."""


class ResourceCapError(QuantumMeasureError):
    """The request is well formed but exceeds a documented size cap."""


class SolverDefectError(QuantumMeasureError, RuntimeError):
    """An internal invariant failed; indicates a bug, not bad input."""
