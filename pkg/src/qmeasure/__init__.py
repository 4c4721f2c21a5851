"""Exact arithmetic for grade-2 additive quantum measures on finite spaces.

The core objects: SignedQMeasure (grade-2 additive set functions given by
singleton and doubleton values), q-integrals of outcome functions,
coevents (GF(2) truth functions on the event algebra) with their logics,
centers and classical domains, pure and extremal measures, transfer of a
q-measure to a classical measure on a coevent logic, and quantum
integration against the squared-length measure on the unit interval.
"""

from .coevents import (
    Coevent,
    CoeventClass,
    LogicKind,
    classify,
    constant_true,
    enumerate_logic,
    evaluation_map,
    from_monomials,
    logic_size,
    parse_coevent,
    subset_xor_transform,
    zero_coevent,
)
from .domains import (
    ClassicalityReport,
    Subalgebra,
    SubalgebraCheck,
    center,
    center_subdomains,
    check_subalgebra,
    classical_domains,
    enumerate_subalgebras,
    is_classical_subdomain,
    restriction_is_additive,
)
from .errors import (
    InputError,
    QuantumMeasureError,
    ResourceCapError,
    SolverDefectError,
)
from .extremal import (
    Decomposition,
    PureQMeasure,
    coevent_to_measure,
    enumerate_pure,
    extremal_defect,
    is_extremal,
    is_pure,
    is_pure_coevent,
    measure_to_coevent,
    polytope_vertices,
    pure_decomposition,
    purity_defect,
)
from .integrals import (
    CanonicalSimpleForm,
    canonical_form,
    q_integral,
    q_integral_min_form,
    q_integral_over_event,
    q_integral_signed,
)
from .lebesgue_squared import (
    Integrand,
    Interval,
    QuadratureConfig,
    closed_form,
    exp_closed_form,
    integrate,
    integrate_general,
    integrate_monotone,
    inverse_power_closed_form,
    power_closed_form,
    squared_length,
)
from .measures import (
    ComplexAmplitude,
    QMeasureFlag,
    SignedQMeasure,
    SymmetricSignedMeasure,
    dirac,
    doubleton_dirac,
    from_amplitude,
    from_full_table,
    ordinary_measure,
    recompose,
)
from .sampling import (
    random_amplitude_measure,
    random_nonneg_combination,
    random_outcome_function,
    random_q_measure,
    random_signed_q_measure,
)
from .space import (
    Event,
    OutcomeFunction,
    OutcomeSpace,
    Rational,
    format_rational,
    parse_rational,
)
from .transfer import (
    TransferMeasure,
    TransferResult,
    certificate_refutes,
    select_logic,
    support_is_quadratic,
    transfer_constructive,
    transfer_feasible,
    two_point_additive_transfer,
)
from .verify import CheckResult, run_checks

__version__ = "0.1.0"

__all__ = [
    "CanonicalSimpleForm",
    "CheckResult",
    "ClassicalityReport",
    "Coevent",
    "CoeventClass",
    "ComplexAmplitude",
    "Decomposition",
    "Event",
    "InputError",
    "Integrand",
    "Interval",
    "LogicKind",
    "OutcomeFunction",
    "OutcomeSpace",
    "PureQMeasure",
    "QMeasureFlag",
    "QuadratureConfig",
    "QuantumMeasureError",
    "Rational",
    "ResourceCapError",
    "SignedQMeasure",
    "SolverDefectError",
    "Subalgebra",
    "SubalgebraCheck",
    "SymmetricSignedMeasure",
    "TransferMeasure",
    "TransferResult",
    "canonical_form",
    "center",
    "center_subdomains",
    "certificate_refutes",
    "check_subalgebra",
    "classical_domains",
    "classify",
    "closed_form",
    "coevent_to_measure",
    "constant_true",
    "dirac",
    "doubleton_dirac",
    "enumerate_logic",
    "enumerate_pure",
    "enumerate_subalgebras",
    "evaluation_map",
    "exp_closed_form",
    "extremal_defect",
    "format_rational",
    "from_amplitude",
    "from_full_table",
    "from_monomials",
    "integrate",
    "integrate_general",
    "integrate_monotone",
    "inverse_power_closed_form",
    "is_classical_subdomain",
    "is_extremal",
    "is_pure",
    "is_pure_coevent",
    "logic_size",
    "measure_to_coevent",
    "ordinary_measure",
    "parse_coevent",
    "parse_rational",
    "polytope_vertices",
    "power_closed_form",
    "pure_decomposition",
    "purity_defect",
    "q_integral",
    "q_integral_min_form",
    "q_integral_over_event",
    "q_integral_signed",
    "random_amplitude_measure",
    "random_nonneg_combination",
    "random_outcome_function",
    "random_q_measure",
    "random_signed_q_measure",
    "recompose",
    "restriction_is_additive",
    "run_checks",
    "select_logic",
    "squared_length",
    "subset_xor_transform",
    "support_is_quadratic",
    "transfer_constructive",
    "transfer_feasible",
    "two_point_additive_transfer",
    "zero_coevent",
]
