"""Exact-arithmetic toolkit for lecture hall cones: Gorenstein decisions,
weight generating functions, h*-vectors, and the gcd structure of
second-order recurrence sequences.
"""

from .enumeration import (
    DEFAULT_NODE_BUDGET,
    BudgetExceeded,
    CrossCheckReport,
    HStarVector,
    cross_check_gorenstein,
    denominator_exponents,
    detect_product_form,
    ehrhart_counts,
    h_star,
    node_budget,
    numerator_H,
    weight_series,
)
from .exact_arith import (
    DensePoly,
    TruncatedSeries,
    is_palindromic,
    is_unimodal,
    monomial_complement,
    product_form_series,
    series_mul_poly,
)
from .gcd_structure import (
    GcdProfile,
    HorizonTooSmallError,
    RatioTable,
    ThresholdVerdict,
    failure_threshold_check,
    f_sequence,
    find_n0,
    gcd_profile,
    ratio_table,
)
from .gorenstein import (
    GorensteinResult,
    SingularMatrixError,
    TriangularCone,
    ell_sequence_point,
    gorenstein_fail_index,
    greedy_interior_point,
    lecture_hall_cone,
    lecture_hall_gorenstein,
    parse_matrix,
    simple_cone_gorenstein,
    u_generated_point,
)
from .sequences import (
    CoprimalityError,
    SequenceSpec,
    SpecParseError,
    generate_from_u,
    generate_kl,
    generate_recurrence,
    kl_product_exponents,
    one_mod_k,
    parse_sequence_spec,
    recognize_u_generated,
    validate_positivity,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_NODE_BUDGET",
    "BudgetExceeded",
    "CoprimalityError",
    "CrossCheckReport",
    "DensePoly",
    "GcdProfile",
    "GorensteinResult",
    "HStarVector",
    "HorizonTooSmallError",
    "RatioTable",
    "SequenceSpec",
    "SingularMatrixError",
    "SpecParseError",
    "ThresholdVerdict",
    "TriangularCone",
    "TruncatedSeries",
    "cross_check_gorenstein",
    "denominator_exponents",
    "detect_product_form",
    "ehrhart_counts",
    "ell_sequence_point",
    "f_sequence",
    "failure_threshold_check",
    "find_n0",
    "gcd_profile",
    "generate_from_u",
    "generate_kl",
    "generate_recurrence",
    "gorenstein_fail_index",
    "greedy_interior_point",
    "h_star",
    "is_palindromic",
    "is_unimodal",
    "kl_product_exponents",
    "lecture_hall_cone",
    "lecture_hall_gorenstein",
    "monomial_complement",
    "node_budget",
    "numerator_H",
    "one_mod_k",
    "parse_matrix",
    "parse_sequence_spec",
    "product_form_series",
    "ratio_table",
    "recognize_u_generated",
    "series_mul_poly",
    "simple_cone_gorenstein",
    "u_generated_point",
    "validate_positivity",
    "weight_series",
]
