"""Exact Feynman diagram counting with a brute-force Wick-contraction oracle.

All counts are returned as Python ``int`` values with no loss of precision.
"""

from ._core import (
    DEFAULT_TERM_BUDGET,
    BudgetExceeded,
    ExactnessError,
    MethodDisagreement,
    OracleCapExceeded,
    arques_walsh,
    bubble_diagrams,
    canonical_form,
    coefficient,
    compositions,
    connected_closed_form,
    connected_recurrence,
    count_compositions,
    count_table,
    distinct_connected,
    double_factorial,
    enumerate_matchings,
    enumerate_vacuum_matchings,
    export_diagram,
    factorial,
    multiset_multiplicity,
    orbit_census,
    total_diagrams,
    verify,
    verify_coefficient_recursion,
    verify_rewrite_identities,
)

__all__ = [
    "DEFAULT_TERM_BUDGET",
    "BudgetExceeded",
    "ExactnessError",
    "MethodDisagreement",
    "OracleCapExceeded",
    "arques_walsh",
    "bubble_diagrams",
    "canonical_form",
    "coefficient",
    "compositions",
    "connected_closed_form",
    "connected_recurrence",
    "count_compositions",
    "count_table",
    "distinct_connected",
    "double_factorial",
    "enumerate_matchings",
    "enumerate_vacuum_matchings",
    "export_diagram",
    "factorial",
    "multiset_multiplicity",
    "orbit_census",
    "total_diagrams",
    "verify",
    "verify_coefficient_recursion",
    "verify_rewrite_identities",
]
