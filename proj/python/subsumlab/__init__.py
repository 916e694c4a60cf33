"""Exact subset-sum census over integer partitions."""

from ._subsumlab import (
    achieved_delta,
    asymptotic_log_count,
    census,
    check_aux_inequalities,
    check_conclusion,
    count,
    exponent_table,
    extract_subset,
    forbid_count,
    forbid_scan,
    partitions,
    represent,
    represents,
    represents_full_range,
    theorem2_constants,
    __version__,
)

__all__ = [
    "achieved_delta",
    "asymptotic_log_count",
    "census",
    "check_aux_inequalities",
    "check_conclusion",
    "count",
    "exponent_table",
    "extract_subset",
    "forbid_count",
    "forbid_scan",
    "partitions",
    "represent",
    "represents",
    "represents_full_range",
    "theorem2_constants",
    "__version__",
]
