"""
Evaluation of the p-adic hypergeometric function nGn.
"""

from .evaluate import (
    GnParams,
    PrecisionPolicy,
    PreparedG,
    check_params,
    evaluate_nGn,
    gamma_arguments,
    gn_permutation_check,
    min_term_valuation,
    parse_params,
    prepare_nGn,
    working_precision,
)

__all__ = [
    "GnParams",
    "PrecisionPolicy",
    "PreparedG",
    "check_params",
    "evaluate_nGn",
    "gamma_arguments",
    "gn_permutation_check",
    "min_term_valuation",
    "parse_params",
    "prepare_nGn",
    "working_precision",
]
