"""
Finite-precision p-adic arithmetic.
"""

from .core import (
    PadicNum,
    Rat,
    as_rat,
    check_modulus,
    frac_floor,
    pad_add,
    pad_eq_mod,
    pad_inv,
    pad_mul,
    pad_neg,
    pad_pow,
    pad_sum,
    rat_to_residue,
    require_odd_prime,
    valuation,
)

__all__ = [
    "PadicNum",
    "Rat",
    "as_rat",
    "check_modulus",
    "frac_floor",
    "pad_add",
    "pad_eq_mod",
    "pad_inv",
    "pad_mul",
    "pad_neg",
    "pad_pow",
    "pad_sum",
    "rat_to_residue",
    "require_odd_prime",
    "valuation",
]
