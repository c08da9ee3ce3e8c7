"""
p-adic gamma tables, Teichmuller lifts and the gamma-side identities.
"""

from .identities import (
    duplication_args,
    duplication_floors_agree,
    duplication_sides,
    multiplication_args,
    multiplication_sides,
    reflection_args,
    reflection_sides,
)
from .tables import (
    H_ARGS,
    S_ARGS,
    GammaTable,
    TeichTable,
    build_gamma_table,
    build_teich_table,
    char_value,
    checkpoint,
    gamma_int,
    gamma_p,
    norm_const_h,
    norm_const_pair,
    norm_const_s,
    pair_args,
    pair_sign_formula,
    quadratic_char,
    reflection_sign,
    sign_formula_s,
    sign_from_reflection_h,
    teich,
    teich_pow,
)

__all__ = [
    "H_ARGS",
    "S_ARGS",
    "GammaTable",
    "TeichTable",
    "build_gamma_table",
    "build_teich_table",
    "char_value",
    "checkpoint",
    "duplication_args",
    "duplication_floors_agree",
    "duplication_sides",
    "gamma_int",
    "gamma_p",
    "multiplication_args",
    "multiplication_sides",
    "norm_const_h",
    "norm_const_pair",
    "norm_const_s",
    "pair_args",
    "pair_sign_formula",
    "quadratic_char",
    "reflection_args",
    "reflection_sides",
    "reflection_sign",
    "sign_formula_s",
    "sign_from_reflection_h",
    "teich",
    "teich_pow",
]
