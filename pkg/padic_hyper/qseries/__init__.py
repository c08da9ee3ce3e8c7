"""
Integer q-series and the eta-quotient newforms used by the verifier.
"""

from .cache import CACHE_VERSION, cache_file, cache_load, cache_store
from .forms import (
    F1_FACTORS,
    FORMS,
    FormName,
    ModularForms,
    cached_expansion,
    expand_f1,
    expand_g,
    expand_g_part,
    g_factors,
    get_forms,
    hecke_relation_holds,
    twist_m4,
    weil_bound_holds,
    weil_certifies,
)
from .series import ExpansionMethod, QSeries, eta_like_product, eta_prefactor, euler_product

__all__ = [
    "CACHE_VERSION",
    "F1_FACTORS",
    "FORMS",
    "ExpansionMethod",
    "FormName",
    "ModularForms",
    "QSeries",
    "cache_file",
    "cache_load",
    "cache_store",
    "cached_expansion",
    "eta_like_product",
    "eta_prefactor",
    "euler_product",
    "expand_f1",
    "expand_g",
    "expand_g_part",
    "g_factors",
    "get_forms",
    "hecke_relation_holds",
    "twist_m4",
    "weil_bound_holds",
    "weil_certifies",
]
