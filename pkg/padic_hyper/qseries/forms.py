"""
The three weight-4 newforms the supercongruences are anchored to.

    f1 = eta(2z)^4 eta(4z)^4                        level 8,  coefficients a(n)
    f2 = f1 twisted by (-4/.)                       level 16, coefficients c(n)
    g  = g1 + 5 g2 + 20 g3 + 25 g4 + 25 g5          level 25, coefficients b(n)
    g_i = q^i prod (1-q^n)^(5-i) (1-q^5n)^4 (1-q^25n)^(i-1)
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Literal

import numpy as np

from padic_hyper.charsums import kronecker_m4
from padic_hyper.errors import BeyondCache, CorruptCache
from padic_hyper.qseries.cache import cache_file, cache_load, cache_store
from padic_hyper.qseries.series import ExpansionMethod, QSeries, eta_like_product

logger = logging.getLogger(__name__)

FormName = Literal["f1", "f2", "g"]
FORMS: tuple[FormName, ...] = ("f1", "f2", "g")

F1_FACTORS = ((2, 4), (4, 4))
G_WEIGHTS = (1, 5, 20, 25, 25)


def g_factors(i: int) -> tuple[tuple[int, int], ...]:
    return ((1, 5 - i), (5, 4), (25, i - 1))


def expand_f1(nmax: int, method: ExpansionMethod = "pentagonal") -> QSeries:
    return eta_like_product(F1_FACTORS, 1, nmax, method)


def expand_g_part(i: int, nmax: int, method: ExpansionMethod = "pentagonal") -> QSeries:
    if not 1 <= i <= 5:
        raise ValueError(f"g_i is defined for 1 <= i <= 5, got {i}")
    return eta_like_product(g_factors(i), i, nmax, method)


def expand_g(nmax: int, method: ExpansionMethod = "pentagonal") -> QSeries:
    total = QSeries.from_coeffs([], nmax)
    for i, weight in enumerate(G_WEIGHTS, start=1):
        total = total + expand_g_part(i, nmax, method).scale(weight)
    return total


def twist_m4(series: QSeries) -> QSeries:
    """sum kronecker(-4, n) a(n) q^n."""
    chi = np.array([kronecker_m4(n) for n in range(series.nmax + 1)], dtype=np.int64)
    return QSeries(series.coeffs * chi, series.nmax)


def _expand(label: str, nmax: int, method: ExpansionMethod) -> QSeries:
    if label == "f1":
        return expand_f1(nmax, method)
    if label == "g":
        return expand_g(nmax, method)
    raise ValueError(f"no eta expansion for {label!r}")


def cached_expansion(
    label: str, nmax: int, cache_dir: str | Path | None = None, method: ExpansionMethod = "pentagonal"
) -> QSeries:
    """Expand ``label`` to q^nmax, reusing and refreshing a cache file when a directory is given."""
    if cache_dir is None:
        return _expand(label, nmax, method)
    path = cache_file(cache_dir, label)
    if path.exists():
        try:
            stored = cache_load(path, label)
        except CorruptCache:
            logger.warning("discarding unreadable cache %s", path)
        else:
            if stored.nmax >= nmax:
                return stored.truncate(nmax)
            logger.info("cache %s stops at q^%d; re-expanding to q^%d", path, stored.nmax, nmax)
    series = _expand(label, nmax, method)
    cache_store(path, label, series)
    return series


@dataclass(frozen=True, slots=True)
class ModularForms:
    nmax: int
    a: QSeries
    b: QSeries
    c: QSeries

    @classmethod
    def build(cls, nmax: int, cache_dir: str | Path | None = None) -> ModularForms:
        a = cached_expansion("f1", nmax, cache_dir)
        b = cached_expansion("g", nmax, cache_dir)
        return cls(nmax, a, b, twist_m4(a))

    def series(self, form: FormName) -> QSeries:
        if form == "f1":
            return self.a
        if form == "f2":
            return self.c
        if form == "g":
            return self.b
        raise ValueError(f"unknown form {form!r}; expected one of {', '.join(FORMS)}")

    def _coeff(self, series: QSeries, n: int) -> int:
        if n > self.nmax:
            raise BeyondCache(f"coefficient {n} needs an expansion past q^{self.nmax}")
        return series[n]

    def coeff_a(self, n: int) -> int:
        return self._coeff(self.a, n)

    def coeff_b(self, n: int) -> int:
        return self._coeff(self.b, n)

    def coeff_c(self, n: int) -> int:
        return self._coeff(self.c, n)


@lru_cache(maxsize=8)
def get_forms(nmax: int, cache_dir: str | None = None) -> ModularForms:
    return ModularForms.build(nmax, cache_dir)


def weil_bound_holds(value: int, p: int) -> bool:
    """|value| <= 2 p^(3/2), compared exactly."""
    return value * value <= 4 * p**3


def weil_certifies(p: int, k: int) -> bool:
    """Two integers within the weight-4 Weil bound that agree mod p^k are equal."""
    return 16 * p**3 < p ** (2 * k)


def hecke_relation_holds(series: QSeries, p: int) -> bool:
    """a(p^2) = a(p)^2 - p^3 for a weight-4 newform at a good prime."""
    return series[p * p] == series[p] ** 2 - p**3
