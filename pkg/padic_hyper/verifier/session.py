"""
Per-prime state shared by every identity check run at that prime.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from padic_hyper.charsums import CharSumCtx
from padic_hyper.config import Settings
from padic_hyper.gamma import GammaTable, TeichTable, build_gamma_table, build_teich_table, char_value
from padic_hyper.gfunction import GnParams, PrecisionPolicy, PreparedG, prepare_nGn
from padic_hyper.padic import PadicNum
from padic_hyper.qseries import ModularForms, get_forms

logger = logging.getLogger(__name__)

DEFAULT_D_PAIRS: tuple[tuple[int, int], ...] = ((2, 4), (2, 2), (2, 3), (3, 3), (2, 5))


@dataclass(frozen=True, slots=True)
class VerifyOptions:
    """Everything a worker process needs besides (p, K); must stay picklable."""

    policy: PrecisionPolicy = "tight"
    seed: int = 20240101
    jacobi_exhaustive_p_max: int = 13
    jacobi_random_pairs: int = 200
    d_pairs: tuple[tuple[int, int], ...] = DEFAULT_D_PAIRS
    qseries_nmax: int = 2500
    cache_dir: str | None = None
    max_bits: int = 64

    @classmethod
    def from_settings(cls, settings: Settings, **overrides: Any) -> VerifyOptions:
        values = {
            "policy": settings.work_precision_policy,
            "seed": settings.seed,
            "jacobi_exhaustive_p_max": settings.jacobi_exhaustive_p_max,
            "jacobi_random_pairs": settings.jacobi_random_pairs,
            "qseries_nmax": settings.qseries_nmax,
            "cache_dir": str(settings.cache_dir) if settings.cache_dir else None,
            "max_bits": settings.max_modulus_bits,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


# --- check outcomes ----------------------------------------------------


@dataclass(slots=True)
class Comparison:
    """lhs = rhs claimed mod p^k."""

    case: dict[str, Any]
    lhs: PadicNum
    rhs: PadicNum
    k: int


@dataclass(slots=True)
class Verdict:
    """An exact check decided by the identity itself."""

    case: dict[str, Any]
    ok: bool
    lhs: str
    rhs: str


@dataclass(slots=True)
class Skipped:
    case: dict[str, Any]
    reason: str


Outcome = Comparison | Verdict | Skipped


# --- context -----------------------------------------------------------


@dataclass(slots=True)
class CheckContext:
    """
    Tables for one prime. ``K`` is the precision values are computed at and
    ``target`` the precision claims are compared at; they differ on a retry.
    """

    p: int
    K: int
    target: int
    gamma: GammaTable = field(repr=False)
    teich: TeichTable = field(repr=False)
    options: VerifyOptions
    _prepared: dict[GnParams, PreparedG] = field(default_factory=dict, repr=False)

    @classmethod
    def build(
        cls, p: int, K: int, target: int, args: set[Fraction], sweep_K: int, options: VerifyOptions
    ) -> CheckContext:
        sweep_K = max(sweep_K, K)
        gamma = build_gamma_table(p, sweep_K, args, max_bits=options.max_bits)
        teich = build_teich_table(p, sweep_K, max_bits=options.max_bits)
        logger.debug(f"session p={p} K={K} sweep mod {p}^{sweep_K} with {len(gamma)} gamma values")
        return cls(p, K, target, gamma, teich, options)

    @property
    def gamma_K(self) -> GammaTable:
        return self.gamma.reduced(self.K)

    @property
    def teich_K(self) -> TeichTable:
        return self.teich.reduced(self.K)

    def charsums(self) -> CharSumCtx:
        return CharSumCtx(self.p, self.K, self.teich_K)

    def prepared(self, params: GnParams) -> PreparedG:
        """Prepared nGn with s-independent coefficients, memoised per parameter set."""
        key = params.at(1)
        if key not in self._prepared:
            self._prepared[key] = prepare_nGn(key, self.p, self.K, self.gamma, self.teich, policy=self.options.policy)
        return self._prepared[key]

    def G(self, params: GnParams, s: int | None = None) -> PadicNum:
        return self.prepared(params).at(params.s if s is None else s)

    # Character values and exact constants carry the full sweep precision so
    # that multiplying them into a G value never truncates its unit digits.

    def char(self, x: int, j: int) -> PadicNum:
        """omega^j(x) as a p-adic number, zero at x = 0."""
        return PadicNum.from_parts(self.p, 0, char_value(self.teich, x, j), self.teich.K)

    def quad(self, x: int) -> PadicNum:
        return self.char(x, (self.p - 1) // 2)

    def const(self, x: int | Fraction) -> PadicNum:
        return PadicNum.from_rat(x, self.p, self.teich.K)

    def forms(self) -> ModularForms:
        return get_forms(self.options.qseries_nmax, self.options.cache_dir)
