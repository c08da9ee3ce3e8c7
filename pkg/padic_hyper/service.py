"""
One-shot computations behind the command line and the HTTP routes.
"""

from __future__ import annotations

import logging
import re
from fractions import Fraction
from typing import Literal, Sequence

from padic_hyper.charsums import CharSumCtx, jacobi_args, jacobi_sum, jacobi_via_gamma
from padic_hyper.config import Settings
from padic_hyper.gamma import build_gamma_table, build_teich_table, gamma_p, teich_pow
from padic_hyper.gfunction import evaluate_nGn, parse_params
from padic_hyper.hyperseries import TruncSeriesSpec, trunc_hyp
from padic_hyper.padic import PadicNum, as_rat
from padic_hyper.qseries import FORMS, FormName, QSeries, get_forms

logger = logging.getLogger(__name__)

JacobiRoute = Literal["gamma", "sum"]

_TRUNC_PATTERN = re.compile(r"^\s*(?:(?P<p>p)\s*(?P<sign>[+-])?\s*(?P<k>\d+)?|(?P<n>\d+))\s*$")


def parse_rationals(text: str | Sequence[str]) -> list[Fraction]:
    """'1/2,1/4,3/4' or ['1/2', '1/4'] as Fractions."""
    items = text.split(",") if isinstance(text, str) else list(text)
    values = [as_rat(item.strip()) for item in items if str(item).strip()]
    if not values:
        raise ValueError("expected at least one rational parameter")
    return values


def parse_trunc(text: str | int, p: int) -> int:
    """Truncation index given as an integer or relative to p ('p-1', 'p', 'p+2')."""
    if isinstance(text, int):
        return text
    match = _TRUNC_PATTERN.match(text)
    if match is None:
        raise ValueError(f"cannot read truncation index {text!r}")
    if match["n"] is not None:
        return int(match["n"])
    offset = int(match["k"] or 0)
    if match["sign"] is None and match["k"] is not None:
        raise ValueError(f"cannot read truncation index {text!r}")
    return p - offset if match["sign"] == "-" else p + offset


class ComputeService:
    def __init__(self, settings: Settings) -> None:
        self.settings = settings

    @property
    def max_bits(self) -> int:
        return self.settings.max_modulus_bits

    def gamma(self, p: int, K: int, arg: str | Fraction) -> PadicNum:
        x = as_rat(arg)
        table = build_gamma_table(p, K, {x}, max_bits=self.max_bits)
        return gamma_p(table, x)

    def teich(self, p: int, K: int, x: int, power: int = 1) -> int:
        table = build_teich_table(p, K, max_bits=self.max_bits)
        return teich_pow(table, x, power)

    def ngn(self, p: int, K: int, a: str | Sequence[str], b: str | Sequence[str], s: int = 1) -> PadicNum:
        params = parse_params(parse_rationals(a), parse_rationals(b), s)
        value = evaluate_nGn(
            params, p, K, policy=self.settings.work_precision_policy, max_bits=self.max_bits
        )
        logger.info(f"{params.label()} at p={p}: {value}")
        return value

    def jacobi(self, p: int, K: int, j1: int, j2: int, via: JacobiRoute = "sum") -> PadicNum:
        """J(omega^j1, omega^j2), either as a character sum or through gamma values."""
        ctx = CharSumCtx.build(p, K, max_bits=self.max_bits)
        if via == "sum":
            return jacobi_sum(ctx, j1, j2)
        gamma = build_gamma_table(p, K, jacobi_args(p), max_bits=self.max_bits)
        # The gamma route computes J(omega^-j1, omega^-j2).
        return jacobi_via_gamma(ctx, gamma, -j1, -j2)

    def fseries(
        self,
        p: int,
        M: int,
        upper: str | Sequence[str],
        lower: str | Sequence[str],
        z: str | int = 1,
        trunc: str | int = "p-1",
    ) -> int:
        spec = TruncSeriesSpec.build(parse_rationals(upper), parse_rationals(lower), z, parse_trunc(trunc, p), p, M)
        return trunc_hyp(spec)

    def eta(self, form: FormName, nmax: int, cache_dir: str | None = None) -> QSeries:
        if form not in FORMS:
            raise ValueError(f"unknown form {form!r}; expected one of {', '.join(FORMS)}")
        cache = cache_dir if cache_dir is not None else self._cache_dir()
        return get_forms(nmax, cache).series(form).truncate(nmax)

    def coef(self, form: FormName, n: int, nmax: int | None = None) -> int:
        forms = get_forms(nmax or self.settings.qseries_nmax, self._cache_dir())
        if form == "f1":
            return forms.coeff_a(n)
        if form == "f2":
            return forms.coeff_c(n)
        if form == "g":
            return forms.coeff_b(n)
        raise ValueError(f"unknown form {form!r}; expected one of {', '.join(FORMS)}")

    def _cache_dir(self) -> str | None:
        return str(self.settings.cache_dir) if self.settings.cache_dir else None
