"""
The p-adic hypergeometric function nGn.

    nGn[a; b | s]_p = -1/(p-1) * sum_{j=0}^{p-2} (-1)^{jn} omega^-j(s)
        * prod_i Gamma_p(<a_i - j/(p-1)>)/Gamma_p(<a_i>)
                 Gamma_p(<-b_i + j/(p-1)>)/Gamma_p(<-b_i>)
                 (-p)^(-floor(<a_i> - j/(p-1)) - floor(<-b_i> + j/(p-1)))

Everything except omega^-j(s) is independent of s, so a prepared evaluation
stores one (valuation, unit) coefficient per j and answers any s in O(p).
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterable, Literal, Sequence

from padic_hyper.errors import DenominatorDivisibleByP
from padic_hyper.gamma import (
    GammaTable,
    TeichTable,
    build_gamma_table,
    build_teich_table,
    gamma_p,
    teich,
)
from padic_hyper.padic import PadicNum, as_rat, frac_floor, require_odd_prime

logger = logging.getLogger(__name__)

PrecisionPolicy = Literal["tight", "conservative"]


@dataclass(frozen=True, slots=True)
class GnParams:
    a: tuple[Fraction, ...]
    b: tuple[Fraction, ...]
    s: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", tuple(as_rat(x) for x in self.a))
        object.__setattr__(self, "b", tuple(as_rat(x) for x in self.b))
        if len(self.a) != len(self.b) or not self.a:
            raise ValueError(f"need n >= 1 upper and lower parameters, got {len(self.a)} and {len(self.b)}")

    @property
    def n(self) -> int:
        return len(self.a)

    def at(self, s: int) -> GnParams:
        return replace(self, s=s)

    def label(self) -> str:
        upper = ",".join(str(x) for x in self.a)
        lower = ",".join(str(x) for x in self.b)
        return f"{self.n}G{self.n}[{upper};{lower}]"


def check_params(params: GnParams, p: int) -> None:
    for x in params.a + params.b:
        if x.denominator % p == 0:
            raise DenominatorDivisibleByP(f"parameter {x} of {params.label()} is not in Z_{p}")


def _layout(params: GnParams, p: int) -> list[tuple[list[Fraction], int]]:
    """Per j: the gamma arguments of the numerator and the (-p) exponent."""
    rows = []
    uppers = [frac_floor(x)[0] for x in params.a]
    lowers = [frac_floor(-x)[0] for x in params.b]
    for j in range(p - 1):
        t = Fraction(j, p - 1)
        args, exponent = [], 0
        for c in uppers:
            frac, floor = frac_floor(c - t)
            args.append(frac)
            exponent -= floor
        for c in lowers:
            frac, floor = frac_floor(c + t)
            args.append(frac)
            exponent -= floor
        rows.append((args, exponent))
    return rows


def gamma_arguments(params: GnParams, p: int) -> set[Fraction]:
    """Every Gamma_p argument an evaluation at p touches."""
    check_params(params, p)
    args = {frac_floor(x)[0] for x in params.a} | {frac_floor(-x)[0] for x in params.b}
    for row, _ in _layout(params, p):
        args.update(row)
    return args


def min_term_valuation(params: GnParams, p: int) -> int:
    return min(exponent for _, exponent in _layout(params, p))


def working_precision(
    params: GnParams, p: int, K_target: int, policy: PrecisionPolicy = "tight"
) -> int:
    if policy == "conservative":
        return K_target + params.n + 1
    return K_target + max(0, -min_term_valuation(params, p))


@dataclass(frozen=True, slots=True)
class PreparedG:
    params: GnParams
    p: int
    K: int
    base: int
    coefficients: tuple[tuple[int, int], ...] = field(repr=False)
    teich_table: TeichTable = field(repr=False)

    @property
    def absprec(self) -> int:
        return self.base + self.K

    def at(self, s: int) -> PadicNum:
        p, modulus = self.p, self.p**self.K
        if s % p == 0:
            return PadicNum.zero(p, self.absprec)
        step = pow(teich(self.teich_table, s), -1, modulus) % modulus
        character = 1
        total = 0
        for shift, unit in self.coefficients:
            if shift < self.K:
                total += unit * character * p**shift
            character = character * step % modulus
        total = total * -pow(p - 1, -1, modulus) % modulus
        return PadicNum.from_parts(p, self.base, total, self.K)


def prepare_nGn(
    params: GnParams,
    p: int,
    K_target: int,
    gamma: GammaTable,
    teich_table: TeichTable,
    *,
    policy: PrecisionPolicy = "tight",
) -> PreparedG:
    """Fold the s-independent part of every term into one coefficient per j."""
    check_params(params, p)
    K = working_precision(params, p, K_target, policy)
    if gamma.K < K or teich_table.K < K:
        raise ValueError(f"{params.label()} at p={p} needs tables mod {p}^{K}, have {gamma.K}/{teich_table.K}")
    gamma = gamma.reduced(K)
    modulus = p**K
    n = params.n

    denominator = 1
    for x in params.a:
        denominator = denominator * gamma_p(gamma, frac_floor(x)[0]).unit % modulus
    for x in params.b:
        denominator = denominator * gamma_p(gamma, frac_floor(-x)[0]).unit % modulus
    inverse = pow(denominator, -1, modulus)

    rows = _layout(params, p)
    base = min(exponent for _, exponent in rows)
    coefficients = []
    for j, (args, exponent) in enumerate(rows):
        unit = inverse
        for x in args:
            unit = unit * gamma_p(gamma, x).unit % modulus
        if (j * n + exponent) % 2:
            unit = (-unit) % modulus
        coefficients.append((exponent - base, unit))
    logger.debug("prepared %s at p=%d mod %d^%d (base valuation %d)", params.label(), p, p, K, base)
    return PreparedG(params, p, K, base, tuple(coefficients), teich_table.reduced(K))


def evaluate_nGn(
    params: GnParams,
    p: int,
    K_target: int,
    *,
    gamma: GammaTable | None = None,
    teich_table: TeichTable | None = None,
    policy: PrecisionPolicy = "tight",
    max_bits: int = 64,
) -> PadicNum:
    """nGn[a; b | s]_p known at least mod p^K_target."""
    require_odd_prime(p)
    if params.s % p == 0:
        check_params(params, p)
        return PadicNum.zero(p, K_target)
    K = working_precision(params, p, K_target, policy)
    if gamma is None:
        gamma = build_gamma_table(p, K, gamma_arguments(params, p), max_bits=max_bits)
    if teich_table is None:
        teich_table = build_teich_table(p, K, max_bits=max_bits)
    return prepare_nGn(params, p, K_target, gamma, teich_table, policy=policy).at(params.s)


def _orderings(params: GnParams, rng: random.Random) -> Iterable[GnParams]:
    a, b = list(params.a), list(params.b)
    yield replace(params, a=tuple(reversed(a)), b=tuple(reversed(b)))
    if len(a) > 1:
        swapped = a[:]
        swapped[0], swapped[1] = swapped[1], swapped[0]
        yield replace(params, a=tuple(swapped))
    shuffled_a, shuffled_b = a[:], b[:]
    rng.shuffle(shuffled_a)
    rng.shuffle(shuffled_b)
    yield replace(params, a=tuple(shuffled_a), b=tuple(shuffled_b))
    yield replace(params, a=(a[0] + 1, *a[1:]))
    yield replace(params, b=(b[0] - 1, *b[1:]))


def gn_permutation_check(
    params: GnParams,
    p: int,
    K: int,
    *,
    seed: int = 0,
    policy: PrecisionPolicy = "tight",
    max_bits: int = 64,
) -> bool:
    """Reordering the parameter lists or shifting them by integers leaves nGn unchanged."""
    K_work = working_precision(params, p, K, policy)
    gamma = build_gamma_table(p, K_work, gamma_arguments(params, p), max_bits=max_bits)
    teich_table = build_teich_table(p, K_work, max_bits=max_bits)
    reference = evaluate_nGn(params, p, K, gamma=gamma, teich_table=teich_table, policy=policy)
    rng = random.Random(seed)
    for variant in _orderings(params, rng):
        value = evaluate_nGn(variant, p, K, gamma=gamma, teich_table=teich_table, policy=policy)
        if value != reference:
            logger.warning("%s disagrees with %s at p=%d: %s vs %s", variant.label(), params.label(), p, value, reference)
            return False
    return True


def parse_params(upper: Sequence[str | Fraction], lower: Sequence[str | Fraction], s: int = 1) -> GnParams:
    return GnParams(tuple(as_rat(x) for x in upper), tuple(as_rat(x) for x in lower), s)
