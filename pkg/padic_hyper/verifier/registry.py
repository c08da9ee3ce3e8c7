"""
The identity registry: one entry per executable claim.

Each entry knows which primes it applies to, which Gamma_p arguments and
table precision it needs at a prime, and how to enumerate its sweep points
as Comparison / Verdict / Skipped outcomes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, product
from typing import Callable, Iterator

from padic_hyper.charsums import (
    jacobi_args,
    jacobi_sum,
    jacobi_via_gamma,
    lemma_args,
    lemma_nonquad_lhs,
    lemma_nonquad_rhs,
    lemma_quad_lhs,
    lemma_quad_rhs,
)
from padic_hyper.errors import UnknownIdentity
from padic_hyper.gamma import (
    H_ARGS,
    S_ARGS,
    duplication_args,
    duplication_floors_agree,
    duplication_sides,
    multiplication_args,
    multiplication_sides,
    norm_const_h,
    norm_const_pair,
    norm_const_s,
    pair_args,
    pair_sign_formula,
    reflection_args,
    reflection_sides,
    sign_formula_s,
    sign_from_reflection_h,
)
from padic_hyper.gfunction import GnParams, gamma_arguments, working_precision
from padic_hyper.hyperseries import TruncSeriesSpec, trunc_hyp
from padic_hyper.padic import PadicNum, pad_eq_mod, pad_sum
from padic_hyper.qseries import hecke_relation_holds, weil_bound_holds, weil_certifies

from .session import CheckContext, Comparison, Outcome, Skipped, Verdict, VerifyOptions

Check = Callable[[CheckContext], Iterator[Outcome]]
ArgsFn = Callable[[int, VerifyOptions], set[Fraction]]
PrecisionFn = Callable[[int, int, VerifyOptions], int]

HALF, QUARTER, THREE_QUARTERS = Fraction(1, 2), Fraction(1, 4), Fraction(3, 4)
FIFTHS = tuple(Fraction(k, 5) for k in range(1, 5))
REDUCTION_POOL = (HALF, QUARTER, THREE_QUARTERS, Fraction(1, 3))


def ones(n: int) -> tuple[Fraction, ...]:
    return (Fraction(1),) * n


HALVES_3G3 = GnParams((HALF,) * 3, ones(3))
QUARTERS_3G3 = GnParams((QUARTER, THREE_QUARTERS, HALF), ones(3))
HALVES_4G4 = GnParams((HALF,) * 4, ones(4))
LEVEL16_4G4 = GnParams((HALF, HALF, QUARTER, THREE_QUARTERS), ones(4))
FIFTHS_4G4 = GnParams(FIFTHS, ones(4))


def odd_prime(p: int) -> bool:
    return p % 2 == 1


def delta(x: int, p: int) -> int:
    """1 if x = 0 in F_p, else 0."""
    return 1 if x % p == 0 else 0


def plus_minus_one(p: int, d: int) -> bool:
    return p % d in (1, d - 1)


def _no_args(p: int, options: VerifyOptions) -> set[Fraction]:
    return set()


def _same_precision(p: int, K: int, options: VerifyOptions) -> int:
    return K


@dataclass(frozen=True, slots=True)
class IdentityCase:
    id: str
    claim: str
    filter_text: str
    free_variables: str
    check: Check
    prime_filter: Callable[[int], bool] = odd_prime
    gamma_args: ArgsFn = _no_args
    sweep_precision: PrecisionFn = _same_precision
    # Set when the claim only holds mod p^e; such entries need K_target >= e.
    congruence_exponent: int | None = None


REGISTRY: dict[str, IdentityCase] = {}


def identity(
    id: str,
    claim: str,
    *,
    free_variables: str = "none",
    filter_text: str = "odd p",
    prime_filter: Callable[[int], bool] = odd_prime,
    gamma_args: ArgsFn = _no_args,
    sweep_precision: PrecisionFn = _same_precision,
    congruence_exponent: int | None = None,
) -> Callable[[Check], Check]:
    def register(check: Check) -> Check:
        if id in REGISTRY:
            raise ValueError(f"identity {id!r} registered twice")
        REGISTRY[id] = IdentityCase(
            id,
            claim,
            filter_text,
            free_variables,
            check,
            prime_filter,
            gamma_args,
            sweep_precision,
            congruence_exponent,
        )
        return check

    return register


def get_identity(id: str) -> IdentityCase:
    try:
        return REGISTRY[id]
    except KeyError:
        raise UnknownIdentity(f"unknown identity {id!r}; try one of: {', '.join(REGISTRY)}") from None


def identity_order(id: str) -> int:
    return list(REGISTRY).index(id)


def _g_args(*params: GnParams) -> ArgsFn:
    def args(p: int, options: VerifyOptions) -> set[Fraction]:
        out: set[Fraction] = set()
        for g in params:
            out |= gamma_arguments(g, p)
        return out

    return args


def _g_precision(*params: GnParams) -> PrecisionFn:
    def precision(p: int, K: int, options: VerifyOptions) -> int:
        return max(working_precision(g, p, K, options.policy) for g in params)

    return precision


def _union(*fns: ArgsFn) -> ArgsFn:
    def args(p: int, options: VerifyOptions) -> set[Fraction]:
        out: set[Fraction] = set()
        for fn in fns:
            out |= fn(p, options)
        return out

    return args


def _const_args(values: set[Fraction]) -> ArgsFn:
    return lambda p, options: set(values)


def _pairs(ctx: CheckContext, id: str, lo: int, hi: int, exclude: tuple[int, int] | None = None) -> list[tuple[int, int]]:
    """Every pair in [lo, hi]^2 for small p, a seeded sorted sample above."""
    options = ctx.options
    pairs = [pair for pair in product(range(lo, hi + 1), repeat=2) if pair != exclude]
    if ctx.p <= options.jacobi_exhaustive_p_max or len(pairs) <= options.jacobi_random_pairs:
        return pairs
    rng = random.Random(f"{options.seed}:{id}:{ctx.p}")
    return sorted(rng.sample(pairs, options.jacobi_random_pairs))


def _series(upper: tuple[Fraction, ...], p: int, M: int = 3) -> PadicNum:
    spec = TruncSeriesSpec(upper, ones(len(upper) - 1), Fraction(1), p - 1, p, M)
    return PadicNum.from_parts(p, 0, trunc_hyp(spec), M)


def _label(values: tuple[Fraction, ...]) -> str:
    return ",".join(str(x) for x in values)


# --- gamma and teichmuller ---------------------------------------------


@identity(
    "gamma-reflection",
    "Gamma_p(x) Gamma_p(1-x) = (-1)^x0",
    free_variables="x = r/(p-1), 0 <= r <= p-1",
    gamma_args=lambda p, options: reflection_args(p),
)
def check_reflection(ctx: CheckContext) -> Iterator[Outcome]:
    gamma = ctx.gamma_K
    for r in range(ctx.p):
        x = Fraction(r, ctx.p - 1)
        lhs, rhs = reflection_sides(gamma, x)
        yield Comparison({"x": str(x)}, lhs, rhs, ctx.target)


def _mult_orders(p: int) -> list[int]:
    return [m for m in (2, 3, 4) if m % p]


@identity(
    "gamma-mult",
    "prod_h Gamma_p((x+h)/m) = omega(m^((1-x)(1-p))) Gamma_p(x) prod_h Gamma_p(h/m)",
    free_variables="m in {2,3,4} with p not dividing m; x = r/(p-1), 0 <= r <= p-1",
    gamma_args=lambda p, options: set().union(*(multiplication_args(p, m) for m in _mult_orders(p))),
)
def check_multiplication(ctx: CheckContext) -> Iterator[Outcome]:
    gamma, teich = ctx.gamma_K, ctx.teich_K
    for m in _mult_orders(ctx.p):
        for r in range(ctx.p):
            lhs, rhs = multiplication_sides(gamma, teich, m, r)
            yield Comparison({"m": m, "r": r}, lhs, rhs, ctx.target)


@identity(
    "gamma-dup",
    "Gamma_p(<1/2-2t>) Gamma_p(1/2) omega^((p-1)/2)(2) omega^-j(4) = Gamma_p(<1/4-t>) Gamma_p(<3/4-t>), t = j/(p-1)",
    free_variables="0 <= j <= p-2",
    gamma_args=lambda p, options: duplication_args(p),
)
def check_duplication(ctx: CheckContext) -> Iterator[Outcome]:
    gamma, teich = ctx.gamma_K, ctx.teich_K
    for j in range(ctx.p - 1):
        if not duplication_floors_agree(ctx.p, j):
            yield Verdict({"j": j, "part": "floors"}, False, "floor(1/2-2t)", "floor(1/4-t)+floor(3/4-t)")
            continue
        lhs, rhs = duplication_sides(gamma, teich, j)
        yield Comparison({"j": j}, lhs, rhs, ctx.target)


@identity(
    "teich-hom",
    "omega(xy) = omega(x) omega(y)",
    free_variables="x, y in F_p^*; all pairs for small p, a seeded sample above",
)
def check_teich_hom(ctx: CheckContext) -> Iterator[Outcome]:
    for x, y in _pairs(ctx, "teich-hom", 1, ctx.p - 1):
        yield Comparison({"x": x, "y": y}, ctx.char(x * y, 1), ctx.char(x, 1) * ctx.char(y, 1), ctx.target)


@identity(
    "s-sign",
    "s(p) = (-1)^(floor((p-1)/4)+floor((p-1)/2)) = omega^((p-1)/2)(2)",
    gamma_args=_const_args(S_ARGS),
)
def check_s_sign(ctx: CheckContext) -> Iterator[Outcome]:
    s = norm_const_s(ctx.gamma)
    formula = PadicNum.sign(ctx.p, sign_formula_s(ctx.p) < 0, ctx.K)
    yield Comparison({"against": "sign-formula"}, s, formula, ctx.target)
    yield Comparison({"against": "omega-half(2)"}, s, ctx.quad(2), ctx.target)


@identity(
    "h-sign",
    "h(p) = Gamma_p(1/5) Gamma_p(2/5) Gamma_p(3/5) Gamma_p(4/5) = (-1)^(x0(1/5)+x0(2/5))",
    filter_text="odd p != 5",
    prime_filter=lambda p: odd_prime(p) and p != 5,
    gamma_args=_const_args(H_ARGS),
)
def check_h_sign(ctx: CheckContext) -> Iterator[Outcome]:
    h = norm_const_h(ctx.gamma)
    rhs = PadicNum.sign(ctx.p, sign_from_reflection_h(ctx.p) < 0, ctx.K)
    yield Comparison({}, h, rhs, ctx.target)


# --- character sums ----------------------------------------------------


@identity(
    "lemma-quad",
    "Gamma-side quotient = -sum_{t=2}^{p-1} omega^-j(4(1-t)/t^2)",
    free_variables="0 < j < p-1",
    gamma_args=lambda p, options: lemma_args(p),
)
def check_lemma_quad(ctx: CheckContext) -> Iterator[Outcome]:
    cs = ctx.charsums()
    for j in range(1, ctx.p - 1):
        yield Comparison({"j": j}, lemma_quad_lhs(cs, ctx.gamma, j), lemma_quad_rhs(cs, j), ctx.target)


@identity(
    "lemma-nonquad",
    "Gamma-side quotient = -sum_{t=2}^{p-1} omega^j(-t) omega^((p-1)/2)(t(t-1))",
    free_variables="0 <= j < p-1",
    gamma_args=lambda p, options: lemma_args(p),
)
def check_lemma_nonquad(ctx: CheckContext) -> Iterator[Outcome]:
    cs = ctx.charsums()
    for j in range(ctx.p - 1):
        yield Comparison({"j": j}, lemma_nonquad_lhs(cs, ctx.gamma, j), lemma_nonquad_rhs(cs, j), ctx.target)


@identity(
    "jacobi-gk",
    "J(omega^-j1, omega^-j2) via Gross-Koblitz = direct Jacobi sum",
    free_variables="(j1, j2) in [0, p-2]^2 minus (0, 0); all pairs for small p, a seeded sample above",
    gamma_args=lambda p, options: jacobi_args(p),
)
def check_jacobi(ctx: CheckContext) -> Iterator[Outcome]:
    cs = ctx.charsums()
    for j1, j2 in _pairs(ctx, "jacobi-gk", 0, ctx.p - 2, exclude=(0, 0)):
        lhs = jacobi_via_gamma(cs, ctx.gamma, j1, j2)
        rhs = jacobi_sum(cs, -j1, -j2)
        yield Comparison({"j1": j1, "j2": j2}, lhs, rhs, ctx.target)


# --- nGn transformations -----------------------------------------------


@identity(
    "thm-quad-transform",
    "3G3[1/2,1/2,1/2|1/x] = delta(1+x) p omega^((p-1)/2)(-1) "
    "+ s(p) omega^((p-1)/2)(2(1-x)) 3G3[1/4,3/4,1/2|-(1-x)^2/(4x)]",
    free_variables="x in F_p^*, x != 1",
    gamma_args=_union(_g_args(HALVES_3G3, QUARTERS_3G3), _const_args(S_ARGS)),
    sweep_precision=_g_precision(HALVES_3G3, QUARTERS_3G3),
)
def check_quad_transform(ctx: CheckContext) -> Iterator[Outcome]:
    p = ctx.p
    s = norm_const_s(ctx.gamma)
    for x in range(2, p):
        lhs = ctx.G(HALVES_3G3, pow(x, -1, p))
        arg = -(1 - x) ** 2 * pow(4 * x, -1, p) % p
        terms = [s * ctx.quad(2 * (1 - x)) * ctx.G(QUARTERS_3G3, arg)]
        if delta(1 + x, p):
            terms.append(ctx.const(p) * ctx.quad(-1))
        yield Comparison({"x": x}, lhs, pad_sum(terms), ctx.target)


def _reduction_lists(p: int) -> list[tuple[Fraction, ...]]:
    pool = [a for a in REDUCTION_POOL if a.denominator % p]
    return [a for n in (1, 2, 3) for a in combinations_with_replacement(pool, n)]


def _reduction_params(p: int) -> list[GnParams]:
    out = []
    for a in _reduction_lists(p):
        out.append(GnParams(a, ones(len(a))))
        out.append(GnParams((*a, HALF), ones(len(a) + 1)))
    return out


@identity(
    "thm-reduction",
    "(n+1)G(n+1)[a,1/2|s] = -sum_{t=2}^{p-1} nGn[a|st] omega^((p-1)/2)(1-t)",
    free_variables="n in {1,2,3}; a a multiset from {1/2,1/4,3/4,1/3} in Z_p; s in F_p^*",
    gamma_args=lambda p, options: _g_args(*_reduction_params(p))(p, options),
    sweep_precision=lambda p, K, options: _g_precision(*_reduction_params(p))(p, K, options),
)
def check_reduction(ctx: CheckContext) -> Iterator[Outcome]:
    p = ctx.p
    quad = {t: ctx.quad(1 - t) for t in range(2, p)}
    for a in _reduction_lists(p):
        inner = ctx.prepared(GnParams(a, ones(len(a))))
        outer = ctx.prepared(GnParams((*a, HALF), ones(len(a) + 1)))
        values = {u: inner.at(u) for u in range(1, p)}
        for s in range(1, p):
            rhs = -pad_sum(values[s * t % p] * quad[t] for t in range(2, p))
            yield Comparison({"a": _label(a), "s": s}, outer.at(s), rhs, ctx.target)


def _inversion_params(n: int) -> tuple[GnParams, GnParams]:
    lhs = GnParams((HALF,) * (n - 2) + (QUARTER, THREE_QUARTERS), ones(n))
    rhs = GnParams((HALF,) * n, ones(n - 2) + (QUARTER, THREE_QUARTERS))
    return lhs, rhs


INVERSION_ORDERS = (2, 3, 4)
_INVERSION = tuple(g for n in INVERSION_ORDERS for g in _inversion_params(n))


@identity(
    "thm-inversion",
    "nGn[1/2..,1/4,3/4;1..|s] = p omega^((p-1)/2)((-1)^(n+1) s) nGn[1/2..;1..,1/4,3/4|1/s]",
    free_variables="n in {2,3,4}; s in F_p^*",
    gamma_args=_g_args(*_INVERSION),
    sweep_precision=_g_precision(*_INVERSION),
)
def check_inversion(ctx: CheckContext) -> Iterator[Outcome]:
    p = ctx.p
    for n in INVERSION_ORDERS:
        left, right = _inversion_params(n)
        for s in range(1, p):
            rhs = ctx.const(p) * ctx.quad((-1) ** (n + 1) * s) * ctx.G(right, pow(s, -1, p))
            yield Comparison({"n": n, "s": s}, ctx.G(left, s), rhs, ctx.target)


@identity(
    "thm-main-id",
    "4G4[1/2,1/2,1/4,3/4|1] - s(p) p = omega^((p-1)/2)(-1) (4G4[1/2,1/2,1/2,1/2|1] - p)",
    gamma_args=_union(_g_args(HALVES_4G4, LEVEL16_4G4), _const_args(S_ARGS)),
    sweep_precision=_g_precision(HALVES_4G4, LEVEL16_4G4),
)
def check_main_identity(ctx: CheckContext) -> Iterator[Outcome]:
    p = ctx.p
    s = norm_const_s(ctx.gamma)
    lhs = pad_sum([ctx.G(LEVEL16_4G4), -(s * ctx.const(p))])
    rhs = ctx.quad(-1) * pad_sum([ctx.G(HALVES_4G4), ctx.const(-p)])
    yield Comparison({}, lhs, rhs, ctx.target)


# --- modular anchors ---------------------------------------------------


def _anchor(ctx: CheckContext, lhs: PadicNum, coefficient: int) -> Comparison:
    certified = weil_certifies(ctx.p, ctx.target) and weil_bound_holds(coefficient, ctx.p)
    return Comparison({"weil_certified": certified}, lhs, ctx.const(coefficient), ctx.target)


@identity(
    "ao-level8",
    "4G4[1/2,1/2,1/2,1/2|1] - p = a(p)",
    gamma_args=_g_args(HALVES_4G4),
    sweep_precision=_g_precision(HALVES_4G4),
)
def check_ao_level8(ctx: CheckContext) -> Iterator[Outcome]:
    lhs = pad_sum([ctx.G(HALVES_4G4), ctx.const(-ctx.p)])
    yield _anchor(ctx, lhs, ctx.forms().coeff_a(ctx.p))


@identity(
    "thm-gtoc-level16",
    "4G4[1/2,1/2,1/4,3/4|1] - s(p) p = c(p)",
    gamma_args=_union(_g_args(LEVEL16_4G4), _const_args(S_ARGS)),
    sweep_precision=_g_precision(LEVEL16_4G4),
)
def check_gtoc(ctx: CheckContext) -> Iterator[Outcome]:
    s = norm_const_s(ctx.gamma)
    lhs = pad_sum([ctx.G(LEVEL16_4G4), -(s * ctx.const(ctx.p))])
    yield _anchor(ctx, lhs, ctx.forms().coeff_c(ctx.p))


@identity(
    "kilbourn-super",
    "4F3[1/2,1/2,1/2,1/2;1,1,1|1]_{p-1} = a(p) mod p^3",
    congruence_exponent=3,
)
def check_kilbourn(ctx: CheckContext) -> Iterator[Outcome]:
    p = ctx.p
    yield Comparison({}, _series((HALF,) * 4, p), PadicNum.from_int(ctx.forms().coeff_a(p), p, 3), 3)


@identity(
    "rv3-super",
    "4F3[1/2,1/2,1/4,3/4;1,1,1|1]_{p-1} = c(p) mod p^3",
    congruence_exponent=3,
)
def check_rv3(ctx: CheckContext) -> Iterator[Outcome]:
    p = ctx.p
    upper = (HALF, HALF, QUARTER, THREE_QUARTERS)
    yield Comparison({}, _series(upper, p), PadicNum.from_int(ctx.forms().coeff_c(p), p, 3), 3)


def _admitted_pairs(p: int, options: VerifyOptions) -> list[tuple[int, int]]:
    return [(d1, d2) for d1, d2 in options.d_pairs if plus_minus_one(p, d1) and plus_minus_one(p, d2)]


def _pair_upper(d1: int, d2: int) -> tuple[Fraction, ...]:
    return (Fraction(1, d1), 1 - Fraction(1, d1), Fraction(1, d2), 1 - Fraction(1, d2))


def _pair_params(p: int, options: VerifyOptions) -> list[GnParams]:
    return [GnParams(_pair_upper(d1, d2), ones(4)) for d1, d2 in _admitted_pairs(p, options)]


def _pair_gamma_args(p: int, options: VerifyOptions) -> set[Fraction]:
    out: set[Fraction] = set()
    for (d1, d2), params in zip(_admitted_pairs(p, options), _pair_params(p, options)):
        out |= gamma_arguments(params, p) | pair_args(d1, d2)
    return out


def _pair_precision(p: int, K: int, options: VerifyOptions) -> int:
    return max([K] + [working_precision(g, p, K, options.policy) for g in _pair_params(p, options)])


@identity(
    "thm-4g1",
    "4G4[1/d1,1-1/d1,1/d2,1-1/d2|1] = 4F3[same;1,1,1|1]_{p-1} + s(p) p mod p^3",
    free_variables="(d1, d2) from the configured pair set; p = +-1 mod d1 and mod d2",
    gamma_args=_pair_gamma_args,
    sweep_precision=_pair_precision,
    congruence_exponent=3,
)
def check_4g1(ctx: CheckContext) -> Iterator[Outcome]:
    p = ctx.p
    admitted = set(_admitted_pairs(p, ctx.options))
    for d1, d2 in ctx.options.d_pairs:
        case = {"d1": d1, "d2": d2}
        if (d1, d2) not in admitted:
            yield Skipped(case, "filter")
            continue
        s = norm_const_pair(ctx.gamma_K, d1, d2)
        sign = PadicNum.sign(p, pair_sign_formula(p, d1, d2) < 0, ctx.K)
        if not pad_eq_mod(s, sign, ctx.K):
            yield Skipped(case, "sign-hypothesis")
            continue
        upper = _pair_upper(d1, d2)
        rhs = pad_sum([_series(upper, p), s * ctx.const(p)])
        yield Comparison(case, ctx.G(GnParams(upper, ones(4))), rhs, 3)


@identity(
    "dmc-level25-g",
    "4G4[1/5,2/5,3/5,4/5|1] - h(p) p = b(p)",
    filter_text="odd p != 5",
    prime_filter=lambda p: odd_prime(p) and p != 5,
    gamma_args=_union(_g_args(FIFTHS_4G4), _const_args(H_ARGS)),
    sweep_precision=_g_precision(FIFTHS_4G4),
)
def check_dmc_g(ctx: CheckContext) -> Iterator[Outcome]:
    h = norm_const_h(ctx.gamma)
    lhs = pad_sum([ctx.G(FIFTHS_4G4), -(h * ctx.const(ctx.p))])
    yield _anchor(ctx, lhs, ctx.forms().coeff_b(ctx.p))


def check_dmc_f(ctx: CheckContext) -> Iterator[Outcome]:
    p = ctx.p
    yield Comparison({}, _series(FIFTHS, p), PadicNum.from_int(ctx.forms().coeff_b(p), p, 3), 3)


identity(
    "dmc-level25-f",
    "4F3[1/5,2/5,3/5,4/5;1,1,1|1]_{p-1} = b(p) mod p^3",
    filter_text="p = +-1 mod 5",
    prime_filter=lambda p: odd_prime(p) and plus_minus_one(p, 5),
    congruence_exponent=3,
)(check_dmc_f)

identity(
    "dmc-level25-f-wide",
    "4F3[1/5,2/5,3/5,4/5;1,1,1|1]_{p-1} = b(p) mod p^3",
    filter_text="p = +-2 mod 5",
    prime_filter=lambda p: odd_prime(p) and p % 5 in (2, 3),
    congruence_exponent=3,
)(check_dmc_f)


# --- q-expansion sanity ------------------------------------------------


@identity(
    "eta-weil",
    "|x(p)| <= 2 p^(3/2) for x in a, b, c",
    free_variables="form in {a, b, c}; p <= nmax",
)
def check_weil(ctx: CheckContext) -> Iterator[Outcome]:
    p, forms = ctx.p, ctx.forms()
    for name, coeff in (("a", forms.coeff_a), ("b", forms.coeff_b), ("c", forms.coeff_c)):
        case = {"form": name}
        if p > forms.nmax:
            yield Skipped(case, "nmax")
            continue
        value = coeff(p)
        yield Verdict(case, weil_bound_holds(value, p), f"{name}({p})^2 = {value * value}", f"4*{p}^3 = {4 * p**3}")


@identity(
    "eta-hecke",
    "x(p^2) = x(p)^2 - p^3 for x in a, b, c",
    free_variables="form in {a, b, c}; p^2 <= nmax; b skipped at its bad prime 5",
)
def check_hecke(ctx: CheckContext) -> Iterator[Outcome]:
    p, forms = ctx.p, ctx.forms()
    for name in ("a", "b", "c"):
        case = {"form": name}
        if p * p > forms.nmax:
            yield Skipped(case, "nmax")
            continue
        if name == "b" and p == 5:
            yield Skipped(case, "bad-prime")
            continue
        series = forms.series({"a": "f1", "b": "g", "c": "f2"}[name])
        lhs = f"{name}({p * p}) = {series[p * p]}"
        rhs = f"{name}({p})^2 - {p}^3 = {series[p] ** 2 - p**3}"
        yield Verdict(case, hecke_relation_holds(series, p), lhs, rhs)
