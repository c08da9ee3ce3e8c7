"""
Character sums over F_p computed directly from Teichmuller values.

These are the brute-force oracles for the gamma-side formulas: Jacobi sums
against their Gross-Koblitz translation, and the two quadratic sum lemmas.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from sympy import legendre_symbol

from padic_hyper.errors import BothTrivial, JOutOfRange
from padic_hyper.gamma import GammaTable, TeichTable, build_teich_table, char_value, gamma_p, quadratic_char
from padic_hyper.padic import PadicNum, frac_floor


@dataclass(frozen=True, slots=True)
class CharSumCtx:
    p: int
    K: int
    teich: TeichTable = field(repr=False)

    def __post_init__(self) -> None:
        if (self.teich.p, self.teich.K) != (self.p, self.K):
            raise ValueError("Teichmuller table was built for a different (p, K)")

    @classmethod
    def build(cls, p: int, K: int, *, max_bits: int = 64) -> CharSumCtx:
        return cls(p, K, build_teich_table(p, K, max_bits=max_bits))

    @property
    def modulus(self) -> int:
        return self.p**self.K

    def wrap(self, residue: int) -> PadicNum:
        return PadicNum.from_parts(self.p, 0, residue, self.K)


def legendre(x: int, p: int) -> int:
    r = x % p
    if r == 0:
        return 0
    return int(legendre_symbol(r, p))


def kronecker_m4(n: int) -> int:
    """The character (-4/n) used for the level-16 twist."""
    if n % 2 == 0:
        return 0
    return 1 if n % 4 == 1 else -1


def _check_pair(p: int, j1: int, j2: int) -> None:
    if j1 % (p - 1) == 0 and j2 % (p - 1) == 0:
        raise BothTrivial("J(epsilon, epsilon) is excluded")


def jacobi_sum(ctx: CharSumCtx, j1: int, j2: int) -> PadicNum:
    """J(omega^j1, omega^j2) = sum_t omega^j1(t) omega^j2(1-t)."""
    p = ctx.p
    _check_pair(p, j1, j2)
    total = 0
    for t in range(2, p):
        total += char_value(ctx.teich, t, j1) * char_value(ctx.teich, 1 - t, j2)
    return ctx.wrap(total % ctx.modulus)


def jacobi_args(p: int) -> set[Fraction]:
    return {Fraction(r, p - 1) for r in range(p - 1)}


def jacobi_via_gamma(ctx: CharSumCtx, gamma: GammaTable, j1: int, j2: int) -> PadicNum:
    """
    J(omega^-j1, omega^-j2) through Gauss sums and Gross-Koblitz.

    With a = <j1/(p-1)>, b = <j2/(p-1)> and e = a + b - <a+b>:
    J = -(-p)^e Gamma_p(a) Gamma_p(b) / Gamma_p(<a+b>) when the product
    character is nontrivial, and J = Gamma_p(a) Gamma_p(b) when it is trivial.
    """
    p, K = ctx.p, ctx.K
    _check_pair(p, j1, j2)
    gamma = gamma.reduced(K)
    a = frac_floor(Fraction(j1, p - 1))[0]
    b = frac_floor(Fraction(j2, p - 1))[0]
    product = gamma_p(gamma, a) * gamma_p(gamma, b)
    if (j1 + j2) % (p - 1) == 0:
        return product
    total, carry = frac_floor(a + b)
    return -(PadicNum.from_int((-p) ** carry, p, K) * product / gamma_p(gamma, total))


def lemma_args(p: int) -> set[Fraction]:
    half = Fraction(1, 2)
    args = {half}
    for j in range(p - 1):
        t = Fraction(j, p - 1)
        args.add(t)
        args.add(frac_floor(half - t)[0])
    return args


def _lemma_lhs(ctx: CharSumCtx, gamma: GammaTable, j: int) -> PadicNum:
    """Gamma_p(<1/2 - t>) Gamma_p(t) / Gamma_p(1/2) * (-p)^(-floor(1/2 - t)), t = j/(p-1)."""
    p, K = ctx.p, ctx.K
    gamma = gamma.reduced(K)
    half = Fraction(1, 2)
    t = Fraction(j, p - 1)
    frac, floor = frac_floor(half - t)
    value = gamma_p(gamma, frac) * gamma_p(gamma, t) / gamma_p(gamma, half)
    return value * PadicNum.from_int((-p) ** -floor, p, K)


def lemma_quad_lhs(ctx: CharSumCtx, gamma: GammaTable, j: int) -> PadicNum:
    if not 0 < j < ctx.p - 1:
        raise JOutOfRange(f"the quadratic lemma needs 0 < j < {ctx.p - 1}, got {j}")
    return _lemma_lhs(ctx, gamma, j)


def lemma_quad_rhs(ctx: CharSumCtx, j: int) -> PadicNum:
    """-sum_{t=2}^{p-1} omega^-j(4(1-t)/t^2)."""
    p = ctx.p
    if not 0 < j < p - 1:
        raise JOutOfRange(f"the quadratic lemma needs 0 < j < {p - 1}, got {j}")
    total = 0
    for t in range(2, p):
        x = 4 * (1 - t) * pow(t * t, -1, p) % p
        total += char_value(ctx.teich, x, -j)
    return ctx.wrap(-total % ctx.modulus)


def lemma_nonquad_lhs(ctx: CharSumCtx, gamma: GammaTable, j: int) -> PadicNum:
    if not 0 <= j < ctx.p - 1:
        raise JOutOfRange(f"the non-quadratic lemma needs 0 <= j < {ctx.p - 1}, got {j}")
    return _lemma_lhs(ctx, gamma, j)


def lemma_nonquad_rhs(ctx: CharSumCtx, j: int) -> PadicNum:
    """-sum_{t=2}^{p-1} omega^j(-t) omega^((p-1)/2)(t(t-1))."""
    p = ctx.p
    if not 0 <= j < p - 1:
        raise JOutOfRange(f"the non-quadratic lemma needs 0 <= j < {p - 1}, got {j}")
    total = 0
    for t in range(2, p):
        total += char_value(ctx.teich, -t, j) * quadratic_char(ctx.teich, t * (t - 1))
    return ctx.wrap(-total % ctx.modulus)
