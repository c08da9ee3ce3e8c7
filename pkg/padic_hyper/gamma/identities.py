"""
Both sides of the gamma-function identities used by the verifier.
"""

from __future__ import annotations

from fractions import Fraction

from padic_hyper.padic import PadicNum, frac_floor

from .tables import GammaTable, TeichTable, gamma_p, quadratic_char, reflection_sign, teich_pow


def reflection_args(p: int) -> set[Fraction]:
    xs = {Fraction(r, p - 1) for r in range(p)}
    return xs | {1 - x for x in xs}


def reflection_sides(table: GammaTable, x: Fraction) -> tuple[PadicNum, PadicNum]:
    """Gamma_p(x) Gamma_p(1-x) against (-1)^x0."""
    lhs = gamma_p(table, x) * gamma_p(table, 1 - x)
    rhs = PadicNum.sign(table.p, reflection_sign(x, table.p) < 0, table.K)
    return lhs, rhs


def multiplication_args(p: int, m: int) -> set[Fraction]:
    args = {Fraction(h, m) for h in range(1, m)}
    for r in range(p):
        x = Fraction(r, p - 1)
        args.add(x)
        args.update((x + h) / m for h in range(m))
    return args


def multiplication_sides(
    gamma: GammaTable, teich: TeichTable, m: int, r: int
) -> tuple[PadicNum, PadicNum]:
    """
    prod_h Gamma_p((x+h)/m) against omega(m)^((1-x)(1-p)) Gamma_p(x) prod_h Gamma_p(h/m)

    for x = r/(p-1); the exponent (1-x)(1-p) is the integer r - (p-1).
    """
    p, K = gamma.p, gamma.K
    x = Fraction(r, p - 1)
    lhs = PadicNum.sign(p, False, K)
    for h in range(m):
        lhs = lhs * gamma_p(gamma, (x + h) / m)
    rhs = PadicNum(p, 0, teich_pow(teich, m, r - (p - 1)), K) * gamma_p(gamma, x)
    for h in range(1, m):
        rhs = rhs * gamma_p(gamma, Fraction(h, m))
    return lhs, rhs


def duplication_args(p: int) -> set[Fraction]:
    args = {Fraction(1, 2)}
    for j in range(p - 1):
        t = Fraction(j, p - 1)
        args.add(frac_floor(Fraction(1, 2) - 2 * t)[0])
        args.add(frac_floor(Fraction(1, 4) - t)[0])
        args.add(frac_floor(Fraction(3, 4) - t)[0])
    return args


def duplication_sides(gamma: GammaTable, teich: TeichTable, j: int) -> tuple[PadicNum, PadicNum]:
    """
    Gamma_p(<1/2 - 2j/(p-1)>) Gamma_p(1/2) omega^((p-1)/2)(2) omega^-j(4)
    against Gamma_p(<1/4 - j/(p-1)>) Gamma_p(<3/4 - j/(p-1)>).
    """
    p, K = gamma.p, gamma.K
    t = Fraction(j, p - 1)
    chars = quadratic_char(teich, 2) * teich_pow(teich, 4, -j) % teich.modulus
    lhs = (
        gamma_p(gamma, frac_floor(Fraction(1, 2) - 2 * t)[0])
        * gamma_p(gamma, Fraction(1, 2))
        * PadicNum(p, 0, chars, K)
    )
    rhs = gamma_p(gamma, frac_floor(Fraction(1, 4) - t)[0]) * gamma_p(gamma, frac_floor(Fraction(3, 4) - t)[0])
    return lhs, rhs


def duplication_floors_agree(p: int, j: int) -> bool:
    t = Fraction(j, p - 1)
    return frac_floor(Fraction(1, 2) - 2 * t)[1] == (
        frac_floor(Fraction(1, 4) - t)[1] + frac_floor(Fraction(3, 4) - t)[1]
    )
