"""
Truncated generalized hypergeometric series rFs[a; b | z]_m reduced mod p^M.

    sum_{n=0}^{m} prod_i (a_i)_n / (prod_j (b_j)_n * n!) * z^n
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from padic_hyper.errors import DenominatorDivisibleByP, NonInvertibleDenominator
from padic_hyper.padic import as_rat, check_modulus, rat_to_residue, require_odd_prime, valuation

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class TruncSeriesSpec:
    upper: tuple[Fraction, ...]
    lower: tuple[Fraction, ...]
    z: Fraction
    m: int
    p: int
    M: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "upper", tuple(as_rat(x) for x in self.upper))
        object.__setattr__(self, "lower", tuple(as_rat(x) for x in self.lower))
        object.__setattr__(self, "z", as_rat(self.z))
        require_odd_prime(self.p)
        if self.m < 0:
            raise ValueError(f"truncation index must be non-negative, got {self.m}")
        if self.M < 1:
            raise ValueError(f"precision exponent must be positive, got {self.M}")
        for b in self.lower:
            if b <= 0 and b.denominator == 1:
                raise ValueError(f"lower parameter {b} is zero or a negative integer")
        for x in (*self.upper, *self.lower, self.z):
            if x.denominator % self.p == 0:
                raise DenominatorDivisibleByP(f"{x} is not a {self.p}-adic integer")

    @classmethod
    def build(
        cls,
        upper: Sequence[str | int | Fraction],
        lower: Sequence[str | int | Fraction],
        z: str | int | Fraction,
        m: int,
        p: int,
        M: int,
    ) -> TruncSeriesSpec:
        return cls(tuple(as_rat(x) for x in upper), tuple(as_rat(x) for x in lower), as_rat(z), m, p, M)

    def label(self) -> str:
        upper = ",".join(str(x) for x in self.upper)
        lower = ",".join(str(x) for x in self.lower)
        return f"{len(self.upper)}F{len(self.lower)}[{upper};{lower}|{self.z}]_{self.m}"


def _split(x: Fraction, p: int, M: int) -> tuple[int, int]:
    """(v_p(x), unit of x mod p^M) for a nonzero rational with p-free denominator."""
    v = valuation(x, p)
    return v, rat_to_residue(x / Fraction(p) ** v, p, M)


def trunc_hyp(spec: TruncSeriesSpec) -> int:
    """The truncated series mod p^M, built term by term from the ratio recurrence."""
    p, M = spec.p, spec.M
    modulus = check_modulus(p, M, max_bits=10_000)
    if spec.z == 0:
        return 1 % modulus

    z_val, z_unit = _split(spec.z, p, M)
    term_val, term_unit = 0, 1
    total = 1
    for n in range(spec.m):
        numerators = [a + n for a in spec.upper]
        if any(x == 0 for x in numerators):
            # (a)_{n+1} = 0 for a = -n, so every later term vanishes.
            break
        term_val += z_val
        term_unit = term_unit * z_unit % modulus
        for x in numerators:
            v, u = _split(x, p, M)
            term_val += v
            term_unit = term_unit * u % modulus
        for x in (*(b + n for b in spec.lower), Fraction(n + 1)):
            v, u = _split(x, p, M)
            if v > 0:
                raise NonInvertibleDenominator(f"term {n + 1} of {spec.label()} has {x} in its denominator at p={p}")
            term_val -= v
            term_unit = term_unit * pow(u, -1, modulus) % modulus
        if term_val < M:
            total = (total + term_unit * p**term_val) % modulus
    logger.debug("%s mod %d^%d = %d", spec.label(), p, M, total)
    return total


def rising(a: Fraction, n: int) -> Fraction:
    return math.prod((a + k for k in range(n)), start=Fraction(1))


def trunc_hyp_exact(spec: TruncSeriesSpec) -> Fraction:
    """The truncated series as an exact rational."""
    total = Fraction(0)
    for n in range(spec.m + 1):
        num = math.prod((rising(a, n) for a in spec.upper), start=Fraction(1))
        den = math.prod((rising(b, n) for b in spec.lower), start=Fraction(math.factorial(n)))
        total += num / den * spec.z**n
    return total


def trunc_hyp_direct(spec: TruncSeriesSpec) -> int:
    """Oracle for trunc_hyp: sum exactly over Q, then reduce once."""
    total = trunc_hyp_exact(spec)
    if total.denominator % spec.p == 0:
        raise NonInvertibleDenominator(f"{spec.label()} sums to {total}, not a {spec.p}-adic integer")
    return rat_to_residue(total, spec.p, spec.M)
