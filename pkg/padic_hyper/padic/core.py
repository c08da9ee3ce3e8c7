"""
Exact rational helpers and fixed-precision arithmetic in Q_p.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from sympy import isprime

from padic_hyper.errors import (
    DenominatorDivisibleByP,
    DivisionByZero,
    InsufficientPrecision,
    PrecisionExhausted,
    RangeOverflow,
)

Rat = Fraction


def as_rat(x: int | str | Fraction) -> Fraction:
    """Coerce CLI/API input such as ``"3/4"`` or ``-2`` to a reduced Fraction."""
    return x if isinstance(x, Fraction) else Fraction(x)


def frac_floor(x: Fraction) -> tuple[Fraction, int]:
    """Split x into its fractional part in [0, 1) and its floor."""
    floor = math.floor(x)
    return x - floor, floor


def valuation(x: int | Fraction, p: int) -> int:
    """p-adic valuation of a nonzero integer or rational."""
    if x == 0:
        raise ValueError("valuation of zero is infinite")
    x = as_rat(x)
    num, den = abs(x.numerator), x.denominator
    v = 0
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def require_odd_prime(p: int) -> int:
    if p < 3 or not isprime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    return p


def check_modulus(p: int, K: int, max_bits: int = 64) -> int:
    """Return p^K, refusing moduli wider than ``max_bits``."""
    if K < 1:
        raise ValueError(f"precision must be positive, got {K}")
    modulus = p**K
    if modulus.bit_length() > max_bits:
        raise RangeOverflow(f"{p}^{K} needs {modulus.bit_length()} bits (limit {max_bits})")
    return modulus


def rat_to_residue(x: Fraction, p: int, K: int) -> int:
    """The residue mod p^K congruent to x in Z_p."""
    x = as_rat(x)
    if x.denominator % p == 0:
        raise DenominatorDivisibleByP(f"{x} is not a {p}-adic integer")
    modulus = p**K
    return x.numerator * pow(x.denominator, -1, modulus) % modulus


@dataclass(frozen=True, slots=True)
class PadicNum:
    """
    p^val * unit, with unit known mod p^prec.

    A zero carries ``unit == 0`` and ``prec == 0``; its ``val`` is the absolute
    precision, i.e. the value is only known to be divisible by p^val.
    """

    p: int
    val: int
    unit: int
    prec: int

    # --- constructors --------------------------------------------------

    @classmethod
    def zero(cls, p: int, absprec: int) -> PadicNum:
        return cls(p, absprec, 0, 0)

    @classmethod
    def from_parts(cls, p: int, val: int, residue: int, prec: int) -> PadicNum:
        """Normalize p^val * residue where residue may still be divisible by p."""
        modulus = p**prec
        residue %= modulus
        if residue == 0:
            return cls.zero(p, val + prec)
        shift = 0
        while residue % p == 0:
            residue //= p
            shift += 1
        return cls(p, val + shift, residue % p ** (prec - shift), prec - shift)

    @classmethod
    def from_rat(cls, x: int | Fraction, p: int, prec: int) -> PadicNum:
        x = as_rat(x)
        if x == 0:
            return cls.zero(p, prec)
        v = valuation(x, p)
        unit = x / Fraction(p) ** v
        return cls(p, v, rat_to_residue(unit, p, prec), prec)

    from_int = from_rat

    @classmethod
    def sign(cls, p: int, negative: bool, prec: int) -> PadicNum:
        modulus = p**prec
        return cls(p, 0, modulus - 1 if negative else 1, prec)

    # --- views ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.unit == 0

    @property
    def absprec(self) -> int:
        return self.val + self.prec

    def residue(self) -> int:
        """Value mod p^absprec; only defined for p-adic integers."""
        if self.val < 0:
            raise ValueError(f"{self} is not a p-adic integer")
        return self.unit * self.p**self.val % self.p**self.absprec

    def __str__(self) -> str:
        if self.is_zero:
            return f"0 (prec {self.p}^{self.absprec})"
        return f"{self.p}^{self.val} * {self.unit} mod {self.p}^{self.prec}"

    # --- operators -----------------------------------------------------

    def __add__(self, other: PadicNum | int) -> PadicNum:
        return pad_add(self, self._coerce(other))

    __radd__ = __add__

    def __neg__(self) -> PadicNum:
        return pad_neg(self)

    def __sub__(self, other: PadicNum | int) -> PadicNum:
        return pad_add(self, pad_neg(self._coerce(other)))

    def __rsub__(self, other: int) -> PadicNum:
        return pad_add(self._coerce(other), pad_neg(self))

    def __mul__(self, other: PadicNum | int) -> PadicNum:
        return pad_mul(self, self._coerce(other))

    __rmul__ = __mul__

    def __truediv__(self, other: PadicNum | int) -> PadicNum:
        return pad_mul(self, pad_inv(self._coerce(other)))

    def __pow__(self, e: int) -> PadicNum:
        return pad_pow(self, e)

    def _coerce(self, other: PadicNum | int | Fraction) -> PadicNum:
        if isinstance(other, PadicNum):
            return other
        # Exact constants are carried at this operand's unit precision.
        digits = self.prec if not self.is_zero else self.absprec
        return PadicNum.from_rat(other, self.p, max(digits, 1))


def _same_prime(a: PadicNum, b: PadicNum) -> int:
    if a.p != b.p:
        raise ValueError(f"mixed primes {a.p} and {b.p}")
    return a.p


def _checked_zero(p: int, absprec: int) -> PadicNum:
    if absprec <= 0:
        raise PrecisionExhausted(f"cancellation left no known digits (absolute precision {absprec})")
    return PadicNum.zero(p, absprec)


def pad_neg(a: PadicNum) -> PadicNum:
    if a.is_zero:
        return a
    return PadicNum(a.p, a.val, (-a.unit) % a.p**a.prec, a.prec)


def pad_add(a: PadicNum, b: PadicNum) -> PadicNum:
    p = _same_prime(a, b)
    if a.is_zero and b.is_zero:
        return _checked_zero(p, min(a.absprec, b.absprec))
    if a.is_zero or b.is_zero:
        x, z = (b, a) if a.is_zero else (a, b)
        if z.absprec <= x.val:
            return _checked_zero(p, z.absprec)
        keep = min(x.prec, z.absprec - x.val)
        return PadicNum(p, x.val, x.unit % p**keep, keep)

    k = min(a.prec, b.prec)
    modulus = p**k
    if a.val != b.val:
        lo, hi = (a, b) if a.val < b.val else (b, a)
        d = hi.val - lo.val
        shifted = hi.unit * p**d if d < k else 0
        return PadicNum(p, lo.val, (lo.unit + shifted) % modulus, k)

    total = (a.unit + b.unit) % modulus
    if total == 0:
        return _checked_zero(p, a.val + k)
    return PadicNum.from_parts(p, a.val, total, k)


def pad_sum(terms: Iterable[PadicNum]) -> PadicNum:
    """
    Sum of many values known to the smallest absolute precision among them.

    Unlike a chain of pad_add calls, digits below that precision are never
    dropped by an intermediate misaligned addition.
    """
    terms = list(terms)
    if not terms:
        raise ValueError("pad_sum needs at least one term")
    p = terms[0].p
    for t in terms[1:]:
        _same_prime(terms[0], t)
    absprec = min(t.absprec for t in terms)
    nonzero = [t for t in terms if not t.is_zero]
    if not nonzero:
        return _checked_zero(p, absprec)
    base = min(t.val for t in nonzero)
    width = absprec - base
    if width <= 0:
        return _checked_zero(p, absprec)
    modulus = p**width
    total = sum(t.unit * p ** (t.val - base) for t in nonzero) % modulus
    if total == 0:
        return _checked_zero(p, absprec)
    return PadicNum.from_parts(p, base, total, width)


def pad_mul(a: PadicNum, b: PadicNum) -> PadicNum:
    p = _same_prime(a, b)
    if a.is_zero and b.is_zero:
        return PadicNum.zero(p, a.absprec + b.absprec)
    if a.is_zero or b.is_zero:
        z, x = (a, b) if a.is_zero else (b, a)
        return PadicNum.zero(p, z.absprec + x.val)
    k = min(a.prec, b.prec)
    return PadicNum(p, a.val + b.val, a.unit * b.unit % p**k, k)


def pad_inv(a: PadicNum) -> PadicNum:
    if a.is_zero:
        raise DivisionByZero(f"inverse of {a}")
    modulus = a.p**a.prec
    return PadicNum(a.p, -a.val, pow(a.unit, -1, modulus), a.prec)


def pad_pow(a: PadicNum, e: int) -> PadicNum:
    if e < 0:
        return pad_inv(pad_pow(a, -e))
    if e == 0:
        return PadicNum(a.p, 0, 1, max(a.prec, 1))
    if a.is_zero:
        return PadicNum.zero(a.p, a.absprec * e)
    return PadicNum(a.p, a.val * e, pow(a.unit, e, a.p**a.prec), a.prec)


def pad_eq_mod(a: PadicNum, b: PadicNum, k: int) -> bool:
    """True iff v_p(a - b) >= k; both operands must be known mod p^k."""
    p = _same_prime(a, b)
    if k > a.absprec or k > b.absprec:
        raise InsufficientPrecision(
            f"need mod {p}^{k} but operands are known to {p}^{a.absprec} and {p}^{b.absprec}"
        )
    absprec = min(a.absprec, b.absprec)
    base = min(x.val for x in (a, b) if not x.is_zero) if not (a.is_zero and b.is_zero) else absprec
    width = absprec - base
    if width <= 0:
        return True
    modulus = p**width

    def lifted(x: PadicNum) -> int:
        if x.is_zero:
            return 0
        return x.unit * p ** (x.val - base) % modulus

    diff = (lifted(a) - lifted(b)) % modulus
    if diff == 0:
        return True
    return base + valuation(diff, p) >= k
