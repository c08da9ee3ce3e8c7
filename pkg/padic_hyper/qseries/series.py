"""
Exact integer q-series truncated at a fixed exponent, stored as int64 arrays.

Every operation that can grow coefficients checks a bound first and raises
IntegerOverflow instead of letting numpy wrap around.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Literal

import numpy as np

from padic_hyper.errors import BeyondCache, IntegerOverflow, NonIntegralPrefactor

logger = logging.getLogger(__name__)

INT64_LIMIT = 2**63 - 1

ExpansionMethod = Literal["sparse", "pentagonal"]


def _max_abs(c: np.ndarray) -> int:
    if c.size == 0:
        return 0
    return max(abs(int(c.max())), abs(int(c.min())))


def _abs_sum(c: np.ndarray) -> int:
    return sum(abs(x) for x in c.tolist())


def _frozen(c: np.ndarray) -> np.ndarray:
    c = np.array(c, dtype=np.int64)
    c.setflags(write=False)
    return c


@dataclass(frozen=True, slots=True)
class QSeries:
    """sum_{n=0}^{nmax} coeffs[n] q^n."""

    coeffs: np.ndarray = field(repr=False)
    nmax: int

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.nmax + 1:
            raise ValueError(f"expected {self.nmax + 1} coefficients, got {len(self.coeffs)}")
        object.__setattr__(self, "coeffs", _frozen(self.coeffs))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], nmax: int | None = None) -> QSeries:
        values = [int(x) for x in coeffs]
        if any(abs(x) > INT64_LIMIT for x in values):
            raise IntegerOverflow("coefficient does not fit in 64 bits")
        if nmax is None:
            nmax = len(values) - 1
        values = (values + [0] * (nmax + 1))[: nmax + 1]
        return cls(np.array(values, dtype=np.int64), nmax)

    @classmethod
    def one(cls, nmax: int) -> QSeries:
        c = np.zeros(nmax + 1, dtype=np.int64)
        c[0] = 1
        return cls(c, nmax)

    def __getitem__(self, n: int) -> int:
        if n < 0:
            raise IndexError(f"negative exponent {n}")
        if n > self.nmax:
            raise BeyondCache(f"q^{n} is beyond the expansion (nmax={self.nmax})")
        return int(self.coeffs[n])

    def __len__(self) -> int:
        return self.nmax + 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.nmax == other.nmax and bool(np.array_equal(self.coeffs, other.coeffs))

    def __hash__(self) -> int:
        return hash((self.nmax, self.coeffs.tobytes()))

    def tolist(self) -> list[int]:
        return [int(x) for x in self.coeffs]

    def truncate(self, nmax: int) -> QSeries:
        if nmax > self.nmax:
            raise BeyondCache(f"cannot extend a series known to q^{self.nmax} up to q^{nmax}")
        return QSeries(self.coeffs[: nmax + 1].copy(), nmax)

    def _common(self, other: QSeries) -> int:
        return min(self.nmax, other.nmax)

    def __add__(self, other: QSeries) -> QSeries:
        n = self._common(other)
        if _max_abs(self.coeffs[: n + 1]) + _max_abs(other.coeffs[: n + 1]) > INT64_LIMIT:
            raise IntegerOverflow("sum of q-series overflows int64")
        return QSeries(self.coeffs[: n + 1] + other.coeffs[: n + 1], n)

    def scale(self, k: int) -> QSeries:
        if abs(k) * _max_abs(self.coeffs) > INT64_LIMIT:
            raise IntegerOverflow(f"{k} * q-series overflows int64")
        return QSeries(self.coeffs * np.int64(k), self.nmax)

    def shift(self, t: int) -> QSeries:
        """q^t * self, truncated at the same nmax."""
        if t < 0:
            raise ValueError("negative q-powers are not representable")
        c = np.zeros(self.nmax + 1, dtype=np.int64)
        if t <= self.nmax:
            c[t:] = self.coeffs[: self.nmax + 1 - t]
        return QSeries(c, self.nmax)

    def __mul__(self, other: QSeries) -> QSeries:
        n = self._common(other)
        a, b = self.coeffs[: n + 1], other.coeffs[: n + 1]
        if _max_abs(a) * _abs_sum(b) > INT64_LIMIT:
            raise IntegerOverflow(f"product of q-series to q^{n} may overflow int64")
        return QSeries(np.convolve(a, b)[: n + 1], n)

    def __pow__(self, e: int) -> QSeries:
        if e < 0:
            return self.inverse() ** -e
        result, base = QSeries.one(self.nmax), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def inverse(self) -> QSeries:
        """1/self for a series with constant term 1."""
        if self.coeffs[0] != 1:
            raise ValueError("only series with constant term 1 are inverted")
        support = np.flatnonzero(self.coeffs[1:]) + 1
        weights = [int(self.coeffs[i]) for i in support]
        out = [1] + [0] * self.nmax
        for n in range(1, self.nmax + 1):
            acc = 0
            for i, w in zip(support, weights):
                if i > n:
                    break
                acc -= w * out[n - i]
            if abs(acc) > INT64_LIMIT:
                raise IntegerOverflow(f"inverse series coefficient of q^{n} overflows int64")
            out[n] = acc
        return QSeries(np.array(out, dtype=np.int64), self.nmax)


# --- eta products ------------------------------------------------------


def _times_one_minus(c: np.ndarray, m: int) -> None:
    """c *= (1 - q^m) in place."""
    if 2 * _max_abs(c) > INT64_LIMIT:
        raise IntegerOverflow(f"multiplying by (1 - q^{m}) overflows int64")
    c[m:] = c[m:] - c[:-m]


def _divided_by_one_minus(c: np.ndarray, m: int) -> None:
    """c /= (1 - q^m) in place, one block of m exponents at a time."""
    for start in range(m, len(c), m):
        block = c[start : start + m]
        prev = c[start - m : start - m + len(block)]
        if _max_abs(block) + _max_abs(prev) > INT64_LIMIT:
            raise IntegerOverflow(f"dividing by (1 - q^{m}) overflows int64")
        c[start : start + len(block)] = block + prev


def euler_product(k: int, nmax: int) -> QSeries:
    """prod_{n>=1} (1 - q^{kn}) from the pentagonal number theorem."""
    c = np.zeros(nmax + 1, dtype=np.int64)
    c[0] = 1
    j = 1
    while True:
        first = k * j * (3 * j - 1) // 2
        if first > nmax:
            break
        sign = -1 if j % 2 else 1
        c[first] += sign
        second = k * j * (3 * j + 1) // 2
        if second <= nmax:
            c[second] += sign
        j += 1
    return QSeries(c, nmax)


def eta_prefactor(factors: Iterable[tuple[int, int]]) -> Fraction:
    """sum k*e/24, the q-power carried by prod eta(kz)^e."""
    return sum((Fraction(k * e, 24) for k, e in factors), start=Fraction(0))


def eta_like_product(
    factors: Iterable[tuple[int, int]],
    t: int,
    N: int,
    method: ExpansionMethod = "sparse",
) -> QSeries:
    """
    q^t * prod_k prod_{n>=1} (1 - q^{kn})^{e_k} to q^N.

    ``t`` must equal the combined eta prefactor sum k*e/24. ``sparse`` applies
    each copy of (1 - q^{kn})^{+-1} in turn; ``pentagonal`` powers the Euler
    product of each scale. The two paths must agree.
    """
    factors = [(k, e) for k, e in factors if e]
    prefactor = eta_prefactor(factors)
    if prefactor.denominator != 1 or prefactor != t:
        raise NonIntegralPrefactor(f"eta prefactor of {factors} is {prefactor}, expected {t}")
    if t < 0:
        raise NonIntegralPrefactor(f"q^{t} has a negative exponent")
    if any(k < 1 for k, _ in factors):
        raise ValueError(f"eta scales must be positive: {factors}")

    body_n = N - t
    if body_n < 0:
        return QSeries(np.zeros(N + 1, dtype=np.int64), N)

    if method == "sparse":
        c = np.zeros(body_n + 1, dtype=np.int64)
        c[0] = 1
        for k, e in factors:
            step = _times_one_minus if e > 0 else _divided_by_one_minus
            for _ in range(abs(e)):
                for n in range(1, body_n // k + 1):
                    step(c, k * n)
        body = QSeries(c, body_n)
    elif method == "pentagonal":
        body = QSeries.one(body_n)
        for k, e in factors:
            body = body * euler_product(k, body_n) ** e
    else:
        raise ValueError(f"unknown expansion method {method!r}")

    logger.debug("eta product %s (q^%d) expanded to q^%d via %s", factors, t, N, method)
    out = np.zeros(N + 1, dtype=np.int64)
    out[t:] = body.coeffs
    return QSeries(out, N)
