"""
Morita p-adic gamma values and Teichmuller lifts for one (p, K) session.

Gamma values come from a single ascending sweep over 1..p^K that snapshots
the running unit product at every requested checkpoint.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

import numpy as np

from padic_hyper.errors import MissingArgument, ZeroArgument
from padic_hyper.padic import PadicNum, as_rat, check_modulus, rat_to_residue, require_odd_prime

logger = logging.getLogger(__name__)


_CHUNK = 1 << 20
# Largest modulus whose residues multiply without leaving int64.
_NUMPY_MODULUS_LIMIT = 3_037_000_499


def _tree_product(values: np.ndarray, modulus: int) -> int:
    while len(values) > 1:
        if len(values) % 2:
            values = np.append(values, np.int64(1))
        values = values[0::2] * values[1::2] % modulus
    return int(values[0]) if len(values) else 1


def _unit_product_loop(acc: int, start: int, stop: int, p: int, modulus: int) -> int:
    j = start
    while j < stop:
        if j % p == 0:
            j += 1
            continue
        run_end = min(stop, (j // p + 1) * p)
        for i in range(j, run_end):
            acc = acc * i % modulus
        j = run_end
    return acc


def _unit_product(acc: int, start: int, stop: int, p: int, modulus: int) -> int:
    """Multiply acc by every j in [start, stop) with p not dividing j."""
    if modulus > _NUMPY_MODULUS_LIMIT or stop - start <= 4 * p:
        return _unit_product_loop(acc, start, stop, p, modulus)
    for lo in range(start, stop, _CHUNK):
        block = np.arange(lo, min(stop, lo + _CHUNK), dtype=np.int64)
        block[block % p == 0] = 1
        acc = acc * _tree_product(block % modulus, modulus) % modulus
    return acc


def gamma_int(n: int, p: int, K: int) -> int:
    """Gamma_p(n) mod p^K for a positive integer n, straight from the definition."""
    modulus = p**K
    acc = _unit_product_loop(1, 1, n, p, modulus)
    return acc if n % 2 == 0 else (-acc) % modulus


def checkpoint(x: Fraction, p: int, K: int) -> int:
    """The positive integer in (0, p^K] congruent to x mod p^K."""
    return rat_to_residue(x, p, K) or p**K


@dataclass(frozen=True, slots=True)
class GammaTable:
    p: int
    K: int
    entries: Mapping[Fraction, int] = field(repr=False)

    def __contains__(self, x: object) -> bool:
        return x in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def reduced(self, K: int) -> GammaTable:
        """The same table read mod p^K for K no larger than the sweep precision."""
        if K > self.K:
            raise ValueError(f"cannot raise a mod {self.p}^{self.K} table to {K}")
        if K == self.K:
            return self
        modulus = self.p**K
        return GammaTable(self.p, K, {x: v % modulus for x, v in self.entries.items()})


def build_gamma_table(p: int, K: int, args: Iterable[Fraction], *, max_bits: int = 64) -> GammaTable:
    """Evaluate Gamma_p at every argument with one sweep over 1..p^K."""
    require_odd_prime(p)
    modulus = check_modulus(p, K, max_bits)

    by_checkpoint: dict[int, list[Fraction]] = defaultdict(list)
    for x in {as_rat(a) for a in args}:
        by_checkpoint[checkpoint(x, p, K)].append(x)

    logger.debug("gamma sweep p=%d K=%d to %d over %d checkpoints", p, K, modulus, len(by_checkpoint))
    entries: dict[Fraction, int] = {}
    acc, reached = 1, 1
    for n in sorted(by_checkpoint):
        acc = _unit_product(acc, reached, n, p, modulus)
        reached = n
        value = acc if n % 2 == 0 else (-acc) % modulus
        for x in by_checkpoint[n]:
            entries[x] = value
    return GammaTable(p, K, entries)


def gamma_p(table: GammaTable, x: Fraction | int | str) -> PadicNum:
    x = as_rat(x)
    try:
        unit = table.entries[x]
    except KeyError:
        raise MissingArgument(f"Gamma_{table.p}({x}) was not part of the table sweep") from None
    return PadicNum(table.p, 0, unit, table.K)


@dataclass(frozen=True, slots=True)
class TeichTable:
    p: int
    K: int
    values: tuple[int, ...] = field(repr=False)

    @property
    def modulus(self) -> int:
        return self.p**self.K

    def reduced(self, K: int) -> TeichTable:
        if K > self.K:
            raise ValueError(f"cannot raise a mod {self.p}^{self.K} table to {K}")
        if K == self.K:
            return self
        modulus = self.p**K
        return TeichTable(self.p, K, tuple(v % modulus for v in self.values))


def build_teich_table(p: int, K: int, *, max_bits: int = 64) -> TeichTable:
    """omega(x) = x^(p^(K-1)) mod p^K, by K-1 successive p-th powers."""
    require_odd_prime(p)
    modulus = check_modulus(p, K, max_bits)
    values = [0]
    for x in range(1, p):
        w = x
        for _ in range(K - 1):
            w = pow(w, p, modulus)
        values.append(w)
    return TeichTable(p, K, tuple(values))


def teich(table: TeichTable, x: int) -> int:
    r = x % table.p
    if r == 0:
        raise ZeroArgument("omega(0) is 0 by convention; callers must handle it")
    return table.values[r]


def teich_pow(table: TeichTable, x: int, j: int) -> int:
    """omega^j(x); negative j gives the inverse character."""
    return pow(teich(table, x), j % (table.p - 1), table.modulus)


def char_value(table: TeichTable, x: int, j: int) -> int:
    """omega^j(x) with chi(0) = 0 for every character, the trivial one included."""
    if x % table.p == 0:
        return 0
    return teich_pow(table, x, j)


def quadratic_char(table: TeichTable, x: int) -> int:
    """omega^((p-1)/2)(x), as a residue mod p^K."""
    return char_value(table, x, (table.p - 1) // 2)


# --- normalising constants ---------------------------------------------


def reflection_sign(x: Fraction, p: int) -> int:
    """(-1)^x0 with x0 in {1..p}, x0 = x mod p."""
    x0 = rat_to_residue(x, p, 1) or p
    return -1 if x0 % 2 else 1


def pair_args(d1: int, d2: int) -> set[Fraction]:
    return {Fraction(1, d1), 1 - Fraction(1, d1), Fraction(1, d2), 1 - Fraction(1, d2)}


def norm_const_pair(table: GammaTable, d1: int, d2: int) -> PadicNum:
    """Gamma_p(1/d1) Gamma_p(1-1/d1) Gamma_p(1/d2) Gamma_p(1-1/d2)."""
    value = PadicNum.sign(table.p, False, table.K)
    for d in (d1, d2):
        value = value * gamma_p(table, Fraction(1, d)) * gamma_p(table, 1 - Fraction(1, d))
    return value


def pair_sign_formula(p: int, d1: int, d2: int) -> int:
    return -1 if ((p - 1) // d1 + (p - 1) // d2) % 2 else 1


S_ARGS = pair_args(2, 4)
H_ARGS = {Fraction(k, 5) for k in range(1, 5)}


def norm_const_s(table: GammaTable) -> PadicNum:
    """s(p) = Gamma_p(1/4) Gamma_p(3/4) Gamma_p(1/2)^2."""
    return norm_const_pair(table, 2, 4)


def sign_formula_s(p: int) -> int:
    """(-1)^(floor((p-1)/4) + floor((p-1)/2))."""
    return pair_sign_formula(p, 4, 2)


def norm_const_h(table: GammaTable) -> PadicNum:
    """h(p) = Gamma_p(1/5) Gamma_p(2/5) Gamma_p(3/5) Gamma_p(4/5)."""
    if table.p == 5:
        raise ValueError("h(p) is undefined at p = 5")
    value = PadicNum.sign(table.p, False, table.K)
    for x in sorted(H_ARGS):
        value = value * gamma_p(table, x)
    return value


def sign_from_reflection_h(p: int) -> int:
    """h(p) as +-1 by pairing 1/5 with 4/5 and 2/5 with 3/5."""
    return reflection_sign(Fraction(1, 5), p) * reflection_sign(Fraction(2, 5), p)
