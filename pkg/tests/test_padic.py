import random
from fractions import Fraction

import pytest

from padic_hyper.errors import (
    DenominatorDivisibleByP,
    DivisionByZero,
    InsufficientPrecision,
    PrecisionExhausted,
    RangeOverflow,
)
from padic_hyper.padic import (
    PadicNum,
    check_modulus,
    frac_floor,
    pad_add,
    pad_eq_mod,
    pad_inv,
    pad_mul,
    pad_pow,
    pad_sum,
    rat_to_residue,
    require_odd_prime,
    valuation,
)


def test_rat_to_residue_inverts_denominator():
    assert rat_to_residue(Fraction(1, 2), 3, 3) == 14
    assert rat_to_residue(Fraction(-1), 5, 2) == 24


def test_rat_to_residue_rejects_p_in_denominator():
    with pytest.raises(DenominatorDivisibleByP):
        rat_to_residue(Fraction(1, 3), 3, 2)


@pytest.mark.parametrize(
    "x, p, expected",
    [(Fraction(9, 2), 3, 2), (Fraction(1, 6), 3, -1), (Fraction(10), 5, 1), (Fraction(7, 4), 5, 0)],
)
def test_valuation(x, p, expected):
    assert valuation(x, p) == expected


def test_frac_floor_of_negative_rational():
    assert frac_floor(Fraction(-1, 4)) == (Fraction(3, 4), -1)
    assert frac_floor(Fraction(5, 2)) == (Fraction(1, 2), 2)


def test_check_modulus_enforces_bit_limit():
    assert check_modulus(3, 40) == 3**40
    with pytest.raises(RangeOverflow):
        check_modulus(3, 41)
    with pytest.raises(ValueError):
        check_modulus(3, 0)


def test_from_rat_normalizes_valuation():
    x = PadicNum.from_rat(18, 3, 3)
    assert (x.val, x.unit, x.prec) == (2, 2, 3)
    assert x.absprec == 5
    assert str(PadicNum(3, 0, 1, 3)) == "3^0 * 1 mod 3^3"


def test_multiplication_and_inverse():
    half = PadicNum.from_rat(Fraction(1, 2), 3, 3)
    assert half * PadicNum.from_rat(2, 3, 3) == PadicNum.from_rat(1, 3, 3)
    third = pad_inv(PadicNum.from_rat(3, 3, 2))
    assert third.val == -1
    assert pad_pow(third, -1) == PadicNum.from_rat(3, 3, 2)


def test_inverse_of_zero_raises():
    with pytest.raises(DivisionByZero):
        pad_inv(PadicNum.zero(5, 3))


def test_cancellation_keeps_absolute_precision():
    total = pad_add(PadicNum.from_rat(1, 3, 2), PadicNum.from_rat(-1, 3, 2))
    assert total.is_zero
    assert total.absprec == 2


def test_cancellation_without_known_digits_raises():
    with pytest.raises(PrecisionExhausted):
        pad_add(PadicNum(3, -1, 1, 1), PadicNum(3, -1, 2, 1))


def test_pad_sum_keeps_digits_a_chain_would_drop():
    terms = [PadicNum(3, 0, 1, 3), PadicNum(3, 2, 1, 1), PadicNum(3, 2, 2, 1)]
    assert pad_sum(terms) == PadicNum(3, 0, 1, 3)
    assert pad_sum([PadicNum(3, 0, 1, 1), PadicNum(3, 1, 1, 3)]) == PadicNum(3, 0, 1, 1)
    with pytest.raises(ValueError):
        pad_sum([])


def test_eq_mod_compares_at_requested_exponent():
    a, b = PadicNum.from_rat(1, 3, 3), PadicNum.from_rat(10, 3, 3)
    assert pad_eq_mod(a, b, 2)
    assert not pad_eq_mod(a, b, 3)


def test_eq_mod_needs_both_operands_known():
    with pytest.raises(InsufficientPrecision):
        pad_eq_mod(PadicNum.from_rat(1, 3, 2), PadicNum.from_rat(1, 3, 3), 3)


def test_mixed_primes_rejected():
    with pytest.raises(ValueError):
        PadicNum.from_rat(1, 3, 2) + PadicNum.from_rat(1, 5, 2)


def test_require_odd_prime_rejects_composites():
    assert require_odd_prime(7) == 7
    for p in (1, 2, 9, 15, 21, 25):
        with pytest.raises(ValueError):
            require_odd_prime(p)


def test_mul_adds_valuations():
    product = pad_mul(PadicNum(5, 1, 2, 2), PadicNum(5, -1, 3, 2))
    assert (product.val, product.unit, product.prec) == (0, 6, 2)


def test_pow_to_p_minus_one_is_one_mod_p():
    assert pad_pow(PadicNum(7, 0, 2, 1), 6) == PadicNum(7, 0, 1, 1)


def test_full_cancellation_is_a_zero_at_precision_k():
    total = pad_add(PadicNum(5, 0, 1, 2), PadicNum(5, 0, 24, 2))
    assert total == PadicNum.zero(5, 2)


PRIMES = (3, 5, 7, 11, 13)


def _random_unit(rng: random.Random, p: int, K: int) -> int:
    while True:
        u = rng.randrange(1, p**K)
        if u % p:
            return u


def _random_padic(rng: random.Random, p: int, K: int, vals=range(0, 3)) -> PadicNum:
    return PadicNum(p, rng.choice(vals), _random_unit(rng, p, K), K)


def test_rat_to_residue_round_trip():
    rng = random.Random(1)
    for _ in range(1000):
        p, K = rng.choice(PRIMES), rng.randint(1, 6)
        den = rng.randint(1, 10**4)
        while den % p == 0:
            den += 1
        x = Fraction(rng.randint(-(10**6), 10**6), den)
        r = rat_to_residue(x, p, K)
        assert 0 <= r < p**K
        assert (r * x.denominator - x.numerator) % p**K == 0


def test_frac_floor_splits_exactly():
    rng = random.Random(2)
    for _ in range(500):
        x = Fraction(rng.randint(-1000, 1000), rng.randint(1, 60))
        frac, floor = frac_floor(x)
        assert 0 <= frac < 1
        assert floor + frac == x
        assert x.denominator % frac.denominator == 0


def test_valuations_add_under_multiplication():
    rng = random.Random(3)
    for _ in range(300):
        p, K = rng.choice(PRIMES), rng.randint(1, 4)
        a = _random_padic(rng, p, K, range(-3, 4))
        b = _random_padic(rng, p, K, range(-3, 4))
        assert pad_mul(a, b).val == a.val + b.val


def test_units_to_the_p_minus_one_are_one_mod_p():
    rng = random.Random(4)
    for _ in range(100):
        p = rng.choice(PRIMES)
        x = rng.randrange(1, p)
        assert pad_pow(PadicNum(p, 0, x, 1), p - 1) == PadicNum(p, 0, 1, 1)


def _agree(lhs: PadicNum, rhs: PadicNum) -> bool:
    return pad_eq_mod(lhs, rhs, min(lhs.absprec, rhs.absprec))


def test_ring_axioms_hold_at_tracked_precision():
    rng = random.Random(5)
    for _ in range(300):
        p, K = rng.choice(PRIMES), rng.randint(1, 4)
        a, b, c = (_random_padic(rng, p, K) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert _agree((a + b) + c, a + (b + c))
        assert _agree(a * (b + c), a * b + a * c)
