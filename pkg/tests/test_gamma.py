import random
from fractions import Fraction

import pytest

from padic_hyper.errors import MissingArgument, RangeOverflow, ZeroArgument
from padic_hyper.gamma import (
    S_ARGS,
    build_gamma_table,
    build_teich_table,
    char_value,
    checkpoint,
    duplication_args,
    duplication_floors_agree,
    duplication_sides,
    gamma_int,
    gamma_p,
    multiplication_args,
    multiplication_sides,
    norm_const_s,
    reflection_args,
    reflection_sides,
    sign_formula_s,
    teich,
    teich_pow,
)
from padic_hyper.padic import PadicNum, pad_eq_mod


def test_gamma_int_from_definition():
    assert gamma_int(1, 3, 2) == 8
    assert gamma_int(2, 3, 2) == 1
    assert gamma_int(3, 3, 2) == 7
    assert gamma_int(4, 3, 2) == 2


def test_checkpoint_maps_zero_to_top_of_sweep():
    assert checkpoint(Fraction(0), 5, 2) == 25
    assert checkpoint(Fraction(1, 2), 3, 3) == 14


def test_gamma_of_zero_is_one():
    table = build_gamma_table(5, 3, {Fraction(0)})
    assert gamma_p(table, 0) == PadicNum(5, 0, 1, 3)


@pytest.mark.parametrize("p, K", [(5, 3), (7, 3), (11, 2)])
def test_table_sweep_matches_direct_product(p, K):
    args = {Fraction(1, 2), Fraction(1, 4), Fraction(2, 3), Fraction(7)}
    table = build_gamma_table(p, K, args)
    for x in args:
        assert table.entries[x] == gamma_int(checkpoint(x, p, K), p, K)


def test_missing_argument_raises():
    table = build_gamma_table(5, 2, {Fraction(1, 2)})
    with pytest.raises(MissingArgument):
        gamma_p(table, Fraction(1, 4))


def test_reduced_table_agrees_with_smaller_sweep():
    big = build_gamma_table(7, 4, {Fraction(1, 3)})
    small = build_gamma_table(7, 2, {Fraction(1, 3)})
    assert big.reduced(2).entries == small.entries
    with pytest.raises(ValueError):
        small.reduced(3)


def test_sweep_refuses_oversized_modulus():
    with pytest.raises(RangeOverflow):
        build_gamma_table(97, 10, {Fraction(1, 2)})


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_teichmuller_lift(p):
    K = 3
    table = build_teich_table(p, K)
    modulus = p**K
    for x in range(1, p):
        w = teich(table, x)
        assert w % p == x
        assert pow(w, p - 1, modulus) == 1


def test_teichmuller_known_value_and_zero_convention():
    table = build_teich_table(5, 2)
    assert teich(table, 2) == 7
    assert char_value(table, 0, 0) == 0
    assert char_value(table, 10, 3) == 0
    assert char_value(table, 3, 0) == 1


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_reflection_formula(p):
    table = build_gamma_table(p, 3, reflection_args(p))
    for r in range(p):
        lhs, rhs = reflection_sides(table, Fraction(r, p - 1))
        assert pad_eq_mod(lhs, rhs, 3)


@pytest.mark.parametrize("p, m", [(5, 2), (5, 3), (7, 2), (7, 3), (7, 4)])
def test_multiplication_formula(p, m):
    gamma = build_gamma_table(p, 3, multiplication_args(p, m))
    teich_table = build_teich_table(p, 3)
    for r in range(p):
        lhs, rhs = multiplication_sides(gamma, teich_table, m, r)
        assert pad_eq_mod(lhs, rhs, 3)


@pytest.mark.parametrize("p", [5, 7, 13])
def test_duplication_step(p):
    gamma = build_gamma_table(p, 3, duplication_args(p))
    teich_table = build_teich_table(p, 3)
    for j in range(p - 1):
        assert duplication_floors_agree(p, j)
        lhs, rhs = duplication_sides(gamma, teich_table, j)
        assert pad_eq_mod(lhs, rhs, 3)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 17])
def test_s_is_the_sign_formula(p):
    s = norm_const_s(build_gamma_table(p, 3, S_ARGS))
    assert pad_eq_mod(s, PadicNum.sign(p, sign_formula_s(p) < 0, 3), 3)


def test_s_at_five_is_minus_one():
    assert sign_formula_s(5) == -1


@pytest.mark.parametrize("p", [1, 9, 15, 25])
def test_tables_need_an_odd_prime(p):
    with pytest.raises(ValueError):
        build_gamma_table(p, 2, {Fraction(1, 2)})
    with pytest.raises(ValueError):
        build_teich_table(p, 2)


def test_teich_rejects_zero_argument():
    table = build_teich_table(7, 2)
    with pytest.raises(ZeroArgument):
        teich(table, 14)
    with pytest.raises(ZeroArgument):
        teich_pow(table, 0, 3)


def test_sweep_matches_direct_product_for_random_arguments():
    rng = random.Random(11)
    for p in (5, 7, 11, 13):
        args = set()
        while len(args) < 50:
            den = rng.randint(1, 40)
            if den % p:
                args.add(Fraction(rng.randint(-200, 200), den))
        table = build_gamma_table(p, 3, args)
        for x in args:
            assert table.entries[x] == gamma_int(checkpoint(x, p, 3), p, 3)


def test_teichmuller_is_multiplicative():
    rng = random.Random(12)
    for p in (17, 29, 41, 53):
        table = build_teich_table(p, 3)
        modulus = p**3
        for _ in range(100):
            x, y = rng.randrange(1, p), rng.randrange(1, p)
            assert teich(table, x * y) == teich(table, x) * teich(table, y) % modulus
