import random
from fractions import Fraction
from typing import Sequence

import pytest

from padic_hyper.errors import DenominatorDivisibleByP
from padic_hyper.gamma import build_gamma_table, build_teich_table
from padic_hyper.gfunction import (
    GnParams,
    evaluate_nGn,
    gamma_arguments,
    gn_permutation_check,
    min_term_valuation,
    parse_params,
    prepare_nGn,
    working_precision,
)
from padic_hyper.padic import PadicNum, pad_eq_mod

HALVES = parse_params(["1/2"] * 4, ["1"] * 4)
LEVEL16 = parse_params(["1/2", "1/2", "1/4", "3/4"], ["1"] * 4)


def test_params_need_matching_lengths():
    with pytest.raises(ValueError):
        GnParams((Fraction(1, 2),), (Fraction(1), Fraction(1)))
    assert HALVES.n == 4
    assert HALVES.label() == "4G4[1/2,1/2,1/2,1/2;1,1,1,1]"


def test_halves_at_three():
    value = evaluate_nGn(HALVES, 3, 3)
    assert pad_eq_mod(value, PadicNum.from_rat(-1, 3, 3), 3)
    assert str(value) == "3^0 * 26 mod 3^3"


def test_level16_parameters_at_three():
    assert pad_eq_mod(evaluate_nGn(LEVEL16, 3, 3), PadicNum.from_rat(1, 3, 3), 3)


def test_s_divisible_by_p_gives_zero():
    value = evaluate_nGn(HALVES.at(5), 5, 2)
    assert value.is_zero
    assert value.absprec == 2


def test_parameter_with_p_in_denominator_rejected():
    with pytest.raises(DenominatorDivisibleByP):
        evaluate_nGn(parse_params(["1/3"], ["1"]), 3, 2)


def test_min_term_valuation_and_precision_policies():
    inverted = parse_params(["1/2", "1/2"], ["1/4", "3/4"])
    assert min_term_valuation(HALVES, 5) == 0
    assert min_term_valuation(inverted, 5) == -1
    assert working_precision(inverted, 5, 3, "tight") == 4
    assert working_precision(inverted, 5, 3, "conservative") == 6


@pytest.mark.parametrize("p", [5, 7, 13])
def test_policies_agree_at_target_precision(p):
    tight = evaluate_nGn(LEVEL16, p, 2, policy="tight")
    conservative = evaluate_nGn(LEVEL16, p, 2, policy="conservative")
    assert pad_eq_mod(tight, conservative, 2)


def test_prepared_value_matches_direct_evaluation():
    p, K = 7, 2
    params = parse_params(["1/2", "1/2", "1/2"], ["1", "1", "1"])
    K_work = working_precision(params, p, K)
    gamma = build_gamma_table(p, K_work, gamma_arguments(params, p))
    teich_table = build_teich_table(p, K_work)
    prepared = prepare_nGn(params, p, K, gamma, teich_table)
    for s in range(1, p):
        assert prepared.at(s) == evaluate_nGn(params.at(s), p, K)


def test_prepare_refuses_short_tables():
    gamma = build_gamma_table(7, 1, gamma_arguments(HALVES, 7))
    teich_table = build_teich_table(7, 1)
    with pytest.raises(ValueError):
        prepare_nGn(HALVES, 7, 2, gamma, teich_table)


@pytest.mark.parametrize("p", [5, 7])
def test_reordering_and_integer_shifts_leave_value_unchanged(p):
    assert gn_permutation_check(LEVEL16, p, 2, seed=3)
    assert gn_permutation_check(parse_params(["1/3", "1/2"], ["1", "1/4"], s=2), p, 2)


def test_composite_modulus_rejected():
    with pytest.raises(ValueError):
        evaluate_nGn(HALVES, 9, 2)
    with pytest.raises(ValueError):
        evaluate_nGn(HALVES.at(9), 9, 2)


def _random_params(rng: random.Random, p: int, lower: Sequence[str] | None = None) -> GnParams:
    n = rng.randint(1, 4)
    upper = []
    while len(upper) < n:
        den = rng.choice([1, 2, 3, 4, 5, 6, 8])
        if den % p:
            upper.append(Fraction(rng.randint(-den, 2 * den), den))
    return GnParams(tuple(upper), tuple(Fraction(x) for x in (lower or ["1"] * n)), s=rng.randrange(1, p))


def test_values_with_unit_lower_parameters_are_integral():
    rng = random.Random(21)
    for _ in range(20):
        p = rng.choice([5, 7, 11])
        value = evaluate_nGn(_random_params(rng, p), p, 2)
        assert value.is_zero or value.val >= 0
        assert value.absprec >= 2


def test_s_divisible_by_p_annihilates_random_parameters():
    rng = random.Random(22)
    for _ in range(20):
        p = rng.choice([5, 7, 11])
        params = _random_params(rng, p)
        value = evaluate_nGn(params.at(p * rng.randint(0, 3)), p, 2)
        assert value.is_zero
        assert value.absprec == 2
        K_work = working_precision(params, p, 2)
        gamma = build_gamma_table(p, K_work, gamma_arguments(params, p))
        prepared = prepare_nGn(params, p, 2, gamma, build_teich_table(p, K_work))
        assert prepared.at(0).is_zero
