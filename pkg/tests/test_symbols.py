"""Tests for the billiards residue symbol and its identity chain."""

import math

import pytest

from quadres.billiards import Rect, base_bounces, trace_path
from quadres.oracles import euler_symbol, is_odd_prime, jacobi_symbol, zolotarev_perm_sign
from quadres.symbols import (
    billiard_symbol,
    check_almost_reciprocity,
    check_reciprocity,
    mod4_symbol,
    symbol_supplement_minus_one,
    symbol_supplement_two,
)


def test_billiard_symbol_5x7():
    ev = billiard_symbol(5, 7)
    assert ev.value == -1
    assert ev.negative_bounce_count == 1
    assert ev.base_bounces == ((4, -1), (6, 1), (2, 1))


def test_billiard_symbol_shared_factor_is_zero():
    ev = billiard_symbol(6, 9)
    assert ev.value == 0


def test_billiard_symbol_5_8_is_plus_one():
    # the permutation-sign convention for even denominators, not Kronecker
    assert billiard_symbol(5, 8).value == 1


def test_billiard_symbol_empty_products():
    assert billiard_symbol(4, 1).value == 1
    assert billiard_symbol(1, 4).value == 1
    assert billiard_symbol(1, 1).value == 1


def test_billiard_symbol_rejects_nonpositive():
    with pytest.raises(ValueError):
        billiard_symbol(0, 5)
    with pytest.raises(ValueError):
        billiard_symbol(5, 0)


def test_billiard_symbol_matches_traced_path():
    # the symbol's direct bounce computation against the event-driven trace
    for m in range(1, 41):
        for n in range(1, 41):
            if math.gcd(m, n) != 1:
                continue
            ev = billiard_symbol(m, n)
            traced = [(x, s) for x, s, _ in base_bounces(trace_path(Rect(m=m, n=n)))]
            assert list(ev.base_bounces) == traced, (m, n)


def test_supplement_minus_one():
    assert symbol_supplement_minus_one(5) == 1
    assert symbol_supplement_minus_one(7) == -1
    assert symbol_supplement_minus_one(13) == 1
    with pytest.raises(ValueError):
        symbol_supplement_minus_one(8)


def test_supplement_two():
    assert symbol_supplement_two(7) == 1
    assert symbol_supplement_two(5) == -1
    assert symbol_supplement_two(17) == 1
    with pytest.raises(ValueError):
        symbol_supplement_two(4)


def test_supplements_match_billiards_all_odd():
    # holds for every odd n, prime or not
    for n in range(3, 200, 2):
        assert symbol_supplement_minus_one(n) == billiard_symbol(n - 1, n).value, n
        assert symbol_supplement_two(n) == billiard_symbol(2, n).value, n


def test_almost_reciprocity_examples():
    rec = check_almost_reciprocity(5, 7)
    assert rec.ok and rec.lhs == 1 == rec.rhs  # (-1)(-1) = (5|2) = +1
    rec = check_almost_reciprocity(3, 9)
    assert rec.ok and rec.lhs == 0 == rec.rhs
    rec = check_almost_reciprocity(1, 3)
    assert rec.ok and rec.lhs == 1


def test_almost_reciprocity_validation():
    with pytest.raises(ValueError):
        check_almost_reciprocity(7, 5)
    with pytest.raises(ValueError):
        check_almost_reciprocity(2, 7)
    with pytest.raises(ValueError):
        check_almost_reciprocity(3, 8)


def test_mod4_symbol_examples():
    assert mod4_symbol(5, 8) == 1
    assert mod4_symbol(3, 4) == -1
    assert mod4_symbol(7, 2) == 1


def test_mod4_symbol_validation():
    with pytest.raises(ValueError):
        mod4_symbol(4, 6)  # even numerator
    with pytest.raises(ValueError):
        mod4_symbol(3, 5)  # odd denominator
    with pytest.raises(ValueError):
        mod4_symbol(3, 6)  # shared factor


def test_reciprocity_examples():
    rec = check_reciprocity(5, 7)
    assert rec.ok and rec.lhs == 1
    rec = check_reciprocity(3, 7)
    assert rec.ok and rec.lhs == -1  # (3|7) = -1, (7|3) = +1, exponent 3 odd
    rec = check_reciprocity(13, 17)
    assert rec.ok and rec.lhs == 1


def test_reciprocity_validation():
    with pytest.raises(ValueError):
        check_reciprocity(3, 9)
    with pytest.raises(ValueError):
        check_reciprocity(4, 7)
    with pytest.raises(ValueError):
        check_reciprocity(1, 7)


def test_periodicity_in_numerator():
    for m in range(1, 81):
        for n in range(1, 81):
            assert billiard_symbol(m, n).value == billiard_symbol(m + n, n).value, (m, n)


def test_multiplicative_in_numerator():
    for n in range(2, 41):
        units = [a for a in range(1, n) if math.gcd(a, n) == 1]
        for m1 in units:
            for m2 in units:
                prod = billiard_symbol(m1, n).value * billiard_symbol(m2, n).value
                assert billiard_symbol(m1 * m2 % n, n).value == prod, (m1, m2, n)


def test_agrees_with_euler_on_primes():
    for n in range(3, 80):
        if not is_odd_prime(n):
            continue
        for m in range(1, 2 * n):
            if m % n == 0:
                continue
            assert billiard_symbol(m, n).value == euler_symbol(m, n), (m, n)


def test_agrees_with_jacobi_on_odd():
    for n in range(1, 60, 2):
        for m in range(1, 60):
            assert billiard_symbol(m, n).value == jacobi_symbol(m, n), (m, n)


def test_agrees_with_zolotarev_including_even():
    for n in range(1, 50):
        for m in range(1, 50):
            if math.gcd(m, n) != 1:
                continue
            assert billiard_symbol(m, n).value == zolotarev_perm_sign(m, n), (m, n)
