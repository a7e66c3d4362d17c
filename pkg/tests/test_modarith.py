import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from autfix.errors import InvalidInputError, NotInvertibleError
from autfix.modarith import (
    Residue,
    count_double_units,
    divisors,
    gcd,
    inv_mod,
    is_prime,
    totient,
    units,
)


def scan_totient(n):
    return int((np.gcd(np.arange(1, n + 1), n) == 1).sum())


@pytest.mark.parametrize("a, b, expected", [(12, 8, 4), (1, 97, 1), (25, 24, 1), (0, 5, 5)])
def test_gcd(a, b, expected):
    assert gcd(a, b) == expected


def test_gcd_rejects_zero_zero():
    with pytest.raises(InvalidInputError):
        gcd(0, 0)


@pytest.mark.parametrize("n, expected", [(1, 1), (9, 6), (25, 20), (49, 42), (36, 12)])
def test_totient_examples(n, expected):
    assert totient(n) == expected
    assert scan_totient(n) == expected


def test_totient_zero_is_invalid():
    with pytest.raises(InvalidInputError):
        totient(0)


def test_totient_and_units_agree_with_scan():
    for n in range(2, 10_001):
        ug = units(n)
        assert len(ug) == totient(n) == scan_totient(n)


@pytest.mark.parametrize("n, expected", [(4, [1, 3]), (5, [1, 2, 3, 4]), (9, [1, 2, 4, 5, 7, 8])])
def test_units_examples(n, expected):
    ug = units(n)
    assert list(ug) == expected
    assert ug.modulus == n
    assert all(math.gcd(u, n) == 1 for u in ug)


def test_units_rejects_small_modulus():
    with pytest.raises(InvalidInputError):
        units(1)


@pytest.mark.parametrize("value, modulus, expected", [(1, 7, 1), (4, 5, 4), (2, 9, 5)])
def test_inv_mod_examples(value, modulus, expected):
    assert inv_mod(Residue(value, modulus)) == Residue(expected, modulus)


def test_inv_mod_non_unit():
    with pytest.raises(NotInvertibleError):
        inv_mod(Residue(3, 9))


def test_inv_mod_every_unit_up_to_500():
    for n in range(2, 501):
        for u in units(n):
            v = inv_mod(Residue(u, n))
            assert (Residue(u, n) * v).value == 1


@pytest.mark.parametrize("p, alpha, expected", [(2, 1, 0), (3, 2, 3), (5, 1, 3), (2, 3, 0)])
def test_count_double_units_examples(p, alpha, expected):
    assert count_double_units(p, alpha) == expected


@pytest.mark.parametrize("p, alpha", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3), (5, 2), (5, 3), (7, 2)])
def test_count_double_units_matches_scan(p, alpha):
    q = p**alpha
    scan = [a for a in range(1, q) if math.gcd(a, q) == 1 and math.gcd(a - 1, q) == 1]
    assert count_double_units(p, alpha) == len(scan)


def test_count_double_units_scan_at_nine():
    assert [a for a in range(1, 9) if math.gcd(a, 9) == 1 and math.gcd(a - 1, 9) == 1] == [2, 5, 8]


def test_count_double_units_rejects_composite():
    with pytest.raises(InvalidInputError):
        count_double_units(4, 1)


@given(st.integers(1, 200), st.integers(1, 200))
def test_totient_multiplicative(m, n):
    if math.gcd(m, n) == 1:
        assert totient(m * n) == totient(m) * totient(n)


@given(st.integers(-10**6, 10**6), st.integers(2, 10**4))
def test_residue_canonical(v, n):
    r = Residue.of(v, n)
    assert 0 <= r.value < n
    assert (r.value - v) % n == 0


def test_residue_rejects_noncanonical():
    with pytest.raises(InvalidInputError):
        Residue(9, 9)
    with pytest.raises(InvalidInputError):
        Residue(0, 2**31 + 1)


def test_residue_arithmetic():
    a, b = Residue(7, 9), Residue(5, 9)
    assert a + b == Residue(3, 9)
    assert a - b == Residue(2, 9)
    assert a * b == Residue(8, 9)
    assert -a == Residue(2, 9)
    with pytest.raises(InvalidInputError):
        a + Residue(1, 4)


def test_is_prime_small():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_divisors():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(125) == [1, 5, 25, 125]
    assert divisors(1) == [1]
