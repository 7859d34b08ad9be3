"""Base-p digit combinatorics against brute-force oracles."""

from math import comb

import pytest

from diskew.errors import NotPrime, PDoesNotDivideN, ZeroInput
from diskew.padic import lucas_binomial, p_adic_digits, p_neighbour, v_p


def test_digits():
    assert p_adic_digits(0, 5) == []
    assert p_adic_digits(38, 5) == [3, 2, 1]
    assert p_adic_digits(8, 2) == [0, 0, 0, 1]


def test_valuation():
    assert v_p(50, 5) == 2
    assert v_p(7, 5) == 0
    assert v_p(2 ** 10, 2) == 10
    with pytest.raises(ZeroInput):
        v_p(0, 5)


def test_lucas_against_comb():
    for p in (2, 3, 5, 7):
        for n in range(0, 60):
            for m in range(0, n + 1):
                assert lucas_binomial(n, m, p) == comb(n, m) % p
    assert lucas_binomial(3, 5, 2) == 0  # m > n


def test_lucas_input_checks():
    with pytest.raises(NotPrime):
        lucas_binomial(4, 2, 4)
    with pytest.raises(ZeroInput):
        lucas_binomial(-1, 0, 5)


def neighbour_scan(n, p):
    """Definitional oracle: largest m < n with C(n, m) nonzero mod p."""
    for m in range(n - 1, -1, -1):
        if comb(n, m) % p != 0:
            return m
    return 0


def test_neighbour_against_scan():
    for p in (2, 3, 5):
        for n in range(p, 200, p):
            assert p_neighbour(n, p) == neighbour_scan(n, p)


def test_neighbour_of_prime_powers():
    for p in (2, 3, 5, 7):
        for i in range(1, 7):
            assert p_neighbour(p ** i, p) == 0


def test_neighbour_input_checks():
    with pytest.raises(PDoesNotDivideN):
        p_neighbour(7, 5)
    with pytest.raises(ZeroInput):
        p_neighbour(0, 5)
