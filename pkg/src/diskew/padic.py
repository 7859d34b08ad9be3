"""Base-p digit combinatorics: binomials mod p and the digit neighbour."""

from math import comb

from .errors import NotPrime, PDoesNotDivideN, ZeroInput
from .fields import is_prime


def _require_prime(p):
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")


def p_adic_digits(n, p):
    """Base-p digits of n >= 0, least significant first (empty for 0)."""
    _require_prime(p)
    if n < 0:
        raise ZeroInput("digits need n >= 0")
    digits = []
    while n:
        n, d = divmod(n, p)
        digits.append(d)
    return digits


def v_p(n, p):
    """Index of the lowest nonzero base-p digit of n > 0."""
    _require_prime(p)
    if n <= 0:
        raise ZeroInput("valuation needs n > 0")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def lucas_binomial(n, m, p):
    """C(n, m) mod p as the digit-wise product of small binomials."""
    _require_prime(p)
    if n < 0 or m < 0:
        raise ZeroInput("binomials need n, m >= 0")
    result = 1
    while n or m:
        n, nd = divmod(n, p)
        m, md = divmod(m, p)
        result = result * comb(nd, md) % p
        if result == 0:
            return 0
    return result


def p_neighbour(n, p):
    """Decrement the lowest nonzero base-p digit of n.

    Defined for n > 0 divisible by p; the result is n - p^v_p(n).
    """
    _require_prime(p)
    if n <= 0:
        raise ZeroInput("neighbour needs n > 0")
    if n % p != 0:
        raise PDoesNotDivideN(f"{p} does not divide {n}")
    return n - p ** v_p(n, p)
