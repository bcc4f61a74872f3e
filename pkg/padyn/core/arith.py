"""
Exact arithmetic for padyn
Rationals, p-adic valuations and p-adic absolute values
"""

import math
from fractions import Fraction
from typing import List, Optional, Union

from .errors import NotPrimeError

Rational = Fraction

# v_p values: a finite int or +inf (v_p(0))
ExtendedInteger = Union[int, float]
INFINITY = math.inf

# Witness set making Miller-Rabin deterministic below 3.3e24
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def as_rational(value: Union[int, str, Fraction]) -> Fraction:
    """Coerce ints, Fractions and strings like '13/6' to a reduced Fraction"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise TypeError(f"cannot read {value!r} as a rational number")
    return Fraction(value)


def is_prime(n: int) -> bool:
    """Miller-Rabin with a fixed witness set"""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def require_prime(p: int) -> int:
    if isinstance(p, bool) or not isinstance(p, int) or not is_prime(p):
        raise NotPrimeError(p)
    return p


def primes_up_to(bound: int) -> List[int]:
    """Sieve of Eratosthenes"""
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(bound) + 1):
        if sieve[i]:
            sieve[i * i::i] = bytearray(len(range(i * i, bound + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


def next_prime(n: int) -> int:
    candidate = max(2, n)
    while not is_prime(candidate):
        candidate += 1
    return candidate


def prime_factors(n: int, bound: Optional[int] = None) -> List[int]:
    """
    Distinct prime divisors of n by trial division

    Args:
        n: nonzero integer
        bound: only search primes <= bound (None: factor completely)

    Returns:
        Sorted list of primes; with a bound, a leftover cofactor is not reported
    """
    n = abs(n)
    if n == 0:
        raise ValueError("0 has no finite factorization")
    factors = []
    q = 2
    while q * q <= n and (bound is None or q <= bound):
        if n % q == 0:
            factors.append(q)
            while n % q == 0:
                n //= q
        q += 1 if q == 2 else 2
    if n > 1 and (bound is None or n <= bound):
        factors.append(n)
    return factors


def int_valuation(n: int, p: int) -> ExtendedInteger:
    """Exponent of p in the integer n (p assumed prime)"""
    if n == 0:
        return INFINITY
    n = abs(n)
    v = 0
    # square the divisor to strip large powers quickly
    while n % p == 0:
        power, k = p, 1
        while n % (power * power) == 0:
            power *= power
            k *= 2
        n //= power
        v += k
    return v


def vp(x: Union[int, Fraction], p: int) -> ExtendedInteger:
    """
    p-adic valuation of a rational number

    Args:
        x: rational (int or Fraction)
        p: prime

    Returns:
        exponent of p in x, negative for denominators; +inf for x = 0
    """
    require_prime(p)
    x = as_rational(x)
    if x == 0:
        return INFINITY
    return int_valuation(x.numerator, p) - int_valuation(x.denominator, p)


def padic_abs(x: Union[int, Fraction], p: int) -> Fraction:
    """Exact |x|_p = p^(-vp(x)), with |0|_p = 0"""
    v = vp(x, p)
    if v == INFINITY:
        return Fraction(0)
    return Fraction(p) ** (-v)


def format_valuation(v: ExtendedInteger) -> str:
    return "inf" if v == INFINITY else str(v)
