"""Exact integer primitives: binomials, Lucas reduction, gcds, prime powers.

Every integer in this package is a plain Python ``int``; arithmetic is
arbitrary-precision, so nothing here ever rounds or overflows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional


def is_prime(p: int) -> bool:
    """Trial-division primality test; inputs in this package stay small."""
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def binomial(n: int, k: int) -> int:
    """C(n, k) by the multiplicative formula with exact division.

    Returns 0 when k < 0 or k > n.
    """
    if n < 0:
        raise ValueError("binomial requires n >= 0")
    if k < 0 or k > n:
        return 0
    k = min(k, n - k)
    result = 1
    for i in range(1, k + 1):
        result = result * (n - k + i) // i
    return result


@dataclass(frozen=True)
class BasePDigits:
    """Base-p expansion d_0 + d_1*p + ... + d_r*p^r, least significant first.

    The digit tuple is empty for zero and never has a trailing zero digit.
    """

    p: int
    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"base {self.p} is not prime")
        if any(d < 0 or d >= self.p for d in self.digits):
            raise ValueError("digit out of range for the base")
        if self.digits and self.digits[-1] == 0:
            raise ValueError("highest digit must be nonzero")

    def value(self) -> int:
        return sum(d * self.p**i for i, d in enumerate(self.digits))


def base_p_digits(n: int, p: int) -> BasePDigits:
    if n < 0:
        raise ValueError("base-p expansion requires n >= 0")
    if not is_prime(p):
        raise ValueError(f"base {p} is not prime")
    digits = []
    while n:
        n, d = divmod(n, p)
        digits.append(d)
    return BasePDigits(p, tuple(digits))


def binomial_mod_p(n: int, m: int, p: int) -> int:
    """C(n, m) mod p, computed digit-by-digit from base-p expansions.

    By Lucas' theorem the product of the digit-wise binomials
    C(n_i, m_i) mod p equals C(n, m) mod p.
    """
    if not is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    if n < 0 or m < 0:
        raise ValueError("binomial_mod_p requires n, m >= 0")
    nd = base_p_digits(n, p).digits
    md = base_p_digits(m, p).digits
    result = 1
    for i in range(max(len(nd), len(md))):
        ni = nd[i] if i < len(nd) else 0
        mi = md[i] if i < len(md) else 0
        result = result * binomial(ni, mi) % p
        if result == 0:
            break
    return result


def gcd_list(values: Iterable[int]) -> int:
    """Nonnegative gcd of the absolute values; at least one must be nonzero."""
    vals = list(values)
    if not vals:
        raise ValueError("gcd_list needs at least one value")
    g = 0
    for v in vals:
        g = math.gcd(g, abs(v))
        if g == 1:
            return 1
    if g == 0:
        raise ValueError("gcd_list of all-zero input")
    return g


def prime_power_check(m: int) -> Optional[tuple[int, int]]:
    """Return (p, e) with m = p**e if m is a prime power, else None.

    Trial division up to sqrt(m); the dimensions fed to this stay small.
    """
    if m < 2:
        raise ValueError("prime_power_check requires m >= 2")
    p = _smallest_prime_factor(m)
    e = 0
    while m % p == 0:
        m //= p
        e += 1
    return (p, e) if m == 1 else None


def _smallest_prime_factor(m: int) -> int:
    if m % 2 == 0:
        return 2
    f = 3
    while f * f <= m:
        if m % f == 0:
            return f
        f += 2
    return m
