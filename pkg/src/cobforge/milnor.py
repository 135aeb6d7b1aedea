"""Closed forms for Milnor numbers of sequential blow-up modifications.

A modification of an n-dimensional complex manifold blows up a point and then
a k-dimensional projective subspace of the exceptional divisor (0 <= k <=
n-2).  The change of the Milnor number s_n under that operation is a
universal constant depending on (n, k) only.  This module provides:

* ``s_dkn(n, k)``: the Milnor number of the twisted projectivisation
  P(O(-1) + O(1)^(n-k-1) + conjugate-trivial) over CP^k, the correction term
  of the second blow-up stage;
* ``s_kn(n, k)``: the total change of s_n under the two-stage modification,
  equal to -s_dkn(n, k) - (n + (-1)^n);
* ``L_kn(n, k)``: the combination -s_kn(n,k) + 3*s_kn(n,k-1) - 2*s_kn(n,k-2),
  which collapses to a compact closed form and is the handle for
  divisibility arguments;
* ``coprimality_check``: gcd of the whole s_kn row for even n;
* ``witness_k``: for a prime p dividing n+1 (with n+1 not a prime power), a
  digit-driven choice of k with L_kn(n, k) not divisible by p, certifying
  that the gcd of the row is 1.

Every value here is cross-checked in the tests against the fiber-integration
oracle in :mod:`cobforge.chern`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import base_p_digits, binomial, is_prime, prime_power_check


def _check_range(n: int, k: int, k_min: int = 0) -> None:
    if n < 2:
        raise ValueError("dimension n must be >= 2")
    if not k_min <= k <= n - 2:
        raise ValueError(f"k must satisfy {k_min} <= k <= n-2, got k={k} for n={n}")


def s_dkn(n: int, k: int) -> int:
    """Milnor number of the two-stage blow-up correction space.

    Closed form:
    (n-k-1)*(2^(k+1)-1) + sum_{i=0}^{k} (-1)^i * (2^i + (-1)^n * 2^(k-i)) * C(n-1, i).
    """
    _check_range(n, k)
    sign_n = 1 if n % 2 == 0 else -1
    acc = (n - k - 1) * (2 ** (k + 1) - 1)
    for i in range(k + 1):
        term = (2**i + sign_n * 2 ** (k - i)) * binomial(n - 1, i)
        acc += term if i % 2 == 0 else -term
    return acc


def point_blowup_delta(n: int) -> int:
    """Change of s_n under a single blow-up at a point: -(n + (-1)^n)."""
    if n < 2:
        raise ValueError("dimension n must be >= 2")
    return -(n + (1 if n % 2 == 0 else -1))


def s_kn(n: int, k: int) -> int:
    """Change of s_n under the two-stage modification with parameters (n, k).

    The point blow-up contributes -(n + (-1)^n) and the second stage
    contributes -s_dkn(n, k).
    """
    return -s_dkn(n, k) + point_blowup_delta(n)


def L_kn(n: int, k: int) -> int:
    """The combination -s_kn(n,k) + 3*s_kn(n,k-1) - 2*s_kn(n,k-2) in closed form.

    Equals -2^k - 1 + (-1)^(n+k) * C(n,k) + (-2)^k * C(n,k); for even n this
    factors as -(2^k + 1) * (1 + (-1)^(k+1) * C(n,k)).
    """
    _check_range(n, k, k_min=2)
    c = binomial(n, k)
    return -(2**k) - 1 + (-1) ** (n + k) * c + (-2) ** k * c


def coprimality_check(n: int) -> tuple[int, bool]:
    """Gcd of {s_kn(n, k) : 0 <= k <= n-2} for even n, and whether it is 1.

    The gcd is accumulated incrementally and short-circuits at 1, since the
    row entries grow like 2^n.  Odd n is rejected: the construction this
    feeds only consumes even dimensions.
    """
    if n < 2:
        raise ValueError("dimension n must be >= 2")
    if n % 2:
        raise ValueError("coprimality check applies to even n only")
    g = 0
    for k in range(n - 1):
        g = math.gcd(g, abs(s_kn(n, k)))
        if g == 1:
            break
    return g, g == 1


def witness_k(n: int, p: int) -> tuple[int, int]:
    """A k in [2, n-2] with L_kn(n, k) not divisible by p, and that residue.

    Requires n even, p a prime divisor of n+1, and n+1 not a prime power.
    Let j be the least index with digit n_j < p-1 in the base-p expansion of
    n (it exists, else n+1 would be a power of p).  For k = p^j the digit
    product rule gives C(n,k) = n_j mod p, which rules out the binomial
    factor of L_kn vanishing; if 2^k = -1 mod p would kill the other factor,
    k+1 works instead.  The returned residue is verified nonzero.
    """
    if n % 2:
        raise ValueError("witness search applies to even n only")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if (n + 1) % p:
        raise ValueError(f"{p} does not divide n+1 = {n + 1}")
    if prime_power_check(n + 1) is not None:
        raise ValueError(f"n+1 = {n + 1} is a prime power; no witness exists")
    digits = base_p_digits(n, p).digits
    j = None
    for i, d in enumerate(digits):
        if d < p - 1:
            j = i
            break
    if j is None:  # unreachable: all digits p-1 would make n+1 a power of p
        raise ArithmeticError("no base-p digit below p-1")
    k = p**j
    if pow(2, k, p) == p - 1:
        k += 1
    if not 2 <= k <= n - 2:  # the case analysis guarantees this range
        raise ArithmeticError(f"witness k={k} fell outside [2, {n - 2}]")
    residue = L_kn(n, k) % p
    if residue == 0:  # unreachable by the case analysis; guard anyway
        raise ArithmeticError(f"L_kn({n},{k}) unexpectedly divisible by {p}")
    return k, residue


@dataclass(frozen=True)
class MilnorTable:
    """All three closed-form rows for one dimension n.

    ``s_dkn_row`` and ``s_kn_row`` are indexed by k = 0..n-2, ``L_row`` by
    k = 2..n-2 (offset by 2).  Construction checks the defining identities
    between the rows.
    """

    n: int
    s_dkn_row: tuple[int, ...]
    s_kn_row: tuple[int, ...]
    L_row: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.n
        if n < 2:
            raise ValueError("dimension n must be >= 2")
        if len(self.s_dkn_row) != n - 1 or len(self.s_kn_row) != n - 1:
            raise ValueError("rows must cover k = 0..n-2")
        if len(self.L_row) != max(0, n - 3):
            raise ValueError("L row must cover k = 2..n-2")
        delta = point_blowup_delta(n)
        for k in range(n - 1):
            if self.s_kn_row[k] != -self.s_dkn_row[k] + delta:
                raise ValueError(f"s_kn row inconsistent at k={k}")
        for k in range(2, n - 1):
            combo = -self.s_kn_row[k] + 3 * self.s_kn_row[k - 1] - 2 * self.s_kn_row[k - 2]
            if self.L_row[k - 2] != combo:
                raise ValueError(f"L row inconsistent at k={k}")


def milnor_table(n: int) -> MilnorTable:
    """Tabulate s_dkn, s_kn and L_kn for all valid k at dimension n."""
    if n < 2:
        raise ValueError("dimension n must be >= 2")
    return MilnorTable(
        n=n,
        s_dkn_row=tuple(s_dkn(n, k) for k in range(n - 1)),
        s_kn_row=tuple(s_kn(n, k) for k in range(n - 1)),
        L_row=tuple(L_kn(n, k) for k in range(2, n - 1)),
    )
