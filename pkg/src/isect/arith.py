"""Exact integer helpers: primality, prime powers, next-prime lookups.

Everything here is deterministic and exact; no floating point is trusted
near a decision boundary.
"""

from __future__ import annotations

import math

from .errors import InputError

# Witness set proven sufficient for deterministic Miller-Rabin below 3.3e24,
# far past the 2**32 envelope used by the prime-power checks.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = (d & -d).bit_length() - 1
    d >>= r
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def smallest_prime_geq(x) -> int:
    """Least prime p with p >= x.

    Accepts int, Fraction or float x >= 1.  For the square-root arguments
    that arise internally, prefer :func:`smallest_prime_with_square_geq`,
    which avoids floating point entirely.
    """
    if x < 1:
        raise InputError(f"smallest_prime_geq requires x >= 1, got {x!r}")
    p = max(2, math.ceil(x))
    while not is_prime(p):
        p += 1
    return p


def smallest_prime_with_square_geq(n: int) -> int:
    """Least prime p with p*p >= n, i.e. the least prime >= sqrt(n), exactly."""
    if n < 1:
        raise InputError(f"expected n >= 1, got {n!r}")
    p = max(2, math.isqrt(n - 1) + 1)  # = ceil(sqrt(n)) for n >= 2
    while not is_prime(p):
        p += 1
    return p


def prime_power(q: int) -> tuple[int, int] | None:
    """Decompose q as p**d with p prime, or None if q is not a prime power."""
    if q < 2:
        return None
    for d in range(q.bit_length(), 0, -1):
        # float guess for the integer d-th root, corrected by +-1
        guess = round(q ** (1.0 / d))
        for p in (guess - 1, guess, guess + 1):
            if p >= 2 and p**d == q and is_prime(p):
                return p, d
    return None


def is_prime_power(q: int) -> bool:
    return prime_power(q) is not None


def comb0(n: int, k: int) -> int:
    """Binomial coefficient with C(n, k) = 0 for k < 0 or k > n."""
    if k < 0 or k > n or n < 0:
        return 0
    return math.comb(n, k)
