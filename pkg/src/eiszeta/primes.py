"""Small prime utilities shared across the package."""

from __future__ import annotations

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond any p this package handles."""
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n % q == 0:
            return n == q
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(bound: int) -> list[int]:
    """All primes <= bound, by sieve."""
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for q in range(2, int(bound**0.5) + 1):
        if sieve[q]:
            sieve[q * q :: q] = bytearray(len(sieve[q * q :: q]))
    return [n for n in range(2, bound + 1) if sieve[n]]


def smallest_prime_factors(bound: int) -> list[int]:
    """spf[n] = smallest prime factor of n, for 0 <= n <= bound (spf[0] = spf[1] = 0)."""
    spf = list(range(bound + 1))
    if bound >= 1:
        spf[1] = 0
    for q in range(2, int(bound**0.5) + 1):
        if spf[q] == q:
            for m in range(q * q, bound + 1, q):
                if spf[m] == m:
                    spf[m] = q
    return spf
