"""Elementary arithmetic functions on positive integers.

Everything is exact: trial division feeds the multiplicative functions,
and ``totient_range`` enumerates the full preimage {d : phi(d) <= bound}
directly from prime powers instead of sieving a quadratic range.
"""

from __future__ import annotations

import math
from functools import lru_cache


@lru_cache(maxsize=1 << 16)
def _factor_pairs(n: int) -> tuple[tuple[int, int], ...]:
    if n < 1:
        raise ValueError(f"positive integer required, got {n}")
    pairs = []
    for p in (2, 3):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            pairs.append((p, e))
    # remaining factors via the 6k+-1 wheel
    p = 5
    while p * p <= n:
        for q in (p, p + 2):
            if n % q == 0:
                e = 0
                while n % q == 0:
                    n //= q
                    e += 1
                pairs.append((q, e))
        p += 6
    if n > 1:
        pairs.append((n, 1))
    return tuple(pairs)


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 as {prime: exponent}."""
    return dict(_factor_pairs(n))


def euler_phi(n: int) -> int:
    """Euler's totient: the number of primitive n-th roots of unity."""
    out = 1
    for p, e in _factor_pairs(n):
        out *= (p - 1) * p ** (e - 1)
    return out


def mobius(n: int) -> int:
    pairs = _factor_pairs(n)
    if any(e > 1 for _, e in pairs):
        return 0
    return -1 if len(pairs) % 2 else 1


def omega(n: int) -> int:
    """Number of distinct prime divisors."""
    return len(_factor_pairs(n))


def tau(n: int) -> int:
    """Number of divisors."""
    out = 1
    for _, e in _factor_pairs(n):
        out *= e + 1
    return out


def divisors(n: int) -> list[int]:
    """All divisors of n >= 1, ascending."""
    out = [1]
    for p, e in _factor_pairs(n):
        out = [d * p**i for d in out for i in range(e + 1)]
    return sorted(out)


def primes_upto(limit: int) -> list[int]:
    """Primes <= limit by a plain sieve."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray((limit - p * p) // p + 1)
    return [i for i, alive in enumerate(sieve) if alive]


def totient_range(bound: int) -> list[int]:
    """All d >= 1 with phi(d) <= bound, ascending.

    Builds candidates from prime powers p^a with accumulated totient
    <= bound; equivalent to scanning d <= 2*bound^2 but linear in the
    output size (~1.94*bound entries).
    """
    if bound < 1:
        return []
    primes = primes_upto(bound + 1)
    out: list[int] = []

    def extend(start: int, d: int, phi: int) -> None:
        out.append(d)
        for j in range(start, len(primes)):
            p = primes[j]
            ph = phi * (p - 1)
            if ph > bound:
                break
            dd = d * p
            while ph <= bound:
                extend(j + 1, dd, ph)
                dd *= p
                ph *= p

    extend(0, 1, 1)
    return sorted(out)


def lcm_all(values) -> int:
    """lcm of an iterable of positive integers; 1 for the empty iterable."""
    out = 1
    for v in values:
        out = math.lcm(out, v)
    return out
