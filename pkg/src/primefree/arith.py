"""Exact and modular integer arithmetic primitives.

Everything here is a pure function on Python ints, so no overflow is possible
and results are safe to share between worker processes.
"""

from __future__ import annotations

import random

from .errors import DomainError

DEFAULT_MR_ROUNDS = 40

# Bases that make Miller-Rabin deterministic for every n < 3.18 * 10**23,
# which comfortably covers n < 2**64.
_DETERMINISTIC_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                 59, 61, 67, 71, 73, 79, 83, 89, 97)


def mod_pow(base: int, exp: int, modulus: int) -> int:
    """Return ``base**exp % modulus`` using square-and-multiply."""
    if modulus < 1:
        raise DomainError(f"modulus must be >= 1, got {modulus}")
    if exp < 0:
        raise DomainError(f"exponent must be >= 0, got {exp}")
    return pow(base, exp, modulus)


def int_kth_root(s: int, k: int) -> tuple[int, bool]:
    """Return ``(floor(s**(1/k)), exact)`` computed with integer Newton steps.

    >>> int_kth_root(33, 2)
    (5, False)
    >>> int_kth_root(9, 2)
    (3, True)
    """
    if k < 1:
        raise DomainError(f"root index must be >= 1, got {k}")
    if s < 0:
        raise DomainError(f"radicand must be >= 0, got {s}")
    if s < 2 or k == 1:
        return s, True
    # Start above the root: 2**ceil(bits/k) > s**(1/k).
    x = 1 << -(-s.bit_length() // k)
    while True:
        y = ((k - 1) * x + s // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    return x, x ** k == s


def _miller_rabin_round(n: int, a: int, d: int, s: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_probable_prime(x: int, rounds: int = DEFAULT_MR_ROUNDS) -> bool:
    """Miller-Rabin primality test.

    Deterministic below 2**64. Above that, ``rounds`` bases are drawn from a
    generator seeded by ``x`` itself, so repeated calls agree; a True answer is
    wrong with probability below ``4**-rounds``.
    """
    if x < 2:
        return False
    for p in _SMALL_PRIMES:
        if x == p:
            return True
        if x % p == 0:
            return False
    d, s = x - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if x < 1 << 64:
        bases = _DETERMINISTIC_BASES
    else:
        rng = random.Random(x)
        bases = [rng.randrange(2, x - 1) for _ in range(rounds)]
    return all(_miller_rabin_round(x, a, d, s) for a in bases)


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a|p) via Euler's criterion."""
    if p < 3 or p % 2 == 0:
        raise DomainError(f"legendre needs an odd prime modulus, got {p}")
    if not is_probable_prime(p):
        raise DomainError(f"{p} is not prime")
    e = pow(a, (p - 1) // 2, p)
    return -1 if e == p - 1 else e


def divisors(t: int) -> list[int]:
    """All positive divisors of ``t`` in ascending order."""
    if t < 1:
        raise DomainError(f"divisors needs t >= 1, got {t}")
    small, large = [], []
    i = 1
    while i * i <= t:
        if t % i == 0:
            small.append(i)
            if i * i != t:
                large.append(t // i)
        i += 1
    return small + large[::-1]


def primes_up_to(bound: int) -> list[int]:
    """Primes ``p <= bound`` by a plain sieve of Eratosthenes."""
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0:2] = b"\x00\x00"
    i = 2
    while i * i <= bound:
        if sieve[i]:
            sieve[i * i::i] = bytes(len(range(i * i, bound + 1, i)))
        i += 1
    return [i for i, flag in enumerate(sieve) if flag]


def smallest_prime_factor(m: int) -> int:
    """Smallest prime dividing ``m`` (m >= 2), by trial division."""
    if m < 2:
        raise DomainError(f"smallest_prime_factor needs m >= 2, got {m}")
    if m % 2 == 0:
        return 2
    f = 3
    while f * f <= m:
        if m % f == 0:
            return f
        f += 2
    return m


def floor_pow_div(n: int, t: int, d: int) -> int:
    """Exact ``floor(n**t / d)``."""
    if t < 2 or d < 2:
        raise DomainError(f"need t >= 2 and d >= 2, got t={t}, d={d}")
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    return n ** t // d


def decimal_digits_bound(n: int, t: int) -> int:
    """Upper bound on the decimal digit count of ``n**t``."""
    return t * len(str(max(n, 1)))
