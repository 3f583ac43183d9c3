"""Exact number theory: primitive parts, Gaussian binomials and small searches."""

from __future__ import annotations

from math import gcd, isqrt, prod

import numpy as np


def primitive_part(a: int, e: int) -> int:
    """Largest divisor of ``a**e - 1`` coprime to every ``a**i - 1`` with ``i < e``.

    Common prime factors are stripped with repeated gcds, so no factorization
    is needed. A prime dividing ``a**i - 1`` and ``a**e - 1`` divides
    ``a**gcd(i, e) - 1``, so only proper divisors of ``e`` are tried.
    """
    if a < 2 or e < 1:
        raise ValueError("need a >= 2 and e >= 1")
    n = a ** e - 1
    for i in range(1, e):
        if e % i:
            continue
        m = a ** i - 1
        g = gcd(n, m)
        while g > 1:
            n //= g
            g = gcd(n, g)
    return n


def gaussian_binomial(h: int, t: int, q: int) -> int:
    """Number of ``t``-dimensional subspaces of an ``h``-dimensional GF(q)-space."""
    if not 0 <= t <= h:
        raise ValueError("need 0 <= t <= h")
    if q < 2:
        raise ValueError("need q >= 2")
    num = prod(q ** (h - i) - 1 for i in range(t))
    den = prod(q ** (i + 1) - 1 for i in range(t))
    return num // den


def eq_rid_target(h: int, q: int) -> int:
    v = (q ** h - 1) // (q - 1)
    return v * v - 8 * v + 11


def check_eq_rid(h: int, q: int) -> dict[int, bool]:
    """For each ``1 <= t <= h/2``: does ``[h t]_q`` divide ``v^2 - 8v + 11``?"""
    if h < 2:
        raise ValueError("need h >= 2")
    target = eq_rid_target(h, q)
    return {t: target % gaussian_binomial(h, t, q) == 0 for t in range(1, h // 2 + 1)}


def compute_rho(s: int, a: int, aut_order: int) -> int:
    """``(s + 2) / gcd(s + 2, 3 (a - 1) |Aut(S)|)`` with ``s = a^(l/2)`` given exactly."""
    if aut_order <= 0:
        raise ValueError("automorphism group order must be positive")
    return (s + 2) // gcd(s + 2, 3 * (a - 1) * aut_order)


def prime_sieve(n: int) -> np.ndarray:
    """Boolean array ``is_prime[0..n]``."""
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p::p] = False
    return sieve


def smallest_prime_factors(n: int) -> np.ndarray:
    spf = np.arange(n + 1, dtype=np.int64)
    for p in range(2, isqrt(n) + 1):
        if spf[p] == p:
            block = spf[p * p::p]
            mask = block == np.arange(p * p, n + 1, p)
            block[mask] = p
    return spf


def prime_powers_upto(n: int, odd: bool = False) -> list[tuple[int, int, int]]:
    """All ``(p**m, p, m)`` with ``p**m <= n``, sorted by value."""
    out = []
    for p in np.flatnonzero(prime_sieve(n)).tolist():
        if odd and p == 2:
            continue
        pm, m = p, 1
        while pm <= n:
            out.append((pm, p, m))
            pm *= p
            m += 1
    out.sort()
    return out


def _as_prime_power(n: int, spf: np.ndarray) -> tuple[int, int] | None:
    p = int(spf[n])
    m = 0
    while n % p == 0:
        n //= p
        m += 1
    return (p, m) if n == 1 else None


def lemma_div_solutions(pm_max: int) -> list[tuple[int, int, int]]:
    """Triples ``(p^m, u, z)``: ``p`` odd, ``u = p^m + 2`` prime and ``u | p^z - 1``, ``0 < z <= 4m``."""
    if pm_max < 3:
        return []
    is_p = prime_sieve(pm_max + 2)
    out = []
    for pm, p, m in prime_powers_upto(pm_max, odd=True):
        u = pm + 2
        if u < 5 or not is_p[u]:
            continue
        for z in range(1, 4 * m + 1):
            if pow(p, z, u) == 1:
                out.append((pm, u, z))
    return out


def pillai_solutions(bound: int) -> list[tuple[int, int, int, int]]:
    """All ``(p, m, u, h)`` with ``p, u`` prime and ``u^h = p^m + 2``, ``3 <= p^m <= bound``."""
    spf = smallest_prime_factors(bound + 2)
    out = []
    for pm, p, m in prime_powers_upto(bound):
        if pm < 3:
            continue
        uh = _as_prime_power(pm + 2, spf)
        if uh is not None:
            out.append((p, m, uh[0], uh[1]))
    return out


def is_perfect_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n
