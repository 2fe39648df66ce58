"""Exact integer arithmetic kernels: factorization and multiplicative functions.

Everything here returns exact integers (or exact tuples of integers); floating
point never enters.  All functions are pure and safe to call concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

# Deterministic Miller-Rabin witness set for n < 3.3 * 10^24, covers 2^63.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Above this, factorize() switches from pure trial division to rho splitting.
_TRIAL_LIMIT = 10**6


@dataclass(frozen=True)
class Factorization:
    """Prime decomposition of a positive integer.

    ``factors`` is sorted by prime and each exponent is >= 1; the empty tuple
    represents 1.
    """

    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prod = 1
        last = 0
        for p, e in self.factors:
            if p <= last or e < 1 or not is_prime(p):
                raise ValueError(f"invalid factor list for {self.value}")
            last = p
            prod *= p**e
        if prod != self.value:
            raise ValueError(f"factors do not multiply to {self.value}")

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test (exact for n < 2^64)."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
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


def _pollard_brent(n: int) -> int:
    """Find a nontrivial factor of composite odd n (Brent's cycle variant).

    Deterministic: the (y, c) parameters are swept in a fixed order.
    """
    if n % 2 == 0:
        return 2
    for c in range(1, n):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho splitting failed for {n}")  # pragma: no cover


def factorize(n: int) -> Factorization:
    """Prime factorization of a positive integer n <= 2^63.

    Trial division below 10^6; Miller-Rabin plus Brent rho splitting above.
    factorize(1) carries an empty factor list.
    """
    if n < 1:
        raise ValueError(f"factorize requires n >= 1, got {n}")
    value = n
    counts: dict[int, int] = {}

    def record(p):
        counts[p] = counts.get(p, 0) + 1

    for p in (2, 3, 5):
        while n % p == 0:
            record(p)
            n //= p
    # wheel over 6k+-1
    d = 7
    step = 4
    limit = _TRIAL_LIMIT if n >= _TRIAL_LIMIT else n
    while d * d <= n and d < limit:
        while n % d == 0:
            record(d)
            n //= d
        d += step
        step = 6 - step

    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            record(m)
            continue
        g = _pollard_brent(m)
        stack.append(g)
        stack.append(m // g)

    return Factorization(value, tuple(sorted(counts.items())))


def euler_phi(n: int) -> int:
    """Euler totient: count of 1 <= x <= n coprime to n."""
    if n < 1:
        raise ValueError(f"euler_phi requires n >= 1, got {n}")
    result = n
    for p, _ in factorize(n).factors:
        result -= result // p
    return result


def moebius(n: int) -> int:
    """Moebius function: 0 unless n is squarefree, else (-1)^(prime count)."""
    if n < 1:
        raise ValueError(f"moebius requires n >= 1, got {n}")
    fac = factorize(n)
    if any(e > 1 for _, e in fac.factors):
        return 0
    return -1 if len(fac.factors) % 2 else 1


def omega(n: int) -> int:
    """Number of distinct prime divisors of |n|.  omega(0) is undefined."""
    if n == 0:
        raise ValueError("omega(0) is undefined")
    return len(factorize(abs(n)).factors)


def theta(k: int) -> int:
    """Exponent k * C(k+1, 2) governing the logarithmic loss for degree k."""
    if k < 1:
        raise ValueError(f"theta requires k >= 1, got {k}")
    return k * math.comb(k + 1, 2)


def gcd_conv(a: int, q: int) -> int:
    """gcd(|a|, q), with the convention that the gcd of 0 and q is q."""
    if q < 1:
        raise ValueError(f"gcd_conv requires q >= 1, got {q}")
    return q if a == 0 else math.gcd(abs(a), q)


def valuation(n: int, p: int) -> int:
    """Largest e with p^e dividing n (n nonzero, p prime)."""
    if n == 0:
        raise ValueError("valuation of 0 is undefined")
    if not is_prime(p):
        raise ValueError(f"valuation requires prime p, got {p}")
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def ramanujan_sum(q: int, n: int) -> int:
    """Sum of e(pn/q) over 0 <= p < q coprime to q, as an exact integer.

    Uses the closed form mu(q/g) * phi(q) / phi(q/g) with g = gcd_conv(n, q);
    phi(q/g) always divides phi(q), so the division is exact.
    """
    if q < 1:
        raise ValueError(f"ramanujan_sum requires q >= 1, got {q}")
    g = gcd_conv(n, q)
    d = q // g
    mu = moebius(d)
    if mu == 0:
        return 0
    return mu * (euler_phi(q) // euler_phi(d))


@lru_cache(maxsize=32)
def phi_sieve(limit: int) -> tuple[int, ...]:
    """Table t with t[n] = phi(n) for 0 <= n <= limit (t[0] = 0)."""
    if limit < 0:
        raise ValueError("limit must be nonnegative")
    t = list(range(limit + 1))
    for p in range(2, limit + 1):
        if t[p] == p:  # p prime
            for m in range(p, limit + 1, p):
                t[m] -= t[m] // p
    if limit >= 0:
        t[0] = 0
    return tuple(t)


@lru_cache(maxsize=32)
def moebius_sieve(limit: int) -> tuple[int, ...]:
    """Table t with t[n] = mu(n) for 0 <= n <= limit (t[0] = 0)."""
    if limit < 0:
        raise ValueError("limit must be nonnegative")
    mu = [1] * (limit + 1)
    primes_mark = [True] * (limit + 1)
    for p in range(2, limit + 1):
        if primes_mark[p]:
            for m in range(p, limit + 1, p):
                if m > p:
                    primes_mark[m] = False
                mu[m] = -mu[m]
            pp = p * p
            for m in range(pp, limit + 1, pp):
                mu[m] = 0
    if limit >= 0:
        mu[0] = 0
    return tuple(mu)


def primes_up_to(limit: int) -> list[int]:
    """All primes <= limit by Eratosthenes."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            start = p * p
            sieve[start :: p] = bytearray(len(range(start, limit + 1, p)))
    return [i for i, flag in enumerate(sieve) if flag]
