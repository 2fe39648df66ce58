"""Farey fractions of bounded denominator and their exponential-sum kernel.

The fraction system is the half-open interval [0, 1): one representative per
coprime residue p mod q for every q up to the order, 0/1 included and 1/1
excluded.  Its size is the totient summatory function.

The kernel at an integer frequency c is the sum of e(xc) over the system,
which collapses to a sum of Ramanujan sums and is therefore an exact integer.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import NamedTuple

from .arith import gcd_conv, moebius_sieve, phi_sieve


class FareyFraction(NamedTuple):
    """Reduced fraction p/q with 0 <= p < q (p = 0 only at q = 1)."""

    p: int
    q: int

    @property
    def value(self) -> float:
        return self.p / self.q


def farey_sequence(order: int) -> list[FareyFraction]:
    """All fractions of denominator <= order in [0, 1), ascending.

    Generated by the classical neighbor recurrence: if a/b < c/d are
    consecutive, the successor of c/d is (kc - a)/(kd - b) with
    k = (order + b) // d.  The terminal 1/1 is dropped.
    """
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    seq = [FareyFraction(0, 1)]
    a, b, c, d = 0, 1, 1, order
    while (c, d) != (1, 1):
        seq.append(FareyFraction(c, d))
        k = (order + b) // d
        a, b, c, d = c, d, k * c - a, k * d - b
    return seq


def farey_size(order: int) -> int:
    """Totient summatory value: the length of farey_sequence(order)."""
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    return sum(phi_sieve(order)[1 : order + 1])


@lru_cache(maxsize=64)
def _ramanujan_tables(order: int):
    phi = phi_sieve(order)
    mu = moebius_sieve(order)
    return phi, mu


@lru_cache(maxsize=200_000)
def kernel_exact(c: int, order: int) -> int:
    """Sum of e(xc) over the fraction system of the given order, exactly.

    Equals the sum over q <= order of the Ramanujan sum at frequency c,
    each evaluated by the closed form mu(q/g) * phi(q) / phi(q/g).
    """
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    phi, mu = _ramanujan_tables(order)
    if c == 0:
        return sum(phi[1 : order + 1])
    c = abs(c)
    total = 0
    for q in range(1, order + 1):
        g = math.gcd(c, q)
        d = q // g
        m = mu[d]
        if m:
            total += m * (phi[q] // phi[d])
    return total


def kernel_K(poly, order: int, i: int, j: int) -> int:
    """Kernel entry at the frequency P(i) - P(j)."""
    return kernel_exact(poly(i) - poly(j), order)


def gcd_sum_bound(c: int, order: int) -> int:
    """Sum over q <= order of gcd(c, q), under the convention gcd(0, q) = q.

    Termwise dominates |kernel_exact(c, order)|.
    """
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    return sum(gcd_conv(c, q) for q in range(1, order + 1))


def kernel_direct(c: int, order: int) -> complex:
    """Kernel by direct complex summation; the oracle for kernel_exact.

    Each phase xc is reduced exactly to (pc mod q)/q before exponentiation,
    so the value is accurate even for very large |c|.
    """
    total = 0j
    for p, q in farey_sequence(order):
        r = (p * c) % q
        total += complex(math.cos(math.tau * r / q), math.sin(math.tau * r / q))
    return total
