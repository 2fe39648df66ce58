"""Optimality checks for the pure power phase T^n over prime denominators.

The complete twisted power sums mod a prime q satisfy an exact second-moment
identity (via the solution count of i^n = j^n), obey the Weil square-root
bound, and their incomplete segments obey the completion bound with an extra
log factor.  Feeding these into the sieve form over all prime denominators
up to Q yields an explicit floor showing the envelope's Q(N+Q) shape cannot
be improved.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .arith import is_prime
from .polyroots import IntPolynomial
from .sieve import DEFAULT_TERM_BUDGET, SieveInstance, lhs_numeric

_ABS_TOL = 1e-6


class IncompatibleModulusError(ValueError):
    """The modulus is not 1 mod n; the second moment takes its general value.

    Carries the exact general identity q*N_q - q^2 = (gcd(n, q-1) - 1)q(q-1)
    that holds in place of the (n-1)q(q-1) form.
    """

    def __init__(self, n: int, q: int, general_lhs: int, general_rhs: int):
        self.general_lhs = general_lhs
        self.general_rhs = general_rhs
        super().__init__(
            f"{q} is not 1 mod {n}; second moment equals {general_lhs} "
            f"= (gcd(n, q-1) - 1) q (q-1)"
        )


@dataclass(frozen=True)
class PowerSumInstance:
    """Twisted power sum data: e((p i^n + k i)/q) summed over an initial segment."""

    exponent: int  # n >= 2
    prime: int  # q
    twist: int  # p in [1, q-1]
    linear: int  # k in [0, q-1]

    def __post_init__(self):
        if self.exponent < 2:
            raise ValueError(f"exponent must be >= 2, got {self.exponent}")
        if not is_prime(self.prime):
            raise ValueError(f"{self.prime} is not prime")
        if not 1 <= self.twist <= self.prime - 1:
            raise ValueError(f"twist must lie in [1, {self.prime - 1}]")
        if not 0 <= self.linear <= self.prime - 1:
            raise ValueError(f"linear twist must lie in [0, {self.prime - 1}]")


def complete_sum(inst: PowerSumInstance, m: int) -> complex:
    """Sum of e((p i^n + k i)/q) for 1 <= i <= m, residues reduced exactly."""
    q = inst.prime
    if not 1 <= m <= q:
        raise ValueError(f"segment length must lie in [1, {q}]")
    total = 0j
    for i in range(1, m + 1):
        r = (inst.twist * pow(i, inst.exponent, q) + inst.linear * i) % q
        total += complex(math.cos(math.tau * r / q), math.sin(math.tau * r / q))
    return total


def solution_count(n: int, q: int) -> int:
    """Number of pairs (i, j) in [1, q]^2 with i^n = j^n mod q, by enumeration.

    The count always equals 1 + gcd(n, q-1)(q-1): the power map is
    gcd-to-one on the units and 0 has the single preimage q.
    """
    if n < 2:
        raise ValueError(f"exponent must be >= 2, got {n}")
    if not is_prime(q):
        raise ValueError(f"{q} is not prime")
    tally = Counter(pow(i, n, q) for i in range(1, q + 1))
    count = sum(c * c for c in tally.values())
    assert count == 1 + math.gcd(n, q - 1) * (q - 1)
    return count


def second_moment_lhs(n: int, q: int) -> int:
    """Sum over twists p in [1, q-1] of |complete sum|^2, exactly.

    Computed as q * N_q - q^2: the full twist sum over p in [0, q-1] counts
    solution pairs with multiplicity q, and the untwisted p = 0 term is q^2.
    """
    return q * solution_count(n, q) - q * q


def ex1_check(n: int, q: int) -> tuple[int, int, bool]:
    """Second-moment identity against (n-1)q(q-1), exact in integers.

    Requires q = 1 mod n, where the gcd collapses to n; otherwise raises
    IncompatibleModulusError carrying the general gcd-form value.
    """
    lhs = second_moment_lhs(n, q)
    g = math.gcd(n, q - 1)
    if q % n != 1:
        raise IncompatibleModulusError(n, q, lhs, (g - 1) * q * (q - 1))
    rhs = (n - 1) * q * (q - 1)
    return lhs, rhs, lhs == rhs


def _unit_phase_table(q: int) -> np.ndarray:
    return np.exp(2j * np.pi * np.arange(q) / q)


def weil_check(n: int, q: int) -> bool:
    """Square-root bound for every twisted complete sum at a prime q > n.

    True iff |sum of e((p i^n + k i)/q)| <= (n-1) sqrt(q) + 1e-6 for all
    p in [1, q-1] and k in [0, q-1].
    """
    if not is_prime(q) or q <= n:
        raise ValueError(f"need a prime q > {n}, got {q}")
    bound = (n - 1) * math.sqrt(q) + _ABS_TOL
    table = _unit_phase_table(q)
    i_arr = np.arange(1, q + 1, dtype=np.int64)
    powers = np.asarray([pow(int(i), n, q) for i in i_arr], dtype=np.int64)
    linear_part = (np.arange(q, dtype=np.int64)[:, None] * (i_arr % q)) % q
    for p in range(1, q):
        idx = ((p * powers)[None, :] + linear_part) % q
        sums = table[idx].sum(axis=1)
        if np.abs(sums).max() > bound:
            return False
    return True


def incomplete_check(n: int, q: int) -> bool:
    """Completion bound for every initial segment of the untwisted power sum.

    True iff |sum over i <= m of e(p i^n / q)| <= 2(n-1) sqrt(q) log q + 1e-6
    for all p in [1, q-1] and m in [1, q] (natural log).
    """
    if not is_prime(q) or q <= n:
        raise ValueError(f"need a prime q > {n}, got {q}")
    bound = 2 * (n - 1) * math.sqrt(q) * math.log(q) + _ABS_TOL
    table = _unit_phase_table(q)
    powers = np.asarray([pow(i, n, q) for i in range(1, q + 1)], dtype=np.int64)
    for p in range(1, q):
        partials = np.cumsum(table[(p * powers) % q])
        if np.abs(partials).max() > bound:
            return False
    return True


def lower_bound_demo(
    n: int, order: int, length: int, budget: int = DEFAULT_TERM_BUDGET
) -> tuple[float, float, bool]:
    """Evaluate the sieve form for T^n with unit weights against its floor.

    Admissible only for order >= n^2 and length >= 8(n-1) * order * log(order)
    (natural log); returns (lhs, floor, lhs >= floor) with
    floor = (n-1) length^2 order / (16 log order).
    """
    if n < 2:
        raise ValueError(f"exponent must be >= 2, got {n}")
    if order < n * n:
        raise ValueError(f"order must be >= n^2 = {n * n}, got {order}")
    threshold = 8 * (n - 1) * order * math.log(order)
    if length < threshold:
        raise ValueError(
            f"length must be >= 8(n-1) Q log Q = {threshold:.3f}, got {length}"
        )
    inst = SieveInstance.ones(IntPolynomial.monomial(n), order, 0, length)
    lhs = lhs_numeric(inst, budget)
    floor = (n - 1) * length * length * order / (16 * math.log(order))
    return lhs, floor, lhs >= floor
