"""Zero counts of integer polynomials modulo m, and the bounds they satisfy.

The central object is rho(m), the number of residues l mod m with
P(l) = 0 mod m.  rho is multiplicative, so everything reduces to prime
powers, where roots are found by exhaustive scan mod p followed by
iterated lifting.  Lifting enumerates all p preimages of each root at
every level, so degenerate (non-Hensel) roots are handled correctly.

Also here: the Vandermonde identity linking root spacing to the leading
coefficient, the window-count check it implies, and the partial sums of
rho(m)/m together with their Euler-product majorant.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .arith import factorize, is_prime, primes_up_to
from .errors import BudgetError

# Largest prime power that lifting will enumerate before failing loudly.
DEFAULT_LIFT_BUDGET = 10**6


@dataclass(frozen=True)
class IntPolynomial:
    """Integer-coefficient polynomial, coefficients in descending powers.

    ``coeffs[0]`` is the leading coefficient; it must be nonzero unless the
    polynomial is a constant.  Evaluation is exact at any integer.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("polynomial needs at least one coefficient")
        if any(not isinstance(c, int) for c in self.coeffs):
            raise ValueError("coefficients must be integers")
        if len(self.coeffs) > 1 and self.coeffs[0] == 0:
            raise ValueError("leading coefficient must be nonzero")

    @classmethod
    def from_coeffs(cls, coeffs) -> "IntPolynomial":
        return cls(tuple(int(c) for c in coeffs))

    @classmethod
    def monomial(cls, n: int, c: int = 1) -> "IntPolynomial":
        """c * T^n."""
        if n < 0:
            raise ValueError("exponent must be nonnegative")
        return cls((c,) + (0,) * n)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[0]

    def __call__(self, x: int) -> int:
        acc = 0
        for c in self.coeffs:
            acc = acc * x + c
        return acc

    def minus_constant(self, v: int) -> "IntPolynomial":
        """The polynomial P(T) - v."""
        return IntPolynomial(self.coeffs[:-1] + (self.coeffs[-1] - v,))

    def __str__(self):
        k = self.degree
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0 and k > 0:
                continue
            e = k - i
            term = f"{c}" if e == 0 else (f"{c}*T" if e == 1 else f"{c}*T^{e}")
            parts.append(term)
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class RootSetModM:
    """All residues l in [0, m) with P(l) = 0 mod m, sorted."""

    modulus: int
    roots: tuple[int, ...]

    def __len__(self):
        return len(self.roots)


@dataclass(frozen=True)
class RhoProfile:
    """rho(m) for 1 <= m <= bound, plus the partial sum of rho(m)/m.

    ``rho[m]`` indexes by modulus (``rho[0]`` is an unused 0).
    """

    polynomial: IntPolynomial
    bound: int
    rho: tuple[int, ...]
    partial_sum: float


def eval_mod(poly: IntPolynomial, x: int, m: int) -> int:
    """P(x) mod m by Horner reduction; exact for any size of x."""
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    acc = 0
    x = x % m
    for c in poly.coeffs:
        acc = (acc * x + c) % m
    return acc


def roots_mod_prime(poly: IntPolynomial, p: int) -> RootSetModM:
    """Root set mod a prime, by exhaustive scan of [0, p).

    If every coefficient vanishes mod p the polynomial is identically zero
    there and all p residues are roots.
    """
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    roots = tuple(x for x in range(p) if eval_mod(poly, x, p) == 0)
    return RootSetModM(p, roots)


@lru_cache(maxsize=16384)
def lift_roots(
    poly: IntPolynomial, p: int, m: int, budget: int = DEFAULT_LIFT_BUDGET
) -> RootSetModM:
    """Root set mod p^m by iterated lifting from the scan mod p.

    Roots mod p^(j+1) are searched among all p preimages of each root mod
    p^j; no derivative shortcut, so repeated roots lift correctly.
    """
    if m < 1:
        raise ValueError(f"exponent must be >= 1, got {m}")
    if p**m > budget:
        raise BudgetError(f"{p}^{m} exceeds lift budget {budget}")
    roots = list(roots_mod_prime(poly, p).roots)
    modulus = p
    for _ in range(m - 1):
        nxt = modulus * p
        roots = [
            r + t * modulus
            for r in roots
            for t in range(p)
            if eval_mod(poly, r + t * modulus, nxt) == 0
        ]
        modulus = nxt
    return RootSetModM(modulus, tuple(sorted(roots)))


def rho(poly: IntPolynomial, m: int, budget: int = DEFAULT_LIFT_BUDGET) -> int:
    """Number of roots of P mod m; multiplicative over the factorization of m."""
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    count = 1
    for p, e in factorize(m).factors:
        count *= len(lift_roots(poly, p, e, budget))
        if count == 0:
            return 0
    return count


def rho_shifted(
    poly: IntPolynomial, j: int, m: int, budget: int = DEFAULT_LIFT_BUDGET
) -> int:
    """Number of residues l mod m with P(l) = P(j) mod m."""
    return rho(poly.minus_constant(poly(j)), m, budget)


def a_exponent(m: int, k: int) -> int:
    """ceil(m / C(k+1, 2)): the valuation forced on some root gap mod p^m."""
    if m < 1 or k < 1:
        raise ValueError("a_exponent requires m >= 1 and k >= 1")
    return -(-m // math.comb(k + 1, 2))


def _det_exact(rows: list[list[int]]) -> int:
    """Exact integer determinant by fraction-free (Bareiss) elimination."""
    n = len(rows)
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def vandermonde_check(
    poly: IntPolynomial, xs
) -> tuple[int, int, bool]:
    """Compare c0 * prod_{i<j}(x_i - x_j) against the bordered determinant.

    The matrix rows are the power sums 1, x, ..., x^(k-1) over the k+1 points,
    closed by the row of polynomial values.  ``ok`` means the two sides agree
    in absolute value (their signs differ by the orientation of the pair
    ordering, which is left unnormalized).
    """
    xs = tuple(int(x) for x in xs)
    k = poly.degree
    if k < 1:
        raise ValueError("vandermonde_check needs degree >= 1")
    if len(xs) != k + 1:
        raise ValueError(f"need {k + 1} sample points, got {len(xs)}")
    if len(set(xs)) != len(xs):
        raise ValueError("sample points must be distinct")
    lhs = poly.leading
    for i in range(len(xs)):
        for j in range(i + 1, len(xs)):
            lhs *= xs[i] - xs[j]
    rows = [[1] * (k + 1)]
    for e in range(1, k):
        rows.append([x**e for x in xs])
    rows.append([poly(x) for x in xs])
    det = _det_exact(rows)
    return lhs, det, abs(lhs) == abs(det)


def spacing_check(poly: IntPolynomial, p: int, m: int) -> bool:
    """Windowed root-count check mod p^m for p not dividing the leading term.

    True iff every closed real interval of length p^a(m,k) meets at most
    k + 2 roots of P mod p^m, the roots being extended periodically.  Windows
    wrapping the modulus are captured by doubling the period.
    """
    k = poly.degree
    if k < 1:
        raise ValueError("spacing_check needs degree >= 1")
    if poly.leading % p == 0:
        raise ValueError(f"prime {p} divides the leading coefficient")
    if p**m > 10**6:
        raise BudgetError(f"{p}^{m} exceeds the spacing-check budget 10^6")
    pm = p**m
    roots = lift_roots(poly, p, m).roots
    if not roots:
        return True
    window = p ** a_exponent(m, k)
    extended = list(roots) + [r + pm for r in roots]
    for i in range(len(roots)):
        hits = bisect_right(extended, extended[i] + window) - i
        if hits > k + 2:
            return False
    return True


def _rho_over_m_terms(poly: IntPolynomial, bound: int, budget: int):
    for m in range(1, bound + 1):
        yield m, rho(poly, m, budget)


def prop1_sum(
    poly: IntPolynomial, bound: int, budget: int = DEFAULT_LIFT_BUDGET
) -> float:
    """Partial sum of rho(m)/m for m <= bound.

    Accumulates exact rationals up to bound 10^3 and falls back to
    compensated floating summation beyond, so the result is independent of
    summation order.
    """
    if bound <= 1000:
        return float(prop1_sum_fraction(poly, bound, budget))
    return math.fsum(r / m for m, r in _rho_over_m_terms(poly, bound, budget))


def prop1_sum_fraction(
    poly: IntPolynomial, bound: int, budget: int = DEFAULT_LIFT_BUDGET
) -> Fraction:
    """Exact rational value of the rho(m)/m partial sum."""
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    return sum(
        (Fraction(r, m) for m, r in _rho_over_m_terms(poly, bound, budget)),
        Fraction(0),
    )


def euler_majorant(
    poly: IntPolynomial, bound: int, budget: int = DEFAULT_LIFT_BUDGET
) -> float:
    """Euler product over p <= bound of the truncated rho(p^j)/p^j series."""
    return float(euler_majorant_fraction(poly, bound, budget))


def euler_majorant_fraction(
    poly: IntPolynomial, bound: int, budget: int = DEFAULT_LIFT_BUDGET
) -> Fraction:
    """Exact rational value of the Euler-product majorant."""
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    product = Fraction(1)
    for p in primes_up_to(bound):
        local = Fraction(1)
        pe = p
        e = 1
        while pe <= bound:
            local += Fraction(len(lift_roots(poly, p, e, budget)), pe)
            pe *= p
            e += 1
        product *= local
    return product


def rho_profile(
    poly: IntPolynomial, bound: int, budget: int = DEFAULT_LIFT_BUDGET
) -> RhoProfile:
    """Tabulate rho(m) for 1 <= m <= bound together with the rho(m)/m sum."""
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    table = [0] * (bound + 1)
    for m, r in _rho_over_m_terms(poly, bound, budget):
        table[m] = r
    if bound <= 1000:
        partial = float(sum(Fraction(table[m], m) for m in range(1, bound + 1)))
    else:
        partial = math.fsum(table[m] / m for m in range(1, bound + 1))
    return RhoProfile(poly, bound, tuple(table), partial)
