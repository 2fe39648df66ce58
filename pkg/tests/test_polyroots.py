import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polysieve.errors import BudgetError
from polysieve.polyroots import (
    IntPolynomial,
    a_exponent,
    euler_majorant,
    euler_majorant_fraction,
    eval_mod,
    lift_roots,
    prop1_sum,
    prop1_sum_fraction,
    rho,
    rho_profile,
    rho_shifted,
    roots_mod_prime,
    spacing_check,
    vandermonde_check,
)

T = IntPolynomial((1, 0))
T2 = IntPolynomial((1, 0, 0))
T2_PLUS_1 = IntPolynomial((1, 0, 1))


def rho_scan(poly, m):
    """Independent oracle: count roots by scanning every residue."""
    return sum(1 for x in range(m) if poly(x) % m == 0)


@st.composite
def small_polys(draw, max_degree=4, coeff_bound=20):
    k = draw(st.integers(min_value=1, max_value=max_degree))
    lead = draw(st.integers(min_value=-coeff_bound, max_value=coeff_bound).filter(lambda c: c != 0))
    rest = draw(st.lists(st.integers(min_value=-coeff_bound, max_value=coeff_bound), min_size=k, max_size=k))
    return IntPolynomial((lead, *rest))


def test_polynomial_type_invariants():
    with pytest.raises(ValueError):
        IntPolynomial(())
    with pytest.raises(ValueError):
        IntPolynomial((0, 1))
    assert IntPolynomial((5,)).degree == 0
    assert IntPolynomial.monomial(3).coeffs == (1, 0, 0, 0)
    p = IntPolynomial((2, -1, 3))
    assert p(10) == 193
    assert p.minus_constant(p(7)).coeffs == (2, -1, 3 - p(7))


def test_eval_mod_examples():
    assert eval_mod(T2, 3, 4) == 1
    assert eval_mod(T2_PLUS_1, 2, 5) == 0
    assert eval_mod(IntPolynomial((2, 1)), 0, 2) == 1
    with pytest.raises(ValueError):
        eval_mod(T2, 1, 0)


def test_eval_mod_huge_argument_is_exact():
    x = 10**30 + 7
    assert eval_mod(T2_PLUS_1, x, 97) == (x * x + 1) % 97


def test_roots_mod_prime_examples():
    assert roots_mod_prime(T2_PLUS_1, 5).roots == (2, 3)
    assert roots_mod_prime(T2_PLUS_1, 3).roots == ()
    # identically zero mod 2: every residue is a root
    assert roots_mod_prime(IntPolynomial((2, 0)), 2).roots == (0, 1)
    with pytest.raises(ValueError):
        roots_mod_prime(T2, 4)


def test_lift_roots_examples():
    assert lift_roots(T2, 2, 2).roots == (0, 2)
    assert lift_roots(IntPolynomial((1, 0, -1)), 2, 3).roots == (1, 3, 5, 7)
    assert lift_roots(T2_PLUS_1, 5, 2).roots == (7, 18)
    with pytest.raises(BudgetError):
        lift_roots(T2, 2, 40)


def test_rho_examples():
    assert rho(T2_PLUS_1, 1) == 1
    assert rho(T2_PLUS_1, 65) == 4
    assert rho(T2, 4) == 2
    assert rho(T2_PLUS_1, 65) == rho_scan(T2_PLUS_1, 65)


def test_rho_shifted_examples():
    assert rho_shifted(T2, 0, 4) == rho(T2, 4) == 2
    assert rho_shifted(T2, 1, 5) == 2
    assert rho_shifted(T2_PLUS_1, 3, 1) == 1


@given(small_polys(), st.integers(min_value=1, max_value=400))
@settings(max_examples=150, deadline=None)
def test_rho_matches_exhaustive_scan(poly, m):
    assert rho(poly, m) == rho_scan(poly, m)


@given(small_polys(), st.integers(min_value=401, max_value=2000))
@settings(max_examples=40, deadline=None)
def test_rho_matches_scan_larger_moduli(poly, m):
    assert rho(poly, m) == rho_scan(poly, m)


def test_a_exponent():
    assert a_exponent(1, 2) == 1
    assert a_exponent(3, 2) == 1
    assert a_exponent(4, 2) == 2
    assert a_exponent(10, 4) == 1
    assert a_exponent(11, 4) == 2


def test_vandermonde_examples():
    lhs, det, ok = vandermonde_check(IntPolynomial((2, 0, 1)), (0, 1, 2))
    assert (lhs, det, ok) == (-4, 4, True)
    lhs, det, ok = vandermonde_check(IntPolynomial((3, 5)), (0, 1))
    assert (lhs, det, ok) == (-3, 3, True)
    with pytest.raises(ValueError):
        vandermonde_check(T2, (1, 1, 2))
    with pytest.raises(ValueError):
        vandermonde_check(T2, (1, 2))


@given(small_polys(coeff_bound=50), st.data())
@settings(max_examples=200, deadline=None)
def test_vandermonde_identity_random(poly, data):
    xs = data.draw(
        st.lists(
            st.integers(min_value=-10**6, max_value=10**6),
            min_size=poly.degree + 1,
            max_size=poly.degree + 1,
            unique=True,
        )
    )
    _, _, ok = vandermonde_check(poly, xs)
    assert ok


def test_spacing_examples():
    assert spacing_check(T2, 3, 2) is True
    assert spacing_check(T2_PLUS_1, 3, 1) is True
    assert spacing_check(IntPolynomial((1, 0, 0, -1)), 7, 2) is True
    with pytest.raises(ValueError):
        spacing_check(IntPolynomial((3, 0)), 3, 1)
    with pytest.raises(BudgetError):
        spacing_check(T2, 2, 30)


def test_spacing_window_counts_directly():
    # roots of T^2 mod 9 are {0, 3, 6}: windows of length 3 hold at most 2
    roots = lift_roots(T2, 3, 2).roots
    assert roots == (0, 3, 6)
    ext = list(roots) + [r + 9 for r in roots]
    worst = max(sum(1 for s in ext if r <= s <= r + 3) for r in ext[:3])
    assert worst == 2 <= 4


def test_prop1_sum_values():
    assert prop1_sum(T2, 1) == 1.0
    assert math.isclose(prop1_sum(T, 10), 2.9289682539682538, rel_tol=1e-12)
    # frozen from an independent residue-scan oracle
    assert prop1_sum_fraction(T2_PLUS_1, 20) == Fraction(5241, 2210)


def test_euler_majorant_values():
    assert euler_majorant(T2_PLUS_1, 1) == 1.0
    assert euler_majorant(T, 3) == 2.0
    assert euler_majorant_fraction(T2, 4) == Fraction(8, 3)


@given(small_polys(), st.integers(min_value=1, max_value=120))
@settings(max_examples=30, deadline=None)
def test_majorization_property(poly, bound):
    assert prop1_sum_fraction(poly, bound) <= euler_majorant_fraction(poly, bound)


@given(small_polys())
@settings(max_examples=60, deadline=None)
def test_prime_power_ratio_monotone(poly):
    for p in (2, 3, 5, 7):
        prev = Fraction(1)
        pe = 1
        for e in range(1, 12):
            pe *= p
            if pe > 10**4:
                break
            cur = Fraction(len(lift_roots(poly, p, e).roots), pe)
            assert cur <= prev
            prev = cur


@given(small_polys())
@settings(max_examples=60, deadline=None)
def test_degree_bound_at_primes(poly):
    for p in (2, 3, 5, 7, 11, 13, 31, 97, 199):
        if poly.leading % p:
            assert len(roots_mod_prime(poly, p).roots) <= poly.degree


def test_rho_profile():
    prof = rho_profile(T2_PLUS_1, 20)
    assert prof.rho[1] == 1
    assert prof.rho[65:] == ()
    assert prof.rho[5] == 2 and prof.rho[13] == 2
    assert math.isclose(prof.partial_sum, float(Fraction(5241, 2210)), rel_tol=1e-12)
    # multiplicativity visible in the table
    assert prof.rho[15] == prof.rho[3] * prof.rho[5]
