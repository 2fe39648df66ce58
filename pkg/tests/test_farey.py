import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polysieve.farey import (
    FareyFraction,
    farey_sequence,
    farey_size,
    gcd_sum_bound,
    kernel_K,
    kernel_direct,
    kernel_exact,
)
from polysieve.polyroots import IntPolynomial


def farey_brute(order):
    """Enumeration oracle: reduce and sort every p/q with q <= order."""
    seen = {Fraction(p, q) for q in range(1, order + 1) for p in range(q)}
    return sorted(seen)


def test_sequence_examples():
    assert farey_sequence(1) == [FareyFraction(0, 1)]
    assert farey_sequence(3) == [
        FareyFraction(0, 1),
        FareyFraction(1, 3),
        FareyFraction(1, 2),
        FareyFraction(2, 3),
    ]
    assert len(farey_sequence(5)) == 10
    with pytest.raises(ValueError):
        farey_sequence(0)


def test_size_matches_enumeration():
    for order in (1, 2, 3, 10, 37):
        assert farey_size(order) == len(farey_brute(order)) == len(farey_sequence(order))
    assert farey_size(100) == 3044
    brute = farey_brute(100)
    assert [Fraction(f.p, f.q) for f in farey_sequence(100)] == brute


@given(st.integers(min_value=1, max_value=120))
@settings(max_examples=40, deadline=None)
def test_neighbor_property(order):
    seq = farey_sequence(order)
    for (a, b), (c, d) in zip(seq, seq[1:]):
        assert b * c - a * d == 1  # consecutive fractions are unimodular
        assert a * d < c * b  # strictly increasing
        assert math.gcd(c, d) == 1 and d <= order


def test_kernel_exact_examples():
    assert kernel_exact(0, 7) == farey_size(7)
    assert kernel_exact(1, 2) == 0
    assert kernel_exact(6, 4) == 2
    assert kernel_exact(-6, 4) == 2
    with pytest.raises(ValueError):
        kernel_exact(1, 0)


@given(
    st.integers(min_value=-(10**9), max_value=10**9),
    st.integers(min_value=1, max_value=60),
)
@settings(max_examples=150, deadline=None)
def test_kernel_matches_direct_sum(c, order):
    direct = kernel_direct(c, order)
    exact = kernel_exact(c, order)
    assert abs(direct.imag) < 1e-6
    assert abs(direct.real - exact) < 1e-6
    assert abs(exact) <= gcd_sum_bound(c, order)


def test_gcd_sum_bound_examples():
    assert gcd_sum_bound(6, 4) == 8
    assert gcd_sum_bound(0, 3) == 6
    for order in (1, 5, 17):
        assert gcd_sum_bound(1, order) == order


@given(
    st.integers(min_value=-(10**9), max_value=10**9).filter(lambda c: c != 0),
    st.integers(min_value=1, max_value=200),
)
@settings(max_examples=150, deadline=None)
def test_divisor_rearrangement_bound(c, order):
    divisor_count = sum(1 for k in range(1, order + 1) if c % k == 0)
    assert gcd_sum_bound(c, order) <= 2 * order * divisor_count


def test_divisor_rearrangement_zero_frequency():
    for order in (1, 4, 30):
        assert gcd_sum_bound(0, order) <= 2 * order * order


def test_kernel_K_examples():
    sq = IntPolynomial((1, 0, 0))
    assert kernel_K(sq, 6, 5, 5) == farey_size(6)
    assert kernel_K(IntPolynomial((1, 0)), 2, 0, 1) == 0
    # frozen from the direct complex-sum oracle
    assert kernel_K(sq, 3, 1, 2) == 2


@given(
    st.integers(min_value=-50, max_value=50),
    st.integers(min_value=-50, max_value=50),
    st.integers(min_value=1, max_value=30),
)
@settings(max_examples=80, deadline=None)
def test_kernel_K_symmetry(i, j, order):
    sq = IntPolynomial((2, -1, 3))
    assert kernel_K(sq, order, i, j) == kernel_K(sq, order, j, i)
