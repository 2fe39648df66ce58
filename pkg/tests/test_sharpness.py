import cmath
import math

import pytest

from polysieve.arith import primes_up_to
from polysieve.sharpness import (
    IncompatibleModulusError,
    PowerSumInstance,
    complete_sum,
    ex1_check,
    incomplete_check,
    lower_bound_demo,
    second_moment_lhs,
    solution_count,
    weil_check,
)


def sum_bruteforce(n, q, p, k, m):
    return sum(
        cmath.exp(2j * cmath.pi * ((p * i**n + k * i) % q) / q)
        for i in range(1, m + 1)
    )


def test_instance_validation():
    PowerSumInstance(2, 5, 1, 0)
    with pytest.raises(ValueError):
        PowerSumInstance(1, 5, 1, 0)
    with pytest.raises(ValueError):
        PowerSumInstance(2, 6, 1, 0)
    with pytest.raises(ValueError):
        PowerSumInstance(2, 5, 0, 0)
    with pytest.raises(ValueError):
        PowerSumInstance(2, 5, 1, 5)


def test_complete_sum_gauss_modulus():
    inst = PowerSumInstance(2, 5, 1, 0)
    assert math.isclose(abs(complete_sum(inst, 5)), math.sqrt(5), rel_tol=1e-12)


def test_complete_sum_cubes_mod_7():
    inst = PowerSumInstance(3, 7, 1, 0)
    value = complete_sum(inst, 7)
    assert math.isclose(value.real, 1 + 6 * math.cos(2 * math.pi / 7), abs_tol=1e-12)
    assert abs(value.imag) < 1e-12


def test_complete_sum_matches_bruteforce():
    inst = PowerSumInstance(4, 13, 5, 8)
    for m in (1, 6, 13):
        assert abs(complete_sum(inst, m) - sum_bruteforce(4, 13, 5, 8, m)) < 1e-9
    with pytest.raises(ValueError):
        complete_sum(inst, 0)
    with pytest.raises(ValueError):
        complete_sum(inst, 14)


def test_solution_count_examples():
    assert solution_count(2, 5) == 9
    assert solution_count(3, 7) == 19
    assert solution_count(3, 5) == 5


def test_solution_count_closed_form():
    for q in primes_up_to(199):
        for n in range(2, 7):
            assert solution_count(n, q) == 1 + math.gcd(n, q - 1) * (q - 1)


def test_second_moment_parseval_consistency():
    # the exact integer must match the floating twist-by-twist sum
    import numpy as np

    for n in (2, 3, 4, 5):
        for q in primes_up_to(97):
            table = np.exp(2j * np.pi * np.arange(q) / q)
            powers = np.asarray([pow(i, n, q) for i in range(1, q + 1)])
            idx = (np.arange(1, q)[:, None] * powers[None, :]) % q
            numeric = (np.abs(table[idx].sum(axis=1)) ** 2).sum()
            assert abs(numeric - second_moment_lhs(n, q)) < 1e-6 * q * q


def test_ex1_check_examples():
    assert ex1_check(2, 5) == (20, 20, True)
    assert ex1_check(3, 7) == (84, 84, True)
    with pytest.raises(IncompatibleModulusError) as exc:
        ex1_check(3, 5)
    assert exc.value.general_lhs == 0
    assert exc.value.general_rhs == 0


def test_ex1_general_form():
    # gcd(4, 10) = 2, so the second moment takes the gcd form, not (n-1)q(q-1)
    n, q = 4, 11
    with pytest.raises(IncompatibleModulusError) as exc:
        ex1_check(n, q)
    g = math.gcd(n, q - 1)
    assert exc.value.general_lhs == (g - 1) * q * (q - 1)
    assert exc.value.general_lhs == exc.value.general_rhs


def test_weil_check_examples():
    assert weil_check(3, 7) is True
    assert weil_check(2, 5) is True
    assert weil_check(4, 5) is True
    with pytest.raises(ValueError):
        weil_check(4, 3)
    with pytest.raises(ValueError):
        weil_check(3, 3)


def test_incomplete_check_examples():
    assert incomplete_check(2, 11) is True
    assert incomplete_check(3, 7) is True
    assert incomplete_check(2, 3) is True


def test_lower_bound_demo():
    lhs, floor, ok = lower_bound_demo(2, 5, 65)
    assert ok
    assert math.isclose(floor, 21125 / (16 * math.log(5)), rel_tol=1e-12)
    assert abs(floor - 820.4) < 0.1
    lhs2, floor2, ok2 = lower_bound_demo(2, 4, 45)
    assert ok2 and lhs2 >= floor2


def test_lower_bound_demo_preconditions():
    with pytest.raises(ValueError):
        lower_bound_demo(2, 3, 10)  # order below n^2
    with pytest.raises(ValueError):
        lower_bound_demo(2, 5, 20)  # interval too short
    with pytest.raises(ValueError):
        lower_bound_demo(1, 5, 65)
