#!/usr/bin/env python3
"""Why the Q(N+Q) envelope shape is essentially unimprovable: the pure power
phase T^n concentrates mass on prime denominators.

The complete sum over a full period mod q has an exact second moment
(n-1)q(q-1) whenever q is 1 mod n; individual sums obey the square-root
bound; incomplete segments lose only a log.  Stacking periods turns this
into an explicit floor for the quadratic form itself.
"""

import math

from polysieve import (
    PowerSumInstance,
    complete_sum,
    ex1_check,
    incomplete_check,
    lower_bound_demo,
    solution_count,
    weil_check,
)

print("complete Gauss-type sums: |sum e(i^2 / q)| = sqrt(q)")
for q in (5, 13, 29):
    v = abs(complete_sum(PowerSumInstance(2, q, 1, 0), q))
    print(f"  q = {q:>2}: |sum| = {v:.9f}, sqrt(q) = {math.sqrt(q):.9f}")

print("\nsecond moment over all twists, exact in integers:")
for n, q in ((2, 5), (3, 7), (4, 13), (5, 11)):
    lhs, rhs, ok = ex1_check(n, q)
    print(f"  n = {n}, q = {q:>2}: {lhs} = (n-1)q(q-1) = {rhs}  [{ok}]")

print("\nwhen q is not 1 mod n the gcd form takes over "
      "(cubing is a bijection mod 5):")
print(f"  n = 3, q = 5: N_q = {solution_count(3, 5)},"
      f" second moment = {5 * solution_count(3, 5) - 25}")

print("\nsquare-root and completion bounds hold for every admissible prime:")
for n in (2, 3, 4):
    qs = [q for q in (5, 7, 11, 31, 97) if q > n]
    flags = [weil_check(n, q) and incomplete_check(n, q) for q in qs]
    print(f"  n = {n}: q in {qs} -> {all(flags)}")

print("\nthe resulting floor for the quadratic form (T^2, unit weights):")
for order, length in ((4, 45), (5, 65)):
    lhs, floor, ok = lower_bound_demo(2, order, length)
    print(f"  Q = {order}, N = {length:>2}: value = {lhs:,.1f}"
          f" >= floor = {floor:,.1f}  [{ok}]")
