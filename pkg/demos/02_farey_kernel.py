#!/usr/bin/env python3
"""The Farey fraction system and its exponential-sum kernel.

Shows the neighbor enumeration, the collapse of the kernel to a sum of
Ramanujan sums (an exact integer), and the gcd-sum bound that controls it.
"""

from polysieve import (
    farey_sequence,
    farey_size,
    gcd_sum_bound,
    kernel_direct,
    kernel_exact,
)

print("Farey fractions of order 5, generated by the neighbor recurrence:")
seq = farey_sequence(5)
print("  " + "  ".join(f"{f.p}/{f.q}" for f in seq))
print(f"  count = {len(seq)} = phi(1) + ... + phi(5) = {farey_size(5)}\n")

print("consecutive fractions a/b < c/d always satisfy bc - ad = 1:")
for (a, b), (c, d) in list(zip(seq, seq[1:]))[:4]:
    print(f"  {a}/{b} , {c}/{d}:  {b}*{c} - {a}*{d} = {b * c - a * d}")

print("\nkernel K(c) = sum of e(xc) over the system: exact integer values")
print(f"  {'c':>6} {'K(c), Q=12':>12} {'direct sum':>14} {'gcd bound':>10}")
for c in (0, 1, 6, 60, 2**40 + 1):
    exact = kernel_exact(c, 12)
    direct = kernel_direct(c, 12).real
    bound = gcd_sum_bound(c, 12)
    print(f"  {c:>6} {exact:>12} {direct:>14.9f} {bound:>10}")

print("\nthe kernel at frequency 0 counts the whole system:")
for order in (1, 5, 20, 100):
    assert kernel_exact(0, order) == farey_size(order)
    print(f"  Q = {order:>3}: K(0) = {kernel_exact(0, order)}")
