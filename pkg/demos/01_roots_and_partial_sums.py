#!/usr/bin/env python3
"""Root counting modulo prime powers, and where the partial sums of
rho(m)/m sit relative to their Euler-product majorant.

Walks one polynomial through the whole chain: exhaustive roots mod p,
iterated lifting to p^m, the monotone ratio rho(p^m)/p^m, the window
spacing guarantee, and finally the rho(m)/m partial sum against the
product over primes.
"""

from polysieve import (
    IntPolynomial,
    a_exponent,
    euler_majorant,
    lift_roots,
    prop1_sum,
    rho,
    roots_mod_prime,
    spacing_check,
)

poly = IntPolynomial((1, 0, 1))  # T^2 + 1
print(f"polynomial: {poly}\n")

print("roots modulo small primes (exhaustive scan):")
for p in (2, 3, 5, 13, 17):
    print(f"  mod {p:>2}: {roots_mod_prime(poly, p).roots}")

print("\nlifting mod powers of 5 (note 2 -> 7 -> 57, 3 -> 18 -> 68):")
for m in (1, 2, 3):
    rs = lift_roots(poly, 5, m)
    print(f"  mod 5^{m} = {rs.modulus:>3}: {rs.roots}")

print("\nthe ratio rho(p^m)/p^m never increases with m:")
for p in (2, 5, 13):
    ratios = [f"{len(lift_roots(poly, p, m).roots)}/{p**m}" for m in (1, 2, 3)]
    print(f"  p = {p:>2}: " + "  >=  ".join(ratios))

print("\nwindow spacing: any interval of length p^a(m,k) holds <= k+2 roots")
for p, m in ((5, 2), (13, 2), (3, 4)):
    window = p ** a_exponent(m, poly.degree)
    print(f"  p^m = {p}^{m}: window {window}, ok = {spacing_check(poly, p, m)}")

print("\nmultiplicativity lets rho reach composite moduli from prime powers:")
print(f"  rho(65) = rho(5) * rho(13) = {rho(poly, 5)} * {rho(poly, 13)}"
      f" = {rho(poly, 65)}")

print("\npartial sums of rho(m)/m against the Euler-product majorant:")
for bound in (10, 50, 200, 500):
    s = prop1_sum(poly, bound)
    e = euler_majorant(poly, bound)
    print(f"  Q = {bound:>3}: sum = {s:.6f}  <=  product = {e:.6f}")
