"""Counting regions by distance from the dominant chamber.

Every region of an ideal-type arrangement is seen by some Weyl group
element, and its distance from the base region is the number of inversions
that land outside the ideal.  The resulting polynomial should split as a
product of t-integers [m+1] over the ideal exponents m.
"""
from ideal_arrangements import build_root_system, enumerate_ideals, ideal_exponents, poincare_poly
from ideal_arrangements.arrangement import region_count
from ideal_arrangements.idealtype import arrangement_of_ideal_type, condition_subsystems
from ideal_arrangements.poincare import (brute_force_poincare, exponent_product,
                                         modular_fiber_factorization)

rs = build_root_system("B3")
print("B3, a few ideals:")
for I in list(enumerate_ideals(rs))[::4]:
    p = poincare_poly(rs, I)
    ex = ideal_exponents(I).values
    q = exponent_product(ex)
    brute = brute_force_poincare(rs, I)
    n = region_count(arrangement_of_ideal_type(rs, I))
    print(f"  {I.serialize():22} {p}  product{ex} {'ok' if p == q else 'MISMATCH'}"
          f"  brute {'ok' if brute == p else 'MISMATCH'}  regions {sum(p)}/{n}")

# the same polynomial, split through a localization
rs = build_root_system("F4")
bad = 0
total = 0
for I in enumerate_ideals(rs):
    for w in condition_subsystems(rs, I):
        total += 1
        f = modular_fiber_factorization(rs, I, w)
        bad += not (f.product_matches and f.fiber_is_chain)
print(f"\nF4: {total} (ideal, subsystem) pairs, {bad} where the polynomial does not split off a chain")
