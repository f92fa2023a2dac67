# Splitting f_n over the divisors of n.
#
# f_n(x; a, b) is the product of Phi_d(x; a, b) over d | n, where
# Phi_d has degree 2 phi(d).  Each Phi_d comes out of exact long division.

from fibpoly import PhiCache, divisors, phi_poly, phi_product_check, totient

cache = PhiCache()

for d in range(1, 9):
    phi = phi_poly(d, cache)
    print(f"Phi_{d}  (deg {phi.deg} = 2*phi({d}) = {2 * totient(d)})")
    print(f"   {phi}")
    print(f"   at (-1,-1): {phi.specialize(-1, -1)}")

print()
n = 12
print(f"divisors of {n}: {divisors(n)}")
print(f"product of Phi_d over d | {n} equals f_{n}:", phi_product_check(n, cache))

# Phi_5 at (-1, -1) is not irreducible over Z.
from fibpoly import IntXPoly

left = IntXPoly.from_leading_first([1, 2, 4, 3, 1])
right = IntXPoly.from_leading_first([1, -3, 4, -2, 1])
print(f"({left}) * ({right}) = {left * right}")
print("matches Phi_5(x;-1,-1):", left * right == phi_poly(5, cache).specialize(-1, -1))
