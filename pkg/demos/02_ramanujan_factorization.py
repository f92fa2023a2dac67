# A two-parameter trinomial and its quadratic factor.
#
# f_{m+1}(x; a, b) = x^(2m+2) + (b F_m - F_{m+2}) x^(m+1) + b^(m+1)
# is always divisible by x^2 - a x + b, and the cofactor has Fibonacci
# polynomials for coefficients.

from fibpoly import build_f, cofactor, ramanujan_N, verify_divides, verify_theorem
from fibpoly.factorization import F1

for k in range(1, 5):
    f = build_f(k)
    q = cofactor(k)
    assert F1 * q == f
    print(f"f_{k} = {f}")
    print(f"    = ({F1}) * ({q})")
print()

# Specialise to a = b = -1: x^2 + x - 1 divides each trinomial.
for k in range(1, 7):
    print(f"f_{k}(x;-1,-1) = {build_f(k).specialize(-1, -1)}")

# For odd exponents 2n+1 the middle coefficient is the integer N(n).
print()
print("N(n):", [ramanujan_N(n) for n in range(1, 11)])
print("x^2+x-1 divides x^(4n+2) + N(n) x^(2n+1) - 1 for n <= 20:",
      all(verify_divides(n) for n in range(1, 21)))
print("symbolic cofactor identity for m+1 <= 60:", all(verify_theorem(k) for k in range(1, 61)))
