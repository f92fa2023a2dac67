# Raising roots to a power without finding them.
#
# For a monic integer f with roots alpha_j, prod_j (x^k - alpha_j^k) has
# integer coefficients.  Power sums carry it there through Newton's identities.

from fibpoly import middle_sequences, monic, quotient_coeffs, root_power_map, root_power_poly

f = monic(1, -1, -2, 1)  # roots 2 cos(k pi / 7), k = 1, 3, 5
print("f =", f)

for k in range(1, 6):
    print(f"k={k}: {root_power_poly(f, k)}")
    if k > 1:
        print(f"      / f = {quotient_coeffs(f, k)}")

print()
for k, row in middle_sequences(f, 8).items():
    print(f"k={k}: {row}")

# The compressed form keeps degree r, and composes like powers do.
g6 = root_power_map(f, 6)
print()
print("roots^6         :", g6)
print("(roots^2)^3     :", root_power_map(root_power_map(f, 2), 3))

# For a quadratic this reproduces the trinomials of the previous demos.
from fibpoly import build_f

u, v = 3, 2
print(all(root_power_poly(monic(1, -u, v), k) == build_f(k).specialize(u, v) for k in range(1, 13)))
