# Checking the exact results numerically.
#
# The oracle finds the roots, multiplies out the linear factors and rounds.
# It never feeds back into the integer code.

import numpy as np

from fibpoly import monic, root_power_poly
from fibpoly.numeric_oracle import (
    max_deviation,
    numeric_power_product,
    phi_numeric_check,
    roots,
    rounded,
)

f = monic(1, -1, -2, 1)
z = np.array(roots(f))
print("roots:          ", np.round(sorted(z.real), 12))
print("2 cos(k pi / 7):", np.round(sorted(2 * np.cos(np.pi * np.array([1, 3, 5]) / 7)), 12))

for k in (3, 5, 8):
    exact = root_power_poly(f, k)
    vec = numeric_power_product(f, k)
    print(f"k={k}: rounds back exactly: {rounded(vec) == exact}, max deviation {max_deviation(exact, vec):.1e}")

# Large coefficients are where plain float64 products would fall apart.
g = monic(1, 17, -19, 13, 11)
vec = numeric_power_product(g, 8)
exact = root_power_poly(g, 8)
print("largest coefficient:", max(abs(c) for c in exact.coeffs))
print("max deviation:", max_deviation(exact, vec))

print("Phi_d numeric check, d <= 12, (a,b) = (3,2):",
      all(phi_numeric_check(d, 3, 2) for d in range(1, 13)))
