# Fibonacci and Lucas polynomials in two variables.
#
# Both sequences obey x_{n+2} = a x_{n+1} - b x_n.  Fibonacci starts at (0, 1),
# Lucas at (2, a).  Coefficients live in Z[a, b].

from fibpoly import FibLucas, fib_int, lucas_int

seq = FibLucas()

for n in range(8):
    print(f"F_{n} = {seq.fib_poly(n)}")
print()
for n in range(6):
    print(f"L_{n} = {seq.lucas_poly(n)}")

# At (a, b) = (1, -1) we get the ordinary integer sequences back.
print()
print("F_n(1,-1):", [fib_int(n) for n in range(12)])
print("L_n(1,-1):", [lucas_int(n) for n in range(12)])

# Flipping a to -1 only changes signs.
print("F_n(-1,-1):", [seq.fib_poly(n).evaluate(-1, -1) for n in range(12)])

# The middle coefficient b F_m - F_{m+2} is minus a Lucas polynomial.
for m in range(5):
    mid = seq.middle_coefficient(m)
    print(f"m={m}: b*F_{m} - F_{m + 2} = {mid}   (-L_{m + 1} = {-seq.lucas_poly(m + 1)})")
