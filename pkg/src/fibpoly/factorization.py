"""The polynomials f_{m+1}(x;a,b), their cofactor and the cyclotomic-like factors.

``f_{m+1}(x;a,b) = x^(2m+2) + (b F_m - F_{m+2}) x^(m+1) + b^(m+1)`` is divisible
by ``x^2 - a x + b`` with an explicit Fibonacci-coefficient cofactor, and
splits over the divisors of m+1 as ``prod_{d | m+1} Phi_d(x;a,b)``.
``Phi_d`` is recovered here by exact division, never from complex roots.
"""

from __future__ import annotations

from .errors import IdentityViolation, IndexOutOfRange
from .fibonacci_lucas import FibLucas, ramanujan_N
from .poly_core import A, B, ONE, ZERO, IntXPoly, XPoly

__all__ = [
    "F1",
    "PhiCache",
    "build_f",
    "cofactor",
    "verify_theorem",
    "phi_poly",
    "phi_product_check",
    "verify_divides",
    "divisors",
    "factorize",
    "totient",
]

# x^2 - a x + b
F1 = XPoly([B, -A, ONE])


def _check(mp1: int) -> None:
    if mp1 < 1:
        raise IndexOutOfRange(f"index m+1 must be >= 1, got {mp1}")


def build_f(mp1: int, seq: FibLucas | None = None) -> XPoly:
    """f_{m+1}(x;a,b), cross-checked against its Lucas form.

    Raises ``IdentityViolation`` if ``b F_m - F_{m+2} != -L_{m+1}``.
    """
    _check(mp1)
    seq = seq or FibLucas()
    m = mp1 - 1
    top = [ZERO] * (2 * mp1) + [ONE]
    fib_form = list(top)
    fib_form[mp1] = seq.middle_coefficient(m)
    fib_form[0] = B**mp1
    lucas_form = list(top)
    lucas_form[mp1] = -seq.lucas_poly(mp1)
    lucas_form[0] = B**mp1
    f, g = XPoly(fib_form), XPoly(lucas_form)
    if f != g:
        raise IdentityViolation(f"Fibonacci and Lucas forms of f_{mp1} differ: {f} vs {g}")
    return f


def cofactor(mp1: int, seq: FibLucas | None = None) -> XPoly:
    """``sum_{j<m} F_{j+1} x^(2m-j) + sum_{j<=m} b^(m-j) F_{j+1} x^j``."""
    _check(mp1)
    seq = seq or FibLucas()
    m = mp1 - 1
    c = [ZERO] * (2 * m + 1)
    for j in range(m):
        c[2 * m - j] = c[2 * m - j] + seq.fib_poly(j + 1)
    for j in range(m + 1):
        c[j] = c[j] + B ** (m - j) * seq.fib_poly(j + 1)
    return XPoly(c)


def verify_theorem(mp1: int, seq: FibLucas | None = None) -> bool:
    """(x^2 - a x + b) * cofactor(m+1) == f_{m+1}, symbolically."""
    return F1 * cofactor(mp1, seq) == build_f(mp1, seq)


def factorize(n: int) -> dict[int, int]:
    """Prime factorisation by trial division."""
    if n < 1:
        raise IndexOutOfRange(f"need n >= 1, got {n}")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def totient(n: int) -> int:
    result = n
    for p in factorize(n):
        result = result // p * (p - 1)
    return result


class PhiCache:
    """Table of already computed Phi_d(x;a,b), keyed by d."""

    def __init__(self):
        self.table: dict[int, XPoly] = {1: F1}

    def __contains__(self, d):
        return d in self.table

    def __len__(self):
        return len(self.table)


def phi_poly(d: int, cache: PhiCache | None = None) -> XPoly:
    """Phi_d(x;a,b) = f_d / prod_{e | d, e < d} Phi_e, computed exactly.

    Missing proper-divisor entries are filled into ``cache`` first, in
    increasing order.  A nonzero remainder raises ``NonzeroRemainder``.
    """
    _check(d)
    cache = cache if cache is not None else PhiCache()
    if d in cache.table:
        return cache.table[d]
    q = build_f(d)
    for e in divisors(d)[:-1]:
        q = q.div_exact(phi_poly(e, cache))
    expected = 2 * totient(d)
    if q.deg != expected:
        raise IdentityViolation(f"deg Phi_{d} = {q.deg}, expected {expected}")
    cache.table[d] = q
    return q


def phi_product_check(n: int, cache: PhiCache | None = None) -> bool:
    """prod_{d | n} Phi_d(x;a,b) == f_n(x;a,b)."""
    cache = cache if cache is not None else PhiCache()
    prod = XPoly([ONE])
    for d in divisors(n):
        prod = prod * phi_poly(d, cache)
    return prod == build_f(n)


RAMANUJAN_DIVISOR = IntXPoly([-1, 1, 1])  # x^2 + x - 1


def verify_divides(n: int) -> bool:
    """x^2+x-1 divides f_{2n+1}(x;-1,-1) = x^(2(2n+1)) + N x^(2n+1) - 1 in Z[x]."""
    if n < 1:
        raise IndexOutOfRange(f"need n >= 1, got {n}")
    k = 2 * n + 1
    dividend = build_f(k).specialize(-1, -1)
    expected = IntXPoly.x_power(2 * k) + IntXPoly.x_power(k, ramanujan_N(n)) - 1
    if dividend != expected:
        return False
    _, rem = dividend.divmod_monic(RAMANUJAN_DIVISOR)
    return rem.is_zero()
