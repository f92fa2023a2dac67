"""Bivariate Fibonacci and Lucas polynomials and their integer values.

Both sequences satisfy ``x[n+2] = a*x[n+1] - b*x[n]``; Fibonacci starts from
``(0, 1)`` and Lucas from ``(2, a)``.  At ``(a, b) = (1, -1)`` they reduce to
the ordinary Fibonacci and Lucas numbers.
"""

from __future__ import annotations

from math import comb

from .errors import InvalidIndex
from .poly_core import A, B, ONE, ZERO, CoefPoly

__all__ = [
    "FibLucas",
    "binom",
    "fib_poly",
    "fib_poly_closed",
    "lucas_poly",
    "middle_coefficient",
    "fib_value",
    "lucas_value",
    "fib_int",
    "lucas_int",
    "ramanujan_N",
    "sign_law_check",
    "lucas_sign_law_check",
]


def _check_index(n: int) -> None:
    if n < 0:
        raise InvalidIndex(f"index must be non-negative, got {n}")


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero whenever ``k`` is outside ``0..n``."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


class FibLucas:
    """Memoised Fibonacci/Lucas polynomial tables.

    The caches live on the instance; create one per thread if sharing
    matters.
    """

    def __init__(self):
        self._fib = [ZERO, ONE]
        self._lucas = [CoefPoly.const(2), A]

    @staticmethod
    def _extend(table: list, n: int) -> CoefPoly:
        while len(table) <= n:
            table.append(A * table[-1] - B * table[-2])
        return table[n]

    def fib_poly(self, n: int) -> CoefPoly:
        _check_index(n)
        return self._extend(self._fib, n)

    def lucas_poly(self, n: int) -> CoefPoly:
        _check_index(n)
        return self._extend(self._lucas, n)

    def middle_coefficient(self, m: int) -> CoefPoly:
        """``b*F_m - F_{m+2}``, the coefficient of x^(m+1) in f_{m+1}."""
        _check_index(m)
        return B * self.fib_poly(m) - self.fib_poly(m + 2)


def fib_poly(n: int, seq: FibLucas | None = None) -> CoefPoly:
    """F_n(a,b) by the three-term recurrence."""
    return (seq or FibLucas()).fib_poly(n)


def lucas_poly(n: int, seq: FibLucas | None = None) -> CoefPoly:
    """L_n(a,b) by the three-term recurrence."""
    return (seq or FibLucas()).lucas_poly(n)


def middle_coefficient(m: int, seq: FibLucas | None = None) -> CoefPoly:
    return (seq or FibLucas()).middle_coefficient(m)


def fib_poly_closed(n: int) -> CoefPoly:
    """F_{n+1}(a,b) from the binomial sum ``sum_k C(n-k, k) a^(n-2k) (-b)^k``.

    Note the index shift: ``fib_poly_closed(n) == fib_poly(n + 1)``.
    """
    _check_index(n)
    return CoefPoly({(n - 2 * k, k): (-1) ** k * binom(n - k, k) for k in range(n // 2 + 1)})


def fib_value(n: int, a: int, b: int) -> int:
    """F_n(a, b) for integer a, b, via the recurrence in Z."""
    _check_index(n)
    x0, x1 = 0, 1
    for _ in range(n):
        x0, x1 = x1, a * x1 - b * x0
    return x0


def lucas_value(n: int, a: int, b: int) -> int:
    _check_index(n)
    x0, x1 = 2, a
    for _ in range(n):
        x0, x1 = x1, a * x1 - b * x0
    return x0


def fib_int(n: int) -> int:
    """Ordinary Fibonacci number, F_n(1, -1)."""
    return fib_value(n, 1, -1)


def lucas_int(n: int) -> int:
    """Ordinary Lucas number, L_n(1, -1)."""
    return lucas_value(n, 1, -1)


def ramanujan_N(n: int) -> int:
    """The constant N with x^2+x-1 | x^(2(2n+1)) + N x^(2n+1) - 1.

    Computed from the binomial sum
    ``(2n+1) + sum_{r=1..n} [C(n+r, 2r+1) + C(n+r+1, 2r+1)]``; equals the
    Lucas number L_{2n+1}.
    """
    if n < 1:
        raise InvalidIndex(f"ramanujan_N needs n >= 1, got {n}")
    return (2 * n + 1) + sum(
        binom(n + r, 2 * r + 1) + binom(n + r + 1, 2 * r + 1) for r in range(1, n + 1)
    )


def sign_law_check(n: int, seq: FibLucas | None = None) -> bool:
    """F_{n+1}(-1,-1) == (-1)^n F_{n+1}."""
    return fib_poly(n + 1, seq).evaluate(-1, -1) == (-1) ** n * fib_int(n + 1)


def lucas_sign_law_check(n: int, seq: FibLucas | None = None) -> bool:
    """L_{n+1}(-1,-1) == (-1)^(n+1) L_{n+1}.

    The exponent is n+1, not n: L_1(-1,-1) = a = -1.
    """
    return lucas_poly(n + 1, seq).evaluate(-1, -1) == (-1) ** (n + 1) * lucas_int(n + 1)
