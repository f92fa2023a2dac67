"""Root power map for monic integer polynomials.

For monic ``f`` with roots ``alpha_1..alpha_r``, ``root_power_poly(f, k)`` is
``prod_j (x^k - alpha_j^k)``.  It is built from the power sums of ``f`` via
Newton's identities and back again, so every step stays in Z.  With k = 2 this
is the Graeffe transform up to the substitution y = x^2.
"""

from __future__ import annotations

from .errors import InvalidIndex, NonIntegralSymmetric
from .poly_core import IntXPoly

__all__ = [
    "MonicIntPoly",
    "monic",
    "power_sums",
    "from_power_sums",
    "root_power_map",
    "root_power_poly",
    "quotient_coeffs",
    "middle_sequences",
]


class MonicIntPoly(IntXPoly):
    """Monic integer polynomial of degree >= 1."""

    __slots__ = ()

    @property
    def _ring(self):
        return IntXPoly

    def __init__(self, coeffs=()):
        super().__init__(coeffs)
        if self.deg is None or self.deg < 1 or self.leading() != 1:
            raise ValueError(f"expected a monic polynomial of degree >= 1, got {IntXPoly(coeffs)}")


def monic(*coeffs_leading_first: int) -> MonicIntPoly:
    """``monic(1, -1, -2, 1)`` is x^3 - x^2 - 2x + 1."""
    return MonicIntPoly(coeffs_leading_first[::-1])


def _as_monic(f) -> MonicIntPoly:
    if isinstance(f, MonicIntPoly):
        return f
    return MonicIntPoly(f.coeffs)


def power_sums(f, K: int) -> list[int]:
    """Power sums ``p_0..p_K`` of the roots of the monic ``f``.

    Uses Newton's identities in coefficient form:
    ``p_k + c_{r-1} p_{k-1} + ... + c_{r-k+1} p_1 + k c_{r-k} = 0``
    with ``c_{r-k} = 0`` for ``k > r``.
    """
    if K < 0:
        raise InvalidIndex(f"K must be >= 0, got {K}")
    f = _as_monic(f)
    r, c = f.deg, f.coeffs
    p = [r]
    for k in range(1, K + 1):
        s = k * c[r - k] if k <= r else 0
        for i in range(1, min(k - 1, r) + 1):
            s += c[r - i] * p[k - i]
        p.append(-s)
    return p


def from_power_sums(q: list[int]) -> MonicIntPoly:
    """Monic polynomial of degree r = len(q) - 1 whose roots have power sums q.

    ``q[0]`` is ignored (it is r).  Every division by i in the inverse Newton
    recurrence must be exact, otherwise ``NonIntegralSymmetric`` is raised.
    """
    r = len(q) - 1
    d = [0] * r + [1]  # d[r - i] is the coefficient of y^(r-i)
    for i in range(1, r + 1):
        s = q[i] + sum(d[r - j] * q[i - j] for j in range(1, i))
        val, rem = divmod(-s, i)
        if rem:
            raise NonIntegralSymmetric(f"coefficient {i} is {-s}/{i}, not an integer")
        d[r - i] = val
    return MonicIntPoly(d)


def root_power_map(f, k: int) -> MonicIntPoly:
    """``prod_j (y - alpha_j^k)``: same degree as ``f``, roots raised to the k-th power.

    k = 2 is the Graeffe root-squaring step.  Maps compose:
    ``root_power_map(f, s*t) == root_power_map(root_power_map(f, s), t)``.
    """
    if k < 1:
        raise InvalidIndex(f"power must be >= 1, got {k}")
    f = _as_monic(f)
    r = f.deg
    p = power_sums(f, r * k)
    return from_power_sums([p[i * k] for i in range(r + 1)])


def root_power_poly(f, mp1: int) -> MonicIntPoly:
    """``prod_j (x^mp1 - alpha_j^mp1)`` for the roots alpha_j of ``f``.

    This is ``root_power_map(f, mp1)`` with y = x^mp1, so the result has
    degree r*mp1 and only exponents divisible by mp1.
    """
    if mp1 < 1:
        raise InvalidIndex(f"m+1 must be >= 1, got {mp1}")
    f = _as_monic(f)
    r = f.deg
    g = root_power_map(f, mp1)
    out = [0] * (r * mp1 + 1)
    for i, v in enumerate(g.coeffs):
        out[i * mp1] = v
    return MonicIntPoly(out)


def quotient_coeffs(f, mp1: int) -> IntXPoly:
    """``root_power_poly(f, mp1) / f``, which must divide exactly.

    Monic of degree r*(mp1-1); for mp1 = 1 this is the constant 1.
    """
    f = _as_monic(f)
    return root_power_poly(f, mp1).div_exact(f)


def middle_sequences(f, mp1_max: int) -> dict[int, list[int]]:
    """Coefficients of x^(r*mp1 - mp1*i), i = 0..r, for each mp1 <= mp1_max.

    Row ``i`` of each entry is the i-th elementary symmetric function of the
    ``alpha_j^mp1`` with sign ``(-1)^i``.
    """
    if mp1_max < 1:
        raise InvalidIndex(f"mp1_max must be >= 1, got {mp1_max}")
    f = _as_monic(f)
    r = f.deg
    table = {}
    for mp1 in range(1, mp1_max + 1):
        g = root_power_poly(f, mp1)
        table[mp1] = [g[r * mp1 - mp1 * i] for i in range(r + 1)]
    return table
