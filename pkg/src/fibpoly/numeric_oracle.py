"""Floating-point cross-check for the exact modules.

Nothing in here feeds back into the exact computations.  Products are
expanded the long way, one linear factor ``(x - alpha * zeta)`` at a time over
every root ``alpha`` and root of unity ``zeta``, then compared with the
integer results coefficient by coefficient.

Roots are located in float64 by Durand-Kerner.  Products are then formed in a
private 40-digit mpmath context: near 2**40 the spacing of float64 is 2**-12,
so a float64 expansion cannot reach the 1e-6 per-coefficient agreement the
oracle is held to.  Returned coefficient vectors are numpy complex128 arrays,
lowest degree first.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

import mpmath
import numpy as np

from .errors import DegenerateRoots, NoConvergence, OracleMismatch
from .factorization import PhiCache, phi_poly, totient
from .poly_core import IntXPoly

__all__ = [
    "COEFF_TOL",
    "IMAG_TOL",
    "MAX_ITER",
    "WORKING_DPS",
    "roots",
    "refine_roots",
    "residual_bound",
    "expand_linear_factors",
    "numeric_power_product",
    "primitive_roots_of_unity",
    "phi_numeric",
    "phi_numeric_check",
    "max_deviation",
    "rounded",
]

COEFF_TOL = 1e-6
IMAG_TOL = 1e-6
ROOT_RTOL = 1e-9
MAX_ITER = 1000
WORKING_DPS = 40
_EPS = float(np.finfo(float).eps)
# Irrational starting angle so no initial guess sits on a symmetry axis.
_ANGLE_OFFSET = math.sqrt(2) - 1

_mp = mpmath.MPContext()
_mp.dps = WORKING_DPS


def residual_bound(f: IntXPoly) -> float:
    return ROOT_RTOL * (1 + max(abs(c) for c in f.coeffs))


def _quadratic_roots(p, q, sqrt=cmath.sqrt):
    # x^2 + p x + q; take the sign that avoids cancellation, then Vieta.
    s = sqrt(p * p - 4 * q)
    r1 = (-p + s) / 2 if abs(-p + s) > abs(-p - s) else (-p - s) / 2
    if r1 == 0:
        return [r1, -p - r1]
    return [r1, q / r1]


def _dk_step(coeffs, z):
    """One Durand-Kerner correction for every approximation in ``z``."""
    out = []
    for i, zi in enumerate(z):
        num = coeffs[0]
        for c in coeffs[1:]:
            num = num * zi + c
        den = 1
        for j, zj in enumerate(z):
            if j != i:
                den *= zi - zj
        out.append(num / den if den != 0 else 0 * num)
    return out


def roots(f: IntXPoly) -> list[complex]:
    """Complex roots of a monic integer polynomial, in float64.

    Degree <= 2 uses the closed form.  Higher degrees use Durand-Kerner
    iteration from a circle of radius ``1 + max|coeff|``, stopping once every
    residual ``|f(z)|`` is within ``1e-9 * (1 + max|coeff|)`` and the
    corrections have stopped shrinking.
    """
    n = f.deg
    if n is None or n < 1:
        raise ValueError("roots() needs a polynomial of degree >= 1")
    if f.leading() != 1:
        raise ValueError(f"{f} is not monic")
    c = [complex(v) for v in f.coeffs]
    if n == 1:
        return [-c[0]]
    if n == 2:
        return _quadratic_roots(c[1], c[0])

    tol = residual_bound(f)
    radius = 1 + max(abs(v) for v in f.coeffs)
    z = np.array(
        [radius * cmath.exp(1j * (2 * math.pi * k / n + _ANGLE_OFFSET)) for k in range(n)]
    )
    coeffs = np.array(c[::-1])  # leading first for polyval
    last = math.inf
    for _ in range(MAX_ITER):
        vals = np.polyval(coeffs, z)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1)
        den = diff.prod(axis=1)
        den[den == 0] = 1e-300
        step = vals / den
        size = float(np.max(np.abs(step)))
        settled = size >= last or size <= 4 * _EPS * max(1.0, float(np.max(np.abs(z))))
        if np.all(np.abs(vals) <= tol) and settled:
            return [complex(v) for v in z]
        last = size
        z = z - step
    raise NoConvergence(f"Durand-Kerner did not converge for {f} in {MAX_ITER} steps")


def refine_roots(f: IntXPoly, approx=None) -> list:
    """Roots of ``f`` as mpmath complex numbers at ``WORKING_DPS`` digits.

    Continues Durand-Kerner from the float64 roots until the corrections
    stagnate.  Clustered roots only converge linearly, so this may take a
    few dozen steps.
    """
    if f.deg <= 2:
        c = [_mp.mpf(v) for v in f.coeffs]
        if f.deg == 1:
            return [_mp.mpc(-c[0])]
        return [_mp.mpc(r) for r in _quadratic_roots(c[1], c[0], sqrt=_mp.sqrt)]
    if approx is None:
        approx = roots(f)
    coeffs = [_mp.mpf(v) for v in reversed(f.coeffs)]
    z = [_mp.mpc(v) for v in approx]
    floor = _mp.mpf(10) ** (-WORKING_DPS + 5) * (1 + max(abs(v) for v in f.coeffs))
    last = _mp.inf
    for _ in range(MAX_ITER):
        step = _dk_step(coeffs, z)
        size = max(abs(s) for s in step)
        z = [zi - s for zi, s in zip(z, step)]
        if size <= floor or size >= last:
            return z
        last = size
    raise NoConvergence(f"root refinement did not settle for {f} in {MAX_ITER} steps")


def expand_linear_factors(zs) -> list:
    """Coefficients of prod (x - z) for z in zs, lowest degree first."""
    out = [_mp.mpc(1)]
    for z in zs:
        nxt = [_mp.mpc(0)] * (len(out) + 1)
        for k, v in enumerate(out):
            nxt[k + 1] += v
            nxt[k] -= z * v
        out = nxt
    return out


def _unity(n: int, k: int):
    return _mp.expjpi(_mp.mpf(2 * k) / n)


def _to_vec(coeffs) -> np.ndarray:
    return np.array([complex(c) for c in coeffs], dtype=np.complex128)


def numeric_power_product(f: IntXPoly, mp1: int, check_imag: bool = True) -> np.ndarray:
    """prod over roots alpha of f and k < mp1 of (x - alpha * zeta^k), numerically.

    Raises ``OracleMismatch`` if an imaginary part exceeds ``IMAG_TOL``.
    """
    if mp1 < 1:
        raise ValueError(f"m+1 must be >= 1, got {mp1}")
    zetas = [_unity(mp1, k) for k in range(mp1)]
    vec = _to_vec(expand_linear_factors(a * z for a in refine_roots(f) for z in zetas))
    worst = float(np.max(np.abs(vec.imag)))
    if check_imag and worst > IMAG_TOL:
        raise OracleMismatch(f"imaginary residue {worst:.3g} in numeric product for {f}, m+1={mp1}")
    return vec


def primitive_roots_of_unity(d: int) -> list:
    return [_unity(d, j) for j in range(1, d + 1) if math.gcd(j, d) == 1]


def phi_numeric(d: int, a_val: int, b_val: int) -> np.ndarray:
    """prod over primitive d-th roots zeta of (x - alpha zeta)(x - beta zeta)."""
    if b_val == 0:
        raise DegenerateRoots("b = 0 puts a root of x^2 - a x + b at zero")
    alpha, beta = refine_roots(IntXPoly([b_val, -a_val, 1]))
    zetas = primitive_roots_of_unity(d)
    if len(zetas) != totient(d):
        raise OracleMismatch(f"{len(zetas)} primitive {d}-th roots, expected {totient(d)}")
    return _to_vec(expand_linear_factors(r * z for z in zetas for r in (alpha, beta)))


def max_deviation(exact: IntXPoly, vec: np.ndarray) -> float:
    """Largest per-coefficient |numeric - exact|, imaginary parts included."""
    n = max(len(exact.coeffs), len(vec))
    padded = np.zeros(n, dtype=complex)
    padded[: len(vec)] = vec
    # Subtract as rationals so exact values above 2**53 are not pre-rounded.
    return max(
        math.hypot(float(Fraction(float(padded[k].real)) - exact[k]), float(padded[k].imag))
        for k in range(n)
    )


def rounded(vec: np.ndarray) -> IntXPoly:
    """Nearest-integer rounding of the real parts."""
    return IntXPoly(int(round(v)) for v in vec.real)


def phi_numeric_check(d: int, a_val: int, b_val: int, cache: PhiCache | None = None) -> bool:
    exact = phi_poly(d, cache).specialize(a_val, b_val)
    return max_deviation(exact, phi_numeric(d, a_val, b_val)) <= COEFF_TOL
