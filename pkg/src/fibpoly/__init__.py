"""Exact Fibonacci/Lucas polynomial factorisations and root power maps."""

from .errors import (
    DegenerateRoots,
    IdentityViolation,
    IndexOutOfRange,
    InvalidIndex,
    NoConvergence,
    NonIntegralSymmetric,
    NonMonicDivisor,
    NonzeroRemainder,
    OracleMismatch,
)
from .factorization import (
    F1,
    PhiCache,
    build_f,
    cofactor,
    divisors,
    phi_poly,
    phi_product_check,
    totient,
    verify_divides,
    verify_theorem,
)
from .fibonacci_lucas import (
    FibLucas,
    fib_int,
    fib_poly,
    fib_poly_closed,
    lucas_int,
    lucas_poly,
    middle_coefficient,
    ramanujan_N,
    sign_law_check,
)
from .poly_core import (
    CoefPoly,
    IntXPoly,
    XPoly,
    canonical_string,
    coef_mul,
    specialize,
    xpoly_div_exact,
    xpoly_mul,
)
from .power_map import (
    MonicIntPoly,
    middle_sequences,
    monic,
    power_sums,
    from_power_sums,
    quotient_coeffs,
    root_power_map,
    root_power_poly,
)

__version__ = "0.1.0"
