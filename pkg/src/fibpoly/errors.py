"""Exception hierarchy.

``IdentityViolation`` and its subclasses mean an algebraic identity that
must hold did not; callers (the CLI in particular) treat them as a failed
verification rather than as bad input.
"""


class IdentityViolation(ArithmeticError):
    """An identity that must hold exactly was found to be false."""


class NonzeroRemainder(IdentityViolation):
    pass


class NonIntegralSymmetric(IdentityViolation):
    """An inverse-Newton step produced a non-integer symmetric function."""


class OracleMismatch(IdentityViolation):
    """Floating-point cross-check disagreed with the exact result."""


class NonMonicDivisor(ValueError):
    pass


class InvalidIndex(ValueError):
    pass


# Same condition, named after where it is raised.
IndexOutOfRange = InvalidIndex


class NoConvergence(RuntimeError):
    pass


class DegenerateRoots(ValueError):
    pass
