"""Exact arithmetic in Z[a,b] and Z[a,b][x], plus the specialised Z[x] type.

``CoefPoly`` is sparse: a map from the bidegree ``(deg_a, deg_b)`` to a
nonzero Python int.  ``XPoly`` and ``IntXPoly`` are dense in ``x`` and store
their coefficients lowest degree first.  The zero polynomial has an empty
coefficient tuple and ``deg`` is ``None``.

All three types are immutable and hashable.  Python ints are arbitrary
precision, so nothing here ever rounds.
"""

from __future__ import annotations

import re
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import NonMonicDivisor, NonzeroRemainder

__all__ = [
    "CoefPoly",
    "XPoly",
    "IntXPoly",
    "coef_mul",
    "xpoly_mul",
    "xpoly_div_exact",
    "specialize",
    "canonical_string",
    "parse_coef",
]

Monomial = tuple  # (deg_a, deg_b)


class CoefPoly:
    """Element of Z[a,b] in canonical sparse form (no stored zeros)."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        clean = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in monomial {(i, j)}")
            if c:
                clean[(int(i), int(j))] = int(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "CoefPoly":
        # Trusted internal constructor: only drops zeros, no validation.
        obj = object.__new__(cls)
        obj._terms = {k: c for k, c in terms.items() if c}
        obj._hash = None
        return obj

    @classmethod
    def const(cls, n: int) -> "CoefPoly":
        return cls({(0, 0): n})

    @classmethod
    def monomial(cls, c: int, deg_a: int = 0, deg_b: int = 0) -> "CoefPoly":
        return cls({(deg_a, deg_b): c})

    @property
    def terms(self) -> Mapping[Monomial, int]:
        return MappingProxyType(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def is_constant(self) -> bool:
        return all(k == (0, 0) for k in self._terms)

    def constant_value(self) -> int:
        return self._terms.get((0, 0), 0)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms in print order: deg_a descending, then deg_b descending."""
        return sorted(self._terms.items(), key=lambda kv: (-kv[0][0], -kv[0][1]))

    def __add__(self, other):
        other = _as_coef(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return CoefPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return CoefPoly._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = _as_coef(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_coef(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return CoefPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = _as_coef(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def evaluate(self, a_val, b_val):
        """Substitute numbers for a and b."""
        return sum(c * a_val**i * b_val**j for (i, j), c in self._terms.items())

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for (i, j), c in self.sorted_terms():
            parts.append((c < 0, _monomial_body(abs(c), i, j)))
        return _join_signed(parts)

    def __repr__(self):
        return f"CoefPoly({str(self)!r})"


def _as_coef(v):
    if isinstance(v, CoefPoly):
        return v
    if isinstance(v, int):
        return CoefPoly.const(v)
    return NotImplemented


def _monomial_body(mag: int, i: int, j: int) -> str:
    factors = []
    if mag != 1 or (i == 0 and j == 0):
        factors.append(str(mag))
    if i:
        factors.append("a" if i == 1 else f"a^{i}")
    if j:
        factors.append("b" if j == 1 else f"b^{j}")
    return "*".join(factors)


def _join_signed(parts: list[tuple[bool, str]]) -> str:
    neg, body = parts[0]
    out = ("-" if neg else "") + body
    for neg, body in parts[1:]:
        out += (" - " if neg else " + ") + body
    return out


ZERO = CoefPoly()
ONE = CoefPoly.const(1)
A = CoefPoly.monomial(1, 1, 0)
B = CoefPoly.monomial(1, 0, 1)

_TERM_RE = re.compile(r"^(\d+)?(?:\*?a(?:\^(\d+))?)?(?:\*?b(?:\^(\d+))?)?$")


def parse_coef(text: str) -> CoefPoly:
    """Inverse of ``str(CoefPoly)``."""
    text = text.strip()
    if text == "0":
        return ZERO
    text = text.replace(" - ", " + -")
    terms: dict = {}
    for tok in text.split(" + "):
        sign = 1
        if tok.startswith("-"):
            sign, tok = -1, tok[1:]
        m = _TERM_RE.match(tok)
        if not tok or m is None:
            raise ValueError(f"cannot parse coefficient term {tok!r}")
        mag = int(m.group(1)) if m.group(1) else 1
        i = 0 if "a" not in tok else int(m.group(2) or 1)
        j = 0 if "b" not in tok else int(m.group(3) or 1)
        terms[(i, j)] = terms.get((i, j), 0) + sign * mag
    return CoefPoly(terms)


class _DensePoly:
    """Dense univariate polynomial in x; coefficients stored low degree first."""

    __slots__ = ("_c", "_hash")
    _zero = 0
    _one = 1

    def __init__(self, coeffs: Iterable = ()):
        c = [self._coerce(v) for v in coeffs]
        while c and not c[-1]:
            c.pop()
        self._c = tuple(c)
        self._hash = None

    @staticmethod
    def _coerce(v):
        return v

    @property
    def _ring(self):
        """Class that arithmetic results are built in."""
        return type(self)

    @classmethod
    def from_leading_first(cls, coeffs: Iterable):
        return cls(list(coeffs)[::-1])

    @classmethod
    def x_power(cls, k: int, coef=1):
        return cls([cls._zero] * k + [coef])

    @property
    def coeffs(self) -> tuple:
        return self._c

    @property
    def deg(self):
        """Degree in x, or ``None`` for the zero polynomial."""
        return len(self._c) - 1 if self._c else None

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def __getitem__(self, k: int):
        """Coefficient of x^k (zero outside the stored range)."""
        return self._c[k] if 0 <= k < len(self._c) else self._coerce(self._zero)

    def leading(self):
        return self._c[-1] if self._c else self._coerce(self._zero)

    def _wrap(self, other):
        if isinstance(other, self._ring):
            return other
        if isinstance(other, (int, CoefPoly)) and not (
            isinstance(other, CoefPoly) and type(self) is IntXPoly
        ):
            return self._ring([other])
        return NotImplemented

    def __add__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self._c), len(other._c))
        return self._ring(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return self._ring(-c for c in self._c)

    def __sub__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._c or not other._c:
            return self._ring()
        zero = self._coerce(self._zero)
        out = [zero] * (len(self._c) + len(other._c) - 1)
        for i, p in enumerate(self._c):
            if not p:
                continue
            for j, q in enumerate(other._c):
                if q:
                    out[i + j] = out[i + j] + p * q
        return self._ring(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = self._ring([self._one])
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._ring.__name__, self._c))
        return self._hash

    def divmod_monic(self, den):
        """Long division by a divisor whose leading coefficient is 1."""
        den = self._wrap(den)
        if not den or den.leading() != self._one:
            raise NonMonicDivisor(f"divisor {den} is not monic in x")
        m = den.deg
        rem = list(self._c)
        if len(rem) <= m:
            return self._ring(), self
        zero = self._coerce(self._zero)
        quot = [zero] * (len(rem) - m)
        for k in range(len(rem) - m - 1, -1, -1):
            c = rem[k + m]
            if not c:
                continue
            quot[k] = c
            for i in range(m):
                if den._c[i]:
                    rem[k + i] = rem[k + i] - c * den._c[i]
            rem[k + m] = zero
        return self._ring(quot), self._ring(rem[:m])

    def div_exact(self, den):
        q, r = self.divmod_monic(den)
        if r:
            raise NonzeroRemainder(f"({self}) / ({den}) leaves remainder {r}")
        return q

    def __str__(self):
        return canonical_string(self)

    def __repr__(self):
        return f"{type(self).__name__}({str(self)!r})"


class XPoly(_DensePoly):
    """Element of Z[a,b][x]."""

    __slots__ = ()
    _zero = ZERO
    _one = ONE

    @staticmethod
    def _coerce(v):
        c = _as_coef(v)
        if c is NotImplemented:
            raise TypeError(f"cannot use {v!r} as a Z[a,b] coefficient")
        return c

    def specialize(self, a_val: int, b_val: int) -> "IntXPoly":
        return IntXPoly(c.evaluate(a_val, b_val) for c in self._c)


class IntXPoly(_DensePoly):
    """Element of Z[x]."""

    __slots__ = ()

    @staticmethod
    def _coerce(v):
        if isinstance(v, CoefPoly):
            if not v.is_constant():
                raise TypeError(f"{v} is not an integer constant")
            return v.constant_value()
        return int(v)

    def to_xpoly(self) -> XPoly:
        return XPoly(self._c)

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self._c):
            acc = acc * x + c
        return acc


X = XPoly([ZERO, ONE])


def coef_mul(p: CoefPoly, q: CoefPoly) -> CoefPoly:
    return p * q


def xpoly_mul(p, q):
    return p * q


def xpoly_div_exact(num, den):
    """Quotient of ``num`` by the monic ``den``.

    Raises ``NonMonicDivisor`` if ``den`` is not monic in x and
    ``NonzeroRemainder`` if the division does not come out even.
    """
    return num.div_exact(den)


def specialize(p: XPoly, a_val: int, b_val: int) -> IntXPoly:
    return p.specialize(a_val, b_val)


def canonical_string(p: _DensePoly) -> str:
    """Deterministic rendering, highest power of x first.

    Single-monomial coefficients are merged into the term
    (``-a*x``); longer ones are parenthesised, with the sign of their leading
    monomial pulled out front (``- (a^2 - 2*b)*x^2``).
    """
    parts = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        c = _as_coef(c)
        xs = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        if len(c) == 1:
            ((i, j), v), = c.terms.items()
            body = _monomial_body(abs(v), i, j)
            neg = v < 0
            if xs:
                body = xs if body == "1" else f"{body}*{xs}"
        else:
            (_, lead), = c.sorted_terms()[:1]
            neg = lead < 0
            body = f"({-c if neg else c})"
            if xs:
                body = f"{body}*{xs}"
        parts.append((neg, body))
    return _join_signed(parts) if parts else "0"
