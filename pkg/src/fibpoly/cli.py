"""Command-line front end.

Exit status: 0 on success, 1 when an identity check fails, 2 on bad usage.
With ``--json`` every result is one JSON object per line; coefficients are
always decimal (or, for symbolic output, Z[a,b]) strings, lowest x-degree
first.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass
from typing import Callable, Iterator, Optional

from . import factorization as fz
from . import fibonacci_lucas as fl
from . import numeric_oracle as no
from . import power_map as pm
from .errors import IdentityViolation
from .poly_core import IntXPoly, XPoly, parse_coef

POLY_KINDS = ("f", "phi", "cofactor", "power_map", "quotient")


@dataclass(frozen=True)
class PolyRecord:
    kind: str
    index: int
    params: Optional[dict]
    coeffs: list
    pretty: str

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, line: str) -> "PolyRecord":
        d = json.loads(line)
        if d.get("kind") not in POLY_KINDS:
            raise ValueError(f"not a polynomial record: {d.get('kind')!r}")
        return cls(d["kind"], d["index"], d["params"], list(d["coeffs"]), d["pretty"])

    def to_poly(self):
        """Rebuild the polynomial from ``coeffs`` (XPoly if symbolic)."""
        if self.params is None:
            return XPoly(parse_coef(c) for c in self.coeffs)
        return IntXPoly(int(c) for c in self.coeffs)

    @classmethod
    def from_poly(cls, kind: str, index: int, poly, params: Optional[dict]) -> "PolyRecord":
        return cls(kind, index, params, [str(c) for c in poly.coeffs], str(poly))


@dataclass(frozen=True)
class ValueRecord:
    kind: str
    index: int
    params: Optional[dict]
    value: str

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


@dataclass(frozen=True)
class CheckRecord:
    check: str
    passed: bool
    detail: str

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


class UsageError(Exception):
    pass


def _parse_poly(text: str) -> pm.MonicIntPoly:
    try:
        coeffs = [int(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"--poly expects comma-separated integers, got {text!r}") from None
    if len(coeffs) < 2 or coeffs[0] != 1:
        raise UsageError("--poly must be monic of degree >= 1 (leading coefficient 1 first)")
    return pm.monic(*coeffs)


def _ab(args) -> Optional[tuple[int, int]]:
    if (args.a is None) != (args.b is None):
        raise UsageError("--a and --b must be given together")
    return None if args.a is None else (args.a, args.b)


def _ab_params(ab) -> Optional[dict]:
    return None if ab is None else {"a": str(ab[0]), "b": str(ab[1])}


def _index(value: int, name: str, low: int = 1) -> int:
    if value is None:
        raise UsageError(f"{name} is required")
    if value < low:
        raise UsageError(f"{name} must be >= {low}")
    return value


def _emit_poly(args, kind, index, poly, ab=None, params=None):
    if ab is not None:
        poly = poly.specialize(*ab)
        params = _ab_params(ab)
    if args.json:
        yield PolyRecord.from_poly(kind, index, poly, params).to_json()
    else:
        yield str(poly)


def cmd_sequence(args, kind: str) -> Iterator[str]:
    n = _index(args.n, "--n", 0)
    ab = _ab(args)
    if args.symbolic:
        if ab is not None:
            raise UsageError("--symbolic cannot be combined with --a/--b")
        value = str(fl.fib_poly(n) if kind == "fib" else fl.lucas_poly(n))
    elif ab is not None:
        fn = fl.fib_value if kind == "fib" else fl.lucas_value
        value = str(fn(n, *ab))
    else:
        value = str(fl.fib_int(n) if kind == "fib" else fl.lucas_int(n))
    if args.json:
        yield ValueRecord(kind, n, _ab_params(ab), value).to_json()
    else:
        yield value


def cmd_n_value(args) -> Iterator[str]:
    n = _index(args.n, "--n")
    value = fl.ramanujan_N(n)
    if value != fl.lucas_int(2 * n + 1):
        raise IdentityViolation(f"N({n}) = {value} differs from L_{2 * n + 1}")
    if args.json:
        yield ValueRecord("n-value", n, None, str(value)).to_json()
    else:
        yield str(value)


def cmd_f_poly(args):
    k = _index(args.m1, "--m1")
    return _emit_poly(args, "f", k, fz.build_f(k), _ab(args))


def cmd_cofactor(args):
    k = _index(args.m1, "--m1")
    if not fz.verify_theorem(k):
        raise IdentityViolation(f"(x^2 - a*x + b) * cofactor({k}) != f_{k}")
    return _emit_poly(args, "cofactor", k, fz.cofactor(k), _ab(args))


def cmd_phi(args):
    d = _index(args.d, "--d")
    return _emit_poly(args, "phi", d, fz.phi_poly(d), _ab(args))


def cmd_factor_table(args) -> Iterator[str]:
    top = _index(args.max, "--max")
    ab = _ab(args)
    cache = fz.PhiCache()

    def render(p):
        return p if ab is None else p.specialize(*ab)

    for n in range(1, top + 1):
        f, cof, phi = fz.build_f(n), fz.cofactor(n), fz.phi_poly(n, cache)
        if fz.F1 * cof != f or not fz.phi_product_check(n, cache):
            raise IdentityViolation(f"factorisation of f_{n} does not multiply back")
        if args.json:
            for kind, p in (("f", f), ("cofactor", cof), ("phi", phi)):
                yield from _emit_poly(args, kind, n, p, ab)
            continue
        yield f"f_{n}(x) = {render(f)}"
        yield f"  = ({render(fz.F1)})*({render(cof)})"
        yield "  = " + "*".join(f"Phi_{d}" for d in fz.divisors(n))
        yield f"Phi_{n}(x) = {render(phi)}"


def cmd_power_map(args):
    f = _parse_poly(args.poly)
    k = _index(args.m1, "--m1")
    params = {"poly": [str(c) for c in reversed(f.coeffs)]}
    return _emit_poly(args, "power_map", k, pm.root_power_poly(f, k), params=params)


def cmd_quotient(args):
    f = _parse_poly(args.poly)
    k = _index(args.m1, "--m1")
    params = {"poly": [str(c) for c in reversed(f.coeffs)]}
    return _emit_poly(args, "quotient", k, pm.quotient_coeffs(f, k), params=params)


SECTION4_POLY = pm.monic(1, -1, -2, 1)


def verification_checks(top: int) -> list[tuple[str, Callable[[], bool]]]:
    """Named checks covering indices up to ``top``."""
    cache = fz.PhiCache()
    seq = fl.FibLucas()
    half = max(1, top // 2)
    small = min(top, 12)
    pairs = [(u, v) for u in (-3, -1, 0, 2, 5) for v in (-2, -1, 1, 3)]
    return [
        (f"theorem m+1=1..{top}", lambda: all(fz.verify_theorem(k, seq) for k in range(1, top + 1))),
        (
            f"middle coefficient = -L_(m+1), m=0..{top}",
            lambda: all(
                seq.middle_coefficient(m) + seq.lucas_poly(m + 1) == 0 for m in range(top + 1)
            ),
        ),
        (
            f"phi product n=1..{top}",
            lambda: all(fz.phi_product_check(n, cache) for n in range(1, top + 1)),
        ),
        (
            f"phi degree = 2*totient, d=1..{top}",
            lambda: all(
                fz.phi_poly(d, cache).deg == 2 * fz.totient(d) for d in range(1, top + 1)
            ),
        ),
        (
            f"ramanujan N = L_(2n+1), n=1..{top}",
            lambda: all(fl.ramanujan_N(n) == fl.lucas_int(2 * n + 1) for n in range(1, top + 1)),
        ),
        (
            f"x^2+x-1 divides, n=1..{half}",
            lambda: all(fz.verify_divides(n) for n in range(1, half + 1)),
        ),
        (
            f"power map r=2 matches f, m+1=1..{small}",
            lambda: all(
                pm.root_power_poly(pm.monic(1, -u, v), k) == fz.build_f(k).specialize(u, v)
                for u, v in pairs
                for k in range(1, small + 1)
            ),
        ),
        (
            f"phi numeric oracle d=1..{small}",
            lambda: all(
                no.phi_numeric_check(d, a, b, cache)
                for d in range(1, small + 1)
                for a, b in ((-1, -1), (1, -1), (3, 2))
            ),
        ),
        (
            f"power map numeric oracle m+1=1..{min(top, 8)}",
            lambda: all(
                no.max_deviation(
                    pm.root_power_poly(SECTION4_POLY, k),
                    no.numeric_power_product(SECTION4_POLY, k),
                )
                <= no.COEFF_TOL
                for k in range(1, min(top, 8) + 1)
            ),
        ),
    ]


def cmd_verify(args) -> Iterator[str]:
    if args.all:
        top = _index(args.max, "--max")
    else:
        top = _index(args.m1, "--m1 (or --all)")
    failed = []
    for name, check in verification_checks(top):
        try:
            ok = bool(check())
            detail = ""
        except IdentityViolation as exc:
            ok, detail = False, str(exc)
        if not ok:
            failed.append(name)
        if args.json:
            yield CheckRecord(name, ok, detail).to_json()
        else:
            yield f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  ({detail})" if detail else "")
    if failed:
        raise IdentityViolation(f"{len(failed)} check(s) failed: {', '.join(failed)}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="one JSON record per line")

    ab = argparse.ArgumentParser(add_help=False)
    ab.add_argument("--a", type=int, help="integer value for a (omit for symbolic)")
    ab.add_argument("--b", type=int, help="integer value for b (omit for symbolic)")

    parser = argparse.ArgumentParser(
        prog="fibpoly",
        description="Fibonacci/Lucas polynomial factorisations and root power maps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name in ("fib", "lucas"):
        p = sub.add_parser(name, parents=[common, ab], help=f"{name} polynomial or number")
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--symbolic", action="store_true", help="print the polynomial in a, b")
        p.set_defaults(func=lambda a, kind=name: cmd_sequence(a, kind))

    p = sub.add_parser("n-value", parents=[common], help="Ramanujan's constant N(n)")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_n_value)

    for name, func, hlp in (
        ("f-poly", cmd_f_poly, "f_{m+1}(x;a,b)"),
        ("cofactor", cmd_cofactor, "f_{m+1} / (x^2 - a x + b)"),
    ):
        p = sub.add_parser(name, parents=[common, ab], help=hlp)
        p.add_argument("--m1", type=int, required=True, help="the index m+1")
        p.set_defaults(func=func)

    p = sub.add_parser("phi", parents=[common, ab], help="Phi_d(x;a,b)")
    p.add_argument("--d", "--m1", dest="d", type=int, required=True)
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("factor-table", parents=[common, ab], help="f_n and its factors, n=1..max")
    p.add_argument("--max", type=int, default=6)
    p.set_defaults(func=cmd_factor_table)

    for name, func, hlp in (
        ("power-map", cmd_power_map, "prod (x^(m+1) - alpha^(m+1))"),
        ("quotient", cmd_quotient, "power map divided by f"),
    ):
        p = sub.add_parser(name, parents=[common], help=hlp)
        p.add_argument("--poly", required=True, help="monic coefficients, leading first")
        p.add_argument("--m1", type=int, required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("verify", parents=[common], help="run identity checks")
    p.add_argument("--all", action="store_true", help="sweep indices 1..max")
    p.add_argument("--max", type=int, default=40)
    p.add_argument("--m1", type=int)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        for line in args.func(args):
            print(line, file=out)
    except UsageError as exc:
        print(f"fibpoly {args.command}: error: {exc}", file=err)
        return 2
    except IdentityViolation as exc:
        print(f"fibpoly {args.command}: identity violation: {exc}", file=err)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
