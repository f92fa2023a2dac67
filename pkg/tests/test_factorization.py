import math
import random

import pytest

from fibpoly.errors import IndexOutOfRange
from fibpoly.factorization import (
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
from fibpoly.poly_core import A, B, IntXPoly, XPoly


def ix(*leading_first):
    return IntXPoly.from_leading_first(leading_first)


X = XPoly([0, 1])


@pytest.fixture(scope="module")
def cache():
    return PhiCache()


def brute_totient(n):
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def test_build_f_examples():
    assert build_f(1) == X**2 - A * X + B
    assert build_f(2) == X**4 - (A**2 - 2 * B) * X**2 + B**2
    assert build_f(2).specialize(-1, -1) == ix(1, 0, -3, 0, 1)
    assert build_f(5).specialize(-1, -1) == ix(1, 0, 0, 0, 0, 11, 0, 0, 0, 0, -1)


def test_build_f_bad_index():
    with pytest.raises(IndexOutOfRange):
        build_f(0)
    with pytest.raises(IndexOutOfRange):
        cofactor(0)


def test_cofactor_examples():
    assert cofactor(1) == XPoly([1])
    assert cofactor(3).specialize(-1, -1) == ix(1, -1, 2, 1, 1)
    assert cofactor(4).specialize(-1, -1) == ix(1, -1, 2, -3, -2, -1, -1)


def test_cofactor_degree():
    for k in range(1, 30):
        assert cofactor(k).deg == 2 * (k - 1)


def test_verify_theorem():
    assert verify_theorem(1)
    assert verify_theorem(5)
    assert verify_theorem(37)
    assert all(verify_theorem(k) for k in range(1, 101))


def test_phi_examples(cache):
    assert phi_poly(1, cache).specialize(-1, -1) == ix(1, 1, -1)
    assert phi_poly(4, cache).specialize(-1, -1) == ix(1, 0, 3, 0, 1)
    assert phi_poly(6, cache).specialize(-1, -1) == ix(1, 1, 2, -1, 1)


def test_phi_cache_fills_divisors():
    c = PhiCache()
    phi_poly(12, c)
    assert set(c.table) == set(divisors(12))


def test_phi_product_check(cache):
    assert phi_product_check(1, cache)
    assert phi_product_check(6, cache)
    assert phi_product_check(12, cache)
    assert all(phi_product_check(n, cache) for n in range(1, 61))


def test_phi_degrees(cache):
    for d in range(1, 61):
        assert phi_poly(d, cache).deg == 2 * totient(d)
    for n in range(1, 61):
        assert sum(phi_poly(d, cache).deg for d in divisors(n)) == 2 * n == build_f(n).deg


def test_phi_prime_is_f_over_f1(cache):
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        assert phi_poly(p, cache) == build_f(p).div_exact(F1)


def test_specialization_commutes_with_factorization(cache):
    rng = random.Random(7)
    for _ in range(30):
        n, u, v = rng.randint(1, 24), rng.randint(-9, 9), rng.randint(-9, 9)
        prod = IntXPoly([1])
        for d in divisors(n):
            prod = prod * phi_poly(d, cache).specialize(u, v)
        assert prod == build_f(n).specialize(u, v)


def test_verify_divides():
    assert verify_divides(1)
    assert verify_divides(2)
    assert verify_divides(10)
    assert build_f(3).specialize(-1, -1) == ix(1, 1, -1) * ix(1, -1, 2, 1, 1)


def test_divisors_and_totient():
    assert divisors(6) == [1, 2, 3, 6]
    assert totient(1) == 1
    assert totient(12) == 4
    for n in range(1, 300):
        assert divisors(n) == [d for d in range(1, n + 1) if n % d == 0]
        assert totient(n) == brute_totient(n)
