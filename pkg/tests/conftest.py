import hypothesis.strategies as st
from hypothesis import settings

from fibpoly.poly_core import CoefPoly, IntXPoly, XPoly

settings.register_profile("default", deadline=None)
settings.load_profile("default")

small_ints = st.integers(-99, 99)
monomials = st.tuples(st.integers(0, 8), st.integers(0, 8))


def coef_polys(max_terms=6):
    return st.dictionaries(monomials, small_ints, max_size=max_terms).map(CoefPoly)


def xpolys(max_deg=8, max_terms=3):
    return st.lists(coef_polys(max_terms), max_size=max_deg + 1).map(XPoly)


def monic_xpolys(max_deg=8, max_terms=3):
    return st.lists(coef_polys(max_terms), max_size=max_deg).map(lambda cs: XPoly(cs + [1]))


def int_xpolys(max_deg=8, lo=-99, hi=99):
    return st.lists(st.integers(lo, hi), max_size=max_deg + 1).map(IntXPoly)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import VERDICTS
    except ImportError:
        return
    if VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in VERDICTS:
            terminalreporter.write_line(line)
