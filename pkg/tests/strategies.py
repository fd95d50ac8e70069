"""Shared hypothesis strategies."""

from hypothesis import strategies as st

from qsdd.poly import LPoly, XPoly

codes = st.lists(st.integers(0, 3), max_size=4).map(tuple)
coeffs = st.integers(-5, 5)


def xpolys(max_terms=4):
    return st.dictionaries(codes, coeffs, max_size=max_terms).map(XPoly)


def lpolys(max_terms=4):
    return st.dictionaries(codes, coeffs, max_size=max_terms).map(LPoly)
