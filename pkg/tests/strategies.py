"""Hypothesis strategies and sympy bridges shared by the tests."""

from fractions import Fraction

import sympy as sp
from hypothesis import strategies as st

from diffrec.field import QQ, QZ, RatFunc, poly_coeffs
from diffrec.ore import OrePoly

Z = sp.Symbol("z")

small_frac = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


@st.composite
def ratfuncs(draw, max_deg=2):
    num = draw(st.lists(small_frac, min_size=1, max_size=max_deg + 1))
    den = draw(st.lists(st.integers(-4, 4), min_size=1, max_size=max_deg + 1).filter(any))
    return RatFunc(num, den)


def elements(field, max_deg=2):
    return small_frac if field is QQ else ratfuncs(max_deg)


@st.composite
def ore_polys(draw, field=QZ, max_degree=3, monic=False, max_deg=1):
    d = draw(st.integers(1 if monic else 0, max_degree))
    cs = [draw(elements(field, max_deg)) for _ in range(d + (not monic))]
    if monic:
        cs.append(1)
    return OrePoly(cs, field)


def to_sympy(x):
    if isinstance(x, (int, Fraction)):
        return sp.Rational(x.numerator, x.denominator) if isinstance(x, Fraction) else sp.Integer(x)
    num = sum(sp.Rational(c.numerator, c.denominator) * Z ** i for i, c in enumerate(poly_coeffs(x.num)))
    den = sum(sp.Rational(c.numerator, c.denominator) * Z ** i for i, c in enumerate(poly_coeffs(x.den)))
    return num / den


def sym_equal(x, expr):
    return sp.cancel(to_sympy(x) - expr) == 0
