from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from bubbles.exactmath import Poly, RatFunc

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

U_SYM = sp.Symbol("u")

small_rationals = st.fractions(min_value=-4, max_value=4, max_denominator=4)
nonzero_rationals = small_rationals.filter(lambda x: x != 0)
root_lists = st.lists(small_rationals, min_size=0, max_size=5)


@st.composite
def polys(draw, max_deg=5, min_deg=0):
    coeffs = draw(st.lists(small_rationals, min_size=min_deg + 1, max_size=max_deg + 1))
    return Poly(tuple(coeffs))


@st.composite
def monic_polys(draw, max_deg=5, min_deg=1, nonzero_const=False):
    coeffs = draw(st.lists(small_rationals, min_size=min_deg, max_size=max_deg))
    if nonzero_const and coeffs:
        coeffs[0] = draw(nonzero_rationals)
    return Poly(tuple(coeffs) + (Fraction(1),))


@st.composite
def ratfuncs(draw, max_deg=3):
    num = draw(polys(max_deg))
    den = draw(monic_polys(max_deg, min_deg=0))
    return RatFunc(num, den)


def to_sym(p: Poly) -> sp.Expr:
    return sum((sp.Rational(c.numerator, c.denominator) * U_SYM**i
                for i, c in enumerate(p.coeffs)), sp.Integer(0))


def from_sym(e) -> Poly:
    poly = sp.Poly(sp.expand(e), U_SYM)
    return Poly(tuple(Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())))


def sym_series_at_infinity(expr, top: int, order: int) -> dict[int, Fraction]:
    """u^r coefficients for -order <= r <= top of ``expr`` expanded at u = infinity."""
    x = sp.Symbol("x")
    e = sp.together(expr.subs(U_SYM, 1 / x))
    s = sp.expand(sp.series(e, x, 0, order + 1).removeO())
    out = {}
    for r in range(-order, top + 1):
        c = sp.Rational(s.coeff(x, -r))
        out[r] = Fraction(int(c.p), int(c.q))
    return out


@pytest.fixture
def sym():
    return U_SYM
