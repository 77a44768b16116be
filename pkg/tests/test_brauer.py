from fractions import Fraction as F
from itertools import combinations_with_replacement

import pytest
import sympy as sp
from conftest import U_SYM, from_sym, monic_polys, sym_series_at_infinity, to_sym
from hypothesis import given, settings
from hypothesis import strategies as st

from bubbles.brauer import (
    BrauerBranch,
    BrauerOO,
    HatNotPolynomial,
    OmegaSeq,
    algebra_min_poly,
    brew_form,
    check_admissible,
    check_weak_admissible,
    classify_brauer,
    extend_omega,
    hat_poly,
    lilac_holds,
    odd_bubble,
    omega_from_oo,
    omega_of_roots,
    oo_from_omega,
    oo_of_poly,
    oracle_classify,
    sub_multisets,
)
from bubbles.exactmath import ONE, U, InsufficientOrder, Poly, RatFunc, series_expand

POOL = [F(x) for x in (0, 1, -1, 2, -2, 3, F(1, 2), F(-3, 2))]
pool_roots = st.lists(st.sampled_from(POOL), min_size=0, max_size=5)
HALF = F(1, 2)


def sym_oo(f: Poly):
    u = U_SYM
    d = f.degree
    fs = to_sym(f)
    return sp.cancel(((-1) ** d * u - sp.Rational(1, 2)) * fs.subs(u, -u) / ((u - sp.Rational(1, 2)) * fs))


# --- generating functions ---------------------------------------------------

def test_oo_examples():
    assert oo_of_poly(U * U) == RatFunc(ONE)
    assert oo_of_poly(U) == RatFunc(Poly((HALF, 1)), Poly((-HALF, 1)))
    assert oo_of_poly(Poly.linear(1)) == RatFunc(Poly.from_roots([-HALF, -1]),
                                                 Poly.from_roots([HALF, 1]))


@given(monic_polys(max_deg=5, min_deg=0))
def test_oo_against_sympy(f):
    r = oo_of_poly(f)
    num, den = sp.fraction(sym_oo(f))
    ref = RatFunc(from_sym(num), from_sym(den))
    assert r == ref
    s = series_expand(r, 6)
    assert s.top_exp == 0 and s.coeff(0) == 1


@given(monic_polys(max_deg=6, min_deg=0))
def test_grassmannian_identity(f):
    o = oo_of_poly(f)
    assert o * o.neg_var() == RatFunc(ONE)


def test_omega_of_roots_examples():
    assert all(c == 0 for c in omega_of_roots([], 10).omega)
    w = omega_of_roots([0], 10)
    assert w[0] == 1 and all(w[n] == 0 for n in range(1, 11))
    for a in (F(2), F(-1, 3), F(5, 2)):
        w = omega_of_roots([a], 12)
        assert all(w[n] == (2 * a + 1) * a**n for n in range(13))


@given(pool_roots)
@settings(max_examples=10)
def test_omega_of_roots_against_sympy(roots):
    u = U_SYM
    prod = sp.Integer(1)
    for a in roots:
        a = sp.Rational(a.numerator, a.denominator)
        prod *= (u + a) / (u - a)
    sign = (-1) ** len(roots)
    expr = -u + sp.Rational(1, 2) + (u - sp.Rational(sign, 2)) * prod
    ref = sym_series_at_infinity(expr, 1, 8)
    w = omega_of_roots(roots, 8)
    assert ref[1] == 0
    assert all(w[n] == ref[-n] for n in range(9))


def test_oo_from_omega_anchors():
    w = OmegaSeq((F(3), F(-2), F(5), F(7), F(1)))
    s = oo_from_omega(w).series
    assert s.coeff(0) == 1
    assert s.coeff(-1) == w[0]
    assert s.coeff(-2) == w[1] + w[0] / 2
    assert oo_from_omega(OmegaSeq((0,) * 8)).series.agrees(series_expand(RatFunc(ONE), 8))


@given(st.lists(st.fractions(max_denominator=5, min_value=-5, max_value=5), min_size=1, max_size=12))
def test_omega_roundtrip(ws):
    w = OmegaSeq(tuple(ws))
    assert omega_from_oo(oo_from_omega(w)).omega == w.omega


@given(pool_roots)
def test_omega_of_roots_matches_oo_of_poly(roots):
    w = omega_of_roots(roots, 10)
    exact = series_expand(oo_of_poly(Poly.from_roots(roots)), 11)
    assert oo_from_omega(w).series.agrees(exact)


# --- admissibility ---------------------------------------------------------

def test_admissible_examples():
    assert check_admissible(omega_of_roots([F(2)], 20)).ok
    v = check_admissible(OmegaSeq((1, 5) + (0,) * 8))
    assert not v.ok and v.first_failure == 0 and v.grassmannian_failure == -2
    assert check_admissible(OmegaSeq((0,) * 10)).ok


def test_odd_bubble_formula():
    w = (F(1), F(0), F(3))
    assert odd_bubble(w, 0) == HALF * (-1 + 1)
    assert odd_bubble(w, 1) == HALF * (-3 + (3 - 0 + 3))


@given(pool_roots)
def test_canonical_sequences_are_admissible_and_weakly_admissible(roots):
    w = omega_of_roots(roots, 16)
    assert check_admissible(w).ok
    if roots:
        assert check_weak_admissible(w, Poly.from_roots(roots)).ok


@given(st.lists(st.fractions(max_denominator=3, min_value=-3, max_value=3), min_size=2, max_size=14))
def test_admissible_verdicts_agree(ws):
    # check_admissible raises if the recursion and the series identity disagree
    v = check_admissible(OmegaSeq(tuple(ws)))
    assert v.ok == v.grassmannian_ok


def test_weak_examples():
    a = F(3)
    assert check_weak_admissible(omega_of_roots([a], 12), Poly.linear(a)).ok
    assert check_weak_admissible(OmegaSeq((1,) + (0,) * 10), U).ok
    v = check_weak_admissible(omega_of_roots([1], 12), Poly.linear(2))
    assert not v.ok and v.first_failure == 0


def test_weak_rejects_constant_m():
    with pytest.raises(ValueError):
        check_weak_admissible(OmegaSeq((1, 2)), ONE)
    with pytest.raises(ValueError):
        brew_form(OmegaSeq((1, 2)), ONE)


@given(st.lists(st.fractions(max_denominator=3, min_value=-3, max_value=3), min_size=4, max_size=12),
       monic_polys(max_deg=3))
def test_weak_equals_brew(ws, m):
    w = OmegaSeq(tuple(ws))
    _, tail_ok = brew_form(w, m)
    assert check_weak_admissible(w, m).ok == tail_ok


def test_brew_polypart_for_single_root():
    # m(u) * sum (2a+1) a^r u^{-r-1} = (u - a)(2a+1)/(u - a) = 2a + 1
    a = F(2)
    poly, ok = brew_form(omega_of_roots([a], 10), Poly.linear(a))
    assert ok and poly == Poly.const(2 * a + 1)


def test_extend_omega_examples():
    w, ok = extend_omega(Poly.linear(1), [3], 10)
    assert ok and all(c == 3 for c in w.omega)
    _, ok = extend_omega(Poly.linear(1), [5], 10)
    assert not ok
    w, ok = extend_omega(U * U, [0], 10)
    assert ok and w.omega == omega_of_roots([0, 0], 10).omega


@given(pool_roots.filter(bool))
def test_extend_omega_reproduces_canonical(roots):
    m = Poly.from_roots(roots)
    ref = omega_of_roots(roots, 14)
    evens = [ref[r] for r in range(0, m.degree, 2)]
    w, ok = extend_omega(m, evens, 14)
    assert ok and w.omega == ref.omega


# --- hat closure -----------------------------------------------------------

def test_hat_examples():
    one = BrauerOO.from_ratfunc(RatFunc(ONE))
    assert hat_poly(U, one, 16) == Poly((0, HALF, 1))
    a = F(3)
    o = BrauerOO.from_ratfunc(oo_of_poly(Poly.linear(a)))
    assert hat_poly(Poly.linear(a), o, 16) == Poly.from_roots([HALF, a])
    with pytest.raises(HatNotPolynomial, match="hat not polynomial"):
        hat_poly(U, BrauerOO.from_ratfunc(oo_of_poly(Poly.linear(1))), 16)


def test_hat_series_path_matches_exact_path():
    f = Poly.from_roots([1, 2, -1])
    exact = BrauerOO.from_ratfunc(oo_of_poly(f))
    trunc = BrauerOO.from_series(series_expand(oo_of_poly(f), 30))
    assert hat_poly(f, exact, 20) == hat_poly(f, trunc, 20)
    with pytest.raises(HatNotPolynomial):
        hat_poly(U, BrauerOO.from_series(series_expand(oo_of_poly(Poly.linear(1)), 30)), 20)


@given(pool_roots.filter(bool))
def test_hat_of_minimal_polynomial_factorises(roots):
    m = Poly.from_roots(roots)
    d = m.degree
    got = hat_poly(m, BrauerOO.from_ratfunc(oo_of_poly(m)), 16)
    assert got == Poly((-HALF, (-1) ** (d + 1))) * m
    # equivalently g_hat(-u) = ((-1)^d u - 1/2) m(-u)
    assert got.neg_var() == Poly((-HALF, (-1) ** d)) * m.neg_var()


# --- classification --------------------------------------------------------

def test_worked_instance():
    p = Poly.from_roots([1, 2, -1])
    c = classify_brauer(p, BrauerOO.from_ratfunc(RatFunc(ONE)))
    assert c.nonzero and c.m == Poly((-1, 0, 1))
    assert c.p_hat == Poly.from_roots([-HALF, -1, -2, 1])
    assert c.gcd_p_phat == Poly((-1, 0, 1))
    assert c.q_poly.degree == 2 and c.branch is BrauerBranch.Q_EVEN
    assert c.certified_order is None
    assert oracle_classify([1, 2, -1], BrauerOO.from_ratfunc(RatFunc(ONE))) == c.m


def test_classify_examples():
    a = F(5, 2)
    o = BrauerOO.from_ratfunc(oo_of_poly(Poly.linear(a)))
    c = classify_brauer(Poly.linear(a), o)
    assert c.nonzero and c.m == Poly.linear(a)
    c = classify_brauer(Poly.linear(1), BrauerOO.from_ratfunc(RatFunc(ONE)))
    assert not c.nonzero and c.gcd_p_phat == ONE


def test_classify_rejects_bad_p():
    one = BrauerOO.from_ratfunc(RatFunc(ONE))
    with pytest.raises(ValueError):
        classify_brauer(ONE, one)
    with pytest.raises(ValueError):
        classify_brauer(Poly((1, 2)), one)


def test_classify_short_circuits_on_lilac():
    o = BrauerOO.from_series(oo_from_omega(OmegaSeq((1, 5) + (0,) * 20)).series)
    assert not lilac_holds(o)
    c = classify_brauer(Poly.linear(1), o, 16)
    assert not c.nonzero and c.p_hat is None and "lilac" in c.diagnostics[0]


def test_odd_q_branch_divides_by_u():
    # doubled root at 0 makes deg Q odd, so m = gcd / u
    p = Poly.from_roots([0, 0])
    c = classify_brauer(p, BrauerOO.from_ratfunc(oo_of_poly(U)))
    assert c.branch is BrauerBranch.Q_ODD
    assert c.nonzero and c.m == U


@given(pool_roots.filter(bool))
def test_classify_recovers_m(roots):
    m = Poly.from_roots(roots)
    c = classify_brauer(m, BrauerOO.from_ratfunc(oo_of_poly(m)))
    assert c.nonzero and c.m == m


def test_oracle_examples():
    one = BrauerOO.from_ratfunc(RatFunc(ONE))
    assert oracle_classify([1, -1, 2], one) == Poly((-1, 0, 1))
    assert oracle_classify([3], BrauerOO.from_ratfunc(oo_of_poly(Poly.linear(3)))) == Poly.linear(3)
    assert oracle_classify([1], one) is None


def test_sub_multisets_counts():
    assert len(sub_multisets([1, 1, 2])) == 6
    assert sub_multisets([]) == [()]


def test_classify_vs_oracle_sweep():
    pool = [0, 1, -1, 2]
    for d in range(1, 4):
        for roots in combinations_with_replacement(pool, d):
            p = Poly.from_roots(roots)
            for sub in sub_multisets(roots):
                o = BrauerOO.from_ratfunc(oo_of_poly(Poly.from_roots(sub)))
                c = classify_brauer(p, o)
                assert (c.m if c.nonzero else None) == oracle_classify(roots, o), (roots, sub)


def test_series_input_records_certification_order():
    p = Poly.from_roots([1, 2, -1])
    o = BrauerOO.from_series(series_expand(RatFunc(ONE), 20))
    c = classify_brauer(p, o, 64)
    assert c.nonzero and c.certified_order == 20 - 3 - 1
    with pytest.raises(InsufficientOrder):
        classify_brauer(p, BrauerOO.from_series(series_expand(RatFunc(ONE), 3)))


def test_brauer_oo_validates_shape():
    with pytest.raises(ValueError):
        BrauerOO.from_series(series_expand(RatFunc(Poly((1, 2))), 5))
    with pytest.raises(ValueError):
        BrauerOO.from_ratfunc(RatFunc(Poly.const(2)))


# --- two-strand algebra ----------------------------------------------------

def test_algebra_min_poly_examples():
    a = F(2)
    r = algebra_min_poly(Poly.linear(a), omega_of_roots([a], 30))
    assert r.f == Poly.linear(a) and r.goodman
    # O_Omega = 1 means Omega = 0
    r = algebra_min_poly(Poly.from_roots([1, 2, -1]), OmegaSeq((0,) * 30))
    assert r.f == Poly((-1, 0, 1)) and not r.goodman
    assert algebra_min_poly(Poly.linear(1), OmegaSeq((0,) * 30)).f is None
