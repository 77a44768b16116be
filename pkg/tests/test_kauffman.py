import itertools
from fractions import Fraction as F

import pytest
import sympy as sp
from conftest import U_SYM, from_sym
from hypothesis import given
from hypothesis import strategies as st

from bubbles.exactmath import ONE, U, InsufficientOrder, Poly, RatFunc, poly_reverse, series_expand
from bubbles.kauffman import (
    EPSILON_TABLE,
    EpsilonPair,
    HatNotPolynomial,
    KauffmanBranch,
    KauffmanOO,
    KauffmanParams,
    KOmegaSeq,
    bar_transform,
    belgium_factor,
    check_duality,
    classify_kauffman,
    h_poly,
    hat_poly_k,
    komega_of_poly,
    loo_of_poly,
    omega_zero,
    oracle_classify_k,
    roo_from_komega,
    roo_of_poly,
    sneeze_check,
    sneeze_condition,
)

P23 = KauffmanParams(2, 3)
PARAMS = [KauffmanParams(2, 3), KauffmanParams(3, F(1, 2)), KauffmanParams(F(1, 2), -2)]
params_st = st.sampled_from(PARAMS)
NONZERO_POOL = [F(x) for x in (1, -1, 2, -2, 3, F(1, 2), F(-1, 3), 5)]


def sneeze_polys(params, max_deg=3):
    pool = sorted({F(x) for x in (1, -1, 2, -3, F(1, 2), params.q, -params.q, params.t,
                                  -params.t, 1 / params.q, -1 / params.q)})
    out = []
    for d in range(1, max_deg + 1):
        for roots in itertools.combinations_with_replacement(pool, d):
            f = Poly.from_roots(roots)
            if sneeze_check(f, params) is not None:
                out.append((f, list(roots)))
    return out


# --- parameters -----------------------------------------------------------

def test_params_validation():
    for q in (0, 1, -1):
        with pytest.raises(ValueError):
            KauffmanParams(q, 3)
    with pytest.raises(ValueError):
        KauffmanParams(2, 0)


@pytest.mark.parametrize("params", PARAMS)
def test_quadratic_factors_through_q(params):
    assert params.z != 0
    assert params.quadratic == Poly.linear(params.q) * Poly.linear(-1 / params.q)
    assert params.mirror_quadratic == params.quadratic.neg_var()


# --- constant-term conditions ---------------------------------------------

def test_sneeze_examples():
    assert sneeze_check(Poly.from_roots([3]), P23) == EpsilonPair(-1, 1)
    assert sneeze_check(Poly.from_roots([1, 6]), P23) == EpsilonPair(1, 1)
    assert sneeze_check(Poly((1, 0, 1)), P23) is None


def test_sneeze_rejects_zero_constant():
    with pytest.raises(ValueError):
        sneeze_check(U, P23)


@pytest.mark.parametrize("params", PARAMS)
def test_epsilon_table(params):
    q, t = params.q, params.t
    rows = {
        (0, "qt"): Poly((q * t, 0, 1)),
        (0, "-t/q"): Poly((-t / q, 0, 1)),
        (1, "t"): Poly((t, 1)),
        (1, "-t"): Poly((-t, 1)),
    }
    for key, f in rows.items():
        assert sneeze_check(f, params) == EPSILON_TABLE[key]


@given(params_st, st.lists(st.sampled_from(NONZERO_POOL), min_size=1, max_size=4))
def test_sneeze_check_agrees_with_condition(params, roots):
    f = Poly.from_roots(roots)
    eps = sneeze_check(f, params)
    assert (eps is not None) == sneeze_condition(f, params)
    if eps is not None:
        k = (eps.eps1 + eps.eps2) // 2
        assert f[0] == eps.eps1 * params.q**k * params.t
        assert f.degree % 2 == (k + 1) % 2


# --- canonical series -----------------------------------------------------

def test_roo_of_linear_t():
    t, z = P23.t, P23.z
    want = RatFunc(Poly((-t, z * t, t)), P23.quadratic) * RatFunc(Poly.linear(1 / t), Poly.linear(t))
    assert roo_of_poly(Poly.linear(t), P23) == want


def test_case_form_equals_factored_form():
    from bubbles.kauffman import _roo_case_form, _roo_factored
    f = Poly.from_roots([1, 6])
    assert _roo_case_form(f, P23) == _roo_factored(f, EpsilonPair(1, 1), P23)


@pytest.mark.parametrize("params", PARAMS)
def test_case_and_factored_forms_agree_everywhere(params):
    from bubbles.kauffman import _loo_case_form, _loo_factored, _roo_case_form, _roo_factored
    for f, _ in sneeze_polys(params):
        eps = sneeze_check(f, params)
        assert _roo_case_form(f, params) == _roo_factored(f, eps, params)
        assert _loo_case_form(f, params) == _loo_factored(f, eps, params)


@given(params_st, st.lists(st.sampled_from(NONZERO_POOL), min_size=1, max_size=4))
def test_leading_terms(params, roots):
    f = Poly.from_roots(roots)
    assert series_expand(roo_of_poly(f, params), 2).coeff(0) == params.t
    assert series_expand(loo_of_poly(f, params), 2).coeff(0) == 1 / params.t


def test_roo_against_sympy():
    # case-split form rebuilt symbolically for an even and an odd f
    u = U_SYM
    q, t = sp.Integer(2), sp.Integer(3)
    z = q - 1 / q
    for roots in ([1, 6], [3], [2, 5, 7]):
        f = sp.prod([u - a for a in roots])
        f0 = f.subs(u, 0)
        fc = sp.expand(u ** len(roots) * f.subs(u, 1 / u) / f0)
        if len(roots) % 2 == 0:
            front = t * u**2 - z * f0 - t
        else:
            front = t * u**2 - z * f0 * u - t
        expr = front * fc / ((u**2 - z * u - 1) * f)
        num, den = sp.fraction(sp.cancel(sp.together(expr)))
        lc = sp.Poly(den, u).LC()
        want = RatFunc(from_sym(num / lc), from_sym(den / lc))
        assert roo_of_poly(Poly.from_roots(roots), P23) == want


def test_duality_examples():
    for roots in ([3], [1, 6]):
        v = check_duality(Poly.from_roots(roots), P23)
        assert v.inversion and v.product and v.sneeze and v.consistent
    v = check_duality(Poly((1, 0, 1)), P23)
    assert not v.inversion and not v.product and not v.sneeze


@given(params_st, st.lists(st.sampled_from(NONZERO_POOL), min_size=1, max_size=3))
def test_tri_equivalence(params, roots):
    assert check_duality(Poly.from_roots(roots), params).consistent


# --- bubble scalars -------------------------------------------------------

@pytest.mark.parametrize("params", PARAMS)
def test_komega_reproduces_canonical_pair(params):
    m = Poly.linear(params.t)
    w = komega_of_poly(m, params, 20)
    o = roo_from_komega(w, params)
    assert o.roo.agrees(series_expand(roo_of_poly(m, params), 20))
    assert o.loo.agrees(series_expand(loo_of_poly(m, params), 20))
    assert o.product_is_one()


@given(params_st, st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=3), max_size=8))
def test_constant_term_is_t(params, tail):
    w0 = omega_zero(params)
    o = roo_from_komega(KOmegaSeq((w0, *tail), (w0,)), params)
    assert o.roo.coeff(0) == params.t


def test_wrong_omega_zero_is_rejected():
    with pytest.raises(ValueError, match="omega_0"):
        roo_from_komega(KOmegaSeq((omega_zero(P23) + 1, 0), (omega_zero(P23) + 1,)), P23)


def test_komega_mapping_roundtrip():
    w = KOmegaSeq((5, 1, 2), (5, -1))
    assert KOmegaSeq.from_mapping(w.as_mapping()) == w
    assert w[-1] == -1 and w[2] == 2
    with pytest.raises(InsufficientOrder):
        w[-2]
    with pytest.raises(ValueError):
        KOmegaSeq((1,), (2,))


def test_random_omegas_usually_break_the_product():
    w0 = omega_zero(P23)
    o = roo_from_komega(KOmegaSeq((w0, 1, 1, 1, 1, 1, 1, 1, 1), (w0, 0, 0, 0, 0, 0, 0, 0, 0)), P23)
    assert not o.product_is_one()


# --- hat closure ----------------------------------------------------------

def test_hat_example():
    p = Poly.from_roots([3])
    o = KauffmanOO.from_roo_ratfunc(roo_of_poly(p, P23))
    h = hat_poly_k(p, o, P23, 32)
    assert h.degree == 3 and h[0] == 3 and h.lc == -p[0] / P23.t


def test_hat_mismatch_raises():
    o = KauffmanOO.from_roo_series(series_expand(roo_of_poly(Poly.linear(3), P23), 40))
    with pytest.raises(HatNotPolynomial, match="hat not polynomial"):
        hat_poly_k(Poly((1, 0, 1)), o, P23, 32)


@pytest.mark.parametrize("params", PARAMS)
def test_hat_shape_series_and_exact_agree(params):
    for m, _ in sneeze_polys(params, 2):
        exact = hat_poly_k(m, KauffmanOO.from_roo_ratfunc(roo_of_poly(m, params)), params, 16)
        o = KauffmanOO.from_roo_series(series_expand(roo_of_poly(m, params), 16 + m.degree + 2))
        assert hat_poly_k(m, o, params, 16) == exact
        assert exact.degree == m.degree + 2
        assert exact[0] == params.t and exact.lc == -m[0] / params.t


# --- classification -------------------------------------------------------

def _oo(f, params, order=64):
    return KauffmanOO.from_roo_series(series_expand(roo_of_poly(f, params), order))


def test_classify_examples():
    m = Poly.from_roots([3])
    c = classify_kauffman(m, _oo(m, P23), P23)
    assert c.nonzero and c.m == m and c.branch is KauffmanBranch.ODD_PLUS
    c = classify_kauffman(Poly.from_roots([3, 5]), _oo(m, P23), P23)
    assert c.nonzero and c.m == m
    c = classify_kauffman(Poly((1, 0, 1)), _oo(m, P23), P23)
    assert not c.nonzero and c.diagnostics


def test_classify_rejects_zero_constant():
    with pytest.raises(ValueError):
        classify_kauffman(U, _oo(Poly.linear(3), P23), P23)


def test_oracle_examples():
    o = _oo(Poly.linear(3), P23)
    assert oracle_classify_k([3], o, P23) == Poly.linear(3)
    assert oracle_classify_k([3, 5], o, P23) == Poly.linear(3)
    f = Poly.from_roots([1, 6])
    assert oracle_classify_k([1, 6], _oo(f, P23), P23) == f
    with pytest.raises(ValueError):
        oracle_classify_k([0, 3], o, P23)


@pytest.mark.parametrize("params", PARAMS)
def test_classify_recovers_every_sneeze_polynomial(params):
    for m, _ in sneeze_polys(params, 3):
        c = classify_kauffman(m, KauffmanOO.from_roo_ratfunc(roo_of_poly(m, params)), params)
        assert c.nonzero and c.m == m, (m, c.diagnostics)


@pytest.mark.parametrize("params", PARAMS)
@pytest.mark.parametrize("extra, branch", [
    ([], KauffmanBranch.ODD_PLUS),
    ([-1], KauffmanBranch.EVEN_PLUS),
    ([1], KauffmanBranch.EVEN_MINUS),
    ([1, -1], KauffmanBranch.ODD_MINUS),
])
def test_branches(params, extra, branch):
    m = Poly.linear(params.t)
    roots = [params.t, *map(F, extra), F(7)]
    o = _oo(m, params)
    c = classify_kauffman(Poly.from_roots(roots), o, params)
    assert c.branch is branch
    assert c.nonzero and c.m == m
    assert oracle_classify_k(roots, o, params, c.certified_order) == m


@pytest.mark.parametrize("params", PARAMS)
def test_nonzero_classifications_satisfy_downpour_and_sandal(params):
    for m, roots in sneeze_polys(params, 2)[:15]:
        p = Poly.from_roots([*roots, 5])
        c = classify_kauffman(p, _oo(m, params, 48), params, 48)
        assert c.nonzero
        assert c.downpour_ok and c.big_r[0] in (params.t, -params.t)
        assert c.sandal_ok
        assert c.r1 is not None and c.r1.degree >= 1


@pytest.mark.parametrize("params", PARAMS)
def test_classify_vs_oracle_sweep(params):
    pool = sorted({F(x) for x in (1, -1, params.t, -params.t, params.q * params.t)})
    targets = [m for m, _ in sneeze_polys(params, 2)][:6]
    for roots in itertools.chain.from_iterable(
            itertools.combinations_with_replacement(pool, d) for d in range(1, 4)):
        p = Poly.from_roots(roots)
        for m in targets:
            o = KauffmanOO.from_roo_ratfunc(roo_of_poly(m, params), 40)
            c = classify_kauffman(p, o, params, 40)
            want = oracle_classify_k(list(roots), o, params, 40)
            assert (c.m if c.nonzero else None) == want, (roots, m)


def test_series_input_records_certified_order():
    m = Poly.linear(3)
    c = classify_kauffman(m, _oo(m, P23, 30), P23, 64)
    assert c.certified_order == 30 - 1 - 2
    with pytest.raises(InsufficientOrder):
        classify_kauffman(Poly.from_roots([3, 1, 2, 5]), _oo(m, P23, 5), P23)


# --- comparison of canonical series ---------------------------------------

def test_h_poly_examples():
    f = Poly.from_roots([3])
    assert h_poly(f, f, P23) == ONE
    f = Poly((P23.t, 1))                  # eps (1, -1)
    g = Poly.from_roots([1, 6])           # eps (1, 1)
    assert sneeze_check(f, P23) == EpsilonPair(1, -1)
    assert h_poly(f, g, P23) == Poly((P23.q, 1))


@pytest.mark.parametrize("params", PARAMS)
def test_suitcase_ratio(params):
    fs = [f for f, _ in sneeze_polys(params, 2)][:10]
    q = params.q
    for f, g in itertools.product(fs, repeat=2):
        ef, eg = sneeze_check(f, params), sneeze_check(g, params)
        h = h_poly(f, g, params)
        lhs = RatFunc(poly_reverse(h), h)
        rhs = RatFunc(Poly.linear(q**ef.eps1) * Poly.linear(-(q**ef.eps2)),
                      Poly.linear(q**eg.eps1) * Poly.linear(-(q**eg.eps2)))
        assert lhs == rhs


def test_belgium_examples():
    f = Poly.from_roots([3])
    gamma, ok = belgium_factor(f, f, P23)
    assert ok and gamma == ONE
    gamma, ok = belgium_factor(f, f * Poly((1, F(5, 2), 1)), P23)
    assert ok and gamma == Poly((1, F(5, 2), 1))
    g = f * Poly((-1, 0, 1))
    _, ok = belgium_factor(f, g, P23)
    assert not ok and roo_of_poly(f, P23) != roo_of_poly(g, P23)
    with pytest.raises(ValueError):
        belgium_factor(f, Poly.from_roots([2]), P23)


@pytest.mark.parametrize("params", PARAMS)
def test_belgium_both_directions(params):
    fs = [f for f, _ in sneeze_polys(params, 3)][:25]
    for f, g in itertools.product(fs, repeat=2):
        if f.divides(g):
            _, ok = belgium_factor(f, g, params)
            assert ok == (roo_of_poly(f, params) == roo_of_poly(g, params))


# --- bar involution -------------------------------------------------------

def test_bar_example():
    fc, new, ok = bar_transform(Poly.from_roots([3]), P23)
    assert fc == Poly.from_roots([F(1, 3)])
    assert new.z == F(-3, 2) and new.t == F(1, 3)
    assert ok


@given(params_st, st.lists(st.sampled_from(NONZERO_POOL), min_size=1, max_size=4))
def test_bar_is_an_involution(params, roots):
    f = Poly.from_roots(roots)
    fc, new, ok = bar_transform(f, params)
    assert ok
    f2, back, ok2 = bar_transform(fc, new)
    assert f2 == f and back == params and ok2

