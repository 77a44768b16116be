"""Scalar data of the affine and cyclotomic Kauffman categories.

Parameters are ``q, t`` in Q with ``z = q - 1/q``.  The two bubble generating
functions are ``roo`` (constant term ``t``) and ``loo`` (constant term
``1/t``); for a monic ``f`` with ``f(0) != 0`` the canonical pair is
``roo_of_poly(f)`` / ``loo_of_poly(f)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .brauer import HatNotPolynomial, TheoryViolation, sub_multisets
from .exactmath import (
    ONE,
    InsufficientOrder,
    Poly,
    RatFunc,
    ScalarLike,
    SeriesInf,
    at_zero_of_inv,
    poly_gcd,
    poly_reverse,
    series_expand,
)


@dataclass(frozen=True)
class KauffmanParams:
    q: Fraction
    t: Fraction

    def __post_init__(self):
        q, t = Fraction(self.q), Fraction(self.t)
        if q in (0, 1, -1):
            raise ValueError(f"q must avoid 0 and +-1, got {q}")
        if t == 0:
            raise ValueError("t must be nonzero")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "t", t)

    @property
    def z(self) -> Fraction:
        return self.q - 1 / self.q

    @property
    def quadratic(self) -> Poly:
        """``u^2 - z u - 1 = (u - q)(u + 1/q)``."""
        return Poly((-1, -self.z, 1))

    @property
    def mirror_quadratic(self) -> Poly:
        """``u^2 + z u - 1``."""
        return Poly((-1, self.z, 1))

    def qpow(self, k: int) -> Fraction:
        return self.q**k

    def __str__(self) -> str:
        return f"(q={self.q}, t={self.t}, z={self.z})"


@dataclass(frozen=True)
class EpsilonPair:
    eps1: int
    eps2: int

    def __iter__(self):
        return iter((self.eps1, self.eps2))


EPSILON_TABLE = {
    # (parity of deg f, f(0)/t expressed through q) -> pair
    (0, "qt"): EpsilonPair(1, 1),
    (0, "-t/q"): EpsilonPair(-1, -1),
    (1, "t"): EpsilonPair(1, -1),
    (1, "-t"): EpsilonPair(-1, 1),
}


def _check_f(f: Poly) -> None:
    if not f.is_monic():
        raise ValueError(f"expected a monic polynomial, got {f}")
    if f[0] == 0:
        raise ValueError(f"expected f(0) != 0, got {f}")


def sneeze_condition(f: Poly, params: KauffmanParams) -> bool:
    """Even degree: ``z = f(0)/t - t/f(0)``; odd degree: ``f(0) = +-t``."""
    _check_f(f)
    f0, t = f[0], params.t
    if f.degree % 2 == 0:
        return params.z == f0 / t - t / f0
    return f0 in (t, -t)


def sneeze_check(f: Poly, params: KauffmanParams) -> EpsilonPair | None:
    """The pair with ``f(0) = eps1 q^((eps1+eps2)/2) t`` and matching parity, or ``None``."""
    _check_f(f)
    for e1 in (1, -1):
        for e2 in (1, -1):
            k = (e1 + e2) // 2
            if f.degree % 2 != (k + 1) % 2:
                continue
            if f[0] == e1 * params.qpow(k) * params.t:
                return EpsilonPair(e1, e2)
    return None


def _roo_case_form(f: Poly, params: KauffmanParams) -> RatFunc:
    t, z, f0 = params.t, params.z, f[0]
    if f.degree % 2 == 0:
        front = Poly((-z * f0 - t, 0, t))
    else:
        front = Poly((-t, -z * f0, t))
    return RatFunc(front * poly_reverse(f), params.quadratic * f)


def _loo_case_form(f: Poly, params: KauffmanParams) -> RatFunc:
    ti, z, f0i = 1 / params.t, params.z, 1 / f[0]
    if f.degree % 2 == 0:
        front = Poly((z * f0i - ti, 0, ti))
    else:
        front = Poly((-ti, z * f0i, ti))
    return RatFunc(front * f, params.mirror_quadratic * poly_reverse(f))


def _roo_factored(f: Poly, eps: EpsilonPair, params: KauffmanParams) -> RatFunc:
    q = params.q
    top = Poly.linear(q**eps.eps1) * Poly.linear(-(q**eps.eps2)) * params.t
    bottom = Poly.linear(q) * Poly.linear(-1 / q)
    return RatFunc(top * poly_reverse(f), bottom * f)


def _loo_factored(f: Poly, eps: EpsilonPair, params: KauffmanParams) -> RatFunc:
    q = params.q
    top = Poly.linear(q ** -eps.eps1) * Poly.linear(-(q ** -eps.eps2)) * (1 / params.t)
    bottom = Poly.linear(-q) * Poly.linear(1 / q)
    return RatFunc(top * f, bottom * poly_reverse(f))


def roo_of_poly(f: Poly, params: KauffmanParams) -> RatFunc:
    """Canonical right generating function of ``f`` (case-split form).

    When ``f`` passes :func:`sneeze_check` the factored form through the
    epsilon pair is also computed and must agree exactly.
    """
    r = _roo_case_form(f, params)
    eps = sneeze_check(f, params)
    if eps is not None and _roo_factored(f, eps, params) != r:
        raise TheoryViolation(f"case-split and factored right series differ for {f}")
    return r


def loo_of_poly(f: Poly, params: KauffmanParams) -> RatFunc:
    r = _loo_case_form(f, params)
    eps = sneeze_check(f, params)
    if eps is not None and _loo_factored(f, eps, params) != r:
        raise TheoryViolation(f"case-split and factored left series differ for {f}")
    return r


@dataclass(frozen=True)
class DualityVerdict:
    inversion: bool  # roo_f(1/u) == loo_f(u)
    sneeze: bool
    product: bool  # roo_f * loo_f == 1
    eps: EpsilonPair | None

    @property
    def consistent(self) -> bool:
        return self.inversion == self.sneeze == self.product


def check_duality(f: Poly, params: KauffmanParams) -> DualityVerdict:
    roo, loo = roo_of_poly(f, params), loo_of_poly(f, params)
    return DualityVerdict(
        inversion=roo.inv_var() == loo,
        sneeze=sneeze_condition(f, params),
        product=roo * loo == RatFunc(ONE),
        eps=sneeze_check(f, params),
    )


# ---------------------------------------------------------------------------
# bubble data


@dataclass(frozen=True)
class KOmegaSeq:
    """Bubble scalars ``omega_r`` for ``-N <= r <= N``.

    ``nonneg[k] = omega_k`` and ``nonpos[k] = omega_{-k}``; both start at
    ``omega_0``.
    """

    nonneg: tuple[Fraction, ...]
    nonpos: tuple[Fraction, ...]

    def __post_init__(self):
        a = tuple(Fraction(x) for x in self.nonneg)
        b = tuple(Fraction(x) for x in self.nonpos)
        if not a or not b or a[0] != b[0]:
            raise ValueError("nonneg and nonpos must both start with the same omega_0")
        object.__setattr__(self, "nonneg", a)
        object.__setattr__(self, "nonpos", b)

    @classmethod
    def from_mapping(cls, omega: Mapping[int, ScalarLike]) -> KOmegaSeq:
        hi = max(omega)
        lo = min(omega)
        if 0 not in omega:
            raise ValueError("omega_0 is required")
        return cls(tuple(omega[r] for r in range(0, hi + 1)),
                   tuple(omega[-r] for r in range(0, -lo + 1)))

    def __getitem__(self, r: int) -> Fraction:
        seq, k = (self.nonneg, r) if r >= 0 else (self.nonpos, -r)
        if k >= len(seq):
            raise InsufficientOrder(f"omega_{r} is beyond the carried range")
        return seq[k]

    def as_mapping(self) -> dict[int, Fraction]:
        out = {k: v for k, v in enumerate(self.nonneg)}
        out.update({-k: v for k, v in enumerate(self.nonpos)})
        return out


def omega_zero(params: KauffmanParams) -> Fraction:
    """Value of the undotted bubble: ``(t - 1/t)/z + 1``."""
    return (params.t - 1 / params.t) / params.z + 1


@dataclass(frozen=True)
class KauffmanOO:
    """Right and left generating functions, each exact or truncated."""

    roo: SeriesInf
    loo: SeriesInf
    roo_exact: RatFunc | None = None
    loo_exact: RatFunc | None = None

    @classmethod
    def from_roo_ratfunc(cls, r: RatFunc, order: int = 64) -> KauffmanOO:
        loo = 1 / r
        return cls(series_expand(r, order), series_expand(loo, order), r, loo)

    @classmethod
    def from_roo_series(cls, s: SeriesInf) -> KauffmanOO:
        return cls(s, s.inverse(), None, None)

    @property
    def exact(self) -> bool:
        return self.roo_exact is not None

    def expand_roo(self, order: int) -> SeriesInf:
        if self.roo_exact is not None:
            return series_expand(self.roo_exact, order)
        if order > self.roo.order:
            raise InsufficientOrder(f"right series known to order {self.roo.order}, need {order}")
        return self.roo.truncate(order)

    def matches_roo(self, r: RatFunc, order: int) -> bool:
        if self.roo_exact is not None:
            return self.roo_exact == r
        order = min(order, self.roo.order)
        return self.expand_roo(order).agrees(series_expand(r, order))

    def product_is_one(self) -> bool:
        if self.roo_exact is not None and self.loo_exact is not None:
            return self.roo_exact * self.loo_exact == RatFunc(ONE)
        s = self.roo * self.loo
        return s.agrees(SeriesInf.one(s.order))


def roo_from_komega(w: KOmegaSeq, params: KauffmanParams) -> KauffmanOO:
    """Generating functions from bubble scalars.

    ``roo = ((1/t - z)u^2 - 1/t)/(u^2 - zu - 1) + z(u^2 - 1)/(u^2 - zu - 1) * sum_{r>=0} omega_r u^-r``
    and dually for ``loo`` with ``omega_{-r}``.  Whether ``roo * loo = 1`` is
    reported by :meth:`KauffmanOO.product_is_one`.
    """
    if w[0] != omega_zero(params):
        raise ValueError(f"omega_0 must be (t - 1/t)/z + 1 = {omega_zero(params)}, got {w[0]}")
    t, z = params.t, params.z
    n_pos, n_neg = len(w.nonneg) - 1, len(w.nonpos) - 1
    a_r = RatFunc(Poly((-1 / t, 0, 1 / t - z)), params.quadratic)
    b_r = RatFunc(Poly((-z, 0, z)), params.quadratic)
    a_l = RatFunc(Poly((-t, 0, t + z)), params.mirror_quadratic)
    b_l = RatFunc(Poly((-z, 0, z)), params.mirror_quadratic)
    roo = series_expand(a_r, n_pos) + series_expand(b_r, n_pos) * SeriesInf(0, w.nonneg, n_pos)
    loo = series_expand(a_l, n_neg) - series_expand(b_l, n_neg) * SeriesInf(0, w.nonpos, n_neg)
    return KauffmanOO(roo, loo)


def komega_of_poly(m: Poly, params: KauffmanParams, order: int) -> KOmegaSeq:
    """Bubble scalars of a brick with minimal polynomial ``m``, from the closed forms

    ``u^2/(u^2-1) - 1/(tz) + (t/z - M u^e/(u^2-1)) m_check/m`` (nonnegative side) and
    ``u^2/(u^2-1) + t/z - (1/(tz) + u^e/(M(u^2-1))) m/m_check`` (nonpositive side),
    with ``M = m(0)`` and ``e = deg m mod 2``.
    """
    _check_f(m)
    t, z, big_m = params.t, params.z, m[0]
    e = m.degree % 2
    u2m1 = Poly((-1, 0, 1))
    ue = Poly.const(1) if e == 0 else Poly.u()
    mc = poly_reverse(m)
    base = RatFunc(Poly((0, 0, 1)), u2m1)
    pos = base - 1 / (t * z) + (t / z - RatFunc(ue * big_m, u2m1)) * RatFunc(mc, m)
    neg = base + t / z - (1 / (t * z) + RatFunc(ue * (1 / big_m), u2m1)) * RatFunc(m, mc)
    sp, sn = series_expand(pos, order), series_expand(neg, order)
    return KOmegaSeq(tuple(sp.coeff(-r) for r in range(order + 1)),
                     tuple(sn.coeff(-r) for r in range(order + 1)))


# ---------------------------------------------------------------------------
# hat closure and classification


def hat_poly_k(p: Poly, o: KauffmanOO, params: KauffmanParams, order: int) -> Poly:
    """``p_hat(u) = (1 - zu - u^2) p(1/u) u^deg p roo(1/u)``, of degree ``deg p + 2``."""
    _check_f(p)
    front = Poly((1, -params.z, -1)) * p.reversed()
    d = p.degree + 2
    if o.roo_exact is not None:
        r = o.roo_exact.inv_var() * front
        if not r.is_poly():
            raise HatNotPolynomial(f"hat not polynomial (inconsistent roo or zero category): {r}")
        out = r.num
    else:
        s = at_zero_of_inv(o.expand_roo(d + order)).mul_poly(front)
        tail = s.coeffs[d + 1:]
        if any(tail):
            k = next(i for i, c in enumerate(tail, d + 1) if c)
            raise HatNotPolynomial(
                f"hat not polynomial (inconsistent roo or zero category): u^{k} coefficient {s[k]}"
            )
        out = Poly(s.coeffs[: d + 1])
    if out[d] != -p[0] / params.t:
        raise HatNotPolynomial(
            f"hat has leading coefficient {out[d]}, expected -p(0)/t = {-p[0] / params.t}"
        )
    return out


class KauffmanBranch(str, enum.Enum):
    ODD_PLUS = "odd-R0-plus-t"
    ODD_MINUS = "odd-R0-minus-t"
    EVEN_PLUS = "even-R0-plus-t"
    EVEN_MINUS = "even-R0-minus-t"


BRANCH_DIVISOR = {
    KauffmanBranch.ODD_PLUS: ONE,
    KauffmanBranch.ODD_MINUS: Poly((-1, 0, 1)),
    KauffmanBranch.EVEN_PLUS: Poly((1, 1)),
    KauffmanBranch.EVEN_MINUS: Poly((-1, 1)),
}


@dataclass(frozen=True)
class KauffmanClassification:
    nonzero: bool
    m: Poly
    p_hat: Poly | None
    big_r: Poly | None
    r1: Poly | None
    gcd_p_phat: Poly | None
    branch: KauffmanBranch | None
    eps: EpsilonPair | None
    roo_canonical: RatFunc | None
    certified_order: int | None
    downpour_ok: bool | None = None
    sandal_ok: bool | None = None
    diagnostics: tuple[str, ...] = field(default=())


def _branch(r: Poly, params: KauffmanParams) -> KauffmanBranch | None:
    t = params.t
    odd = r.degree % 2 == 1
    if r[0] == t:
        return KauffmanBranch.ODD_PLUS if odd else KauffmanBranch.EVEN_PLUS
    if r[0] == -t:
        return KauffmanBranch.ODD_MINUS if odd else KauffmanBranch.EVEN_MINUS
    return None


def classify_kauffman(p: Poly, o: KauffmanOO, params: KauffmanParams,
                      order: int = 64) -> KauffmanClassification:
    """Minimal polynomial of the dot on ``L(p, roo)`` with the four-way gcd branch."""
    _check_f(p)
    if p.degree < 1:
        raise ValueError("p must have positive degree")
    cert = None
    if not o.exact:
        cert = min(order, o.roo.order - p.degree - 2)
        if cert < 1:
            raise InsufficientOrder(
                f"series of order {o.roo.order} too short for deg p = {p.degree}"
            )
    diags: list[str] = []

    def zero(**kw) -> KauffmanClassification:
        return KauffmanClassification(
            nonzero=False, m=kw.pop("m", ONE), certified_order=cert,
            diagnostics=tuple(diags),
            **{k: kw.get(k) for k in ("p_hat", "big_r", "r1", "gcd_p_phat", "branch", "eps",
                                      "roo_canonical", "downpour_ok", "sandal_ok")},
        )

    try:
        p_hat = hat_poly_k(p, o, params, cert if cert is not None else order)
    except HatNotPolynomial as exc:
        diags.append(f"hat: {exc}")
        return zero()

    big_r = poly_gcd(params.quadratic * p, p_hat)
    g = poly_gcd(p, p_hat)
    branch = _branch(big_r, params)
    downpour = branch is not None and o.matches_roo(
        RatFunc(poly_reverse(big_r) * params.t, big_r), order if cert is None else cert)
    sandal = all(p.vanishing_order(a) == p_hat.vanishing_order(a) == big_r.vanishing_order(a)
                 for a in (1, -1))
    state = dict(p_hat=p_hat, big_r=big_r, gcd_p_phat=g, branch=branch,
                 downpour_ok=downpour, sandal_ok=sandal)
    if branch is None:
        diags.append(f"R(0) = {big_r[0]} is not +-t")
        return zero(**state)
    if not downpour:
        diags.append("roo != t R_check / R")
    if not sandal:
        diags.append("p, p_hat, R vanish to different orders at +-1")

    a = BRANCH_DIVISOR[branch]
    q1, rem1 = divmod(big_r, a)
    q2, rem2 = divmod(g, a)
    r1 = None if rem1 else q1
    state["r1"] = r1
    if rem2:
        diags.append(f"branch {branch.value}: {a} does not divide gcd(p, p_hat)")
        return zero(**state)
    m = q2
    if m.degree < 1:
        diags.append("deg m = 0, zero category")
        return zero(m=m, **state)
    eps = sneeze_check(m, params)
    if eps is None:
        diags.append(f"m = {m} fails the constant-term conditions")
        return zero(m=m, **state)
    canon = roo_of_poly(m, params)
    state.update(eps=eps, roo_canonical=canon)
    if not o.matches_roo(canon, order if cert is None else cert):
        diags.append("roo != roo_m, zero category")
        return zero(m=m, **state)
    if r1 is None or r1.degree < 1:
        raise TheoryViolation(f"nonzero verdict for {p} but R_1 = {r1} is not of positive degree")
    return KauffmanClassification(nonzero=True, m=m, certified_order=cert,
                                  diagnostics=tuple(diags), **state)


def oracle_classify_k(roots: Sequence[ScalarLike], o: KauffmanOO, params: KauffmanParams,
                      order: int = 64) -> Poly | None:
    """Brute force over divisors: largest ``f | p`` passing the constant-term
    conditions with ``roo = roo_f``; ``None`` for the zero category."""
    if any(Fraction(a) == 0 for a in roots):
        raise ValueError("roots must be nonzero")
    survivors = []
    for sub in sub_multisets(roots):
        if not sub:
            continue
        f = Poly.from_roots(sub)
        if sneeze_check(f, params) is None:
            continue
        if o.matches_roo(roo_of_poly(f, params), order):
            survivors.append(f)
    if not survivors:
        return None
    top = max(survivors, key=lambda f: f.degree)
    for f in survivors:
        if not f.divides(top):
            raise TheoryViolation(f"theory violation: {f} and {top} are incomparable survivors")
    return top


# ---------------------------------------------------------------------------
# comparison of canonical series


def h_poly(f: Poly, g: Poly, params: KauffmanParams) -> Poly:
    """``(u - q^((e1g-e1f)/2))^(|e1g-e1f|/2) (u + q^((e2g-e2f)/2))^(|e2g-e2f|/2)``."""
    ef, eg = sneeze_check(f, params), sneeze_check(g, params)
    if ef is None or eg is None:
        raise ValueError("both polynomials must pass the constant-term conditions")
    d1, d2 = (eg.eps1 - ef.eps1) // 2, (eg.eps2 - ef.eps2) // 2
    q = params.q
    out = ONE
    if d1:
        out = out * Poly.linear(q**d1)
    if d2:
        out = out * Poly.linear(-(q**d2))
    return out


def belgium_factor(f: Poly, g: Poly, params: KauffmanParams) -> tuple[Poly | None, bool]:
    """Write ``g = f H_{f,g} gamma``; ``ok`` says ``gamma`` is an even-degree
    self-reciprocal polynomial with ``gamma(0) = 1``, which happens exactly
    when ``roo_g = roo_f``."""
    if not f.divides(g):
        raise ValueError(f"{f} does not divide {g}")
    h = h_poly(f, g, params)
    gamma, rem = divmod(g.exact_div(f), h)
    if rem:
        ok = False
        gamma = None
    else:
        ok = gamma.degree % 2 == 0 and gamma[0] == 1 and poly_reverse(gamma) == gamma
    same = roo_of_poly(g, params) == roo_of_poly(f, params)
    if ok != same:
        raise TheoryViolation(f"factorisation verdict {ok} but roo_g == roo_f is {same}")
    return gamma, ok


def bar_transform(f: Poly, params: KauffmanParams) -> tuple[Poly, KauffmanParams, bool]:
    """Image of ``f`` under the bar involution ``(z, t) -> (-z, 1/t)``.

    Returns ``(f_check, new_params, identity_ok)`` where ``new_params`` uses
    ``q -> 1/q`` and ``identity_ok`` reports whether the right series of
    ``f_check`` under the new parameters equals the left series of ``f``.
    """
    _check_f(f)
    new = KauffmanParams(1 / params.q, 1 / params.t)
    fc = poly_reverse(f)
    ok = roo_of_poly(fc, new) == loo_of_poly(f, params)
    return fc, new, ok
