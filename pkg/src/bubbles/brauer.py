"""Scalar data of the affine and cyclotomic Brauer categories.

The central object is the bubble generating function ``O(u)``, a series in
``1 + u^-1 Q[[u^-1]]`` recording the scalars by which dotted bubbles act on a
brick.  Everything here is computed from polynomials and such series:

* ``oo_of_poly`` builds the canonical rational function ``O_f``;
* ``omega_of_roots``, ``oo_from_omega`` and ``omega_from_oo`` move between the
  bubble scalars ``omega_r`` and ``O``;
* ``check_admissible``, ``check_weak_admissible``, ``brew_form`` and
  ``extend_omega`` test and complete bubble sequences;
* ``hat_poly`` and ``classify_brauer`` compute the minimal polynomial of the
  dot on a cyclotomic quotient, and ``oracle_classify`` recomputes it by brute
  force over divisors.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

from .exactmath import (
    ONE,
    U,
    InsufficientOrder,
    Poly,
    RatFunc,
    ScalarLike,
    SeriesInf,
    poly_gcd,
    series_expand,
)

HALF = Fraction(1, 2)


class HatNotPolynomial(ValueError):
    """The hat closure of a polynomial has a nonvanishing negative-power tail."""


class TheoryViolation(AssertionError):
    """Two computations that must agree by theorem did not."""


# ---------------------------------------------------------------------------
# data types


@dataclass(frozen=True)
class OmegaSeq:
    """Bubble scalars ``omega_0, ..., omega_N`` (``omega_r`` is the r-dotted bubble)."""

    omega: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "omega", tuple(Fraction(w) for w in self.omega))
        if not self.omega:
            raise ValueError("an OmegaSeq needs at least omega_0")

    @property
    def order(self) -> int:
        return len(self.omega) - 1

    def __getitem__(self, r: int) -> Fraction:
        if r > self.order:
            raise InsufficientOrder(f"omega_{r} is beyond truncation order {self.order}")
        return self.omega[r]

    def __len__(self) -> int:
        return len(self.omega)

    def series(self) -> SeriesInf:
        """``Omega(u) = sum_r omega_r u^-r``."""
        return SeriesInf(0, self.omega, self.order)


@dataclass(frozen=True)
class BrauerOO:
    """A bubble generating function, exact or truncated.

    ``exact`` is set when ``O`` is known as a rational function; ``series`` is
    always present and equals its expansion when ``exact`` is set.
    """

    series: SeriesInf
    exact: RatFunc | None = None

    def __post_init__(self):
        s = self.series
        if any(s.coeff(r) for r in range(1, s.top_exp + 1)) or s.coeff(0) != 1:
            raise ValueError("a bubble generating function must lie in 1 + u^-1 Q[[u^-1]]")

    @classmethod
    def from_ratfunc(cls, r: RatFunc, order: int = 64) -> BrauerOO:
        return cls(series_expand(r, order), r)

    @classmethod
    def from_series(cls, s: SeriesInf) -> BrauerOO:
        return cls(s, None)

    @property
    def order(self) -> int | None:
        """Truncation order, or ``None`` when exact."""
        return None if self.exact is not None else self.series.order

    def expand(self, order: int) -> SeriesInf:
        if self.exact is not None:
            return series_expand(self.exact, order)
        if order > self.series.order:
            raise InsufficientOrder(
                f"bubble series known to order {self.series.order}, need {order}"
            )
        return self.series.truncate(order)

    def matches(self, r: RatFunc, order: int) -> bool:
        """``O == r``: exactly when ``O`` is exact, else to the given order."""
        if self.exact is not None:
            return self.exact == r
        order = min(order, self.series.order)
        return self.expand(order).agrees(series_expand(r, order))


class BrauerBranch(str, enum.Enum):
    Q_ODD = "Q-odd-divide-by-u"
    Q_EVEN = "Q-even-or-default"


@dataclass(frozen=True)
class BrauerClassification:
    nonzero: bool
    m: Poly
    p_hat: Poly | None
    q_poly: Poly | None
    gcd_p_phat: Poly | None
    branch: BrauerBranch | None
    oo_canonical: RatFunc
    certified_order: int | None  # None means exact
    diagnostics: tuple[str, ...] = field(default=())


# ---------------------------------------------------------------------------
# generating functions


@lru_cache(maxsize=4096)
def oo_of_poly(f: Poly) -> RatFunc:
    """``O_f(u) = ((-1)^deg f u - 1/2) f(-u) / ((u - 1/2) f(u))``."""
    if f.is_zero():
        raise ValueError("O_f is undefined for f = 0")
    sign = -1 if f.degree % 2 else 1
    num = Poly((-HALF, sign)) * f.neg_var()
    den = Poly((-HALF, 1)) * f
    return RatFunc(num, den)


def omega_of_roots(roots: Iterable[ScalarLike], order: int) -> OmegaSeq:
    """Bubble scalars of the root multiset ``a``:

    ``sum_n omega_n u^-n = -u + 1/2 + (u - (-1)^|a|/2) prod (u+a)/(u-a)``.
    """
    roots = [Fraction(a) for a in roots]
    sign = -1 if len(roots) % 2 else 1
    plus = Poly.from_roots(-a for a in roots)
    minus = Poly.from_roots(roots)
    rf = RatFunc(Poly((-Fraction(sign, 2), 1)) * plus, minus) + RatFunc(Poly((HALF, -1)))
    s = series_expand(rf, order)
    assert s.coeff(1) == 0 and s.top_exp <= 1, "u^1 term of Omega(u) must cancel"
    return OmegaSeq(tuple(s.coeff(-n) for n in range(order + 1)))


def oo_from_omega(w: OmegaSeq) -> BrauerOO:
    """``O_Omega(u) = 2/(2u - 1) Omega(u) + 1``; known to order ``N + 1``."""
    n = w.order
    # 2/(2u-1) = sum_k 2^-k u^(-k-1), needed only to depth n + 1
    kernel = SeriesInf(-1, tuple(Fraction(1, 2**k) for k in range(n + 1)), n + 1)
    prod_ = kernel * w.series()
    return BrauerOO(prod_ + 1)


def omega_from_oo(o: BrauerOO, order: int | None = None) -> OmegaSeq:
    """Inverse of :func:`oo_from_omega`: ``Omega = (u - 1/2)(O - 1)``."""
    if order is None:
        if o.exact is not None:
            raise ValueError("an order is required when O is exact")
        order = o.series.order - 1
    s = o.expand(order + 1) - 1
    om = s.mul_poly(Poly((-HALF, 1)))
    return OmegaSeq(tuple(om.coeff(-r) for r in range(order + 1)))


# ---------------------------------------------------------------------------
# admissibility


@dataclass(frozen=True)
class AdmissibilityVerdict:
    ok: bool
    first_failure: int | None  # r with omega_{2r+1} wrong
    grassmannian_ok: bool
    grassmannian_failure: int | None  # exponent of first nonzero coefficient of O(u)O(-u) - 1
    order: int


def odd_bubble(w: Sequence[Fraction], r: int) -> Fraction:
    """Value forced on ``omega_{2r+1}`` by the lower bubbles."""
    acc = sum(((-1) ** n) * w[n] * w[2 * r - n] for n in range(2 * r + 1))
    return (acc - w[2 * r]) / 2


def check_admissible(w: OmegaSeq) -> AdmissibilityVerdict:
    first = None
    for r in range((w.order - 1) // 2 + 1):
        if 2 * r + 1 > w.order:
            break
        if w[2 * r + 1] != odd_bubble(w.omega, r):
            first = r
            break

    o = oo_from_omega(w).series
    prod_ = o * o.neg_var() - 1
    g_fail = None
    for k in range(1, prod_.order + 1):
        if prod_.coeff(-k):
            g_fail = -k
            break

    ok, g_ok = first is None, g_fail is None
    if ok != g_ok:
        raise TheoryViolation(
            f"odd-bubble recursion ({first}) and O(u)O(-u) = 1 ({g_fail}) disagree"
        )
    if first is not None and g_fail != -(2 * first + 2):
        raise TheoryViolation(
            f"first odd-bubble failure r={first} should surface at u^{-(2 * first + 2)}, got u^{g_fail}"
        )
    return AdmissibilityVerdict(ok, first, g_ok, g_fail, w.order)


@dataclass(frozen=True)
class WeakVerdict:
    ok: bool
    first_failure: int | None  # n with sum_j m_j omega_{n+j} != 0
    checked_up_to: int  # largest n examined


def _require_positive_monic(m: Poly) -> None:
    if m.degree < 1:
        raise ValueError("m must have positive degree")
    if not m.is_monic():
        raise ValueError(f"m must be monic, got {m}")


def check_weak_admissible(w: OmegaSeq, m: Poly) -> WeakVerdict:
    """Bubble of ``x^n m(x)`` vanishes for every ``n`` with ``n + deg m <= N``."""
    _require_positive_monic(m)
    d = m.degree
    last = w.order - d
    for n in range(last + 1):
        if sum(m[j] * w[n + j] for j in range(d + 1)):
            return WeakVerdict(False, n, last)
    return WeakVerdict(True, None, last)


def brew_form(w: OmegaSeq, m: Poly) -> tuple[Poly, bool]:
    """Polynomial part of ``m(u) sum_r omega_r u^(-r-1)`` and whether the tail vanishes."""
    _require_positive_monic(m)
    tri = SeriesInf(-1, w.omega, w.order + 1)
    s = tri.mul_poly(m)
    return s.polypart(), not any(s.tail())


def extend_omega(m: Poly, evens: Sequence[ScalarLike], order: int) -> tuple[OmegaSeq, bool]:
    """Fill a full bubble sequence from ``omega_r`` for even ``r < deg m``.

    Odd indices below ``deg m`` come from the odd-bubble recursion, indices
    ``>= deg m`` from the recurrence with ``m``'s coefficients.  The second
    return value says whether the recursion then holds at every odd index.
    """
    _require_positive_monic(m)
    d = m.degree
    need = (d + 1) // 2
    if len(evens) != need:
        raise ValueError(f"need {need} even-index values for deg m = {d}, got {len(evens)}")
    w: list[Fraction] = []
    for r in range(order + 1):
        if r >= d:
            w.append(-sum(m[j] * w[r - d + j] for j in range(d)))
        elif r % 2 == 0:
            w.append(Fraction(evens[r // 2]))
        else:
            w.append(odd_bubble(w, (r - 1) // 2))
    consistent = all(w[2 * r + 1] == odd_bubble(w, r) for r in range((order - 1) // 2 + 1)
                     if 2 * r + 1 <= order)
    return OmegaSeq(tuple(w)), consistent


# ---------------------------------------------------------------------------
# hat closure and classification


def hat_poly(g: Poly, o: BrauerOO, order: int) -> Poly:
    """``g_hat(u) = (-u - 1/2) g(-u) O(-u)``, which must be a polynomial.

    With exact ``O`` the computation is exact; otherwise the tail is checked
    down to ``u^-order``, which needs ``O`` to order ``deg g + 1 + order``.
    """
    front = Poly((-HALF, -1)) * g.neg_var()
    if o.exact is not None:
        r = o.exact.neg_var() * front
        if not r.is_poly():
            raise HatNotPolynomial(
                f"hat not polynomial (inconsistent O or zero category): {r}"
            )
        return r.num
    s = o.expand(g.degree + 1 + order).neg_var().mul_poly(front)
    tail = s.tail()
    if any(tail):
        k = next(i for i, c in enumerate(tail, 1) if c)
        raise HatNotPolynomial(
            f"hat not polynomial (inconsistent O or zero category): u^-{k} coefficient {tail[k - 1]}"
        )
    return s.polypart()


def lilac_holds(o: BrauerOO) -> bool:
    """``O(u) O(-u) = 1`` (exactly, or to the carried order)."""
    if o.exact is not None:
        return o.exact * o.exact.neg_var() == RatFunc(ONE)
    s = o.series
    return (s * s.neg_var()).agrees(SeriesInf.one(s.order))


def _check_p(p: Poly) -> None:
    if p.degree < 1:
        raise ValueError("p must have positive degree")
    if not p.is_monic():
        raise ValueError(f"p must be monic, got {p}")


def classify_brauer(p: Poly, o: BrauerOO, order: int = 64) -> BrauerClassification:
    """Minimal polynomial ``m`` of the dot on ``L(p, O)`` and the zero/nonzero verdict."""
    _check_p(p)
    cert = None
    if o.exact is None:
        cert = min(order, o.series.order - p.degree - 1)
        if cert < 1:
            raise InsufficientOrder(
                f"series of order {o.series.order} too short for deg p = {p.degree}"
            )

    def zero(reason: str, **kw) -> BrauerClassification:
        return BrauerClassification(
            nonzero=False,
            m=kw.get("m", ONE),
            p_hat=kw.get("p_hat"),
            q_poly=kw.get("q_poly"),
            gcd_p_phat=kw.get("gcd_p_phat"),
            branch=kw.get("branch"),
            oo_canonical=oo_of_poly(kw.get("m", ONE)),
            certified_order=cert,
            diagnostics=(reason,),
        )

    if not lilac_holds(o):
        return zero("lilac: O(u)O(-u) != 1, zero category")
    try:
        p_hat = hat_poly(p, o, cert if cert is not None else order)
    except HatNotPolynomial as exc:
        return zero(f"hat: {exc}")

    q_poly = poly_gcd(Poly((-HALF, 1)) * p, p_hat)
    g = poly_gcd(p, p_hat)
    if q_poly.degree % 2:
        branch = BrauerBranch.Q_ODD
        if not U.divides(g):
            return zero("branch Q-odd but u does not divide gcd(p, p_hat)",
                        p_hat=p_hat, q_poly=q_poly, gcd_p_phat=g, branch=branch)
        m = g.exact_div(U)
    else:
        branch = BrauerBranch.Q_EVEN
        m = g

    canon = oo_of_poly(m)
    diags = []
    nonzero = m.degree >= 1
    if not nonzero:
        diags.append("deg m = 0, zero category")
    elif not o.matches(canon, order if cert is None else cert):
        nonzero = False
        diags.append("O != O_m, zero category")
    return BrauerClassification(
        nonzero=nonzero,
        m=m,
        p_hat=p_hat,
        q_poly=q_poly,
        gcd_p_phat=g,
        branch=branch,
        oo_canonical=canon,
        certified_order=cert,
        diagnostics=tuple(diags),
    )


def sub_multisets(roots: Sequence[ScalarLike]) -> list[tuple[Fraction, ...]]:
    """Every sub-multiset of ``roots``, once each, as sorted tuples."""
    counts: dict[Fraction, int] = {}
    for a in roots:
        a = Fraction(a)
        counts[a] = counts.get(a, 0) + 1
    keys = sorted(counts)
    out = []
    for mult in product(*(range(counts[k] + 1) for k in keys)):
        out.append(tuple(k for k, c in zip(keys, mult) for _ in range(c)))
    return out


def oracle_classify(roots: Sequence[ScalarLike], o: BrauerOO, order: int = 64) -> Poly | None:
    """Brute force over divisors of ``p = prod (u - a)``: the largest ``f`` with ``O = O_f``.

    Returns ``None`` for the zero category.
    """
    matches = []
    for sub in sub_multisets(roots):
        if not sub:
            continue
        f = Poly.from_roots(sub)
        if o.matches(oo_of_poly(f), order):
            matches.append(f)
    if not matches:
        return None
    top = max(matches, key=lambda f: f.degree)
    for f in matches:
        if not f.divides(top):
            raise TheoryViolation(f"theory violation: {f} and {top} are incomparable matches")
    return top


@dataclass(frozen=True)
class AlgebraMinPoly:
    f: Poly | None  # None: e_1 = 0 in the two-strand algebra
    goodman: bool  # f == p
    classification: BrauerClassification


def algebra_min_poly(p: Poly, w: OmegaSeq, order: int | None = None) -> AlgebraMinPoly:
    """Minimal polynomial of ``x_1`` on ``e_1`` in the two-strand algebra for ``(p, Omega)``.

    It coincides with the cyclotomic classification for ``O_Omega``.
    """
    o = oo_from_omega(w)
    avail = o.series.order - p.degree - 1
    c = classify_brauer(p, o, avail if order is None else min(order, avail))
    f = c.m if c.nonzero else None
    return AlgebraMinPoly(f, f is not None and f == p, c)
