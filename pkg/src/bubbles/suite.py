"""Invariant batteries run by ``bubbles suite``.

Each battery is a pure function of a :class:`SuiteConfig` and returns an
:class:`InvariantResult`.  Batteries run on a thread pool.
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import brauer as B
from . import kauffman as K
from .exactmath import ONE, Poly, RatFunc, poly_gcd, poly_reverse, series_expand

ROOT_POOL = tuple(Fraction(x) for x in (0, 1, -1, 2, -2, 3, "1/2", "-1/3", "5/2"))
K_PARAMS = ((2, 3), (3, Fraction(1, 2)), (Fraction(1, 2), -2))


@dataclass(frozen=True)
class SuiteConfig:
    order: int = 64
    samples: int = 40
    seed: int = 0
    workers: int = 4
    corrupt: bool = False


@dataclass(frozen=True)
class InvariantResult:
    name: str
    ok: bool
    checked: int
    certified_order: int | None
    detail: str = ""


@dataclass(frozen=True)
class SuiteReport:
    order: int
    passed: bool
    invariants: tuple[InvariantResult, ...]


def _rng(cfg: SuiteConfig, name: str) -> random.Random:
    return random.Random(f"{cfg.seed}:{name}")


def _random_roots(rng: random.Random, max_deg: int, pool=ROOT_POOL) -> list[Fraction]:
    return [rng.choice(pool) for _ in range(rng.randint(1, max_deg))]


def _fail(name: str, checked: int, order, detail: str) -> InvariantResult:
    return InvariantResult(name, False, checked, order, detail)


# ---------------------------------------------------------------------------
# exact arithmetic


def exact_gcd(cfg: SuiteConfig) -> InvariantResult:
    name = "exact.gcd"
    rng = _rng(cfg, name)
    for i in range(cfg.samples):
        a = Poly.from_roots(_random_roots(rng, 5))
        b = Poly.from_roots(_random_roots(rng, 5))
        g = poly_gcd(a, b)
        if a % g or b % g or poly_gcd(a // g, b // g) != ONE:
            return _fail(name, i + 1, None, f"gcd({a}, {b}) = {g}")
    return InvariantResult(name, True, cfg.samples, None)


def exact_expand(cfg: SuiteConfig) -> InvariantResult:
    name = "exact.expand_multiplicative"
    rng = _rng(cfg, name)
    for i in range(cfg.samples):
        r1 = RatFunc(Poly.from_roots(_random_roots(rng, 3)), Poly.from_roots(_random_roots(rng, 3)))
        r2 = RatFunc(Poly.from_roots(_random_roots(rng, 3)), Poly.from_roots(_random_roots(rng, 3)))
        n = cfg.order
        lhs = series_expand(r1 * r2, n)
        rhs = series_expand(r1, n + 6) * series_expand(r2, n + 6)
        if not lhs.agrees(rhs.truncate(n)):
            return _fail(name, i + 1, n, f"{r1} * {r2}")
    return InvariantResult(name, True, cfg.samples, cfg.order)


def exact_reverse(cfg: SuiteConfig) -> InvariantResult:
    name = "exact.reverse_involution"
    rng = _rng(cfg, name)
    pool = tuple(a for a in ROOT_POOL if a)
    for i in range(cfg.samples):
        f = Poly.from_roots(_random_roots(rng, 6, pool))
        if poly_reverse(poly_reverse(f)) != f:
            return _fail(name, i + 1, None, str(f))
    return InvariantResult(name, True, cfg.samples, None)


# ---------------------------------------------------------------------------
# Brauer


def brauer_grassmannian(cfg: SuiteConfig) -> InvariantResult:
    name = "brauer.grassmannian"
    rng = _rng(cfg, name)
    for i in range(cfg.samples):
        f = Poly.from_roots(_random_roots(rng, 6))
        o = B.oo_of_poly(f)
        if o * o.neg_var() != RatFunc(ONE):
            return _fail(name, i + 1, None, str(f))
    return InvariantResult(name, True, cfg.samples, None)


def brauer_odd_recursion(cfg: SuiteConfig) -> InvariantResult:
    name = "brauer.odd_recursion"
    rng = _rng(cfg, name)
    for i in range(cfg.samples):
        roots = _random_roots(rng, 4)
        w = B.omega_of_roots(roots, cfg.order)
        if cfg.corrupt:
            w = B.OmegaSeq((w[0], w[1] + 1) + w.omega[2:])
        v = B.check_admissible(w)
        if not v.ok:
            return _fail(name, i + 1, cfg.order, f"roots {[str(a) for a in roots]}: first failure r = {v.first_failure}")
    return InvariantResult(name, True, cfg.samples, cfg.order)


def brauer_classify_oracle(cfg: SuiteConfig) -> InvariantResult:
    name = "brauer.classify_vs_oracle"
    rng = _rng(cfg, name)
    pool = (Fraction(0), Fraction(1), Fraction(-1), Fraction(2), Fraction(-3))
    cert = None
    for i in range(cfg.samples):
        roots = _random_roots(rng, 4, pool)
        p = Poly.from_roots(roots)
        sub = rng.choice(B.sub_multisets(roots))
        o = B.BrauerOO.from_series(series_expand(B.oo_of_poly(Poly.from_roots(sub)), cfg.order))
        c = B.classify_brauer(p, o, cfg.order)
        cert = c.certified_order
        want = B.oracle_classify(roots, o, cert)
        got = c.m if c.nonzero else None
        if got != want:
            return _fail(name, i + 1, cert, f"p = {p}, O = O_{Poly.from_roots(sub)}: {got} vs {want}")
    return InvariantResult(name, True, cfg.samples, cert)


def brauer_hat_factor(cfg: SuiteConfig) -> InvariantResult:
    name = "brauer.hat_factorisation"
    rng = _rng(cfg, name)
    for i in range(cfg.samples):
        m = Poly.from_roots(_random_roots(rng, 5))
        d = m.degree
        want = Poly((-Fraction(1, 2), (-1) ** (d + 1))) * m
        o = B.BrauerOO.from_series(series_expand(B.oo_of_poly(m), cfg.order + d + 1))
        if B.hat_poly(m, o, cfg.order) != want:
            return _fail(name, i + 1, cfg.order, str(m))
    return InvariantResult(name, True, cfg.samples, cfg.order)


def brauer_weak_brew(cfg: SuiteConfig) -> InvariantResult:
    name = "brauer.weak_vs_brew"
    rng = _rng(cfg, name)
    n = min(cfg.order, 24)
    for i in range(cfg.samples):
        m = Poly.from_roots(_random_roots(rng, 3))
        if rng.random() < 0.5:
            w = B.omega_of_roots(_random_roots(rng, 3), n)
        else:
            evens = [rng.choice(ROOT_POOL) for _ in range((m.degree + 1) // 2)]
            w, _ = B.extend_omega(m, evens, n)
        weak = B.check_weak_admissible(w, m).ok
        _, tail_ok = B.brew_form(w, m)
        if weak != tail_ok:
            return _fail(name, i + 1, n, f"m = {m}")
    return InvariantResult(name, True, cfg.samples, n)


def brauer_anchors(cfg: SuiteConfig) -> InvariantResult:
    name = "brauer.coefficient_anchors"
    rng = _rng(cfg, name)
    for i in range(cfg.samples):
        w = B.OmegaSeq(tuple(rng.choice(ROOT_POOL) for _ in range(cfg.order + 1)))
        s = B.oo_from_omega(w).series
        if s.coeff(-1) != w[0] or s.coeff(-2) != w[1] + w[0] / 2:
            return _fail(name, i + 1, cfg.order, str(w.omega[:2]))
    return InvariantResult(name, True, cfg.samples, cfg.order)


# ---------------------------------------------------------------------------
# Kauffman


def _sneeze_polys(params: K.KauffmanParams, max_deg: int) -> list[Poly]:
    pool = sorted({Fraction(x) for x in (1, -1, 2, -2, 3, -3, Fraction(1, 2), Fraction(-1, 2),
                                         Fraction(1, 3), params.q, -params.q, params.t,
                                         -params.t, 1 / params.q, -1 / params.q)})
    out = []
    for d in range(1, max_deg + 1):
        for roots in itertools.combinations_with_replacement(pool, d):
            f = Poly.from_roots(roots)
            if K.sneeze_check(f, params) is not None:
                out.append(f)
    return out


def kauffman_tri(cfg: SuiteConfig) -> InvariantResult:
    name = "kauffman.tri_equivalence"
    checked = 0
    for q, t in K_PARAMS:
        params = K.KauffmanParams(q, t)
        for f in _sneeze_polys(params, 2) + [Poly.from_roots([5]), Poly.from_roots([5, 7])]:
            v = K.check_duality(f, params)
            checked += 1
            if not v.consistent:
                return _fail(name, checked, None, f"{f} at {params}: {v}")
    return InvariantResult(name, True, checked, None)


def _branch_cases(params: K.KauffmanParams) -> list[tuple[Poly, list[Fraction]]]:
    """Pairs (m, roots of p) with p = m * {1, u+1, u-1, u^2-1} * (u-7), one per branch."""
    t, q = params.t, params.q
    cases = []
    for m_roots in ([t], [-t], [Fraction(2), q * t / 2]):
        for extra in ([], [-1], [1], [1, -1]):
            cases.append((Poly.from_roots(m_roots), [*m_roots, *map(Fraction, extra), Fraction(7)]))
    return cases


def kauffman_classify_oracle(cfg: SuiteConfig) -> InvariantResult:
    name = "kauffman.classify_vs_oracle"
    checked = 0
    cert = None
    seen = set()
    for q, t in K_PARAMS:
        params = K.KauffmanParams(q, t)
        for m, roots in _branch_cases(params):
            p = Poly.from_roots(roots)
            o = K.KauffmanOO.from_roo_series(series_expand(K.roo_of_poly(m, params), cfg.order))
            c = K.classify_kauffman(p, o, params, cfg.order)
            cert = c.certified_order
            want = K.oracle_classify_k(roots, o, params, cert)
            got = c.m if c.nonzero else None
            checked += 1
            if got != want or got != m:
                return _fail(name, checked, cert, f"p = {p} at {params}: {got} vs {want}")
            seen.add(c.branch)
        zp = Poly((1, 0, 1))
        o = K.KauffmanOO.from_roo_ratfunc(K.roo_of_poly(Poly.linear(t), params), cfg.order)
        if K.classify_kauffman(zp * Poly.linear(7), o, params, cfg.order).nonzero:
            return _fail(name, checked, cert, f"u^2 + 1 gave nonzero at {params}")
    if len(seen) != 4:
        return _fail(name, checked, cert, f"branches reached: {sorted(b.value for b in seen)}")
    return InvariantResult(name, True, checked, cert)


def kauffman_hat_shape(cfg: SuiteConfig) -> InvariantResult:
    name = "kauffman.hat_shape"
    checked = 0
    for q, t in K_PARAMS:
        params = K.KauffmanParams(q, t)
        for m in _sneeze_polys(params, 2)[:cfg.samples]:
            o = K.KauffmanOO.from_roo_series(series_expand(K.roo_of_poly(m, params),
                                                           cfg.order + m.degree + 2))
            h = K.hat_poly_k(m, o, params, cfg.order)
            checked += 1
            if h.degree != m.degree + 2 or h[0] != params.t or h.lc != -m[0] / params.t:
                return _fail(name, checked, cfg.order, f"{m} at {params}: {h}")
    return InvariantResult(name, True, checked, cfg.order)


def kauffman_komega(cfg: SuiteConfig) -> InvariantResult:
    name = "kauffman.omega_roundtrip"
    checked = 0
    for q, t in K_PARAMS:
        params = K.KauffmanParams(q, t)
        for m in _sneeze_polys(params, 2)[:cfg.samples]:
            w = K.komega_of_poly(m, params, cfg.order)
            o = K.roo_from_komega(w, params)
            checked += 1
            ok = (w[0] == K.omega_zero(params)
                  and o.roo.agrees(series_expand(K.roo_of_poly(m, params), cfg.order))
                  and o.loo.agrees(series_expand(K.loo_of_poly(m, params), cfg.order))
                  and o.product_is_one())
            if not ok:
                return _fail(name, checked, cfg.order, f"{m} at {params}")
    return InvariantResult(name, True, checked, cfg.order)


def kauffman_epsilon_table(cfg: SuiteConfig) -> InvariantResult:
    name = "kauffman.epsilon_table"
    checked = 0
    for q, t in K_PARAMS:
        params = K.KauffmanParams(q, t)
        q, t = params.q, params.t
        rows = {
            (0, "qt"): Poly((q * t, 0, 1)),
            (0, "-t/q"): Poly((-t / q, 0, 1)),
            (1, "t"): Poly((t, 1)),
            (1, "-t"): Poly((-t, 1)),
        }
        for key, f in rows.items():
            checked += 1
            if K.sneeze_check(f, params) != K.EPSILON_TABLE[key]:
                return _fail(name, checked, None, f"{key} at {params}")
    return InvariantResult(name, True, checked, None)


def kauffman_bar(cfg: SuiteConfig) -> InvariantResult:
    name = "kauffman.bar_involution"
    rng = _rng(cfg, name)
    pool = tuple(a for a in ROOT_POOL if a)
    checked = 0
    for q, t in K_PARAMS:
        params = K.KauffmanParams(q, t)
        for _ in range(max(1, cfg.samples // 4)):
            f = Poly.from_roots(_random_roots(rng, 4, pool))
            checked += 1
            if not K.bar_transform(f, params)[2]:
                return _fail(name, checked, None, f"{f} at {params}")
    return InvariantResult(name, True, checked, None)


def kauffman_belgium(cfg: SuiteConfig) -> InvariantResult:
    name = "kauffman.roo_equality_factorisation"
    checked = 0
    for q, t in K_PARAMS:
        params = K.KauffmanParams(q, t)
        fs = _sneeze_polys(params, 2)
        for f, g in itertools.product(fs[:12], repeat=2):
            if f.degree > g.degree or not f.divides(g):
                continue
            _, ok = K.belgium_factor(f, g, params)
            checked += 1
            if ok != (K.roo_of_poly(f, params) == K.roo_of_poly(g, params)):
                return _fail(name, checked, None, f"{f} | {g} at {params}")
    return InvariantResult(name, True, checked, None)


BATTERIES: dict[str, Callable[[SuiteConfig], InvariantResult]] = {
    "exact.gcd": exact_gcd,
    "exact.expand_multiplicative": exact_expand,
    "exact.reverse_involution": exact_reverse,
    "brauer.grassmannian": brauer_grassmannian,
    "brauer.odd_recursion": brauer_odd_recursion,
    "brauer.classify_vs_oracle": brauer_classify_oracle,
    "brauer.hat_factorisation": brauer_hat_factor,
    "brauer.weak_vs_brew": brauer_weak_brew,
    "brauer.coefficient_anchors": brauer_anchors,
    "kauffman.tri_equivalence": kauffman_tri,
    "kauffman.classify_vs_oracle": kauffman_classify_oracle,
    "kauffman.hat_shape": kauffman_hat_shape,
    "kauffman.omega_roundtrip": kauffman_komega,
    "kauffman.epsilon_table": kauffman_epsilon_table,
    "kauffman.bar_involution": kauffman_bar,
    "kauffman.roo_equality_factorisation": kauffman_belgium,
}


def _guarded(fn, cfg: SuiteConfig, name: str) -> InvariantResult:
    try:
        return fn(cfg)
    except Exception as exc:  # a crash is a failed invariant, not a crashed suite
        return _fail(name, 0, None, f"{type(exc).__name__}: {exc}")


def run_suite(cfg: SuiteConfig, only: list[str] | None = None) -> SuiteReport:
    names = list(BATTERIES) if not only else only
    with ThreadPoolExecutor(max_workers=max(1, cfg.workers)) as pool:
        results = list(pool.map(lambda n: _guarded(BATTERIES[n], cfg, n), names))
    return SuiteReport(cfg.order, all(r.ok for r in results), tuple(results))
