"""Show which gcd branch each padding of p = m * extra * (u - 5) lands in."""

from __future__ import annotations

import argparse
from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction

from bubbles.kauffman import (KauffmanOO, KauffmanParams, classify_kauffman,
                              oracle_classify_k, roo_of_poly)
from bubbles.exactmath import Poly

PADDINGS = {"1": [], "u+1": [-1], "u-1": [1], "u^2-1": [1, -1]}


@dataclass(frozen=True)
class BranchConfig:
    q: Fraction = Fraction(2)
    t: Fraction = Fraction(3)
    filler: Fraction = Fraction(5)


def m_samples(params: KauffmanParams) -> list[list[Fraction]]:
    q, t = params.q, params.t
    return [[t], [-t], [Fraction(2), q * t / 2], [Fraction(-2), t / (2 * q)], [t, 2, Fraction(1, 2)]]


def run(cfg: BranchConfig) -> dict[str, Counter]:
    params = KauffmanParams(cfg.q, cfg.t)
    table: dict[str, Counter] = defaultdict(Counter)
    for m_roots in m_samples(params):
        m = Poly.from_roots(m_roots)
        o = KauffmanOO.from_roo_ratfunc(roo_of_poly(m, params))
        for name, extra in PADDINGS.items():
            roots = [*m_roots, *map(Fraction, extra), cfg.filler]
            c = classify_kauffman(Poly.from_roots(roots), o, params)
            ok = c.nonzero and c.m == m == oracle_classify_k(roots, o, params)
            table[name][(c.branch.value if c.branch else "none", ok)] += 1
    return table


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q", type=Fraction, default=BranchConfig.q)
    ap.add_argument("--t", type=Fraction, default=BranchConfig.t)
    a = ap.parse_args()
    table = run(BranchConfig(a.q, a.t))
    print(f"q = {a.q}, t = {a.t}")
    for name, counts in table.items():
        for (branch, ok), n in sorted(counts.items()):
            print(f"  padding {name:6s} -> {branch:18s} recovered m: {ok}  x{n}")


if __name__ == "__main__":
    main()
