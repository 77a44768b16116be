"""Sweep split p and every divisor-derived O, tallying classification outcomes.

    python scripts/brauer_sweep.py --pool 0 1 -1 2 -3 --max-deg 4
"""

from __future__ import annotations

import argparse
import itertools
import time
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from bubbles.brauer import BrauerOO, classify_brauer, oo_of_poly, oracle_classify, sub_multisets
from bubbles.exactmath import Poly


@dataclass(frozen=True)
class SweepConfig:
    pool: tuple[Fraction, ...] = field(default_factory=lambda: tuple(map(Fraction, (0, 1, -1, 2, -3))))
    max_deg: int = 4
    max_mult: int = 2


def run(cfg: SweepConfig) -> Counter:
    tally: Counter = Counter()
    for d in range(1, cfg.max_deg + 1):
        for roots in itertools.combinations_with_replacement(cfg.pool, d):
            if max(Counter(roots).values()) > cfg.max_mult:
                continue
            p = Poly.from_roots(roots)
            for sub in {tuple(s) for s in sub_multisets(list(roots))}:
                o = BrauerOO.from_ratfunc(oo_of_poly(Poly.from_roots(sub)))
                c = classify_brauer(p, o)
                got = c.m if c.nonzero else None
                tally["agree" if got == oracle_classify(list(roots), o) else "MISMATCH"] += 1
                tally[f"branch {c.branch.value}" if c.branch else "no branch"] += 1
                tally[f"deg m = {c.m.degree}" if c.nonzero else "zero category"] += 1
    return tally


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--pool", nargs="+", type=Fraction)
    ap.add_argument("--max-deg", type=int, default=SweepConfig.max_deg)
    ap.add_argument("--max-mult", type=int, default=SweepConfig.max_mult)
    a = ap.parse_args()
    cfg = SweepConfig(max_deg=a.max_deg, max_mult=a.max_mult,
                      **({"pool": tuple(a.pool)} if a.pool else {}))
    start = time.perf_counter()
    tally = run(cfg)
    for k in sorted(tally):
        print(f"{k:28s} {tally[k]}")
    print(f"elapsed {time.perf_counter() - start:.2f}s")


if __name__ == "__main__":
    main()
