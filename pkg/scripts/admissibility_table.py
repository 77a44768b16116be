"""Tabulate admissibility verdicts for canonical and perturbed bubble sequences."""

from __future__ import annotations

import argparse
import random
from dataclasses import dataclass
from fractions import Fraction

from bubbles.brauer import OmegaSeq, brew_form, check_admissible, check_weak_admissible, omega_of_roots
from bubbles.exactmath import Poly

POOL = tuple(Fraction(x) for x in (0, 1, -1, 2, -2, 3, "1/2"))


@dataclass(frozen=True)
class TableConfig:
    rows: int = 12
    order: int = 24
    seed: int = 0


def row(rng: random.Random, order: int) -> tuple[str, ...]:
    roots = [rng.choice(POOL) for _ in range(rng.randint(1, 3))]
    m = Poly.from_roots(roots)
    w = omega_of_roots(roots, order)
    bumped = rng.random() < 0.5
    if bumped:
        k = rng.randrange(1, order + 1)
        w = OmegaSeq(w.omega[:k] + (w.omega[k] + 1,) + w.omega[k + 1:])
    v = check_admissible(w)
    weak = check_weak_admissible(w, m)
    _, tail_ok = brew_form(w, m)
    return (
        "{" + ", ".join(map(str, roots)) + "}",
        "bumped" if bumped else "canonical",
        str(v.ok) if v.ok else f"False (r={v.first_failure})",
        str(weak.ok),
        str(tail_ok),
    )


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--rows", type=int, default=TableConfig.rows)
    ap.add_argument("--order", type=int, default=TableConfig.order)
    ap.add_argument("--seed", type=int, default=TableConfig.seed)
    a = ap.parse_args()
    cfg = TableConfig(a.rows, a.order, a.seed)
    rng = random.Random(cfg.seed)
    header = ("roots", "sequence", "admissible", "weak", "brew tail = 0")
    rows = [header] + [row(rng, cfg.order) for _ in range(cfg.rows)]
    widths = [max(len(r[i]) for r in rows) for i in range(len(header))]
    for r in rows:
        print("  ".join(c.ljust(w) for c, w in zip(r, widths)))


if __name__ == "__main__":
    main()
