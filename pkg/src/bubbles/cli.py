"""Command-line front end: ``bubbles {brauer,kauffman,suite} ...``.

Exit codes: 0 success (zero-category verdicts included), 1 identity-suite or
oracle disagreement, 2 malformed input, 3 inconsistent series input.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from typing import Any, Callable

from . import brauer as B
from . import kauffman as K
from .exactmath import series_expand
from .serialize import (
    ParseError,
    dumps,
    fmt_rational,
    loads,
    parse_brauer_oo,
    parse_kauffman_oo,
    parse_p,
    parse_params,
    parse_rational,
    to_jsonable,
)
from .suite import BATTERIES, SuiteConfig, run_suite

DEFAULT_ORDER = 64
MIN_ORDER = 8

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_INCONSISTENT = 0, 1, 2, 3


class InconsistentSeries(Exception):
    pass


@dataclass(frozen=True)
class JobSpec:
    command: str
    doc: dict
    order: int
    fmt: str
    oracle: bool


@dataclass
class Outcome:
    report: dict
    code: int = EXIT_OK


def _order(cli_order: int | None, doc: dict) -> int:
    raw = cli_order if cli_order is not None else doc.get("order", DEFAULT_ORDER)
    if isinstance(raw, bool) or not isinstance(raw, int):
        raise ParseError("order must be an integer")
    if raw < MIN_ORDER:
        raise ParseError(f"order must be at least {MIN_ORDER}, got {raw}")
    return raw


def _encoding(d: Any) -> str | None:
    if isinstance(d, dict):
        for key in ("ratfunc", "series", "omega"):
            if key in d:
                return key
    return None


def _require(doc: dict, *keys: str) -> Any:
    for k in keys:
        if k in doc:
            return doc[k]
    raise ParseError(f"input needs {' or '.join(repr(k) for k in keys)}")


# ---------------------------------------------------------------------------
# commands


def cmd_brauer_classify(job: JobSpec) -> Outcome:
    p_in = parse_p(_require(job.doc, "p"))
    oo_doc = _require(job.doc, "oo")
    o = parse_brauer_oo(oo_doc, job.order)
    if job.oracle and p_in.roots is None:
        raise ParseError("--oracle needs p given by roots")
    c = B.classify_brauer(p_in.poly, o, job.order)
    if _encoding(oo_doc) != "ratfunc" and any(d.startswith("hat:") for d in c.diagnostics):
        raise InconsistentSeries(c.diagnostics[0])
    report = {
        "command": "brauer classify",
        "verdict": "nonzero" if c.nonzero else "zero",
        "certified_order": c.certified_order,
        "classification": to_jsonable(c),
    }
    code = EXIT_OK
    if job.oracle:
        want = B.oracle_classify(p_in.roots, o, c.certified_order or job.order)
        got = c.m if c.nonzero else None
        report["oracle"] = {"m": to_jsonable(want), "agrees": want == got}
        if want != got:
            code = EXIT_FAIL
    return Outcome(report, code)


def cmd_brauer_omega(job: JobSpec) -> Outcome:
    if "oo" in job.doc:
        w = B.omega_from_oo(parse_brauer_oo(job.doc["oo"], job.order + 1), job.order)
        source = "oo"
    else:
        roots = job.doc.get("roots")
        if roots is None:
            p_in = parse_p(_require(job.doc, "p"))
            if p_in.roots is None:
                raise ParseError("brauer omega needs roots (or an 'oo' record)")
            roots = p_in.roots
        else:
            if not isinstance(roots, list):
                raise ParseError("roots must be an array")
            roots = [parse_rational(a) for a in roots]
        w = B.omega_of_roots(roots, job.order)
        source = "roots"
    v = B.check_admissible(w)
    return Outcome({
        "command": "brauer omega",
        "source": source,
        "certified_order": w.order,
        "omega": to_jsonable(w.omega),
        "admissible": to_jsonable(v),
    })


def cmd_brauer_check(job: JobSpec) -> Outcome:
    raw = _require(job.doc, "omega")
    if not isinstance(raw, list) or not raw:
        raise ParseError("omega must be a non-empty array")
    w = B.OmegaSeq(tuple(parse_rational(c) for c in raw))
    report: dict[str, Any] = {
        "command": "brauer check",
        "certified_order": w.order,
        "admissible": to_jsonable(B.check_admissible(w)),
    }
    if "m" in job.doc:
        m = parse_p(job.doc["m"]).poly
        weak = B.check_weak_admissible(w, m)
        polypart, tail_ok = B.brew_form(w, m)
        report["weak"] = to_jsonable(weak)
        report["brew"] = {"polypart": to_jsonable(polypart), "tail_vanishes": tail_ok}
    return Outcome(report)


def cmd_kauffman_classify(job: JobSpec) -> Outcome:
    params = parse_params(_require(job.doc, "params"))
    p_in = parse_p(_require(job.doc, "p"))
    if p_in.poly[0] == 0:
        raise ParseError("p(0) must be nonzero for the Kauffman category")
    roo_doc = _require(job.doc, "roo", "oo")
    o = parse_kauffman_oo(roo_doc, params, job.order)
    if job.oracle and p_in.roots is None:
        raise ParseError("--oracle needs p given by roots")
    c = K.classify_kauffman(p_in.poly, o, params, job.order)
    if _encoding(roo_doc) != "ratfunc" and any(d.startswith("hat:") for d in c.diagnostics):
        raise InconsistentSeries(c.diagnostics[0])
    report = {
        "command": "kauffman classify",
        "params": {"q": fmt_rational(params.q), "t": fmt_rational(params.t),
                   "z": fmt_rational(params.z)},
        "verdict": "nonzero" if c.nonzero else "zero",
        "branch": c.branch.value if c.branch else None,
        "certified_order": c.certified_order,
        "classification": to_jsonable(c),
    }
    code = EXIT_OK
    if job.oracle:
        want = K.oracle_classify_k(p_in.roots, o, params, c.certified_order or job.order)
        got = c.m if c.nonzero else None
        report["oracle"] = {"m": to_jsonable(want), "agrees": want == got}
        if want != got:
            code = EXIT_FAIL
    return Outcome(report, code)


def cmd_kauffman_series(job: JobSpec) -> Outcome:
    params = parse_params(_require(job.doc, "params"))
    f = parse_p(_require(job.doc, "m", "p")).poly
    if f[0] == 0:
        raise ParseError("m(0) must be nonzero")
    roo, loo = K.roo_of_poly(f, params), K.loo_of_poly(f, params)
    duality = K.check_duality(f, params)
    report: dict[str, Any] = {
        "command": "kauffman series",
        "certified_order": job.order,
        "roo": to_jsonable(roo),
        "loo": to_jsonable(loo),
        "roo_series": to_jsonable(series_expand(roo, job.order)),
        "duality": to_jsonable(duality),
        "epsilon": to_jsonable(duality.eps),
    }
    if duality.eps is not None:
        w = K.komega_of_poly(f, params, job.order)
        report["omega"] = {"nonneg": to_jsonable(w.nonneg), "nonpos": to_jsonable(w.nonpos)}
    return Outcome(report)


def cmd_identity_suite(job: JobSpec, cfg: SuiteConfig, only: list[str] | None) -> Outcome:
    report = run_suite(cfg, only)
    doc = {"command": "suite", **to_jsonable(report)}
    return Outcome(doc, EXIT_OK if report.passed else EXIT_FAIL)


COMMANDS: dict[str, Callable[[JobSpec], Outcome]] = {
    "brauer classify": cmd_brauer_classify,
    "brauer omega": cmd_brauer_omega,
    "brauer check": cmd_brauer_check,
    "kauffman classify": cmd_kauffman_classify,
    "kauffman series": cmd_kauffman_series,
}


# ---------------------------------------------------------------------------
# rendering


def render_text(report: dict) -> str:
    if report.get("command") == "suite":
        rows = [f"{'PASS' if r['ok'] else 'FAIL'}  {r['name']}  checked={r['checked']}"
                f"  order={r['certified_order']}" + (f"  {r['detail']}" if r["detail"] else "")
                for r in report["invariants"]]
        return "\n".join(rows + [f"passed: {report['passed']}"]) + "\n"
    lines: list[str] = []

    def walk(prefix: str, x: Any) -> None:
        if isinstance(x, dict) and not ({"num", "den", "text"} <= set(x)):
            for k in sorted(x):
                walk(f"{prefix}.{k}" if prefix else k, x[k])
        elif isinstance(x, dict):
            lines.append(f"{prefix}: {x['text']}")
        elif isinstance(x, list) and any(isinstance(v, dict) for v in x):
            for i, v in enumerate(x):
                walk(f"{prefix}[{i}]", v)
        elif isinstance(x, list):
            lines.append(f"{prefix}: [{', '.join(map(str, x))}]")
        else:
            lines.append(f"{prefix}: {x}")

    walk("", report)
    return "\n".join(lines) + "\n"


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", type=int, default=None,
                        help=f"truncation order (default {DEFAULT_ORDER}, minimum {MIN_ORDER})")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--input", default="-", help="JSON input file (default stdin)")
    common.add_argument("--oracle", action="store_true",
                        help="cross-check against brute-force divisor enumeration")

    ap = argparse.ArgumentParser(prog="bubbles", description=__doc__.splitlines()[0])
    top = ap.add_subparsers(dest="family", required=True)
    for family, actions in (("brauer", ("classify", "omega", "check")),
                            ("kauffman", ("classify", "series"))):
        fp = top.add_parser(family)
        sub = fp.add_subparsers(dest="action", required=True)
        for a in actions:
            sub.add_parser(a, parents=[common])
    sp = top.add_parser("suite", parents=[common])
    sp.add_argument("--corrupt", action="store_true", help="inject a fault (harness check)")
    sp.add_argument("--samples", type=int, default=SuiteConfig.samples)
    sp.add_argument("--seed", type=int, default=SuiteConfig.seed)
    sp.add_argument("--workers", type=int, default=SuiteConfig.workers)
    sp.add_argument("--only", action="append", choices=sorted(BATTERIES))
    return ap


def _read_doc(path: str) -> dict:
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    doc = loads(text)
    if not isinstance(doc, dict):
        raise ParseError("input document must be a JSON object")
    return doc


def main(argv: list[str] | None = None) -> int:
    ap = _parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        if args.family == "suite":
            order = _order(args.order, {})
            cfg = SuiteConfig(order=order, samples=args.samples, seed=args.seed,
                              workers=args.workers, corrupt=args.corrupt)
            out = cmd_identity_suite(JobSpec("suite", {}, order, args.format, False), cfg, args.only)
        else:
            doc = _read_doc(args.input)
            command = f"{args.family} {args.action}"
            job = JobSpec(command, doc, _order(args.order, doc), args.format, args.oracle)
            out = COMMANDS[command](job)
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InconsistentSeries as exc:
        print(f"inconsistent series: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except ValueError as exc:  # includes InsufficientOrder
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE

    sys.stdout.write(dumps(out.report) if args.format == "json" else render_text(out.report))
    return out.code


if __name__ == "__main__":
    raise SystemExit(main())
