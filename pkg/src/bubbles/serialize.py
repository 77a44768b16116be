"""JSON encoding with exact rationals.

Rationals travel as strings ``"a"`` or ``"a/b"`` (JSON integers are also
accepted on input).  Polynomials are ascending coefficient arrays and series
are ``{"top_exp", "coeffs", "order"}`` objects.  Floats are rejected.
"""

from __future__ import annotations

import dataclasses
import enum
import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .brauer import BrauerOO, OmegaSeq, oo_from_omega
from .exactmath import Poly, RatFunc, SeriesInf
from .kauffman import KauffmanOO, KauffmanParams, KOmegaSeq, roo_from_komega

_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")


class ParseError(ValueError):
    """Malformed input document."""


def parse_rational(x: Any) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise ParseError(f"expected a rational string or integer, got {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if not _RATIONAL.match(x):
        raise ParseError(f"malformed rational {x!r}")
    try:
        return Fraction(x)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {x!r}") from None


def fmt_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _list(x: Any, what: str) -> list:
    if not isinstance(x, list):
        raise ParseError(f"{what} must be an array")
    return x


def _obj(x: Any, what: str) -> dict:
    if not isinstance(x, dict):
        raise ParseError(f"{what} must be an object")
    return x


def _int(x: Any, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise ParseError(f"{what} must be an integer")
    return x


def parse_poly(x: Any) -> Poly:
    return Poly(tuple(parse_rational(c) for c in _list(x, "polynomial")))


def parse_series(x: Any) -> SeriesInf:
    d = _obj(x, "series")
    try:
        return SeriesInf(
            _int(d["top_exp"], "top_exp"),
            tuple(parse_rational(c) for c in _list(d["coeffs"], "coeffs")),
            _int(d["order"], "order"),
        )
    except KeyError as exc:
        raise ParseError(f"series missing field {exc}") from None
    except ValueError as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"bad series: {exc}") from None


def parse_ratfunc(x: Any) -> RatFunc:
    d = _obj(x, "ratfunc")
    if "num" not in d:
        raise ParseError("ratfunc missing num")
    num = parse_poly(d["num"])
    den = parse_poly(d.get("den", [1]))
    if den.is_zero():
        raise ParseError("ratfunc has zero denominator")
    return RatFunc(num, den)


@dataclass(frozen=True)
class PolyInput:
    poly: Poly
    roots: tuple[Fraction, ...] | None


def parse_p(x: Any) -> PolyInput:
    d = _obj(x, "p")
    if "roots" in d:
        roots = tuple(parse_rational(a) for a in _list(d["roots"], "roots"))
        return PolyInput(Poly.from_roots(roots), roots)
    if "coeffs" in d:
        p = parse_poly(d["coeffs"])
        if p.degree < 1 or not p.is_monic():
            raise ParseError(f"p must be monic of positive degree, got {p}")
        return PolyInput(p, None)
    raise ParseError("p needs 'roots' or 'coeffs'")


def parse_brauer_oo(x: Any, order: int) -> BrauerOO:
    d = _obj(x, "oo")
    try:
        if "ratfunc" in d:
            return BrauerOO.from_ratfunc(parse_ratfunc(d["ratfunc"]), order)
        if "series" in d:
            return BrauerOO.from_series(parse_series(d["series"]))
        if "omega" in d:
            w = OmegaSeq(tuple(parse_rational(c) for c in _list(d["omega"], "omega")))
            return oo_from_omega(w)
    except ParseError:
        raise
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    raise ParseError("oo needs 'ratfunc', 'series' or 'omega'")


def parse_params(x: Any) -> KauffmanParams:
    d = _obj(x, "params")
    if "q" not in d:
        raise ParseError("params.q is required (z alone does not fix q)")
    if "t" not in d:
        raise ParseError("params.t is required")
    try:
        params = KauffmanParams(parse_rational(d["q"]), parse_rational(d["t"]))
    except ParseError:
        raise
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    if "z" in d and parse_rational(d["z"]) != params.z:
        raise ParseError(f"z = {d['z']} disagrees with q - 1/q = {fmt_rational(params.z)}")
    return params


def parse_kauffman_oo(x: Any, params: KauffmanParams, order: int) -> KauffmanOO:
    d = _obj(x, "roo")
    try:
        if "ratfunc" in d:
            return KauffmanOO.from_roo_ratfunc(parse_ratfunc(d["ratfunc"]), order)
        if "series" in d:
            return KauffmanOO.from_roo_series(parse_series(d["series"]))
        if "omega" in d:
            w = d["omega"]
            if isinstance(w, list):
                nonneg = tuple(parse_rational(c) for c in w)
                nonpos = nonneg[:1]
            else:
                w = _obj(w, "omega")
                nonneg = tuple(parse_rational(c) for c in _list(w.get("nonneg"), "omega.nonneg"))
                nonpos = tuple(parse_rational(c) for c in _list(w.get("nonpos"), "omega.nonpos"))
            ko = roo_from_komega(KOmegaSeq(nonneg, nonpos), params)
            return KauffmanOO.from_roo_series(ko.roo)
    except ParseError:
        raise
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    raise ParseError("roo needs 'ratfunc', 'series' or 'omega'")


# ---------------------------------------------------------------------------
# output


def to_jsonable(x: Any) -> Any:
    """Recursively convert library values to JSON-ready structures."""
    if x is None or isinstance(x, (bool, str)):
        return x
    if isinstance(x, enum.Enum):
        return x.value
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return fmt_rational(x)
    if isinstance(x, Poly):
        return [fmt_rational(c) for c in x.coeffs]
    if isinstance(x, RatFunc):
        return {"num": to_jsonable(x.num), "den": to_jsonable(x.den), "text": str(x)}
    if isinstance(x, SeriesInf):
        return {"top_exp": x.top_exp, "coeffs": [fmt_rational(c) for c in x.coeffs],
                "order": x.order}
    if dataclasses.is_dataclass(x):
        return {f.name: to_jsonable(getattr(x, f.name)) for f in dataclasses.fields(x)}
    if isinstance(x, dict):
        return {str(k): to_jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [to_jsonable(v) for v in x]
    raise TypeError(f"cannot serialise {type(x).__name__}")


def dumps(doc: Any) -> str:
    """Deterministic encoding: sorted keys, two-space indent, trailing newline."""
    return json.dumps(to_jsonable(doc), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def loads(text: str) -> Any:
    def no_float(s: str):
        raise ParseError(f"floating point literal {s} is not allowed")

    try:
        return json.loads(text, parse_float=no_float)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
