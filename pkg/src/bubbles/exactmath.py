"""Exact polynomial, rational-function and truncated-series arithmetic over Q.

Scalars are :class:`fractions.Fraction` values throughout.  Nothing in this
module touches floating point.

Three containers live here:

``Poly``
    dense univariate polynomial in ``u``; ``coeffs[i]`` is the coefficient
    of ``u**i``.  The zero polynomial has an empty coefficient tuple.
``RatFunc``
    reduced quotient ``num/den`` with ``den`` monic.
``SeriesInf``
    Laurent expansion at ``u = oo`` carrying the exponents
    ``top_exp, top_exp - 1, ..., -order``.  Coefficients below ``-order``
    are unknown, not zero.

``SeriesZero`` is the Taylor-at-zero counterpart used by the Kauffman
hat polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import zip_longest
from typing import Iterable, Sequence, Union

Scalar = Fraction
ScalarLike = Union[int, Fraction]


def _frac(x: ScalarLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool) or not isinstance(x, int):
        raise TypeError(f"expected an int or Fraction, got {type(x).__name__}")
    return Fraction(x)


class InsufficientOrder(ValueError):
    """A series is not known to enough terms for the requested computation."""


# ---------------------------------------------------------------------------
# polynomials


@dataclass(frozen=True)
class Poly:
    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        cs = [_frac(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    # constructors ---------------------------------------------------------

    @classmethod
    def const(cls, c: ScalarLike) -> Poly:
        return cls((c,))

    @classmethod
    def u(cls) -> Poly:
        return cls((0, 1))

    @classmethod
    def linear(cls, a: ScalarLike) -> Poly:
        """``u - a``."""
        return cls((-_frac(a), 1))

    @classmethod
    def from_roots(cls, roots: Iterable[ScalarLike]) -> Poly:
        out = cls((1,))
        for a in roots:
            out = out * cls.linear(a)
        return out

    # basic queries --------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return self.lc == 1

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __call__(self, x: ScalarLike) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # arithmetic -----------------------------------------------------------

    def __add__(self, other) -> Poly:
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return Poly(tuple(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0)))

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> Poly:
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Poly:
        return (-self) + other

    def __mul__(self, other) -> Poly:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            c = _frac(other)
            return Poly(tuple(c * a for a in self.coeffs))
        if not isinstance(other, Poly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = Poly((1,))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = other.degree
        inv_lc = 1 / other.lc
        quo = [Fraction(0)] * max(len(rem) - dd, 0)
        for k in range(len(rem) - 1 - dd, -1, -1):
            c = rem[k + dd] * inv_lc
            quo[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return Poly(tuple(quo)), Poly(tuple(rem[:dd]))

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def exact_div(self, other: Poly) -> Poly:
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def divides(self, other: Poly) -> bool:
        """True when ``self`` divides ``other``."""
        if not self.coeffs:
            return not other.coeffs
        return not (other % self)

    # transforms -----------------------------------------------------------

    def monic(self) -> Poly:
        if not self.coeffs:
            raise ValueError("zero polynomial has no monic associate")
        return self * (1 / self.lc)

    def neg_var(self) -> Poly:
        """``p(-u)``."""
        return Poly(tuple(-c if i % 2 else c for i, c in enumerate(self.coeffs)))

    def reversed(self) -> Poly:
        """``u**deg * p(1/u)`` (the coefficient list read backwards)."""
        return Poly(tuple(reversed(self.coeffs)))

    def vanishing_order(self, a: ScalarLike) -> int:
        """Multiplicity of ``a`` as a root (0 when ``p(a) != 0``)."""
        if not self.coeffs:
            raise ValueError("zero polynomial vanishes to infinite order")
        lin = Poly.linear(a)
        k, p = 0, self
        while True:
            q, r = divmod(p, lin)
            if r:
                return k
            k, p = k + 1, q

    # display --------------------------------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                mon = "u" if i == 1 else f"u^{i}"
                body = mon if a == 1 else f"{a}*{mon}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _as_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return Poly.const(x)
    return NotImplemented


U = Poly.u()
ONE = Poly.const(1)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm, normalising to monic at each step."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd undefined for two zero polynomials")
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    a, b = a.monic(), b.monic()
    while b:
        a, b = b, (a % b)
        if b:
            b = b.monic()
    return a


def poly_from_roots(roots: Iterable[ScalarLike]) -> Poly:
    return Poly.from_roots(roots)


def poly_reverse(f: Poly) -> Poly:
    """``f(0)**-1 * u**deg f * f(1/u)`` for monic ``f`` with ``f(0) != 0``."""
    if not f.is_monic():
        raise ValueError(f"poly_reverse needs a monic polynomial, got {f}")
    if f[0] == 0:
        raise ValueError(f"poly_reverse needs f(0) != 0, got {f}")
    return f.reversed() * (1 / f[0])


# ---------------------------------------------------------------------------
# rational functions


@dataclass(frozen=True)
class RatFunc:
    num: Poly
    den: Poly = ONE

    def __post_init__(self):
        num, den = self.num, self.den
        if not isinstance(num, Poly):
            num = Poly.const(num)
        if not isinstance(den, Poly):
            den = Poly.const(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = Poly(), ONE
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num.exact_div(g), den.exact_div(g)
            c = den.lc
            num, den = num * (1 / c), den * (1 / c)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def from_poly(cls, p: Poly) -> RatFunc:
        return cls(p, ONE)

    def is_poly(self) -> bool:
        return self.den.degree == 0

    def __add__(self, other) -> RatFunc:
        other = _as_ratfunc(other)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> RatFunc:
        return RatFunc(-self.num, self.den)

    def __sub__(self, other) -> RatFunc:
        return self + (-_as_ratfunc(other))

    def __rsub__(self, other) -> RatFunc:
        return _as_ratfunc(other) - self

    def __mul__(self, other) -> RatFunc:
        other = _as_ratfunc(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> RatFunc:
        other = _as_ratfunc(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> RatFunc:
        return _as_ratfunc(other) / self

    def neg_var(self) -> RatFunc:
        """``r(-u)``."""
        return RatFunc(self.num.neg_var(), self.den.neg_var())

    def inv_var(self) -> RatFunc:
        """``r(1/u)``."""
        shift = self.den.degree - self.num.degree
        num, den = self.num.reversed(), self.den.reversed()
        if shift >= 0:
            num = num * U**shift
        else:
            den = den * U**(-shift)
        return RatFunc(num, den)

    def expand(self, order: int) -> SeriesInf:
        return series_expand(self, order)

    def __str__(self) -> str:
        if self.is_poly():
            return str(self.num)
        return f"({self.num}) / ({self.den})"


def _as_ratfunc(x) -> RatFunc:
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, Poly):
        return RatFunc(x)
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return RatFunc(Poly.const(x))
    raise TypeError(f"cannot treat {type(x).__name__} as a rational function")


# ---------------------------------------------------------------------------
# Laurent series at infinity


def _taylor_quotient(a: Sequence[Fraction], b: Sequence[Fraction], n: int) -> list[Fraction]:
    """First ``n`` Taylor coefficients of ``A(x)/B(x)``, ``B(0) != 0``."""
    b0 = b[0]
    out: list[Fraction] = []
    for k in range(n):
        acc = a[k] if k < len(a) else Fraction(0)
        for j in range(1, min(k, len(b) - 1) + 1):
            acc -= b[j] * out[k - j]
        out.append(acc / b0)
    return out


@dataclass(frozen=True)
class SeriesInf:
    top_exp: int
    coeffs: tuple[Fraction, ...]
    order: int

    def __post_init__(self):
        cs = tuple(_frac(c) for c in self.coeffs)
        if len(cs) != max(self.top_exp + self.order + 1, 0):
            raise ValueError(
                f"series with top_exp={self.top_exp}, order={self.order} needs "
                f"{max(self.top_exp + self.order + 1, 0)} coefficients, got {len(cs)}"
            )
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def from_poly(cls, p: Poly, order: int) -> SeriesInf:
        top = max(p.degree, 0)
        return cls(top, tuple(p[r] for r in range(top, -order - 1, -1)), order)

    @classmethod
    def one(cls, order: int) -> SeriesInf:
        return cls.from_poly(ONE, order)

    @classmethod
    def from_coeff_map(cls, top_exp: int, order: int, get) -> SeriesInf:
        return cls(top_exp, tuple(get(r) for r in range(top_exp, -order - 1, -1)), order)

    # access ---------------------------------------------------------------

    def coeff(self, r: int) -> Fraction:
        """Coefficient of ``u**r``."""
        if r > self.top_exp:
            return Fraction(0)
        if r < -self.order:
            raise InsufficientOrder(f"u^{r} is below truncation order {self.order}")
        return self.coeffs[self.top_exp - r]

    def polypart(self) -> Poly:
        return Poly(tuple(self.coeff(r) for r in range(0, self.top_exp + 1)))

    def tail(self) -> tuple[Fraction, ...]:
        """Coefficients of ``u**-1, ..., u**-order``."""
        return tuple(self.coeff(-r) for r in range(1, self.order + 1))

    def leading(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def is_unit(self) -> bool:
        return self.leading() != 0

    def truncate(self, order: int) -> SeriesInf:
        if order > self.order:
            raise InsufficientOrder(f"cannot extend a series of order {self.order} to {order}")
        return SeriesInf.from_coeff_map(self.top_exp, order, self.coeff)

    # arithmetic -----------------------------------------------------------

    def __add__(self, other) -> SeriesInf:
        if isinstance(other, (Poly, int, Fraction)):
            other = SeriesInf.from_poly(_as_poly(other), self.order)
        order = min(self.order, other.order)
        top = max(self.top_exp, other.top_exp)
        return SeriesInf.from_coeff_map(top, order, lambda r: self.coeff(r) + other.coeff(r))

    __radd__ = __add__

    def __neg__(self) -> SeriesInf:
        return SeriesInf(self.top_exp, tuple(-c for c in self.coeffs), self.order)

    def __sub__(self, other) -> SeriesInf:
        if isinstance(other, (Poly, int, Fraction)):
            other = SeriesInf.from_poly(_as_poly(other), self.order)
        return self + (-other)

    def __rsub__(self, other) -> SeriesInf:
        return (-self) + other

    def __mul__(self, other) -> SeriesInf:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            c = _frac(other)
            return SeriesInf(self.top_exp, tuple(c * a for a in self.coeffs), self.order)
        if isinstance(other, Poly):
            return self.mul_poly(other)
        if not isinstance(other, SeriesInf):
            return NotImplemented
        top = self.top_exp + other.top_exp
        order = min(self.order - other.top_exp, other.order - self.top_exp)
        n = top + order + 1
        out = [Fraction(0)] * max(n, 0)
        for i, a in enumerate(self.coeffs):
            if a == 0 or i >= n:
                continue
            for j in range(min(len(other.coeffs), n - i)):
                out[i + j] += a * other.coeffs[j]
        return SeriesInf(top, tuple(out), order)

    __rmul__ = __mul__

    def mul_poly(self, p: Poly) -> SeriesInf:
        """Product with an exact polynomial.  Known depth drops by ``deg p``."""
        if p.is_zero():
            return SeriesInf.from_poly(Poly(), self.order)
        d = p.degree
        top = self.top_exp + d
        order = self.order - d
        n = top + order + 1
        out = [Fraction(0)] * max(n, 0)
        for k in range(n):
            r = top - k
            acc = Fraction(0)
            for i, c in enumerate(p.coeffs):
                if c and r - i <= self.top_exp:
                    acc += c * self.coeffs[self.top_exp - (r - i)]
            out[k] = acc
        return SeriesInf(top, tuple(out), order)

    def inverse(self) -> SeriesInf:
        if not self.is_unit():
            raise ZeroDivisionError("series is not a unit (leading carried coefficient is zero)")
        n = len(self.coeffs)
        inv = _taylor_quotient([Fraction(1)], self.coeffs, n)
        top = -self.top_exp
        return SeriesInf(top, tuple(inv), n - 1 - top)

    def __truediv__(self, other: SeriesInf) -> SeriesInf:
        return self * other.inverse()

    def neg_var(self) -> SeriesInf:
        """``s(-u)``."""
        return SeriesInf.from_coeff_map(
            self.top_exp, self.order, lambda r: -self.coeff(r) if r % 2 else self.coeff(r)
        )

    def first_mismatch(self, other: SeriesInf) -> int | None:
        """Largest exponent where the two series differ, over their common range."""
        order = min(self.order, other.order)
        for r in range(max(self.top_exp, other.top_exp), -order - 1, -1):
            if self.coeff(r) != other.coeff(r):
                return r
        return None

    def agrees(self, other: SeriesInf) -> bool:
        return self.first_mismatch(other) is None

    def __str__(self) -> str:
        parts = []
        for k, c in enumerate(self.coeffs):
            if c:
                parts.append(f"{c}*u^{self.top_exp - k}")
        return " + ".join(parts or ["0"]) + f" + O(u^{-self.order - 1})"


def series_expand(r: RatFunc, order: int) -> SeriesInf:
    """Laurent expansion of ``r`` at ``u = oo`` down to ``u**-order``."""
    if r.num.is_zero():
        return SeriesInf.from_poly(Poly(), order)
    top = r.num.degree - r.den.degree
    a = list(reversed(r.num.coeffs))
    b = list(reversed(r.den.coeffs))
    n = top + order + 1
    return SeriesInf(top, tuple(_taylor_quotient(a, b, max(n, 0))), order)


def series_coeff(s: SeriesInf, r: int) -> Fraction:
    return s.coeff(r)


def series_polypart(s: SeriesInf) -> Poly:
    return s.polypart()


# ---------------------------------------------------------------------------
# Taylor series at zero


@dataclass(frozen=True)
class SeriesZero:
    """Taylor series ``sum coeffs[i] u**i`` known for ``i <= order``."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(_frac(c) for c in self.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def mul_poly(self, p: Poly) -> SeriesZero:
        n = len(self.coeffs)
        out = [Fraction(0)] * n
        for i, c in enumerate(p.coeffs[:n]):
            if c:
                for j in range(n - i):
                    out[i + j] += c * self.coeffs[j]
        return SeriesZero(tuple(out))

    def __getitem__(self, i: int) -> Fraction:
        if i > self.order:
            raise InsufficientOrder(f"u^{i} is beyond truncation order {self.order}")
        return self.coeffs[i]


def at_zero_of_inv(s: SeriesInf) -> SeriesZero:
    """``s(1/u)`` as a Taylor series at zero; ``s`` must have no positive powers."""
    if any(s.coeff(r) for r in range(1, s.top_exp + 1)):
        raise ValueError("series has positive powers of u; s(1/u) is not a Taylor series")
    return SeriesZero(tuple(s.coeff(-r) for r in range(0, s.order + 1)))
