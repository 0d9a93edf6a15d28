"""Exact scalars: rationals, binomials and quadratic surds.

Rationals are plain :class:`fractions.Fraction` values.  Anything involving a
square root is carried as a :class:`SurdExpr` ``p + q*sqrt(s)`` and compared
by sign analysis plus integer squaring, never by rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC

Rational = Fraction

__all__ = [
    "Rational",
    "SurdExpr",
    "binomial",
    "sign",
    "surd_sign",
    "surd_compare",
    "as_rational",
    "rational_str",
]


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)) and not isinstance(x, bool):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def rational_str(x) -> str:
    """Render a rational as ``"p/q"`` (denominator always shown)."""
    x = as_rational(x)
    return f"{x.numerator}/{x.denominator}"


def sign(x) -> int:
    return (x > 0) - (x < 0)


def binomial(n: int, k: int) -> int:
    """C(n, k) for n >= 0, zero outside 0 <= k <= n."""
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@dataclass(frozen=True)
class SurdExpr:
    """The real number ``p + q*sqrt(s)``.

    A rational radicand ``a/b`` is folded into an integer one on construction,
    ``sqrt(a/b) = sqrt(a*b)/b``, so ``s`` is always a nonnegative integer.
    """

    p: Fraction
    q: Fraction = Fraction(0)
    s: int = 0

    def __post_init__(self):
        p = as_rational(self.p)
        q = as_rational(self.q)
        s = as_rational(self.s)
        if s < 0:
            raise ValueError(f"negative radicand {s}")
        if s.denominator != 1:
            q = q / s.denominator
            s = s.numerator * s.denominator
        s = int(s)
        r = math.isqrt(s)
        if r * r == s or q == 0:
            # perfect square or no surd part: store as a plain rational
            p, q, s = p + q * r, Fraction(0), 0
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "s", int(s))

    @classmethod
    def sqrt(cls, radicand, coeff=1) -> "SurdExpr":
        """``coeff * sqrt(radicand)``."""
        return cls(Fraction(0), as_rational(coeff), radicand)

    @property
    def is_rational(self) -> bool:
        return self.q == 0 or self.s == 0

    def _lift(self, other) -> "SurdExpr":
        if isinstance(other, SurdExpr):
            return other
        return SurdExpr(as_rational(other), Fraction(0), self.s)

    def _same_radicand(self, other: "SurdExpr") -> int:
        if other.is_rational:
            return self.s
        if self.is_rational:
            return other.s
        if self.s != other.s:
            raise ValueError(
                f"cannot combine surds with radicands {self.s} and {other.s}; "
                "use surd_compare for mixed radicands"
            )
        return self.s

    def __add__(self, other):
        other = self._lift(other)
        s = self._same_radicand(other)
        sq = self.q if self.s == s else Fraction(0)
        oq = other.q if other.s == s else Fraction(0)
        return SurdExpr(self.p + other.p, sq + oq, s)

    __radd__ = __add__

    def __neg__(self):
        return SurdExpr(-self.p, -self.q, self.s)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, SurdExpr):
            s = self._same_radicand(other)
            a, b = (self.p, self.q if self.s == s else 0)
            c, d = (other.p, other.q if other.s == s else 0)
            return SurdExpr(a * c + b * d * s, a * d + b * c, s)
        r = as_rational(other)
        return SurdExpr(self.p * r, self.q * r, self.s)

    __rmul__ = __mul__

    def __truediv__(self, other):
        r = as_rational(other)
        if r == 0:
            raise ZeroDivisionError("surd divided by zero")
        return SurdExpr(self.p / r, self.q / r, self.s)

    def __str__(self):
        if self.is_rational:
            return rational_str(self.p)
        return f"{rational_str(self.p)} + {rational_str(self.q)}*sqrt({self.s})"


def surd_sign(e: SurdExpr) -> int:
    """Exact sign of ``p + q*sqrt(s)``."""
    sp = sign(e.p)
    sq = 0 if e.s == 0 else sign(e.q)
    if sq == 0:
        return sp
    if sp == 0 or sp == sq:
        return sq
    # opposite signs: the larger of p^2 and q^2*s wins
    d = e.p * e.p - e.q * e.q * e.s
    if d > 0:
        return sp
    if d < 0:
        return sq
    return 0


def surd_compare(a, b) -> int:
    """Exact sign of ``a - b`` for surds (or rationals) with any radicands."""
    if not isinstance(a, SurdExpr):
        a = SurdExpr(as_rational(a))
    if not isinstance(b, SurdExpr):
        b = SurdExpr(as_rational(b))
    if a.is_rational or b.is_rational or a.s == b.s:
        return surd_sign(a - b)
    # a - b = u + v with u = (pa - pb) + qa*sqrt(sa), v = -qb*sqrt(sb)
    u = SurdExpr(a.p - b.p, a.q, a.s)
    v_coeff = -b.q
    su = surd_sign(u)
    sv = sign(v_coeff)
    if su == 0 or su == sv:
        return sv if su == 0 else su
    if sv == 0:
        return su
    # |u| vs |v|: u^2 - v^2 is again a single-radicand surd
    diff = u * u - v_coeff * v_coeff * b.s
    d = surd_sign(diff)
    if d > 0:
        return su
    if d < 0:
        return sv
    return 0
