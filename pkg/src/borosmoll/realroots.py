"""Exact real-root counting with Sturm chains, applied to P_m and the two
conjectured real-rooted companions Q_m and R_m."""

from __future__ import annotations

import math
from fractions import Fraction

from .coefficients import row as _default_rows
from .report import VerificationReport

__all__ = [
    "UniPoly",
    "sturm_chain",
    "sign_variations",
    "count_real_roots",
    "build_Q",
    "build_R",
    "build_P",
    "root_report",
    "conjecture_sweep",
]


class UniPoly:
    """Univariate polynomial with Fraction coefficients, ascending degree.
    Trailing zeros are dropped, so the leading coefficient is nonzero."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [Fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({[str(c) for c in self.coeffs]})"

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            return UniPoly(c * other for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for a, x in enumerate(self.coeffs):
            for b, y in enumerate(other.coeffs):
                out[a + b] += x * y
        return UniPoly(out)

    __rmul__ = __mul__

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def derivative(self) -> "UniPoly":
        return UniPoly(k * c for k, c in enumerate(self.coeffs) if k)

    def divmod(self, other: "UniPoly"):
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dq = other.degree
        quot = [Fraction(0)] * max(0, len(rem) - dq)
        for k in range(len(rem) - 1, dq - 1, -1):
            f = rem[k] / other.lead
            if f:
                quot[k - dq] = f
                for j, c in enumerate(other.coeffs):
                    rem[k - dq + j] -= f * c
        return UniPoly(quot), UniPoly(rem[:dq])

    def primitive(self) -> "UniPoly":
        """Integer coefficients with gcd 1, same signs (scaled by a positive
        rational)."""
        if self.is_zero():
            return self
        den = math.lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        g = math.gcd(*ints)
        return UniPoly(x // g for x in ints)


def sturm_chain(p: UniPoly) -> list[UniPoly]:
    """p, p', then negated remainders, each reduced to a primitive integer
    polynomial by a positive factor."""
    if p.is_zero():
        raise ValueError("zero polynomial has no Sturm chain")
    chain = [p.primitive()]
    d = p.derivative()
    if d.is_zero():
        return chain
    chain.append(d.primitive())
    while True:
        _, r = chain[-2].divmod(chain[-1])
        if r.is_zero():
            return chain
        chain.append((-r).primitive())


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def sign_variations(signs) -> int:
    s = [x for x in signs if x]
    return sum(1 for a, b in zip(s, s[1:]) if a != b)


def count_real_roots(p: UniPoly) -> tuple[int, int]:
    """(distinct real roots, degree of the squarefree part)."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    if p.degree < 1:
        raise ValueError("need a polynomial of degree >= 1")
    chain = sturm_chain(p)
    at_pos = [_sign(q.lead) for q in chain]
    at_neg = [_sign(q.lead) * (-1) ** q.degree for q in chain]
    # the last chain member is gcd(p, p') up to a nonzero constant
    return sign_variations(at_neg) - sign_variations(at_pos), p.degree - chain[-1].degree


def build_P(m: int, rows=_default_rows) -> UniPoly:
    return UniPoly(rows(m).d)


def build_Q(m: int, rows=_default_rows) -> UniPoly:
    return UniPoly(c / math.factorial(k) for k, c in enumerate(rows(m).d))


def build_R(m: int, rows=_default_rows) -> UniPoly:
    return UniPoly(c / math.factorial(k + 2) for k, c in enumerate(rows(m).d))


_BUILDERS = {"P": build_P, "Q": build_Q, "R": build_R}


def root_report(which: str, m: int, rows=_default_rows) -> dict:
    if which not in _BUILDERS:
        raise ValueError(f"unknown polynomial family {which!r}; expected P, Q or R")
    n, sq = count_real_roots(_BUILDERS[which](m, rows))
    return {"poly": which, "m": m, "real_roots": n, "sqfree_deg": sq, "real_rooted": n == sq}


def conjecture_sweep(which: str, m_max: int, m_min: int = 1, rows=_default_rows) -> VerificationReport:
    """Real-rootedness verdict for each m in [m_min, m_max].

    A failure is recorded per m that is not real-rooted.  For Q the R verdict
    is computed too, and R real-rooted with Q not is recorded as a violation
    of the derivative link.
    """
    if m_max < 1 or m_min < 1:
        raise ValueError("sweeps start at m >= 1")
    rep = VerificationReport(f"roots:{which}")
    rep.witness = {"per_m": []}
    for m in range(m_min, m_max + 1):
        r = root_report(which, m, rows)
        rep.witness["per_m"].append(r)
        rep.checked += 1
        if not r["real_rooted"]:
            rep.fail(m, r["real_roots"], r["sqfree_deg"], claim="real-rooted")
        if which in ("Q", "R"):
            other = root_report("R" if which == "Q" else "Q", m, rows)
            q_ok = r["real_rooted"] if which == "Q" else other["real_rooted"]
            r_ok = other["real_rooted"] if which == "Q" else r["real_rooted"]
            if r_ok and not q_ok:
                rep.fail(m, "R real-rooted", "Q not real-rooted", claim="R implies Q")
    return rep
