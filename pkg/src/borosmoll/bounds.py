"""Ratio bounds, the two quadratic forms and the root-interval theorems.

Both differences that make up 2-log-concavity are quadratic forms in
``x = d_i(m+1)`` and ``y = d_i(m)``::

    A x^2 + B x y + C y^2      (upper half, via f(m, i))
    U x^2 + V x y + W y^2      (lower half)

Each theorem here places the ratio ``x/y`` relative to a root of one of
these forms; all comparisons are exact surd comparisons.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .coefficients import ratio as _ratio
from .coefficients import row as _default_rows
from .exactnum import SurdExpr, surd_compare
from .polys import default_table
from .report import VerificationError, VerificationReport

__all__ = [
    "f_intermediate",
    "kp_lower",
    "cg_upper",
    "check_ratio_bounds",
    "QuadFormABC",
    "QuadFormUVW",
    "quad_abc",
    "delta1",
    "delta1_closed",
    "quad_uvw",
    "delta2",
    "delta2_closed",
    "theorem31_check",
    "theorem14_check",
    "theorem15_check",
    "f_sandwich",
    "CaseLabel",
    "classify_case",
    "icbrt",
    "below_case1_threshold",
    "in_theorem42_region",
    "in_theorem44_region",
    "in_theorem45_region",
    "theorem42_check",
    "theorem44_check",
    "theorem45_check",
    "sweep",
]


def _tbl(table):
    return default_table() if table is None else table


def f_intermediate(m: int, i: int) -> Fraction:
    if not 0 <= i <= m:
        raise ValueError(f"need 0 <= i <= m, got m={m}, i={i}")
    return Fraction(
        (i + 1) * (i + 2) * (m + i + 3) ** 2,
        (m + 1 - i) * (m + 2 - i) * (m + i + 2) ** 2,
    )


def kp_lower(m: int, i: int) -> Fraction:
    """Kauers-Paule lower bound on d_i(m+1)/d_i(m), 0 < i < m."""
    if not 0 < i < m:
        raise ValueError(f"need 0 < i < m, got m={m}, i={i}")
    return Fraction(4 * m * m + 7 * m + i + 3, 2 * (m + 1 - i) * (m + 1))


def cg_upper(m: int, i: int) -> SurdExpr:
    """Chen-Gu upper bound (4m^2+7m+3-2i^2 + i*sqrt(4m+4i^2+1)) / (2(m+1)(m+1-i))."""
    if not 0 <= i <= m:
        raise ValueError(f"need 0 <= i <= m, got m={m}, i={i}")
    den = 2 * (m + 1) * (m + 1 - i)
    return SurdExpr(
        Fraction(4 * m * m + 7 * m + 3 - 2 * i * i, den),
        Fraction(i, den),
        4 * m + 4 * i * i + 1,
    )


def check_ratio_bounds(m: int, rows=_default_rows) -> VerificationReport:
    rep = VerificationReport("ratio_bounds", m)
    for i in range(1, m):
        r = _ratio(m, i, rows)
        lo = kp_lower(m, i)
        hi = cg_upper(m, i)
        rep.checked += 1
        if r < lo:
            rep.fail(i, lo, r, side="lower")
        if surd_compare(r, hi) > 0:
            rep.fail(i, r, hi, side="upper")
    return rep


# -- quadratic form A, B, C -------------------------------------------------


@dataclass(frozen=True)
class QuadFormABC:
    a_coef: Fraction
    b_coef: Fraction
    c_coef: Fraction

    def __call__(self, x, y):
        return self.a_coef * x * x + self.b_coef * x * y + self.c_coef * y * y

    @property
    def discriminant(self) -> Fraction:
        return self.b_coef**2 - 4 * self.a_coef * self.c_coef


def quad_abc(m: int, i: int, table=None) -> QuadFormABC:
    t = _tbl(table)
    base = (m + i) * i * i * (i + 1)
    a = Fraction(-((m + 1) ** 2) * (m + 1 - i) ** 2 * t.eval("D", m, i), base)
    b = Fraction((i - m - 1) * (m + 1) * t.eval("E_sec3", m, i), base)
    c = Fraction(t.eval("F", m, i), 4 * base)
    return QuadFormABC(a, b, c)


def delta1_closed(m: int, i: int, table=None) -> Fraction:
    t = _tbl(table)
    num = (m + 1 - i) ** 2 * (m + 1) ** 2 * (4 * (m + i) ** 2 * t.eval("G", m, i) + t.eval("H", m, i))
    return Fraction(num, i * i * (i + m) ** 2 * (i + 1) ** 2)


def delta1(m: int, i: int, table=None) -> Fraction:
    """B^2 - 4AC, cross-checked against the closed form in G and H."""
    d = quad_abc(m, i, table).discriminant
    closed = delta1_closed(m, i, table)
    if d != closed:
        raise VerificationError(f"Delta1 mismatch at (m={m}, i={i}): {d} != {closed}")
    return d


# -- quadratic form U, V, W -------------------------------------------------


@dataclass(frozen=True)
class QuadFormUVW:
    u_coef: Fraction
    v_coef: Fraction
    w_coef: Fraction

    def __call__(self, x, y):
        return self.u_coef * x * x + self.v_coef * x * y + self.w_coef * y * y

    @property
    def discriminant(self) -> Fraction:
        return self.v_coef**2 - 4 * self.u_coef * self.w_coef


def quad_uvw(m: int, i: int, table=None) -> QuadFormUVW:
    t = _tbl(table)
    u = Fraction((m + 1) ** 2 * (m + 1 - i) * t.eval("R", m, i), i * (m + i) ** 2)
    v = Fraction((m + 1) * t.eval("S", m, i), i * (m + i - 1) * (m + i) ** 2)
    w = Fraction(t.eval("T", m, i), 4 * i * (m + i - 1) * (m + i) ** 2)
    return QuadFormUVW(u, v, w)


def delta2_closed(m: int, i: int, table=None) -> Fraction:
    t = _tbl(table)
    return Fraction((m + 1) ** 2 * t.eval("X", m, i), i * (m + i) ** 2 * (m + i - 1) ** 2)


def delta2(m: int, i: int, table=None) -> Fraction:
    """V^2 - 4UW, cross-checked against the closed form in X."""
    d = quad_uvw(m, i, table).discriminant
    closed = delta2_closed(m, i, table)
    if d != closed:
        raise VerificationError(f"Delta2 mismatch at (m={m}, i={i}): {d} != {closed}")
    return d


def _roots(lead, mid, disc):
    """Roots (-mid -/+ sqrt(disc)) / (2 lead), returned as (minus, plus)."""
    minus = SurdExpr(-mid / (2 * lead), -1 / (2 * lead), disc)
    plus = SurdExpr(-mid / (2 * lead), 1 / (2 * lead), disc)
    return minus, plus


# -- the L-ratio differences ------------------------------------------------


def _lval(r, k):
    return r[k] * r[k] - r[k - 1] * r[k + 1]


def _upper_difference(r, m, i):
    return (m + 1 - i) * (m + 2 - i) * (m + i + 2) ** 2 * _lval(r, i) - (i + 1) * (i + 2) * (
        m + i + 3
    ) ** 2 * _lval(r, i + 1)


def _lower_difference(r, m, i):
    return (i + 1) * (i + 2) * (m + i + 3) ** 2 * _lval(r, i) - (m + 1 - i) * (m + 2 - i) * (
        m + i + 2
    ) ** 2 * _lval(r, i - 1)


def theorem14_check(m: int, i: int, table=None, rows=_default_rows) -> bool:
    """f(m,i) < L_i / L_{i+1}: the difference is computed from the row and as
    A x^2 + B x y + C y^2; the two must agree exactly."""
    if not 1 <= i <= m - 1:
        raise ValueError(f"need 1 <= i <= m-1, got m={m}, i={i}")
    r0, r1 = rows(m), rows(m + 1)
    direct = _upper_difference(r0, m, i)
    via_form = quad_abc(m, i, table)(r1[i], r0[i])
    if direct != via_form:
        raise VerificationError(f"represent-1 mismatch at (m={m}, i={i})")
    return direct > 0


def theorem15_check(m: int, i: int, table=None, rows=_default_rows) -> bool:
    """L_{i-1} / L_i < f(m,i), by the same two routes with U, V, W."""
    if not 1 <= i <= m - 1:
        raise ValueError(f"need 1 <= i <= m-1, got m={m}, i={i}")
    r0, r1 = rows(m), rows(m + 1)
    direct = _lower_difference(r0, m, i)
    via_form = quad_uvw(m, i, table)(r1[i], r0[i])
    if direct != via_form:
        raise VerificationError(f"represent-2 mismatch at (m={m}, i={i})")
    return direct > 0


def f_sandwich(m: int, i: int, rows=_default_rows) -> bool:
    """L_{i-1}/L_i < f(m,i) < L_i/L_{i+1}, with L taken on row m."""
    r = rows(m)
    lm, l0, lp = _lval(r, i - 1), _lval(r, i), _lval(r, i + 1)
    if l0 <= 0 or lp <= 0:
        raise VerificationError(f"nonpositive L value at (m={m}, i={i})")
    f = f_intermediate(m, i)
    return lm / l0 < f < l0 / lp


def theorem31_check(m: int, i: int, table=None, rows=_default_rows) -> bool:
    """Ratio strictly between the roots of A t^2 + B t + C (A < 0)."""
    if m < 126 or not 1 <= i <= m - 1:
        raise ValueError(f"theorem31_check needs m >= 126 and 1 <= i <= m-1, got m={m}, i={i}")
    q = quad_abc(m, i, table)
    if q.a_coef >= 0:
        raise VerificationError(f"A(m,i) >= 0 at (m={m}, i={i})")
    disc = delta1(m, i, table)
    if disc <= 0:
        raise VerificationError(f"Delta1 <= 0 at (m={m}, i={i})")
    # A < 0: the '+sqrt' root is the smaller one
    hi, lo = _roots(q.a_coef, q.b_coef, disc)
    r = _ratio(m, i, rows)
    return surd_compare(lo, r) < 0 and surd_compare(r, hi) < 0


# -- the five cases ---------------------------------------------------------


class CaseLabel(enum.Enum):
    Case1 = 1
    Case2 = 2
    Case3 = 3
    Case4 = 4
    Case5 = 5


def icbrt(n: int) -> int:
    """Floor of the real cube root of n >= 0."""
    if n < 0:
        raise ValueError("icbrt of a negative number")
    if n < 2:
        return n
    x = 1 << ((n.bit_length() + 2) // 3)
    while True:
        y = (2 * x + n // (x * x)) // 3
        if y >= x:
            break
        x = y
    while x**3 > n:
        x -= 1
    while (x + 1) ** 3 <= n:
        x += 1
    return x


def below_case1_threshold(m: int, i: int) -> bool:
    """Exact test of i < (m^2/2)^(1/3) - m^(1/3), i.e. 2(i + m^(1/3))^3 < m^2.

    m^(1/3) is bracketed by [r/K, (r+1)/K] with r = icbrt(m K^3) and K
    doubled until the bracket decides.  Equality cannot occur: it would put
    m^(1/3) on a rational quadratic, impossible unless it is rational, and
    the rational case is decided directly.
    """
    m2 = m * m
    c = icbrt(m)
    if c**3 == m:
        return 2 * (i + c) ** 3 < m2
    k = 1
    while True:
        scale = 1 << k
        r = icbrt(m * scale**3)
        lo = Fraction(r, scale)
        hi = Fraction(r + 1, scale)
        if 2 * (i + hi) ** 3 < m2:
            return True
        if 2 * (i + lo) ** 3 >= m2:
            return False
        k += 8


def classify_case(m: int, i: int) -> CaseLabel:
    if not 1 <= i <= m - 1:
        raise ValueError(f"need 1 <= i <= m-1, got m={m}, i={i}")
    if i >= m - 3:
        return CaseLabel.Case5
    if i**3 >= m * m:
        return CaseLabel.Case4
    if below_case1_threshold(m, i):
        return CaseLabel.Case1
    if 2 * i**3 <= m * m:
        return CaseLabel.Case2
    return CaseLabel.Case3


def in_theorem42_region(m: int, i: int) -> bool:
    return m >= 15 and 1 <= i <= m - 1 and below_case1_threshold(m, i)


def in_theorem44_region(m: int, i: int) -> bool:
    return m >= 2 and 1 <= i <= m - 1 and 2 * i**3 >= m * m and i**3 <= m * m


def in_theorem45_region(m: int, i: int) -> bool:
    return m >= 273 and i**3 >= m * m and i <= m - 4


def _uvw_roots(m, i, table):
    q = quad_uvw(m, i, table)
    disc = delta2(m, i, table)
    return q, disc


def theorem42_check(m: int, i: int, table=None, rows=_default_rows) -> bool:
    """Ratio below (-V - sqrt(Delta2)) / (2U).  True (vacuously) when Delta2 < 0."""
    if not in_theorem42_region(m, i):
        raise ValueError(f"(m={m}, i={i}) is outside the thm42 region")
    q, disc = _uvw_roots(m, i, table)
    if disc < 0:
        return True
    lo, _ = _roots(q.u_coef, q.v_coef, disc)
    return surd_compare(_ratio(m, i, rows), lo) < 0


def theorem44_check(m: int, i: int, table=None, rows=_default_rows) -> bool:
    """Ratio above (-V + sqrt(Delta2)) / (2U).  True (vacuously) when Delta2 < 0."""
    if not in_theorem44_region(m, i):
        raise ValueError(f"(m={m}, i={i}) is outside the thm44 region")
    q, disc = _uvw_roots(m, i, table)
    if disc < 0:
        return True
    _, hi = _roots(q.u_coef, q.v_coef, disc)
    return surd_compare(_ratio(m, i, rows), hi) > 0


def theorem45_check(m: int, i: int, table=None, rows=_default_rows) -> bool:
    """Ratio above (-V + sqrt(Delta2)) / (2U) for m >= 273, m^(2/3) <= i <= m-4."""
    if not in_theorem45_region(m, i):
        raise ValueError(f"(m={m}, i={i}) is outside the thm45 region")
    q, disc = _uvw_roots(m, i, table)
    if disc < 0:
        raise VerificationError(f"Delta2 < 0 at (m={m}, i={i}) inside the thm45 region")
    _, hi = _roots(q.u_coef, q.v_coef, disc)
    return surd_compare(_ratio(m, i, rows), hi) > 0


# -- sweeps -----------------------------------------------------------------

_POINT_CHECKS = {
    "thm14": (theorem14_check, lambda m, i: 1 <= i <= m - 1, None),
    "thm15": (theorem15_check, lambda m, i: 1 <= i <= m - 1, None),
    "thm31": (theorem31_check, lambda m, i: m >= 126 and 1 <= i <= m - 1, None),
    "thm42": (theorem42_check, in_theorem42_region, "delta2"),
    "thm44": (theorem44_check, in_theorem44_region, "delta2"),
    "thm45": (theorem45_check, in_theorem45_region, None),
}


def sweep(theorem: str, m: int, table=None, rows=_default_rows) -> VerificationReport:
    """Run one point theorem over every admissible i at a single m."""
    if theorem == "ratio_bounds":
        return check_ratio_bounds(m, rows)
    if theorem == "f_sandwich":
        rep = VerificationReport(theorem, m)
        for i in range(1, m):
            rep.checked += 1
            if not f_sandwich(m, i, rows):
                rep.fail(i, "L ratios", f_intermediate(m, i))
        return rep
    check, region, vacuity = _POINT_CHECKS[theorem]
    rep = VerificationReport(theorem, m)
    for i in range(1, m):
        if not region(m, i):
            continue
        if vacuity == "delta2" and delta2(m, i, table) < 0:
            rep.skipped_vacuous += 1
            continue
        rep.checked += 1
        try:
            ok = check(m, i, table, rows)
        except VerificationError as exc:
            rep.fail(i, "error", str(exc))
            continue
        if not ok:
            rep.fail(i, "ratio", _ratio(m, i, rows))
    if rep.skipped_vacuous:
        rep.notes.append("vacuous points: Delta2 < 0, quadratic has no real roots, form positive by U > 0")
    return rep

