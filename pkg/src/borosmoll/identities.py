"""Named quantities, identity certification by grid evaluation, and sign
claims on declared regions.

An identity ``lhs(m, i) == rhs(m, i)`` between rational functions whose
cleared numerator has total degree at most ``D`` is certified by exact
agreement on the triangular grid ``3 <= m <= M, 1 <= i <= m-1`` once
``M >= D + 3``: that grid contains the simplex ``{(M-j, 1+k): j+k <= D}``,
and a polynomial of total degree ``D`` vanishing on such a simplex is zero.
Identities whose left side is read off actual coefficient rows are only
evaluated, not certified, and are reported as finite evidence.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import bounds
from .coefficients import row as _default_rows
from .exactnum import SurdExpr, binomial, sign, surd_compare, surd_sign
from .polys import I as _I
from .polys import M as _M
from .polys import default_table
from .report import VerificationReport, render

__all__ = [
    "Quantities",
    "eval_named",
    "IdentityCheck",
    "standard_identities",
    "verify_identity",
    "identity_grid",
    "SignClaim",
    "standard_sign_claims",
    "verify_sign_claim",
    "lemma32_term_groups",
    "lemma47_check",
    "aim2_check",
    "rep_coefficients",
    "cleared_forms",
    "DEGREES",
]


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class Quantities:
    """Every named quantity evaluated exactly at integer (m, i)."""

    def __init__(self, table=None, rows=_default_rows):
        self.table = default_table() if table is None else table
        self.rows = rows

    def poly(self, name, m, i=0) -> Fraction:
        return Fraction(self.table.eval(name, m, i))

    # section 3
    def A(self, m, i):
        return bounds.quad_abc(m, i, self.table).a_coef

    def B(self, m, i):
        return bounds.quad_abc(m, i, self.table).b_coef

    def C(self, m, i):
        return bounds.quad_abc(m, i, self.table).c_coef

    def Delta1(self, m, i):
        return bounds.quad_abc(m, i, self.table).discriminant

    def Delta1_closed(self, m, i):
        return bounds.delta1_closed(m, i, self.table)

    # section 4
    def U(self, m, i):
        return bounds.quad_uvw(m, i, self.table).u_coef

    def V(self, m, i):
        return bounds.quad_uvw(m, i, self.table).v_coef

    def W(self, m, i):
        return bounds.quad_uvw(m, i, self.table).w_coef

    def Delta2(self, m, i):
        return bounds.quad_uvw(m, i, self.table).discriminant

    def Delta2_closed(self, m, i):
        return bounds.delta2_closed(m, i, self.table)

    def A1(self, m, i):
        return Fraction(2 * (m + 1) * (m + 1 - i))

    def B1(self, m, i):
        return Fraction(4 * m * m + 7 * m + 3 - 2 * i * i)

    def C1(self, m, i):
        return Fraction(4 * i * i + 4 * m + 1)

    def D1(self, m, i):
        return -self.V(m, i) * self.A1(m, i) - 2 * self.U(m, i) * self.B1(m, i)

    def E1(self, m, i):
        u = self.U(m, i)
        return self.D1(m, i) ** 2 - self.A1(m, i) ** 2 * self.Delta2(m, i) - 4 * i * i * u * u * self.C1(m, i)

    def F1(self, m, i):
        u, a1 = self.U(m, i), self.A1(m, i)
        return self.E1(m, i) ** 2 - 16 * i * i * u * u * a1 * a1 * self.Delta2(m, i) * self.C1(m, i)

    def Y1(self, m, i):
        return Fraction((m + i + 1) * (4 * m + 3) * (4 * m + 5), 4 * (m + 2 - i) * (m + 1) * (m + 2))

    def Y2(self, m, i):
        return Fraction(-4 * i * i + 8 * m * m + 24 * m + 19, 2 * (m + 2 - i) * (m + 2))

    def Y3(self, m, i):
        return 2 * self.U(m + 1, i) * self.Y2(m, i) + self.V(m + 1, i)

    def Y4(self, m, i):
        return self.Y3(m, i) ** 2 - self.Delta2(m + 1, i)

    def Z1(self, m, i):
        return 4 * self.U(m, i) * self.U(m + 1, i) * self.Y1(m, i) + self.V(m, i) * self.Y3(m, i)

    def Z2(self, m, i):
        return self.Delta2(m, i) * self.Delta2(m + 1, i) - self.Z1(m, i) ** 2

    def Z3(self, m, i):
        return self.Y3(m, i) ** 2 * self.Delta2(m, i) - self.V(m, i) ** 2 * self.Delta2(m + 1, i)

    def Z4(self, m, i):
        d, dn = self.Delta2(m, i), self.Delta2(m + 1, i)
        return self.V(m, i) ** 2 * dn + self.Y3(m, i) ** 2 * d - self.Z1(m, i) ** 2 - d * dn

    def Z5(self, m, i):
        return 2 * self.Z1(m, i) - 2 * self.V(m, i) * self.Y3(m, i)

    def Z6(self, m, i):
        return self.Z5(m, i) ** 2 * self.Delta2(m, i) * self.Delta2(m + 1, i) - self.Z4(m, i) ** 2

    def L(self, m, i):
        """K's companion: L_RAT + L_SURD*sqrt(4i^2+4m+1)."""
        return SurdExpr(self.poly("L_RAT", m, i), self.poly("L_SURD", m, i), 4 * i * i + 4 * m + 1)

    # univariate
    def g(self, m, i=0):
        return self.poly("g", m)

    def f(self, n, i=0):
        return self.poly("f", n)

    def f_radicand(self, n, i=0):
        """(n-3) f(n), the radicand in the i = n-3 induction step."""
        return (n - 3) * self.poly("f", n)


_UNIVARIATE = {"g", "f", "f_radicand"}
# E in the three-term form and E1 in the second form are unrelated quantities
_ALIASES = {"E1_sec4": "E1", "E": "E_sec3"}


def eval_named(name: str, m: int, i: int = 0, table=None, rows=_default_rows):
    """Exact value of a named polynomial or rational function at (m, i)."""
    q = Quantities(table, rows)
    name = _ALIASES.get(name, name)
    if name in _UNIVARIATE:
        if m < 0:
            raise ValueError(f"{name} is defined for m >= 0")
        return getattr(q, name)(m)
    if not 1 <= i <= m - 1:
        raise ValueError(f"{name} is defined for 1 <= i <= m-1, got m={m}, i={i}")
    if name in q.table:
        return q.poly(name, m, i)
    fn = getattr(q, name, None) if not name.startswith("_") else None
    if fn is None or name in ("poly", "table", "rows"):
        raise KeyError(f"unknown quantity {name!r}")
    return fn(m, i)


# -- represent-1 / represent-2 as identities in x = d_i(m+1), y = d_i(m) -----


def _lin(cx, cy):
    return (_frac(cx), _frac(cy))


def _ladd(*terms):
    return (sum(c * t[0] for c, t in terms), sum(c * t[1] for c, t in terms))


def _lmul(a, b):
    """Product of two linear forms as (xx, xy, yy)."""
    return (a[0] * b[0], a[0] * b[1] + a[1] * b[0], a[1] * b[1])


def _lval_form(lo, mid, hi):
    """mid^2 - lo*hi as a quadratic form."""
    p, q = _lmul(mid, mid), _lmul(lo, hi)
    return tuple(x - y for x, y in zip(p, q))


def rep_coefficients(m: int, i: int, which: int):
    """Coefficients (xx, xy, yy) of the difference after eliminating
    neighbours with the recurrences; ``which`` is 1 or 2."""
    y = _lin(0, 1)
    d_up = _lin(
        Fraction(-(m + 1 - i) * (m + 1), i * (i + 1)),
        Fraction((4 * m - 2 * i + 3) * (m + i + 1), 2 * i * (i + 1)),
    )
    d_dn = _lin(Fraction(m + 1, m + i), Fraction(-(4 * m + 2 * i + 3), 2 * (m + i)))
    if which == 1:
        d_up2 = _ladd((Fraction(2 * m + 1, i + 2), d_up), (Fraction(-(m - i) * (m + i + 1), (i + 1) * (i + 2)), y))
        l_i = _lval_form(d_dn, y, d_up)
        l_ip = _lval_form(y, d_up, d_up2)
        a = (m + 1 - i) * (m + 2 - i) * (m + i + 2) ** 2
        b = (i + 1) * (i + 2) * (m + i + 3) ** 2
        return tuple(a * s - b * t for s, t in zip(l_i, l_ip))
    den = (m + 2 - i) * (m + i - 1)
    d_dn2 = _ladd((Fraction((i - 1) * (2 * m + 1), den), d_dn), (Fraction(-i * (i - 1), den), y))
    l_i = _lval_form(d_dn, y, d_up)
    l_im = _lval_form(d_dn2, d_dn, y)
    a = (i + 1) * (i + 2) * (m + i + 3) ** 2
    b = (m + 1 - i) * (m + 2 - i) * (m + i + 2) ** 2
    return tuple(a * s - b * t for s, t in zip(l_i, l_im))


# -- identities -------------------------------------------------------------


@dataclass
class IdentityCheck:
    """``lhs == rhs`` on a domain.

    ``degree`` bounds the total degree of the cleared numerator of
    ``lhs - rhs``; ``None`` marks identities evaluated on coefficient rows,
    which are reported as evidence rather than certified.  Values may be
    Fractions, SurdExprs sharing a radicand (compared part by part), or
    tuples of those.
    """

    name: str
    lhs: Callable
    rhs: Callable
    degree: int | None = None
    univariate: bool = False
    domain: Callable = field(default=lambda m, i: 1 <= i <= m - 1)
    m_min: int = 3
    compare: str = "exact"  # or "value" for surds with different radicands


def _anywhere(m, i):
    return True


def _components(v):
    if isinstance(v, tuple):
        out = []
        for x in v:
            out.extend(_components(x))
        return out
    if isinstance(v, SurdExpr):
        return [v.p, v.q, v.s if v.q else 0]
    return [_frac(v)]


def _residual(lhs, rhs, compare):
    if compare == "value":
        return surd_compare(lhs, rhs)
    a, b = _components(lhs), _components(rhs)
    return tuple(x - y for x, y in zip(a, b)) if len(a) > 1 else a[0] - b[0]


def _is_zero(res) -> bool:
    if isinstance(res, tuple):
        return all(r == 0 for r in res)
    return res == 0


def standard_identities(table=None, rows=_default_rows) -> list[IdentityCheck]:
    """The printed identities wired to evaluators over ``table``."""
    q = Quantities(table, rows)
    P = q.poly

    def kp_shift(m, i):
        return Fraction(4 * m * m + 7 * m + i + 3, (m + 1) * (m + 1 - i))

    def k_lhs(m, i):
        t = q.A(m, i) * kp_shift(m, i) + q.B(m, i)
        return q.Delta1(m, i) - t * t

    def l_lhs(m, i):
        s = 4 * i * i + 4 * m + 1
        den = (m + 1) * (m + 1 - i)
        a = q.A(m, i)
        t = SurdExpr(a * Fraction(4 * m * m + 7 * m - 2 * i * i + 3, den) + q.B(m, i), a * Fraction(i, den), s)
        sq = t * t
        return SurdExpr(q.Delta1(m, i) - sq.p, -sq.q, s)

    def l_rhs(m, i):
        f = Fraction((m + 1 - i) ** 2 * (m + 1) ** 2, i * i * (i + m) * (i + 1) ** 2)
        return q.L(m, i) * f

    def p_lhs(m, i):
        return q.U(m, i) * kp_shift(m, i) + q.V(m, i)

    def g1h1_lhs(m, i):
        return p_lhs(m, i) ** 2 - q.Delta2(m, i)

    def g_lhs(m, i=0):
        r0, r1 = rows(m), rows(m + 1)
        k = m - 3
        return bounds.quad_uvw(m, k, q.table)(r1[k], r0[k])

    def g_rhs(m, i=0):
        return Fraction(
            (m + 1) ** 2 * (m - 2) * q.g(m) * binomial(2 * m + 2, m + 1) ** 2,
            9216 * (2 * m + 1) ** 2 * (2 * m - 1) ** 2 * (2 * m - 3) ** 2 * 4**m,
        )

    def top_ratio_lhs(n, i=0):
        return rows(n + 2)[n - 3] / rows(n + 1)[n - 3]

    def top_ratio_rhs(n, i=0):
        return Fraction(
            (2 * n + 5) * (16 * n**4 + 80 * n**3 + 180 * n**2 + 240 * n + 189) * (2 * n - 1),
            10 * (n + 2) * (45 + 72 * n + 68 * n**2 + 48 * n**3 + 16 * n**4),
        )

    def top_root_lhs(n, i=0):
        return _aim2_bound(n, q)

    def top_root_rhs(n, i=0):
        return _uvw_plus_root(n + 1, n - 3, q.table)

    rep1 = (lambda m, i: rep_coefficients(m, i, 1), lambda m, i: (q.A(m, i), q.B(m, i), q.C(m, i)))
    rep2 = (lambda m, i: rep_coefficients(m, i, 2), lambda m, i: (q.U(m, i), q.V(m, i), q.W(m, i)))

    return [
        IdentityCheck("represent-1", *rep1, degree=DEGREES["represent-1"]),
        IdentityCheck("represent-2", *rep2, degree=DEGREES["represent-2"]),
        IdentityCheck("Delta1", q.Delta1, q.Delta1_closed, degree=DEGREES["Delta1"]),
        IdentityCheck("Delta2", q.Delta2, q.Delta2_closed, degree=DEGREES["Delta2"]),
        IdentityCheck(
            "K",
            k_lhs,
            lambda m, i: Fraction((m + 1 - i) ** 2 * (m + 1) ** 2, i * i * (i + m) ** 2 * (i + 1) ** 2) * P("K", m, i),
            degree=DEGREES["K"],
        ),
        IdentityCheck("L", l_lhs, l_rhs, degree=DEGREES["L"]),
        IdentityCheck(
            "L_square",
            lambda m, i: P("L1", m, i) ** 2 * (4 * i * i + 4 * m + 1) - P("L0", m, i) ** 2,
            lambda m, i: P("LSQ", m, i),
            degree=DEGREES["L_square"],
        ),
        IdentityCheck(
            "D1",
            q.D1,
            lambda m, i: Fraction(
                2 * (m + 1) ** 2 * (m + 1 - i) * (2 * m + 1) * (i * i - i + m + m * m) * (m + 2 + i) ** 2,
                (i + m) ** 2 * (i + m - 1),
            ),
            degree=DEGREES["D1"],
        ),
        IdentityCheck(
            "E1",
            q.E1,
            lambda m, i: Fraction(-8 * (m + 1 - i) ** 2 * (m + 1) ** 4, i * (m + i - 1) * (m + i) ** 3)
            * P("R1", m, i)
            * P("S1", m, i),
            degree=DEGREES["E1"],
        ),
        IdentityCheck(
            "F1",
            q.F1,
            lambda m, i: Fraction(-256 * (m + 1 - i) ** 4 * (m + 1) ** 8, i * i * (i + m - 1) ** 2 * (i + m) ** 6)
            * P("M1", m, i) ** 2
            * P("N1", m, i),
            degree=DEGREES["F1"],
        ),
        IdentityCheck(
            "P", p_lhs, lambda m, i: Fraction(m + 1, (m + i) ** 2 * (m + i - 1)) * P("P", m, i), degree=DEGREES["P"]
        ),
        IdentityCheck(
            "G1H1",
            g1h1_lhs,
            lambda m, i: Fraction(4 * (m + 1) ** 2, (m + i) ** 4 * (i + m - 1) * i) * P("G1", m, i) * P("H1", m, i),
            degree=DEGREES["G1H1"],
        ),
        IdentityCheck(
            "Y3", q.Y3, lambda m, i: Fraction(m + 2, (m + i) * i * (m + i + 1)) * P("Y5", m, i), degree=DEGREES["Y3"]
        ),
        IdentityCheck(
            "Y4",
            q.Y4,
            lambda m, i: Fraction((m + 2) ** 2, (m + 1 + i) ** 2 * i * i * (m + i)) * P("Y6", m, i),
            degree=DEGREES["Y4"],
        ),
        IdentityCheck("g_at_m_minus_3", g_lhs, g_rhs, univariate=True, m_min=4, domain=_anywhere),
        IdentityCheck(
            "top_ratio_closed_form", top_ratio_lhs, top_ratio_rhs, univariate=True, m_min=4, domain=_anywhere
        ),
        IdentityCheck(
            "top_root_closed_form",
            top_root_lhs,
            top_root_rhs,
            univariate=True,
            m_min=7,
            domain=lambda n, i: q.f_radicand(n) >= 0,
            compare="value",
        ),
    ]


# total degree of the cleared numerator of lhs - rhs, from cleared_forms
# for the scalar identities and a symbolic expansion for represent-1/2
DEGREES = {
    "represent-1": 12,
    "represent-2": 17,
    "Delta1": 16,
    "Delta2": 16,
    "K": 19,
    "L": 19,
    "L_square": 7,
    "D1": 9,
    "E1": 20,
    "F1": 37,
    "P": 10,
    "G1H1": 19,
    "Y3": 10,
    "Y4": 20,
}


def _shift(p):
    return p(_M + 1, _I)


def cleared_forms(table=None) -> dict:
    """Each scalar identity multiplied through by an explicit denominator
    that has no zero on 1 <= i <= m-1: name -> (lhs, rhs) as polynomials.

    Equality of the two polynomials is a symbolic proof; their degree bounds
    the grid needed for certification by evaluation.
    """
    t = default_table() if table is None else table
    m, i = _M, _I
    out = {}
    a_n = -4 * (m + 1) ** 2 * (m + 1 - i) ** 2 * t["D"]
    b_n = 4 * (i - m - 1) * (m + 1) * t["E_sec3"]
    d1 = b_n**2 - 4 * a_n * t["F"]
    out["Delta1"] = (d1, 16 * i**2 * (m + 1 - i) ** 2 * (m + 1) ** 2 * (4 * (m + i) ** 2 * t["G"] + t["H"]))
    qq = (m + 1) * (m + 1 - i)
    tn = a_n * (4 * m**2 + 7 * m + i + 3) + b_n * qq
    out["K"] = (d1 * qq**2 - tn**2, 16 * i**2 * qq**4 * t["K"])
    s = 4 * i**2 + 4 * m + 1
    al = a_n * (4 * m**2 + 7 * m - 2 * i**2 + 3) + b_n * qq
    be = a_n * i
    out["L_rational"] = (d1 * qq**2 - al**2 - be**2 * s, 16 * i**2 * (m + i) * qq**4 * t["L_RAT"])
    out["L_surd"] = (-2 * al * be, 16 * i**2 * (m + i) * qq**4 * t["L_SURD"])
    out["L_square"] = (t["L1"] ** 2 * s - t["L0"] ** 2, t["LSQ"])
    # U, V, W over 4 i (m+i-1) (m+i)^2
    un = 4 * (m + 1) ** 2 * (m + 1 - i) * t["R"] * (m + i - 1)
    vn = 4 * (m + 1) * t["S"]
    d2 = vn**2 - 4 * un * t["T"]
    out["Delta2"] = (d2, 16 * i * (m + i) ** 2 * (m + 1) ** 2 * t["X"])
    a1 = 2 * (m + 1) * (m + 1 - i)
    b1 = 4 * m**2 + 7 * m + 3 - 2 * i**2
    c1 = 4 * i**2 + 4 * m + 1
    dn = -vn * a1 - 2 * un * b1
    out["D1"] = (dn, 8 * i * (m + 1) ** 2 * (m + 1 - i) * (2 * m + 1) * (i**2 - i + m + m**2) * (m + 2 + i) ** 2)
    en = dn**2 - a1**2 * d2 - 4 * i**2 * un**2 * c1
    out["E1"] = (en, -128 * i * (m + i - 1) * (m + i) * (m + 1 - i) ** 2 * (m + 1) ** 4 * t["R1"] * t["S1"])
    fn = en**2 - 16 * i**2 * un**2 * a1**2 * d2 * c1
    out["F1"] = (
        fn,
        -65536 * i**2 * (m + i - 1) ** 2 * (m + i) ** 2 * (m + 1 - i) ** 4 * (m + 1) ** 8 * t["M1"] ** 2 * t["N1"],
    )
    pn = un * (4 * m**2 + 7 * m + i + 3) + vn * qq
    out["P"] = (pn, 4 * i * (m + 1) ** 2 * (m + 1 - i) * t["P"])
    out["G1H1"] = (pn**2 - d2 * qq**2, 64 * i * (m + i - 1) * (m + 1) ** 4 * (m + 1 - i) ** 2 * t["G1"] * t["H1"])
    y3 = 2 * _shift(un) * (-4 * i**2 + 8 * m**2 + 24 * m + 19) + _shift(vn) * 2 * (m + 2 - i) * (m + 2)
    out["Y3"] = (y3, 8 * (m + 2) ** 2 * (m + 2 - i) * (m + i + 1) * t["Y5"])
    out["Y4"] = (
        y3**2 - _shift(d2) * 4 * (m + 2 - i) ** 2 * (m + 2) ** 2,
        64 * (m + 2) ** 4 * (m + 2 - i) ** 2 * (m + i) * (m + i + 1) ** 2 * t["Y6"],
    )
    return out


def identity_grid(m_max: int, m_min: int = 3):
    return [(m, i) for m in range(m_min, m_max + 1) for i in range(1, m)]


def verify_identity(check: IdentityCheck, m_max: int = 40, points=None, fail_fast: bool = False) -> VerificationReport:
    """Evaluate ``lhs - rhs`` at every grid point.

    With no explicit ``points`` the grid is widened to ``degree + 3`` when
    needed, so a pass on a bivariate identity is a certificate.  With
    ``fail_fast`` evaluation stops at the first nonzero residual.
    """
    rep = VerificationReport(f"identity:{check.name}")
    if points is None:
        top = m_max
        if check.degree is not None:
            top = max(top, check.degree + 3)
        if check.univariate:
            points = [(n, 0) for n in range(check.m_min, top + 1)]
        else:
            points = identity_grid(top, check.m_min)
    pts = [p for p in points if check.domain(*p)]
    for m, i in pts:
        rep.checked += 1
        lhs, rhs = check.lhs(m, i), check.rhs(m, i)
        res = _residual(lhs, rhs, check.compare)
        if not _is_zero(res):
            rep.fail(i, lhs, rhs, m=m, residual=res)
            if fail_fast:
                break
    if check.degree is not None and not check.univariate:
        certified = rep.passed and _grid_certifies(pts, check.degree)
        rep.witness = {"degree": check.degree, "certified": certified}
        if rep.passed and not certified:
            rep.notes.append("grid too small for the degree bound: finite evidence only")
    else:
        rep.witness = {"degree": None, "certified": False}
        rep.notes.append("evaluated on coefficient rows or univariate closed forms: finite evidence only")
    return rep


def _grid_certifies(points, degree: int) -> bool:
    """True if ``points`` contains a simplex {(a_j, b_k): j+k <= degree}
    built from the largest m values and the smallest i values."""
    by_m: dict = {}
    for m, i in points:
        by_m.setdefault(m, set()).add(i)
    ms = sorted(by_m, reverse=True)
    if len(ms) < degree + 1:
        return False
    for j in range(degree + 1):
        needed = set(range(1, degree - j + 2))
        if not needed <= by_m[ms[j]]:
            return False
    return True


# -- root helpers for the top-of-range induction step -----------------------


def _uvw_plus_root(m, i, table):
    qf = bounds.quad_uvw(m, i, table)
    disc = qf.discriminant
    return SurdExpr(-qf.v_coef / (2 * qf.u_coef), 1 / (2 * qf.u_coef), disc)


def _aim2_bound(n, q):
    den = 10 * (n + 2) * (2 * n - 3) * (1 + 2 * n + 33 * n * n + 4 * n**4 - 16 * n**3)
    num = 12 - 65 * n + 14 * n * n + 3108 * n**4 - 3041 * n**3 - 1020 * n**5 + 136 * n**6 + 16 * n**7
    return SurdExpr(Fraction(num, den), Fraction(n - 1, den), q.f_radicand(n))


def aim2_check(n: int, table=None, rows=_default_rows) -> bool:
    """d_{n-3}(n+2)/d_{n-3}(n+1) exceeds the U,V-root at (n+1, n-3)."""
    q = Quantities(table, rows)
    r = rows(n + 2)[n - 3] / rows(n + 1)[n - 3]
    return surd_compare(r, _uvw_plus_root(n + 1, n - 3, q.table)) > 0


def lemma47_check(m: int, i: int, table=None) -> bool:
    """The three inequalities behind the induction step for Case 4, each
    decided exactly, plus the step inequality itself."""
    q = Quantities(table)
    d, dn = q.Delta2(m, i), q.Delta2(m + 1, i)
    if d < 0 or dn < 0:
        return False
    z1, v, y3 = q.Z1(m, i), q.V(m, i), q.Y3(m, i)
    prod = d * dn
    # Z1 + sqrt(D D') < 0
    ineq2 = surd_sign(SurdExpr(z1, 1, prod)) < 0
    # V sqrt(D') + Y3 sqrt(D) < 0
    ineq3 = surd_compare(SurdExpr.sqrt(d, y3), SurdExpr.sqrt(dn, -v)) < 0
    # (Z1 + sqrt(DD'))^2 - (V sqrt(D') + Y3 sqrt(D))^2 = Z5 sqrt(DD') - Z4 > 0
    ineq1 = surd_sign(SurdExpr(-q.Z4(m, i), q.Z5(m, i), prod)) > 0
    # root(m) > Y1 / (Y2 - root(m+1)) with Y2 - root(m+1) > 0
    root_m = _uvw_plus_root(m, i, q.table)
    gap = -_uvw_plus_root(m + 1, i, q.table) + q.Y2(m, i)
    step = surd_sign(gap) > 0 and _product_exceeds(root_m, gap, q.Y1(m, i))
    return ineq1 and ineq2 and ineq3 and step


def _product_exceeds(a: SurdExpr, b: SurdExpr, c) -> bool:
    """a*b > c for surds with possibly different radicands."""
    # a*b = a.p b.p + a.p b.q sqrt(sb) + a.q b.p sqrt(sa) + a.q b.q sqrt(sa sb)
    # group as (x + y sqrt(sa)) + sqrt(sb) (u + w sqrt(sa)) and compare both parts
    x = a.p * b.p - c
    left = SurdExpr(x, a.q * b.p, a.s)
    inner = SurdExpr(a.p * b.q, a.q * b.q, a.s)
    # sign(left + sqrt(sb) * inner)
    sl, si = surd_sign(left), surd_sign(inner)
    if si == 0 or b.s == 0:
        return sl > 0
    if sl == 0 or sl == si:
        return (sl or si) > 0
    # compare left^2 with sb * inner^2, both single-radicand surds in sa
    diff = left * left - inner * inner * b.s
    d = surd_sign(diff)
    return (sl if d > 0 else si) > 0 if d != 0 else False


# -- sign claims ------------------------------------------------------------


@dataclass
class SignClaim:
    """``quantity(m, i)`` has sign ``sign`` (+1 / -1; 0 means >= 0) on
    ``region(m, i)`` for ``m >= m_min``."""

    name: str
    quantity: str
    sign: int
    region: Callable
    m_min: int
    univariate: bool = False
    description: str = ""


def _all_i(m, i):
    return 1 <= i <= m - 1


def _case1(m, i):
    return 1 <= i <= m - 1 and bounds.below_case1_threshold(m, i)


def _case2_strip(m, i):
    return 1 <= i <= m - 1 and not bounds.below_case1_threshold(m, i) and 2 * i**3 <= m * m


def _thm44_strip(m, i):
    return 1 <= i <= m - 1 and 2 * i**3 >= m * m and i**3 <= m * m


def _upper_band(m, i):
    return 1 <= i <= m - 1 and i**3 >= m * m


def _case4(m, i):
    return i**3 >= m * m and 1 <= i <= m - 4


def standard_sign_claims() -> list[SignClaim]:
    return [
        SignClaim("A<0", "A", -1, _all_i, 2),
        SignClaim("U>0", "U", 1, _all_i, 2),
        SignClaim("V<0", "V", -1, _all_i, 2),
        SignClaim("G>0", "G", 1, _all_i, 126, description="Lemma: Delta1 > 0 via G"),
        SignClaim("Delta1>0", "Delta1", 1, _all_i, 126),
        SignClaim("K>0", "K", 1, _all_i, 2),
        SignClaim("L>0", "L", 1, _all_i, 2),
        SignClaim("LSQ>0", "LSQ", 1, _all_i, 2),
        SignClaim("D1>0", "D1", 1, _all_i, 2),
        SignClaim("S1<0", "S1", -1, _case1, 15),
        SignClaim("E1>0", "E1", 1, _case1, 15),
        SignClaim("N1<0", "N1", -1, _case1, 15),
        SignClaim("F1>0", "F1", 1, _case1, 15),
        SignClaim("X<0 (Case 2)", "X", -1, _case2_strip, 50),
        SignClaim("X>0 (i >= m^(2/3))", "X", 1, _upper_band, 19),
        SignClaim("P>0", "P", 1, _thm44_strip, 2),
        SignClaim("G1>0", "G1", 1, _thm44_strip, 2),
        SignClaim("H1>0", "H1", 1, _thm44_strip, 2),
        SignClaim("Y1>0", "Y1", 1, _all_i, 2),
        SignClaim("Y2>0", "Y2", 1, _all_i, 2),
        SignClaim("Y3>0", "Y3", 1, _all_i, 2),
        SignClaim("Y4>0", "Y4", 1, _all_i, 2),
        SignClaim("Z1<0", "Z1", -1, _case4, 273),
        SignClaim("Z2<0", "Z2", -1, _case4, 273),
        SignClaim("Z3<0", "Z3", -1, _case4, 273),
        SignClaim("Z4>0", "Z4", 1, _case4, 273),
        SignClaim("Z5>0", "Z5", 1, _case4, 273),
        SignClaim("Z6>0", "Z6", 1, _case4, 273),
        SignClaim("g>0", "g", 1, lambda m, i: True, 273, univariate=True),
        SignClaim("(n-3)f(n)>=0", "f_radicand", 0, lambda m, i: True, 273, univariate=True),
    ]


def _value_sign(v) -> int:
    if isinstance(v, SurdExpr):
        return surd_sign(v)
    return sign(v)


def _magnitude_key(v):
    if isinstance(v, SurdExpr):
        return abs(v.p) + abs(v.q) * v.s
    return abs(v)


def verify_sign_claim(claim: SignClaim, m_values, table=None, i_step: int = 1) -> VerificationReport:
    """Check the claimed strict sign at every admissible point for each m in
    ``m_values`` (every ``i_step``-th i).  The witness is the point of
    smallest magnitude."""
    q = Quantities(table)
    rep = VerificationReport(f"sign:{claim.name}")
    best = None
    for m in m_values:
        if m < claim.m_min:
            continue
        if claim.univariate:
            pts = [0]
        else:
            pts = range(1, m, i_step)
        for i in pts:
            if not claim.univariate and not claim.region(m, i):
                continue
            v = eval_named(claim.quantity, m, i, q.table)
            s = _value_sign(v)
            rep.checked += 1
            ok = s >= 0 if claim.sign == 0 else s == claim.sign
            if not ok:
                rep.fail(i, v, "sign " + str(claim.sign), m=m)
            key = _magnitude_key(v)
            if best is None or key < best[0]:
                best = (key, m, i, v)
    if best is not None:
        rep.witness = {"m": best[1], "i": best[2], "value": render(best[3])}
    rep.notes.append("finite evidence on the sampled region")
    return rep


# -- Delta1 term groups ------------------------------------------------------


def _gt_neg_cuberoot(x: Fraction, coeff: int, power: int, m: int) -> bool:
    """x > -coeff * m^(power/3), decided with cubes."""
    if x >= 0:
        return True
    return (-x) ** 3 < coeff**3 * m**power


def lemma32_term_groups(m: int, i: int) -> bool:
    """The term-by-term bounds that make G positive, in the case for i."""
    t1 = m * m * (2 * i**3 - m * m) ** 2
    t2 = 56 * i**6 * m - 24 * i**3 * m**3
    t3 = 20 * i**5 * m * m - 2 * i * i * m**4
    G = t1 + t2 + t3 + 4 * i**8 + 8 * i**7 * m + 40 * i**7 + 169 * i**6 + 166 * i**5 * m + 70 * i**4 * m * m
    if 7 * i**3 >= 3 * m * m:
        return t1 >= 0 and t2 >= 0 and t3 > 0 and G > 0
    if 10 * i**3 > m * m:
        lower = Fraction(m**6, 49) - Fraction(18 * m**5, 7)
        return (
            t1 >= Fraction(m**6, 49)
            and t2 >= Fraction(-18 * m**5, 7)
            and t3 > 0
            and G >= lower
            and G > 0
            and (m < 126 or lower >= 0)
        )
    lower_poly = Fraction(16 * m**6, 25) - Fraction(46 * m**5, 25)
    rhs_positive = lower_poly > 0 and lower_poly**3 > 8 * m**16
    return (
        t1 >= Fraction(16 * m**6, 25)
        and t2 >= Fraction(-46 * m**5, 25)
        and _gt_neg_cuberoot(Fraction(t3), 2, 16, m)
        and _gt_neg_cuberoot(G - lower_poly, 2, 16, m)
        and (m < 10 or rhs_positive)
    )
