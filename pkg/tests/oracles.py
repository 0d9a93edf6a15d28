"""Reference computations that share no code with the package.

They are slow and simple on purpose: sympy polynomial expansion for rows,
sympy's exact root counting, integer square roots for surd signs, and the
definitions of the L operator and log-concavity written out longhand.
"""

from fractions import Fraction
from math import comb, factorial, isqrt

import sympy as sp

_a = sp.Symbol("a")


def row_from_double_sum(m):
    """Coefficients of the double sum, expanded by sympy."""
    expr = 0
    for j in range(m + 1):
        for k in range(m - j + 1):
            c = sp.Rational(comb(2 * m + 1, 2 * j) * comb(m - j, k) * comb(2 * k + 2 * j, k + j), 2 ** (3 * (k + j)))
            expr += c * (_a + 1) ** j * (_a - 1) ** k
    poly = sp.Poly(sp.expand(expr), _a)
    coeffs = poly.all_coeffs()[::-1]
    coeffs += [0] * (m + 1 - len(coeffs))
    return [Fraction(int(sp.numer(c)), int(sp.denom(c))) for c in coeffs]


def row_from_single_sum(m):
    out = []
    for i in range(m + 1):
        s = sum(2**k * comb(2 * m - 2 * k, m - k) * comb(m + k, k) * comb(k, i) for k in range(i, m + 1))
        out.append(Fraction(s, 4**m))
    return out


def real_root_count(coeffs):
    """Distinct real roots of sum coeffs[k] x^k via sympy."""
    x = sp.Symbol("x")
    p = sp.Poly(sum(sp.Rational(c.numerator, c.denominator) * x**k for k, c in enumerate(coeffs)), x)
    return p.count_roots()


def sqfree_degree(coeffs):
    x = sp.Symbol("x")
    p = sp.Poly(sum(sp.Rational(c.numerator, c.denominator) * x**k for k, c in enumerate(coeffs)), x)
    return sp.Poly(sp.quo(p, sp.gcd(p, p.diff(x))), x).degree()


def sign_by_bracketing(p, q, s, bits=64):
    """Sign of p + q*sqrt(s) by bracketing sqrt(s) between consecutive
    multiples of 2^-bits, doubling precision until the bracket decides.
    Returns 0 only when s is a perfect square and the value vanishes."""
    p, q = Fraction(p), Fraction(q)
    r = isqrt(s)
    if r * r == s:
        v = p + q * r
        return (v > 0) - (v < 0)
    if q == 0:
        return (p > 0) - (p < 0)
    while True:
        scale = 1 << bits
        lo_int = isqrt(s * scale * scale)
        lo, hi = Fraction(lo_int, scale), Fraction(lo_int + 1, scale)
        a, b = p + q * lo, p + q * hi
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        bits *= 2


def l_op(seq):
    n = len(seq)
    get = lambda k: seq[k] if 0 <= k < n else 0  # noqa: E731
    return [get(k) ** 2 - get(k - 1) * get(k + 1) for k in range(n)]


def log_concave(seq):
    n = len(seq)
    get = lambda k: seq[k] if 0 <= k < n else 0  # noqa: E731
    return all(get(k) ** 2 >= get(k - 1) * get(k + 1) for k in range(1, n))


def moll_min_closed(m):
    return Fraction(m * (m + 1) * comb(2 * m, m) ** 2, 4**m)


def q_coeffs(row):
    return [Fraction(c) / factorial(k) for k, c in enumerate(row)]


def r_coeffs(row):
    return [Fraction(c) / factorial(k + 2) for k, c in enumerate(row)]
