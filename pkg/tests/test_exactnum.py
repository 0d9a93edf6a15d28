from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from borosmoll.exactnum import SurdExpr, as_rational, binomial, rational_str, sign, surd_compare, surd_sign
from oracles import sign_by_bracketing

rationals = st.fractions(max_denominator=10**6).filter(lambda x: abs(x) < 10**9)
radicands = st.integers(min_value=0, max_value=10**12)


@pytest.mark.parametrize("n,k,expected", [(4, 2, 6), (6, 3, 20), (3, 5, 0), (5, -1, 0), (0, 0, 1)])
def test_binomial_examples(n, k, expected):
    assert binomial(n, k) == expected


def test_binomial_rejects_negative_n():
    with pytest.raises(ValueError):
        binomial(-1, 0)


@pytest.mark.parametrize(
    "p,q,s,expected",
    [(1, 0, 5, 1), (-3, 1, 9, 0), (-2, 1, 3, -1), (0, 0, 0, 0), (2, -1, 3, 1), (-1, -1, 2, -1)],
)
def test_surd_sign_examples(p, q, s, expected):
    assert surd_sign(SurdExpr(Fraction(p), Fraction(q), s)) == expected


def test_surd_compare_examples():
    assert surd_compare(SurdExpr.sqrt(2), SurdExpr.sqrt(3)) == -1
    assert surd_compare(SurdExpr(Fraction(3, 2), 0, 0), SurdExpr(Fraction(3, 2), 0, 7)) == 0
    assert surd_compare(SurdExpr(1, 1, 5), SurdExpr(4)) == -1


def test_rational_radicand_is_folded():
    e = SurdExpr.sqrt(Fraction(2, 3))
    # sqrt(2/3) = sqrt(6)/3
    assert (e.s, e.q) == (6, Fraction(1, 3))
    assert surd_compare(e * e, Fraction(2, 3)) == 0


def test_square_radicand_collapses():
    assert SurdExpr(1, 2, 9).is_rational
    assert surd_compare(SurdExpr(1, 2, 9), 7) == 0


def test_negative_radicand_rejected():
    with pytest.raises(ValueError):
        SurdExpr(0, 1, -2)


def test_rational_str():
    assert rational_str(Fraction(-6, 4)) == "-3/2"
    assert rational_str(5) == "5/1"
    with pytest.raises(TypeError):
        as_rational(0.5)


@settings(max_examples=300)
@given(rationals, radicands)
def test_zero_q_is_sign_of_p(p, s):
    assert surd_sign(SurdExpr(p, 0, s)) == sign(p)


@settings(max_examples=500)
@given(rationals, rationals, radicands)
def test_surd_sign_matches_bracketing(p, q, s):
    assert surd_sign(SurdExpr(p, q, s)) == sign_by_bracketing(p, q, s)


@settings(max_examples=300)
@given(rationals, rationals, st.integers(0, 10**6), rationals, rationals, st.integers(0, 10**6))
def test_surd_compare_matches_difference_sign(pa, qa, sa, pb, qb, sb):
    a, b = SurdExpr(pa, qa, sa), SurdExpr(pb, qb, sb)
    got = surd_compare(a, b)
    assert got == -surd_compare(b, a)
    if a.s == b.s or a.q == 0 or b.q == 0:
        # single radicand: the difference is itself a surd
        c = a - b if a.s == b.s or b.q == 0 else -(b - a)
        assert got == sign_by_bracketing(c.p, c.q, c.s)


@settings(max_examples=200)
@given(rationals, rationals, rationals, rationals, rationals, rationals, st.integers(0, 1000))
def test_field_laws_on_common_radicand(p1, q1, p2, q2, p3, q3, s):
    a, b, c = SurdExpr(p1, q1, s), SurdExpr(p2, q2, s), SurdExpr(p3, q3, s)
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


def test_mixed_radicands_refuse_arithmetic():
    with pytest.raises(ValueError):
        SurdExpr(0, 1, 2) + SurdExpr(0, 1, 3)
