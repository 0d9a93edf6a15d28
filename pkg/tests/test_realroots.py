from fractions import Fraction as Fr

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from borosmoll.coefficients import row
from borosmoll.realroots import (
    UniPoly,
    build_P,
    build_Q,
    build_R,
    conjecture_sweep,
    count_real_roots,
    root_report,
    sign_variations,
    sturm_chain,
)
from oracles import q_coeffs, r_coeffs, real_root_count, sqfree_degree

coeff_lists = st.lists(st.integers(-20, 20), min_size=2, max_size=7).filter(lambda c: c[-1] != 0)


def test_trivial_examples():
    assert count_real_roots(UniPoly([-1, 0, 1])) == (2, 2)
    assert count_real_roots(UniPoly([1, 0, 1])) == (0, 2)
    assert count_real_roots(UniPoly([1, -2, 1])) == (1, 1)


def test_builders():
    assert build_Q(2).coeffs == (Fr(21, 8), Fr(15, 4), Fr(3, 4))
    assert build_R(1).coeffs == (Fr(3, 4), Fr(1, 6))
    assert build_P(2).coeffs == (Fr(21, 8), Fr(15, 4), Fr(3, 2))


def test_p2_has_no_real_roots():
    assert count_real_roots(build_P(2)) == (0, 2)


def test_q2_discriminant_agrees():
    c0, c1, c2 = build_Q(2).coeffs
    assert c1 * c1 - 4 * c2 * c0 == Fr(99, 16)
    assert count_real_roots(build_Q(2)) == (2, 2)


def test_zero_and_constant_rejected():
    with pytest.raises(ValueError):
        count_real_roots(UniPoly([0, 0]))
    with pytest.raises(ValueError):
        count_real_roots(UniPoly([3]))


def test_leading_zeros_dropped():
    assert UniPoly([1, 2, 0, 0]).degree == 1


def test_chain_degrees_strictly_decrease():
    for m in (3, 8, 15):
        chain = sturm_chain(build_Q(m))
        degs = [p.degree for p in chain]
        assert all(a > b for a, b in zip(degs, degs[1:]))
        assert all(all(c.denominator == 1 for c in p.coeffs) for p in chain)


@settings(max_examples=150, deadline=None)
@given(coeff_lists)
def test_counts_match_sympy(c):
    p = UniPoly(c)
    assert count_real_roots(p) == (real_root_count(list(p.coeffs)), sqfree_degree(list(p.coeffs)))


@settings(max_examples=100, deadline=None)
@given(coeff_lists)
def test_complex_pair_factor_changes_nothing(c):
    p = UniPoly(c)
    assert count_real_roots(p * UniPoly([1, 0, 1]))[0] == count_real_roots(p)[0]


@settings(max_examples=100)
@given(coeff_lists, st.fractions(min_value=Fr(1, 100), max_value=100))
def test_positive_scaling_keeps_variations(c, k):
    p = UniPoly(c)
    for x in (-3, 0, Fr(1, 2), 5):
        a = [(q(x) > 0) - (q(x) < 0) for q in sturm_chain(p)]
        b = [(q(x) > 0) - (q(x) < 0) for q in sturm_chain(p * k)]
        assert sign_variations(a) == sign_variations(b)


@pytest.mark.parametrize("m", [1, 5, 12, 20])
def test_q_and_r_against_oracle(m):
    d = list(row(m))
    assert root_report("Q", m)["real_roots"] == real_root_count(q_coeffs(d))
    assert root_report("R", m)["real_roots"] == real_root_count(r_coeffs(d))


def test_sweeps():
    assert conjecture_sweep("Q", 10).passed
    assert conjecture_sweep("R", 10).passed
    rep = conjecture_sweep("P", 10)
    assert not rep.passed
    assert [v["i"] for v in rep.violations][0] == 2


def test_report_shape():
    assert root_report("P", 2) == {"poly": "P", "m": 2, "real_roots": 0, "sqfree_deg": 2, "real_rooted": False}
    with pytest.raises(ValueError):
        root_report("Z", 2)
    with pytest.raises(ValueError):
        conjecture_sweep("Q", 0)
