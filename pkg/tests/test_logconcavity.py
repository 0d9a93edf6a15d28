from fractions import Fraction as Fr

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from borosmoll.coefficients import BorosMollRow, row
from borosmoll.logconcavity import (
    RatSequence,
    check_2lc,
    is_log_concave,
    klc_depth,
    l_operator,
    moll_min,
    theorem17_chain,
)
from borosmoll.report import VerificationError
from oracles import l_op, log_concave, moll_min_closed

seqs = st.lists(st.fractions(min_value=0, max_value=100, max_denominator=50), min_size=0, max_size=9)


def test_l_operator_examples():
    assert list(l_operator([1, 1, 1])) == [1, 0, 1]
    assert list(l_operator([Fr(21, 8), Fr(15, 4), Fr(3, 2)])) == [Fr(441, 64), Fr(81, 8), Fr(9, 4)]
    assert list(l_operator([0, 0, 0])) == [0, 0, 0]


def test_log_concave_examples():
    assert is_log_concave([1, 4, 6, 4, 1]) == (True, None)
    assert is_log_concave([1, 1, 2]) == (False, 1)
    assert is_log_concave(list(row(2)))[0]


def test_klc_depth_examples():
    assert klc_depth(list(row(2)), 2) == 2
    assert klc_depth([1, 1, 2], 5) == 0
    assert klc_depth([1, 4, 6, 4, 1], 2) == 2
    with pytest.raises(ValueError):
        klc_depth([1], -1)


def test_rat_sequence_boundary():
    s = RatSequence([1, 2])
    assert s.at(-1) == 0 and s.at(2) == 0 and s.at(1) == 2


@settings(max_examples=200)
@given(seqs)
def test_l_operator_matches_definition(s):
    assert list(l_operator(s)) == l_op(s)
    assert is_log_concave(s)[0] == log_concave(s)


@settings(max_examples=200)
@given(st.integers(1, 20), st.fractions(min_value=Fr(1, 10), max_value=50))
def test_constant_sequence_has_interior_zeros(n, c):
    b = l_operator([c] * n)
    if n == 1:
        assert list(b) == [c * c]
    else:
        assert b[0] == b[-1] == c * c and all(x == 0 for x in b[1:-1])


@settings(max_examples=100)
@given(seqs, st.integers(0, 4))
def test_klc_depth_monotone_in_max_k(s, k):
    assert klc_depth(s, k) <= klc_depth(s, k + 1)
    assert klc_depth(s, k + 1) == k + 1 or klc_depth(s, k + 1) == klc_depth(s, k)


@settings(max_examples=100)
@given(seqs)
def test_klc_depth_reversal_of_palindrome(s):
    pal = s + s[::-1]
    assert klc_depth(pal, 3) == klc_depth(pal[::-1], 3)


def test_check_2lc_small_rows():
    rep = check_2lc(row(2))
    assert rep.passed and rep.checked == 1
    assert check_2lc(row(3)).checked == 2
    with pytest.raises(ValueError):
        check_2lc(row(1))


def test_check_2lc_through_125():
    for m in range(2, 126):
        rep = check_2lc(row(m))
        assert rep.passed, rep.violations
        assert not rep.notes
        assert klc_depth(list(row(m)), 2) == 2


def test_check_2lc_reports_violation():
    # a row whose L sequence is positive but not log-concave at i=1
    r = BorosMollRow(3, (Fr(1), Fr(2), Fr(3), Fr(1)))
    b = l_operator(list(r))
    assert all(x > 0 for x in b)
    rep = check_2lc(r)
    assert not rep.passed
    assert rep.violations[0]["i"] == 1


def test_check_2lc_rejects_nonpositive_l_values():
    with pytest.raises(VerificationError):
        check_2lc(BorosMollRow(2, (Fr(1), Fr(1), Fr(2))))


def test_moll_min_examples():
    seq, rep = moll_min(row(2))
    assert rep.passed
    assert (seq[1], seq[2]) == (Fr(81, 4), Fr(27, 2))
    seq, rep = moll_min(row(3))
    assert seq[3] == 75 and rep.passed


def test_moll_min_through_150():
    for m in range(2, 151):
        seq, rep = moll_min(row(m))
        assert rep.passed, (m, rep.violations)
        assert seq[m] == moll_min_closed(m)
        assert min(seq.e) == seq[m]


def test_theorem17_chain():
    for m in (3, 4, 10, 60):
        assert theorem17_chain(row(m)).passed
    with pytest.raises(ValueError):
        theorem17_chain(row(2))


def test_2lc_report_json_shape():
    d = check_2lc(row(5)).to_dict()
    assert d["theorem"] == "2lc" and d["m"] == 5 and d["pass"] is True and d["violations"] == []
