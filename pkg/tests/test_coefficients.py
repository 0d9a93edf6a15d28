import json
from fractions import Fraction as Fr
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from borosmoll.coefficients import (
    BorosMollRow,
    RowTable,
    check_recurrences,
    ratio,
    row,
    row_double_sum,
    row_next,
    row_single_sum,
    rows_by_recurrence,
)
from oracles import log_concave, row_from_double_sum, row_from_single_sum

SMALL_ROWS = {
    0: [Fr(1)],
    1: [Fr(3, 2), Fr(1)],
    2: [Fr(21, 8), Fr(15, 4), Fr(3, 2)],
    3: [Fr(77, 16), Fr(43, 4), Fr(35, 4), Fr(5, 2)],
}


@pytest.mark.parametrize("m", sorted(SMALL_ROWS))
@pytest.mark.parametrize("engine", [row_single_sum, row_double_sum])
def test_small_rows(engine, m):
    assert list(engine(m)) == SMALL_ROWS[m]


def test_row_next_steps():
    assert list(row_next(BorosMollRow(0, (1,)))) == SMALL_ROWS[1]
    assert list(row_next(BorosMollRow(1, SMALL_ROWS[1]))) == SMALL_ROWS[2]
    assert list(row_next(BorosMollRow(2, SMALL_ROWS[2]))) == SMALL_ROWS[3]


@pytest.mark.parametrize("m", range(0, 16))
def test_engines_match_sympy_oracle(m):
    expected = row_from_double_sum(m)
    assert list(row_double_sum(m)) == expected
    assert list(row_single_sum(m)) == expected
    assert list(row(m)) == expected


def test_engines_agree_to_60():
    rec = rows_by_recurrence(60)
    for m in range(61):
        assert row_single_sum(m) == row_double_sum(m) == rec[m]
        assert list(rec[m]) == row_from_single_sum(m)


def test_integrality_and_positivity():
    for m in range(61):
        r = row(m)
        assert all(x > 0 for x in r)
        assert all(isinstance(x, int) for x in r.scaled())


def test_unimodal_peak_in_the_middle():
    for m in range(1, 201):
        d = list(row(m))
        peak = d.index(max(d))
        assert peak == m // 2
        assert all(d[k] < d[k + 1] for k in range(peak))
        assert all(d[k] > d[k + 1] for k in range(peak, m))


def test_factorial_weighted_rows_are_log_concave():
    for m in range(1, 201, 7):
        assert log_concave([factorial(i) * x for i, x in enumerate(row(m))])


def test_normalized_ratio_between_one_and_six_fifths():
    for m in range(2, 201, 9):
        for i in range(1, m):
            v = 2 * (m + 1) * (m + 1 - i) * ratio(m, i) / (4 * m * m + 7 * m + i + 3)
            assert 1 <= v <= Fr(6, 5)


@pytest.mark.parametrize("m", [0, 1, 5, 20, 60])
def test_recurrence_residuals_vanish(m):
    res = check_recurrences(row(m), row(m + 1), row(m + 2))
    assert len(res["R2"]) == m + 1 and len(res["R3"]) == m + 2 and len(res["R4"]) == m + 2
    assert all(v == 0 for vals in res.values() for v in vals)


def test_corrupted_entry_shows_in_residuals():
    r1 = row(6).replace(3, row(6)[3] + Fr(1, 1000))
    res = check_recurrences(row(5), r1, row(7))
    assert res["R2"][3] != 0
    assert res["R3"][3] != 0
    assert all(v == 0 for i, v in enumerate(res["R2"]) if i != 3)


def test_recurrences_reject_non_consecutive_rows():
    with pytest.raises(ValueError):
        check_recurrences(row(1), row(3), row(4))


def test_ratio_examples():
    assert ratio(2, 1) == Fr(43, 15)
    assert ratio(1, 0) == Fr(7, 4)
    # d_2(3) / d_2(2) = (35/4) / (3/2)
    assert ratio(2, 2) == Fr(35, 6)
    with pytest.raises(ValueError):
        ratio(2, 3)


def test_out_of_range_reads_zero():
    r = row(4)
    assert r[-1] == 0 and r[5] == 0 and len(r) == 5


def test_json_round_trip():
    r = row(12)
    doc = json.loads(r.to_json())
    assert doc["m"] == 12 and doc["den_pow2"] == 24
    assert all(isinstance(x, int) for x in doc["scaled"])
    assert BorosMollRow.from_json(r.to_json()) == r


def test_row_length_enforced():
    with pytest.raises(ValueError):
        BorosMollRow(2, (1, 2))


def test_row_table_detects_drift(monkeypatch):
    import borosmoll.coefficients as c

    table = RowTable(check_every=5)
    real_next = c.row_next

    def bad_next(r):
        out = real_next(r)
        return out.replace(0, out[0] + 1) if out.m == 4 else out

    monkeypatch.setattr(c, "row_next", bad_next)
    with pytest.raises(RuntimeError):
        table(6)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 40))
def test_row_next_matches_single_sum(m):
    assert row_next(row_single_sum(m)) == row_single_sum(m + 1)
