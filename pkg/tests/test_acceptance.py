"""The twelve acceptance criteria.  Every check is exact; each test prints
one PASS/FAIL line and the terminal summary repeats them in order."""

import random
from fractions import Fraction

import pytest

from borosmoll import bounds, identities, logconcavity, realroots
from borosmoll.coefficients import check_recurrences, row, row_double_sum, row_single_sum, rows_by_recurrence
from borosmoll.polys import default_table
from oracles import moll_min_closed

pytestmark = pytest.mark.slow


def _sweep_all(theorem, ms):
    bad = [m for m in ms if not bounds.sweep(theorem, m).passed]
    return not bad, f"failing m: {bad[:5]}" if bad else f"m {ms[0]}..{ms[-1]}"


def test_01_engines_agree(criterion):
    rec = rows_by_recurrence(60)
    bad = [m for m in range(61) if not (row_single_sum(m) == row_double_sum(m) == rec[m])]
    assert criterion(1, "single sum = double sum = recurrence, 0 <= m <= 60", not bad, str(bad[:5]))


def test_02_recurrence_residuals(criterion):
    bad = []
    for m in range(61):
        res = check_recurrences(row(m), row(m + 1), row(m + 2))
        if any(v != 0 for vals in res.values() for v in vals):
            bad.append(m)
    assert criterion(2, "recurrence residuals vanish, 0 <= m <= 60", not bad, str(bad[:5]))


def test_03_two_log_concavity(criterion):
    base = [m for m in range(2, 126) if not logconcavity.check_2lc(row(m)).passed]
    ext = [m for m in range(126, 301) if not logconcavity.check_2lc(row(m)).passed]
    ok = not base and not ext
    assert criterion(3, "2-log-concave for 2 <= m <= 125 and through 300", ok, f"{base[:3]} {ext[:3]}")


def test_04_theorem15_base(criterion):
    ok, detail = _sweep_all("thm15", range(2, 273))
    assert criterion(4, "lower L-ratio bound for all i, 2 <= m <= 272", ok, detail)


def test_05_theorem14_and_sandwich(criterion):
    ok1, d1 = _sweep_all("thm14", range(2, 273))
    ok2, d2 = _sweep_all("f_sandwich", range(2, 273))
    assert criterion(5, "upper L-ratio bound and f sandwich, 2 <= m <= 272", ok1 and ok2, f"{d1}; {d2}")


def test_06_ratio_bounds(criterion):
    ok, detail = _sweep_all("ratio_bounds", range(2, 201))
    assert criterion(6, "kp_lower <= ratio <= cg_upper, m <= 200", ok, detail)


def test_07_moll_minimum(criterion):
    bad = []
    for m in range(2, 151):
        seq, rep = logconcavity.moll_min(row(m))
        e = list(seq.e)  # e[0] is e_1
        unique_min = e.count(min(e)) == 1 and e.index(min(e)) + 1 == m
        if not (rep.passed and unique_min and seq[m] == moll_min_closed(m) and logconcavity.is_log_concave(e)[0]):
            bad.append(m)
    assert criterion(7, "e-sequence minimum at i = m with closed form, log-concave, 2 <= m <= 150", not bad, str(bad[:5]))


def _identity_reports(names=None):
    checks = identities.standard_identities()
    if names is not None:
        checks = [c for c in checks if c.name in names]
    return {c.name: identities.verify_identity(c, m_max=40) for c in checks}


def test_08_discriminants_certified(criterion):
    reps = _identity_reports({"Delta1", "Delta2"})
    ok = len(reps) == 2 and all(r.passed and r.witness["certified"] for r in reps.values())
    forms = identities.cleared_forms()
    symbolic = all(forms[k][0] == forms[k][1] for k in ("Delta1", "Delta2"))
    assert criterion(8, "Delta1 and Delta2 closed forms certified on the 3..40 grid", ok and symbolic)


def test_09_identity_suite(criterion):
    reps = _identity_reports()
    wanted = {
        "represent-1", "represent-2", "K", "L", "L_square", "E1", "F1", "P", "G1H1", "Y3", "Y4",
        "g_at_m_minus_3", "top_ratio_closed_form",
    }
    missing = wanted - set(reps)
    failed = [n for n, r in reps.items() if not r.passed]
    uncertified = [n for n, r in reps.items() if r.witness["degree"] is not None and not r.witness["certified"]]
    ok = not missing and not failed and not uncertified
    assert criterion(9, "identity suite has zero residual on its grids", ok, f"{sorted(missing)} {failed} {uncertified}")


def _claim(name):
    return next(c for c in identities.standard_sign_claims() if c.name == name)


def test_10_sign_suite(criterion):
    failures = []

    def claim(name, ms):
        rep = identities.verify_sign_claim(_claim(name), ms)
        if not rep.passed or not rep.checked:
            failures.append(name)

    claim("G>0", range(126, 201))
    claim("Delta1>0", range(126, 201))
    claim("X<0 (Case 2)", range(50, 201))
    claim("X>0 (i >= m^(2/3))", range(19, 201))
    for n in range(1, 7):
        claim(next(c.name for c in identities.standard_sign_claims() if c.quantity == f"Z{n}"), range(273, 321))
    claim("g>0", range(273, 1001))
    for m in (126, 150, 200):
        if not bounds.sweep("thm31", m).passed:
            failures.append(f"thm31@{m}")
    for th, lo in (("thm42", 15), ("thm44", 2), ("thm45", 273)):
        ok, _ = _sweep_all(th, range(lo, 321))
        if not ok:
            failures.append(th)
    assert criterion(10, "sign claims hold on their declared regions", not failures, str(failures))


def test_11_real_roots(criterion):
    q = realroots.conjecture_sweep("Q", 20)
    r = realroots.conjecture_sweep("R", 20)
    p2 = realroots.root_report("P", 2)
    implication = all(
        not rr["real_rooted"] or qq["real_rooted"] for qq, rr in zip(q.witness["per_m"], r.witness["per_m"])
    )
    ok = q.passed and r.passed and p2["real_roots"] == 0 and implication
    assert criterion(11, "Q_m, R_m real-rooted for m <= 20; P_2 has no real roots; R implies Q", ok)


def _table_fault_detected(bad):
    for check in identities.standard_identities(bad):
        if not identities.verify_identity(check, m_max=40, fail_fast=True).passed:
            return True
    return False


def _row_fault_detected(m, bad_row):
    def get(k):
        return bad_row if k == m else row(k)

    for start in range(max(0, m - 2), m + 1):
        res = check_recurrences(get(start), get(start + 1), get(start + 2))
        if any(v != 0 for vals in res.values() for v in vals):
            return True
    return False


def test_12_fault_injection(criterion):
    rng = random.Random(20240917)
    table = default_table()
    names = table.names()
    missed = []
    for k in range(50):
        delta = rng.choice([-3, -2, -1, 1, 2, 3])
        if k % 2 == 0:
            name = rng.choice(names)
            key = rng.choice(sorted(table[name].terms))
            if not _table_fault_detected(table.perturbed(name, key, delta)):
                missed.append((name, key, delta))
        else:
            m = rng.randint(0, 60)
            i = rng.randint(0, m)
            r = row(m)
            bad = r.replace(i, r[i] + Fraction(delta, rng.randint(1, 9)))
            if not _row_fault_detected(m, bad):
                missed.append(("row", m, i, delta))
    assert criterion(12, "50 seeded single-coefficient faults all detected", not missed, str(missed[:5]))
