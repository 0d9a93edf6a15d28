"""Command-line driver: ``python -m borosmoll <command> ...``.

Every command writes JSON lines (or CSV) with one record per item followed
by a summary record.  Exit status is 0 when everything passes, 1 on any
verification failure and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import bounds, identities, logconcavity, realroots
from .coefficients import check_recurrences, row, row_double_sum, row_single_sum
from .exactnum import rational_str

OUTPUT_DIR_ENV = "BM_OUTPUT_DIR"

PER_M_THEOREMS = {
    "recurrences": 0,
    "2lc": 2,
    "mollmin": 2,
    "thm17": 3,
    "ratio": 2,
    "fsandwich": 2,
    "thm14": 2,
    "thm15": 2,
    "thm31": 2,
    "thm42": 2,
    "thm44": 2,
    "thm45": 2,
    "lemma32": 2,
    "lemma47": 2,
    "aim2": 7,
}
GLOBAL_THEOREMS = ("identities", "signs")
ALL_THEOREMS = tuple(PER_M_THEOREMS) + GLOBAL_THEOREMS

_SWEEP_NAMES = {
    "ratio": "ratio_bounds",
    "fsandwich": "f_sandwich",
    "thm14": "thm14",
    "thm15": "thm15",
    "thm31": "thm31",
    "thm42": "thm42",
    "thm44": "thm44",
    "thm45": "thm45",
}


# -- per-item workers (module level so they pickle) -------------------------


def _verify_one(task) -> dict:
    theorem, m = task
    if m < PER_M_THEOREMS[theorem]:
        return {"theorem": theorem, "m": m, "checked": 0, "skipped_vacuous": 0, "pass": True, "violations": []}
    if theorem in _SWEEP_NAMES:
        rep = bounds.sweep(_SWEEP_NAMES[theorem], m)
        rep.theorem = theorem
        return rep.to_dict()
    if theorem == "2lc":
        rep = logconcavity.check_2lc(row(m))
    elif theorem == "mollmin":
        _, rep = logconcavity.moll_min(row(m))
    elif theorem == "thm17":
        rep = logconcavity.theorem17_chain(row(m))
    elif theorem == "recurrences":
        rep = _recurrence_report(m)
    else:
        rep = _lemma_report(theorem, m)
    rep.theorem = theorem
    return rep.to_dict()


def _recurrence_report(m):
    from .report import VerificationReport

    rep = VerificationReport("recurrences", m)
    res = check_recurrences(row(m), row(m + 1), row(m + 2))
    for name, values in res.items():
        for i, v in enumerate(values):
            rep.checked += 1
            if v != 0:
                rep.fail(i, v, 0, recurrence=name)
    return rep


def _lemma_report(theorem, m):
    from .report import VerificationReport

    rep = VerificationReport(theorem, m)
    if theorem == "aim2":
        rep.checked = 1
        if not identities.aim2_check(m):
            rep.fail(m - 3, "ratio", "root bound")
        return rep
    for i in range(1, m):
        if theorem == "lemma32":
            ok = identities.lemma32_term_groups(m, i)
        else:
            if not bounds.in_theorem45_region(m, i):
                continue
            ok = identities.lemma47_check(m, i)
        rep.checked += 1
        if not ok:
            rep.fail(i, "term groups" if theorem == "lemma32" else "inequalities", "fail")
    return rep


def _identity_one(task) -> dict:
    name, grid = task
    check = next(c for c in identities.standard_identities() if c.name == name)
    rep = identities.verify_identity(check, m_max=grid)
    out = rep.to_dict()
    out["grid"] = grid
    return out


def _sign_one(task) -> dict:
    name, m_min, m_max, i_step = task
    claim = next(c for c in identities.standard_sign_claims() if c.name == name)
    rep = identities.verify_sign_claim(claim, range(max(m_min, claim.m_min), m_max + 1), i_step=i_step)
    out = rep.to_dict()
    out["m_range"] = [max(m_min, claim.m_min), m_max]
    return out


def _coeffs_one(m) -> dict:
    r = row(m)
    agree = r == row_single_sum(m) == row_double_sum(m)
    return {"m": m, "den_pow2": 2 * m, "scaled": r.scaled(), "engines_agree": agree, "pass": agree}


def _roots_one(task) -> dict:
    which, m = task
    return realroots.root_report(which, m)


def _depth_one(task) -> dict:
    m, max_k = task
    d = logconcavity.klc_depth(list(row(m)), max_k)
    return {"m": m, "max_k": max_k, "depth": d, "asserted": max_k <= 2, "pass": max_k > 2 or d == max_k}


def _run(fn, tasks, jobs):
    if jobs <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, tasks, chunksize=1))


# -- output -----------------------------------------------------------------


def _jsonable(x):
    if isinstance(x, Fraction):
        return rational_str(x)
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _format(records, summary, fmt) -> str:
    if fmt == "json":
        lines = [json.dumps(_jsonable(r), sort_keys=False) for r in records]
        lines.append(json.dumps(_jsonable(summary)))
        return "\n".join(lines) + "\n"
    buf = io.StringIO()
    keys = []
    for r in records:
        for k in r:
            if k not in keys:
                keys.append(k)
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(keys)
    for r in records:
        w.writerow(
            [
                json.dumps(_jsonable(r[k])) if isinstance(r.get(k), (list, dict)) else _jsonable(r.get(k, ""))
                for k in keys
            ]
        )
    buf.write("# summary " + json.dumps(_jsonable(summary)) + "\n")
    return buf.getvalue()


def _emit(args, text):
    path = args.output
    if path is None and os.environ.get(OUTPUT_DIR_ENV):
        ext = "jsonl" if args.format == "json" else "csv"
        path = os.path.join(os.environ[OUTPUT_DIR_ENV], f"{args.command}.{ext}")
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
        with open(path, "w") as fh:
            fh.write(text)


# -- commands ---------------------------------------------------------------


def cmd_coeffs(args):
    return _run(_coeffs_one, list(range(args.m_min, args.m_max + 1)), args.jobs)


def cmd_verify(args):
    records = []
    for th in args.theorems:
        if th == "identities":
            names = [c.name for c in identities.standard_identities()]
            records += _run(_identity_one, [(n, args.grid) for n in names], args.jobs)
        elif th == "signs":
            names = [c.name for c in identities.standard_sign_claims()]
            records += _run(_sign_one, [(n, args.m_min, args.m_max, args.i_step) for n in names], args.jobs)
        else:
            records += _run(_verify_one, [(th, m) for m in range(args.m_min, args.m_max + 1)], args.jobs)
    return records


def cmd_roots(args):
    recs = _run(_roots_one, [(args.which, m) for m in range(args.m_min, args.m_max + 1)], args.jobs)
    if args.which == "P":
        # reported only: P_m is not expected to be real-rooted
        return recs, True
    ok = all(r["real_rooted"] for r in recs)
    # R real-rooted must imply Q real-rooted
    other = "R" if args.which == "Q" else "Q"
    for r in recs:
        o = realroots.root_report(other, r["m"])
        q_ok, r_ok = (r, o) if args.which == "Q" else (o, r)
        if r_ok["real_rooted"] and not q_ok["real_rooted"]:
            ok = False
    return recs, ok


def cmd_depth(args):
    if args.sequence is not None:
        try:
            seq = [Fraction(x) for x in args.sequence.split(",") if x.strip()]
        except ValueError:
            raise _UsageError(f"--sequence must be comma-separated rationals, got {args.sequence!r}")
        d = logconcavity.klc_depth(seq, args.max_k)
        return [
            {
                "sequence": [rational_str(x) for x in seq],
                "max_k": args.max_k,
                "depth": d,
                "asserted": False,
                "pass": True,
            }
        ]
    return _run(_depth_one, [(m, args.max_k) for m in range(args.m_min, args.m_max + 1)], args.jobs)


class _UsageError(Exception):
    pass


def _theorem_list(text):
    items = [t.strip() for t in text.split(",") if t.strip()]
    if items == ["all"]:
        return list(ALL_THEOREMS)
    bad = [t for t in items if t not in ALL_THEOREMS]
    if bad or not items:
        raise argparse.ArgumentTypeError(f"unknown theorem(s) {bad}; choose from {', '.join(ALL_THEOREMS)} or 'all'")
    return items


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="borosmoll", description="Exact verification of Boros-Moll inequalities.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--output", help=f"output file (default: ${OUTPUT_DIR_ENV}/<command>.<ext> or stdout)")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("coeffs", parents=[common], help="rows by three engines, cross-checked")
    c.add_argument("--m-min", type=int, default=0)
    c.add_argument("--m-max", type=int, required=True)

    v = sub.add_parser("verify", parents=[common], help="run theorem checks")
    v.add_argument("--theorems", type=_theorem_list, default=["2lc"], help="comma list or 'all'")
    v.add_argument("--m-min", type=int, default=2)
    v.add_argument("--m-max", type=int, default=40)
    v.add_argument("--grid", type=int, default=40, help="identity grid: 3 <= m <= GRID (widened to the degree bound)")
    v.add_argument("--i-step", type=int, default=1, help="sample every I_STEP-th i for sign claims")

    r = sub.add_parser("roots", parents=[common], help="Sturm real-root counts")
    r.add_argument("--which", choices=("P", "Q", "R"), required=True)
    r.add_argument("--m-min", type=int, default=1)
    r.add_argument("--m-max", type=int, required=True)

    d = sub.add_parser("depth", parents=[common], help="k-log-concavity depth probe")
    d.add_argument("--m-min", type=int, default=0)
    d.add_argument("--m-max", type=int, default=30)
    d.add_argument("--max-k", type=int, default=2)
    d.add_argument("--sequence", help="comma-separated rationals instead of rows")
    return p


def _validate(p, args):
    if args.jobs < 1:
        p.error("--jobs must be >= 1")
    if args.command == "verify":
        if args.m_min < 2:
            p.error("verify needs --m-min >= 2")
        if args.grid < 3:
            p.error("--grid must be >= 3")
        if args.i_step < 1:
            p.error("--i-step must be >= 1")
    if args.command == "roots" and args.m_min < 1:
        p.error("roots needs --m-min >= 1")
    if args.command == "depth" and args.max_k < 0:
        p.error("--max-k must be >= 0")
    if args.command == "coeffs" and args.m_min < 0:
        p.error("--m-min must be >= 0")
    if args.m_min > args.m_max:
        p.error("--m-min exceeds --m-max")


def _config(args) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if k != "output"}


def main(argv=None) -> int:
    p = build_parser()
    args = p.parse_args(argv)
    _validate(p, args)
    t0 = time.perf_counter()
    try:
        if args.command == "coeffs":
            records, ok = cmd_coeffs(args), None
        elif args.command == "verify":
            records, ok = cmd_verify(args), None
        elif args.command == "roots":
            records, ok = cmd_roots(args)
        else:
            records, ok = cmd_depth(args), None
    except _UsageError as exc:
        p.error(str(exc))
    failures = [r for r in records if r.get("pass") is False]
    if ok is None:
        ok = not failures
    summary = {
        "summary": True,
        "command": args.command,
        "config": _config(args),
        "items": len(records),
        "failures": len(failures),
        "pass": ok,
        "wall_time": round(time.perf_counter() - t0, 3),
    }
    _emit(args, _format(records, summary, args.format))
    if not ok:
        for r in failures[:5]:
            sys.stderr.write("FAIL " + json.dumps(_jsonable(r))[:2000] + "\n")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
