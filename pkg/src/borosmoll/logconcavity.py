"""The L operator, k-log-concavity probes, and the 2-log-concavity and
Moll-minimum checks on Boros-Moll rows.

Sequences are indexed 0..n with a_{-1} = a_{n+1} = 0 wherever an operator
reaches past the ends.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactnum import binomial
from .report import VerificationError, VerificationReport

__all__ = [
    "RatSequence",
    "l_operator",
    "is_log_concave",
    "klc_depth",
    "check_2lc",
    "MollMinSequence",
    "moll_min",
    "theorem17_chain",
]


class RatSequence(tuple):
    """Tuple of Fractions; out-of-range indices read as zero via :meth:`at`."""

    def __new__(cls, values: Sequence = ()):
        return super().__new__(cls, (Fraction(v) for v in values))

    def at(self, k: int) -> Fraction:
        if 0 <= k < len(self):
            return self[k]
        return Fraction(0)


def _seq(s) -> RatSequence:
    return s if isinstance(s, RatSequence) else RatSequence(s)


def l_operator(s) -> RatSequence:
    """b_i = a_i^2 - a_{i-1} a_{i+1}."""
    s = _seq(s)
    return RatSequence(s[k] * s[k] - s.at(k - 1) * s.at(k + 1) for k in range(len(s)))


def is_log_concave(s) -> tuple[bool, int | None]:
    """(True, None) if a_i^2 >= a_{i-1} a_{i+1} for 1 <= i <= n, else
    (False, first failing i)."""
    s = _seq(s)
    for k in range(1, len(s)):
        if s[k] * s[k] < s[k - 1] * s.at(k + 1):
            return False, k
    return True, None


def klc_depth(s, max_k: int) -> int:
    """Largest k <= max_k with L^j(s) log-concave for all j < k."""
    if max_k < 0:
        raise ValueError("max_k must be nonnegative")
    cur = _seq(s)
    for k in range(max_k):
        ok, _ = is_log_concave(cur)
        if not ok:
            return k
        cur = l_operator(cur)
    return max_k


def check_2lc(row) -> VerificationReport:
    """Strict L_{i-1}/L_i < L_i/L_{i+1} for 1 <= i <= m-1 (L = l_operator(row)).

    Also runs the plain log-concavity test on L and L^2 over every index,
    boundaries included, and records any disagreement in ``notes``.
    """
    m = row.m
    if m < 2:
        raise ValueError("2-log-concavity check needs m >= 2")
    b = l_operator(list(row))
    rep = VerificationReport("2lc", m)
    for k in range(0, m + 1):
        if b[k] <= 0:
            raise VerificationError(f"L-value b_{k} = {b[k]} is not positive at m={m}")
    for i in range(1, m):
        rep.checked += 1
        # cross-multiplied: b_{i-1} b_{i+1} < b_i^2
        if not b[i - 1] * b[i + 1] < b[i] * b[i]:
            rep.fail(i, b[i - 1] / b[i], b[i] / b[i + 1])
    ok1, at1 = is_log_concave(b)
    ok2, at2 = is_log_concave(l_operator(b))
    if ok1 != rep.passed:
        rep.notes.append(f"full log-concavity of L disagrees with the strict check (first failure at {at1})")
    if not ok2:
        rep.notes.append(f"L^2 is not log-concave (first failure at {at2})")
    return rep


@dataclass(frozen=True)
class MollMinSequence:
    m: int
    e: tuple  # e[0] is e_1

    def __getitem__(self, i: int) -> Fraction:
        """e_i for 1 <= i <= m."""
        return self.e[i - 1]


def moll_min(row) -> tuple[MollMinSequence, VerificationReport]:
    """e_i = i(i+1)(d_i^2 - d_{i-1} d_{i+1}); check minimum, closed form at
    i = m and log-concavity."""
    m = row.m
    if m < 2:
        raise ValueError("moll_min needs m >= 2")
    e = tuple(i * (i + 1) * (row[i] ** 2 - row[i - 1] * row[i + 1]) for i in range(1, m + 1))
    seq = MollMinSequence(m, e)
    rep = VerificationReport("moll_min", m)
    for i in range(1, m + 1):
        rep.checked += 1
        if seq[i] <= 0:
            rep.fail(i, seq[i], 0, claim="e_i > 0")
    for i in range(1, m):
        if not seq[m] < seq[i]:
            rep.fail(i, seq[m], seq[i], claim="strict minimum at i=m")
    closed = Fraction(m * (m + 1) * binomial(2 * m, m) ** 2, 4**m)
    if seq[m] != closed:
        rep.fail(m, seq[m], closed, claim="closed form")
    ok, at = is_log_concave(e)
    if not ok:
        rep.fail(at + 1, e[at] ** 2, e[at - 1] * (e[at + 1] if at + 1 < len(e) else 0), claim="log-concave")
    return seq, rep


def theorem17_chain(row) -> VerificationReport:
    """The three inequalities turning 2-log-concavity into log-concavity of
    the e-sequence, each checked exactly at every admissible i."""
    m = row.m
    if m < 3:
        raise ValueError("theorem17_chain needs m >= 3")
    b = l_operator(list(row))
    rep = VerificationReport("thm17_chain", m)

    def q(k):
        return b[k] / b[k + 1]

    for i in range(2, m):
        rep.checked += 1
        factor = Fraction(i * (i + 1), (i - 1) * (i + 2))
        if not factor > 1:
            rep.fail(i, factor, 1, step="i(i+1)/((i-1)(i+2)) > 1")
        lhs, rhs = q(i - 1), factor * q(i)
        if not lhs < rhs:
            rep.fail(i, lhs, rhs, step="first")
    for i in range(1, m - 1):
        rep.checked += 2
        lhs, rhs = q(i), Fraction((i + 1) * (i + 2), i * (i + 3)) * q(i + 1)
        if not lhs < rhs:
            rep.fail(i, lhs, rhs, step="shifted")
        lhs = i * (i + 1) * b[i] / ((i + 1) * (i + 2) * b[i + 1])
        rhs = (i + 1) * (i + 2) * b[i + 1] / ((i + 2) * (i + 3) * b[i + 2])
        if not lhs < rhs:
            rep.fail(i, lhs, rhs, step="rewritten")
    return rep
