"""Boros-Moll coefficient rows d_0(m), ..., d_m(m).

Three independent constructions are provided: the single binomial sum, the
double sum expanded in powers of ``a``, and the first-order recurrence in
``m``.  The recurrence is the engine used for sweeps; the sums are oracles.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactnum import binomial

__all__ = [
    "BorosMollRow",
    "row_single_sum",
    "row_double_sum",
    "row_next",
    "rows_by_recurrence",
    "check_recurrences",
    "RowTable",
    "row",
    "ratio",
]


@dataclass(frozen=True)
class BorosMollRow:
    """Coefficients of P_m(a); indexing outside 0..m yields 0."""

    m: int
    d: tuple

    def __post_init__(self):
        if len(self.d) != self.m + 1:
            raise ValueError(f"row for m={self.m} needs {self.m + 1} entries, got {len(self.d)}")
        object.__setattr__(self, "d", tuple(Fraction(x) for x in self.d))

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i <= self.m:
            return self.d[i]
        return Fraction(0)

    def __len__(self):
        return self.m + 1

    def __iter__(self):
        return iter(self.d)

    def scaled(self) -> list[int]:
        """Integers 2^(2m) * d_i(m)."""
        out = []
        for x in self.d:
            y = x * 4**self.m
            if y.denominator != 1:
                raise ValueError(f"2^(2m)*d_i(m) is not integral for m={self.m}: {y}")
            out.append(y.numerator)
        return out

    def replace(self, i: int, value) -> "BorosMollRow":
        d = list(self.d)
        d[i] = Fraction(value)
        return BorosMollRow(self.m, tuple(d))

    def to_json(self) -> str:
        return json.dumps({"m": self.m, "den_pow2": 2 * self.m, "scaled": self.scaled()})

    @classmethod
    def from_json(cls, text: str) -> "BorosMollRow":
        obj = json.loads(text)
        den = 2 ** obj["den_pow2"]
        return cls(obj["m"], tuple(Fraction(c, den) for c in obj["scaled"]))


def row_single_sum(m: int) -> BorosMollRow:
    """d_i(m) = 2^(-2m) sum_k 2^k C(2m-2k, m-k) C(m+k, k) C(k, i)."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    weights = [2**k * binomial(2 * m - 2 * k, m - k) * binomial(m + k, k) for k in range(m + 1)]
    den = 4**m
    d = []
    for i in range(m + 1):
        total = sum(weights[k] * binomial(k, i) for k in range(i, m + 1))
        d.append(Fraction(total, den))
    return BorosMollRow(m, tuple(d))


def _binomial_poly(n: int, c: int) -> list[int]:
    """Ascending coefficients of (a + c)^n."""
    return [binomial(n, t) * c ** (n - t) for t in range(n + 1)]


def _poly_mul(p: Sequence, q: Sequence) -> list:
    out = [0] * (len(p) + len(q) - 1)
    for s, x in enumerate(p):
        if x:
            for t, y in enumerate(q):
                out[s + t] += x * y
    return out


def row_double_sum(m: int) -> BorosMollRow:
    """Expand sum_{j,k} C(2m+1,2j) C(m-j,k) C(2k+2j,k+j) (a+1)^j (a-1)^k / 8^(k+j)."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    coeffs = [Fraction(0)] * (m + 1)
    for j in range(m + 1):
        outer = binomial(2 * m + 1, 2 * j)
        if outer == 0:
            continue
        # inner polynomial in a: sum_k C(m-j,k) C(2k+2j,k+j) (a-1)^k / 8^(k+j)
        inner = [Fraction(0)] * (m - j + 1)
        for k in range(m - j + 1):
            w = Fraction(binomial(m - j, k) * binomial(2 * k + 2 * j, k + j), 8 ** (k + j))
            for t, c in enumerate(_binomial_poly(k, -1)):
                inner[t] += w * c
        term = _poly_mul(_binomial_poly(j, 1), inner)
        for t, c in enumerate(term):
            coeffs[t] += outer * c
    return BorosMollRow(m, tuple(coeffs))


def row_next(r: BorosMollRow) -> BorosMollRow:
    """Row m+1 from row m:
    d_i(m+1) = (m+i)/(m+1) d_{i-1}(m) + (4m+2i+3)/(2(m+1)) d_i(m)."""
    m = r.m
    d = [
        Fraction(m + i, m + 1) * r[i - 1] + Fraction(4 * m + 2 * i + 3, 2 * (m + 1)) * r[i]
        for i in range(m + 2)
    ]
    return BorosMollRow(m + 1, tuple(d))


def rows_by_recurrence(m_max: int) -> list[BorosMollRow]:
    out = [BorosMollRow(0, (Fraction(1),))]
    for _ in range(m_max):
        out.append(row_next(out[-1]))
    return out


def check_recurrences(r0: BorosMollRow, r1: BorosMollRow, r2: BorosMollRow) -> dict:
    """Residuals of the three remaining recurrences for rows m, m+1, m+2.

    Returns ``{"R2": [...], "R3": [...], "R4": [...]}``; each list holds the
    exact residual at i = 0, 1, ... over the admissible range.
    """
    m = r0.m
    if r1.m != m + 1 or r2.m != m + 2:
        raise ValueError(f"rows must be consecutive, got m={r0.m}, {r1.m}, {r2.m}")
    res2 = []
    for i in range(m + 1):
        rhs = (
            Fraction((4 * m - 2 * i + 3) * (m + i + 1), 2 * (m + 1) * (m + 1 - i)) * r0[i]
            - Fraction(i * (i + 1), (m + 1) * (m + 1 - i)) * r0[i + 1]
        )
        res2.append(r1[i] - rhs)
    res3 = []
    for i in range(m + 2):
        rhs = (
            Fraction(-4 * i * i + 8 * m * m + 24 * m + 19, 2 * (m + 2 - i) * (m + 2)) * r1[i]
            - Fraction((m + i + 1) * (4 * m + 3) * (4 * m + 5), 4 * (m + 2 - i) * (m + 1) * (m + 2)) * r0[i]
        )
        res3.append(r2[i] - rhs)
    res4 = [
        (m + 2 - i) * (m + i - 1) * r0[i - 2] - (i - 1) * (2 * m + 1) * r0[i - 1] + i * (i - 1) * r0[i]
        for i in range(m + 2)
    ]
    return {"R2": res2, "R3": res3, "R4": res4}


class RowTable:
    """Grow-only cache of rows built by the recurrence.

    Every ``check_every``-th row is compared against the single sum; a
    mismatch raises ``RuntimeError``.
    """

    def __init__(self, check_every: int = 25):
        self.check_every = check_every
        self._rows = [BorosMollRow(0, (Fraction(1),))]
        self._lock = threading.Lock()

    def __call__(self, m: int) -> BorosMollRow:
        if m < 0:
            raise ValueError("m must be nonnegative")
        if m < len(self._rows):
            return self._rows[m]
        with self._lock:
            while len(self._rows) <= m:
                nxt = row_next(self._rows[-1])
                if self.check_every and nxt.m % self.check_every == 0:
                    if nxt != row_single_sum(nxt.m):
                        raise RuntimeError(f"recurrence drifted from the single sum at m={nxt.m}")
                self._rows.append(nxt)
        return self._rows[m]


row = RowTable()


def ratio(m: int, i: int, rows=row) -> Fraction:
    """d_i(m+1) / d_i(m)."""
    if not 0 <= i <= m:
        raise ValueError(f"ratio needs 0 <= i <= m, got m={m}, i={i}")
    return rows(m + 1)[i] / rows(m)[i]
