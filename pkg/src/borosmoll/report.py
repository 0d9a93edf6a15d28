"""Verification outcomes shared by every checker."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exactnum import SurdExpr, rational_str

__all__ = ["VerificationError", "VerificationReport", "render"]


class VerificationError(AssertionError):
    """Two routes that must agree did not, or a claimed premise failed."""


def render(x) -> str:
    """Exact string form of a rational, surd or integer."""
    if isinstance(x, SurdExpr):
        return str(x)
    if isinstance(x, (int, Fraction)):
        return rational_str(x)
    if isinstance(x, tuple):
        return "(" + ", ".join(render(v) for v in x) + ")"
    return str(x)


@dataclass
class VerificationReport:
    theorem: str
    m: int | None = None
    checked: int = 0
    skipped_vacuous: int = 0
    violations: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    witness: dict | None = None

    @property
    def passed(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.passed

    def fail(self, i, lhs, rhs, **extra):
        rec = {"i": i, "lhs": render(lhs), "rhs": render(rhs)}
        rec.update({k: render(v) if not isinstance(v, (str, int)) else v for k, v in extra.items()})
        self.violations.append(rec)

    def to_dict(self) -> dict:
        out = {
            "theorem": self.theorem,
            "m": self.m,
            "checked": self.checked,
            "skipped_vacuous": self.skipped_vacuous,
            "pass": self.passed,
            "violations": self.violations,
        }
        if self.notes:
            out["notes"] = self.notes
        if self.witness is not None:
            out["witness"] = self.witness
        return out
