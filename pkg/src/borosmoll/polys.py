"""Sparse bivariate integer polynomials in (m, i) and the stored table of
named polynomials.

The table lives in ``data/polynomials.txt`` as ``NAME e_m e_i coefficient``
lines, preceded by a ``# sha256`` header over the body.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from importlib import resources

__all__ = ["BivarPoly", "PolyTable", "load_table", "default_table", "M", "I"]


class BivarPoly:
    """Polynomial sum c[(a, b)] * m^a * i^b with integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for k, c in dict(terms).items():
                if c:
                    self.terms[(int(k[0]), int(k[1]))] = int(c)

    @classmethod
    def const(cls, c: int) -> "BivarPoly":
        return cls({(0, 0): c})

    @classmethod
    def _lift(cls, x) -> "BivarPoly":
        if isinstance(x, BivarPoly):
            return x
        if isinstance(x, int):
            return cls.const(x)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return BivarPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BivarPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                k = (a1 + a2, b1 + b2)
                out[k] = out.get(k, 0) + c1 * c2
        return BivarPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = BivarPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return False
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"BivarPoly({dict(sorted(self.terms.items()))})"

    def __call__(self, m, i=0):
        """Evaluate at integers or rationals."""
        if not self.terms:
            return 0
        am = max(a for a, _ in self.terms)
        bi = max(b for _, b in self.terms)
        mp = [1] * (am + 1)
        for k in range(1, am + 1):
            mp[k] = mp[k - 1] * m
        ip = [1] * (bi + 1)
        for k in range(1, bi + 1):
            ip[k] = ip[k - 1] * i
        return sum(c * mp[a] * ip[b] for (a, b), c in self.terms.items())

    @property
    def total_degree(self) -> int:
        return max((a + b for a, b in self.terms), default=-1)

    @property
    def degree_m(self) -> int:
        return max((a for a, _ in self.terms), default=-1)

    @property
    def degree_i(self) -> int:
        return max((b for _, b in self.terms), default=-1)

    def with_coefficient(self, key, value: int) -> "BivarPoly":
        out = dict(self.terms)
        out[key] = value
        return BivarPoly(out)


M = BivarPoly({(1, 0): 1})
I = BivarPoly({(0, 1): 1})


@dataclass(frozen=True)
class PolyTable:
    """Read-only mapping from name to :class:`BivarPoly`."""

    polys: dict

    def __getitem__(self, name: str) -> BivarPoly:
        try:
            return self.polys[name]
        except KeyError:
            raise KeyError(f"unknown polynomial {name!r}") from None

    def __contains__(self, name):
        return name in self.polys

    def names(self):
        return list(self.polys)

    def eval(self, name: str, m, i=0):
        return self[name](m, i)

    def perturbed(self, name: str, key, delta: int = 1) -> "PolyTable":
        p = self[name]
        new = dict(self.polys)
        new[name] = p.with_coefficient(key, p.terms.get(key, 0) + delta)
        return PolyTable(new)

    def body_lines(self) -> list[str]:
        lines = []
        for name, p in self.polys.items():
            for (a, b), c in sorted(p.terms.items()):
                lines.append(f"{name} {a} {b} {c}")
        return lines

    def dumps(self) -> str:
        body = "\n".join(self.body_lines()) + "\n"
        digest = hashlib.sha256(body.encode()).hexdigest()
        return f"# sha256 {digest}\n" + body

    @classmethod
    def loads(cls, text: str, verify: bool = True) -> "PolyTable":
        lines = text.splitlines(keepends=True)
        digest = None
        if lines and lines[0].startswith("# sha256 "):
            digest = lines[0].split()[2]
            lines = lines[1:]
        body = "".join(lines)
        if verify:
            if digest is None:
                raise ValueError("polynomial data has no checksum header")
            actual = hashlib.sha256(body.encode()).hexdigest()
            if actual != digest:
                raise ValueError(f"polynomial data checksum mismatch: {actual} != {digest}")
        terms: dict = {}
        for lineno, line in enumerate(body.splitlines(), 2):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 4:
                raise ValueError(f"line {lineno}: expected 'NAME e_m e_i coefficient'")
            name, a, b, c = parts
            terms.setdefault(name, {})[(int(a), int(b))] = int(c)
        return cls({name: BivarPoly(t) for name, t in terms.items()})


def load_table(path=None, verify: bool = True) -> PolyTable:
    if path is None:
        text = resources.files("borosmoll").joinpath("data/polynomials.txt").read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    return PolyTable.loads(text, verify=verify)


_DEFAULT = None


def default_table() -> PolyTable:
    global _DEFAULT
    if _DEFAULT is None:
        _DEFAULT = load_table()
    return _DEFAULT
