"""Exact central charges.

A charge is a tuple of :class:`GQ` values, one per vertex position, giving
Z on the simple classes. Values on other classes are always derived.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence

from . import _linalg
from .errors import InvalidInputError


class GQ:
    """Gaussian rational ``re + im*i`` with :class:`~fractions.Fraction` parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def of(cls, x) -> "GQ":
        if isinstance(x, GQ):
            return x
        if isinstance(x, complex):
            raise TypeError("floating point complex values are not exact")
        return cls(x, 0)

    def __add__(self, other):
        o = GQ.of(other)
        return GQ(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = GQ.of(other)
        return GQ(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return GQ.of(other) - self

    def __neg__(self):
        return GQ(-self.re, -self.im)

    def __mul__(self, other):
        o = GQ.of(other)
        return GQ(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def norm2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def conjugate(self) -> "GQ":
        return GQ(self.re, -self.im)

    def __truediv__(self, other):
        o = GQ.of(other)
        n = o.norm2()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        num = self * o.conjugate()
        return GQ(num.re / n, num.im / n)

    def __rtruediv__(self, other):
        return GQ.of(other) / self

    def __eq__(self, other):
        try:
            o = GQ.of(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_integer(self) -> bool:
        return self.im == 0 and self.re.denominator == 1

    def __repr__(self):
        return f"GQ({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


I = GQ(0, 1)

Charge = tuple[GQ, ...]


def charge(values: Iterable) -> Charge:
    """Build a charge from GQ values, rationals or ``(re, im)`` pairs."""
    out = []
    for v in values:
        if isinstance(v, tuple):
            out.append(GQ(*v))
        else:
            out.append(GQ.of(v))
    return tuple(out)


def evaluate(Z: Sequence[GQ], v: Sequence[int]) -> GQ:
    if len(Z) != len(v):
        raise InvalidInputError(f"charge has length {len(Z)}, class has length {len(v)}")
    re = im = Fraction(0)
    for c, z in zip(v, Z):
        if c:
            re += c * z.re
            im += c * z.im
    return GQ(re, im)


def act_weyl(w: Sequence[Sequence[int]], Z: Sequence[GQ]) -> Charge:
    """Return ``w . Z`` defined by ``(w.Z)(v) = Z(w^-1 v)``."""
    if len(w) != len(Z):
        raise InvalidInputError("matrix and charge sizes differ")
    winv = _linalg.integer_inverse(w)
    r = len(Z)
    # (w.Z)(e_j) = sum_k winv[k][j] Z(e_k)
    return tuple(evaluate(Z, [winv[k][j] for k in range(r)]) for j in range(r))


def scale(mu: GQ, Z: Sequence[GQ]) -> Charge:
    mu = GQ.of(mu)
    if not mu:
        raise InvalidInputError("scalar action needs a nonzero scalar")
    return tuple(mu * z for z in Z)


def in_fundamental(Z: Sequence[GQ]) -> bool:
    """Whether every simple class has strictly positive imaginary charge."""
    return all(z.im > 0 for z in Z)


def in_fundamental_closure(Z: Sequence[GQ]) -> bool:
    """Heart convention: each simple has phase in (0, 1]."""
    return all(z.im > 0 or (z.im == 0 and z.re < 0) for z in Z)


# ---------------------------------------------------------------- JSON I/O

_RAT_RE = re.compile(r"^[+-]?\d+(/[+-]?\d+)?$")


def parse_rational(s, where: str = "") -> Fraction:
    if isinstance(s, bool) or not isinstance(s, (str, int)):
        raise InvalidInputError(f"{where}: expected a 'p/q' string, got {s!r}")
    s = str(s).strip()
    if not _RAT_RE.match(s):
        raise InvalidInputError(f"{where}: malformed rational {s!r} (use 'p/q', no decimals)")
    try:
        return Fraction(s)
    except ZeroDivisionError:
        raise InvalidInputError(f"{where}: zero denominator in {s!r}") from None


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


def charge_to_json(Z: Sequence[GQ]) -> list[dict[str, str]]:
    return [{"re": format_rational(z.re), "im": format_rational(z.im)} for z in Z]


def charge_from_json(data, size: int | None = None) -> Charge:
    if not isinstance(data, list):
        raise InvalidInputError("charge must be a JSON list of {re, im} objects")
    if size is not None and len(data) != size:
        raise InvalidInputError(f"charge has {len(data)} entries, diagram needs {size}")
    out = []
    for k, item in enumerate(data):
        if not isinstance(item, dict) or set(item) != {"re", "im"}:
            raise InvalidInputError(f"entry {k}: expected object with keys 're' and 'im'")
        out.append(GQ(parse_rational(item["re"], f"entry {k}.re"),
                      parse_rational(item["im"], f"entry {k}.im")))
    return tuple(out)
