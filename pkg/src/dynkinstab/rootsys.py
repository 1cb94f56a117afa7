"""Roots, reflections and regularity in the simple-class basis."""
from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple, Sequence

from .charges import GQ, evaluate
from .diagrams import Diagram, build_diagram, delta
from .errors import InvalidInputError

ClassVector = tuple[int, ...]


def unit(d: Diagram, label: int) -> ClassVector:
    v = [0] * d.size
    v[d.index(label)] = 1
    return tuple(v)


def euler_form(d: Diagram, x: Sequence[int], y: Sequence[int]) -> int:
    r = d.size
    if len(x) != r or len(y) != r:
        raise InvalidInputError(f"class vectors must have length {r}")
    E = d.euler_matrix
    return sum(x[i] * E[i][j] * y[j] for i in range(r) for j in range(r) if x[i] and y[j])


def reflect(d: Diagram, s: Sequence[int], v: Sequence[int]) -> ClassVector:
    """Reflection of ``v`` in the spherical class ``s``: v - chi(s, v) s."""
    if euler_form(d, s, s) != 2:
        raise InvalidInputError(f"{tuple(s)} is not spherical (chi(s,s) != 2)")
    c = euler_form(d, s, v)
    return tuple(vi - c * si for vi, si in zip(v, s))


def class_sign(v: Sequence[int]) -> int:
    """+1 for a nonzero nonnegative vector, -1 for nonpositive, 0 otherwise."""
    if any(x > 0 for x in v) and all(x >= 0 for x in v):
        return 1
    if any(x < 0 for x in v) and all(x <= 0 for x in v):
        return -1
    return 0


@lru_cache(maxsize=None)
def _positive_roots(d: Diagram) -> tuple[ClassVector, ...]:
    # Grow by height: for simply-laced types, v + e_i is a root iff chi(v, e_i) = -1.
    r = d.size
    E = d.euler_matrix
    simples = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    roots = set(simples)
    layer = list(simples)
    while layer:
        nxt = []
        for v in layer:
            for i in range(r):
                if sum(v[j] * E[j][i] for j in range(r)) == -1:
                    w = tuple(v[j] + (j == i) for j in range(r))
                    if w not in roots:
                        roots.add(w)
                        nxt.append(w)
        layer = nxt
    return tuple(sorted(roots, key=lambda v: (sum(v), v)))


def positive_roots(d: Diagram) -> list[ClassVector]:
    if d.affine:
        raise InvalidInputError("affine root systems are infinite; use finite_part")
    return list(_positive_roots(d))


def enumerate_roots(d: Diagram) -> list[ClassVector]:
    """All roots of a finite diagram, positive roots first (by height)."""
    pos = positive_roots(d)
    return pos + [tuple(-x for x in v) for v in pos]


def finite_part(d: Diagram) -> Diagram:
    return build_diagram(d.family, d.rank, False) if d.affine else d


def embed_finite(d: Diagram, v: Sequence[int]) -> ClassVector:
    """Embed a finite-part class (vertices 1..n) into the affine lattice."""
    return (0,) + tuple(v)


class AffineRootView(NamedTuple):
    finite: ClassVector  # coefficients on vertices 1..n
    level: int  # coefficient of delta
    kind: str  # "real", "imaginary" or "none"


def affine_view(d: Diagram, v: Sequence[int]) -> AffineRootView:
    """Split ``v = alpha + level * delta`` with alpha supported on 1..n."""
    if not d.affine:
        raise InvalidInputError("affine_view needs an affine diagram")
    marks = delta(d)
    level = v[d.index(0)]  # mark at vertex 0 is 1
    rest = tuple(x - level * m for x, m in zip(v, marks))
    norm = euler_form(d, v, v)
    if norm == 2:
        kind = "real"
    elif norm == 0 and not any(rest) and level != 0:
        kind = "imaginary"
    else:
        kind = "none"
    return AffineRootView(rest[1:], level, kind)


def is_root(d: Diagram, v: Sequence[int]) -> bool:
    if not d.affine:
        return euler_form(d, v, v) == 2
    return affine_view(d, v).kind != "none"


class Regularity(NamedTuple):
    regular: bool
    witness: ClassVector | None


def is_regular(d: Diagram, Z: Sequence[GQ]) -> Regularity:
    """Decide whether ``Z`` vanishes on no root; return a vanishing root otherwise.

    For affine diagrams the real roots are ``alpha + k delta``; one of them
    vanishes exactly when ``Z(alpha) / Z(delta)`` is an integer, which turns
    the infinite check into a finite one.
    """
    if len(Z) != d.size:
        raise InvalidInputError(f"charge must have length {d.size}")
    if not d.affine:
        for a in _positive_roots(d):
            if not evaluate(Z, a):
                return Regularity(False, a)
        return Regularity(True, None)
    marks = delta(d)
    zd = evaluate(Z, marks)
    if not zd:
        return Regularity(False, marks)
    Zfin = Z[1:]
    for a in _positive_roots(finite_part(d)):
        q = evaluate(Zfin, a) / zd
        if q.is_integer():
            k = int(q.re)
            alpha = embed_finite(d, a)
            return Regularity(False, tuple(x - k * m for x, m in zip(alpha, marks)))
    return Regularity(True, None)
