"""King stability for dimension-(1,...,1) representations of the doubled cycle.

The cycle has vertices ``0..n``. Arrow ``x_i`` goes ``i -> i+1`` and ``y_i``
goes ``i+1 -> i`` (indices mod n+1). With every vertex one-dimensional a
subrepresentation is determined by its support, and a support ``S`` is
allowed exactly when no nonzero arrow leaves it.

Convention: ``rep`` is semistable for ``theta`` (with ``theta . delta = 0``)
when ``theta(S) <= 0`` for every proper nonzero subrepresentation ``S``.
Negating ``theta`` gives the mirrored convention.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .errors import InvalidInputError, InvariantViolation

MAX_N = 8


@dataclass(frozen=True)
class CycleRep:
    x: tuple[Fraction, ...]
    y: tuple[Fraction, ...]

    @property
    def n(self) -> int:
        return len(self.x) - 1

    @property
    def dimension(self) -> tuple[int, ...]:
        return (1,) * len(self.x)

    def arrows(self):
        """Nonzero arrows as (tail, head) pairs."""
        m = len(self.x)
        out = [(i, (i + 1) % m) for i, v in enumerate(self.x) if v]
        out += [((i + 1) % m, i) for i, v in enumerate(self.y) if v]
        return out

    def to_json(self) -> dict:
        return {"x": [str(v) for v in self.x], "y": [str(v) for v in self.y],
                "dimension": list(self.dimension)}


def make_rep(x: Sequence, y: Sequence | None = None) -> CycleRep:
    x = tuple(Fraction(v) for v in x)
    y = tuple(Fraction(0) for _ in x) if y is None else tuple(Fraction(v) for v in y)
    if len(x) != len(y) or len(x) < 2:
        raise InvalidInputError("need matching x and y of length n+1 >= 2")
    return CycleRep(x, y)


def _prod(vals) -> Fraction:
    p = Fraction(1)
    for v in vals:
        p *= v
    return p


def relation_defects(rep: CycleRep) -> list[Fraction]:
    """Value of sum_{head=v} a a* - sum_{tail=v} a* a at each vertex v.

    At vertex v the arrow x_{v-1} ends and x_v starts, so the relation reads
    x_{v-1} y_{v-1} - y_v x_v.
    """
    m = len(rep.x)
    return [rep.x[v - 1] * rep.y[v - 1] - rep.y[v] * rep.x[v] for v in range(m)]


def is_nilpotent(rep: CycleRep) -> bool:
    two_cycles = all(a * b == 0 for a, b in zip(rep.x, rep.y))
    return two_cycles and _prod(rep.x) == 0 and _prod(rep.y) == 0


def check_rep(rep: CycleRep) -> None:
    if rep.n < 1 or rep.n > MAX_N:
        raise InvalidInputError(f"cycle size n+1 must have 1 <= n <= {MAX_N}")
    if any(relation_defects(rep)):
        raise InvalidInputError("representation violates the preprojective relation")
    if not is_nilpotent(rep):
        raise InvalidInputError("representation is not nilpotent")


def _check_theta(theta: Sequence, size: int) -> tuple[Fraction, ...]:
    theta = tuple(Fraction(t) for t in theta)
    if len(theta) != size:
        raise InvalidInputError(f"theta must have {size} entries")
    if sum(theta):
        raise InvalidInputError("theta . delta must vanish")
    return theta


def closed_subsets(rep: CycleRep) -> list[frozenset[int]]:
    """Proper nonzero arrow-closed supports, built as closures of generating sets."""
    m = len(rep.x)
    succ: dict[int, set[int]] = {v: set() for v in range(m)}
    for a, b in rep.arrows():
        succ[a].add(b)

    def closure(seed):
        seen = set(seed)
        stack = list(seed)
        while stack:
            for w in succ[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return frozenset(seen)

    found = {frozenset()}
    layer = [frozenset()]
    full = frozenset(range(m))
    # every closed set is a union of single-vertex closures
    singles = [closure([v]) for v in range(m)]
    while layer:
        nxt = []
        for S in layer:
            for c in singles:
                T = S | c
                if T not in found:
                    found.add(T)
                    nxt.append(T)
        layer = nxt
    return sorted((S for S in found if S and S != full), key=lambda S: (len(S), sorted(S)))


class Semistability(NamedTuple):
    semistable: bool
    certificate: frozenset[int] | None  # a destabilizing support, if any


def is_semistable(rep: CycleRep, theta: Sequence) -> Semistability:
    check_rep(rep)
    theta = _check_theta(theta, len(rep.x))
    for S in closed_subsets(rep):
        if sum(theta[v] for v in S) > 0:
            return Semistability(False, S)
    return Semistability(True, None)


def is_semistable_bruteforce(rep: CycleRep, theta: Sequence) -> Semistability:
    """Oracle: test every vertex subset directly for closedness."""
    theta = _check_theta(theta, len(rep.x))
    m = len(rep.x)
    arrows = rep.arrows()
    for k in range(1, m):
        for S in itertools.combinations(range(m), k):
            Sset = set(S)
            if all(b in Sset for a, b in arrows if a in Sset):
                if sum(theta[v] for v in S) > 0:
                    return Semistability(False, frozenset(S))
    return Semistability(True, None)


def find_semistable(n: int, theta: Sequence) -> CycleRep:
    """A nilpotent semistable rep: all x_i = 1 except one cut arrow, y = 0.

    With the cut at ``x_c`` the closed supports are the cyclic intervals
    ``j..c``, whose theta-sum is ``P(c) - P(j-1)`` for the prefix sums
    ``P(k) = theta_0 + ... + theta_k`` (using ``P(n) = 0`` on wrap-around).
    Cutting at the position of the smallest prefix sum makes all of them
    nonpositive (the cycle lemma).
    """
    if not isinstance(n, int) or n < 1 or n > MAX_N:
        raise InvalidInputError(f"n must be an integer in 1..{MAX_N}")
    theta = _check_theta(theta, n + 1)
    m = n + 1
    prefix = list(itertools.accumulate(theta))
    cut = min(range(m), key=lambda k: (prefix[k], k))
    x = [Fraction(1)] * m
    x[cut] = Fraction(0)
    rep = make_rep(x)
    res = is_semistable(rep, theta)
    if not res.semistable:
        raise InvariantViolation(f"cycle-lemma cut failed; destabilized by {sorted(res.certificate)}")
    return rep
