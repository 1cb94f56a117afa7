"""Simply-laced Dynkin diagrams, finite and affine.

Vertex labels are integers: ``1..n`` for a finite diagram, ``0..n`` for an
affine one with ``0`` the special (extending) vertex. Internally every
vector is indexed by *position*, i.e. the order of ``Diagram.labels``.

Numbering conventions:

* ``A_n``: path ``1 - 2 - ... - n``; affine vertex 0 closes the cycle.
  Affine ``A_1`` carries a double edge.
* ``D_n``: path ``1 - ... - n-2`` with ``n-1`` and ``n`` both attached to
  ``n-2``; affine vertex 0 is attached to 2.
* ``E_n``: Bourbaki, path ``1 - 3 - 4 - ... - n`` with 2 attached to 4;
  affine vertex 0 is attached to 2, 1 and 8 for n = 6, 7, 8.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import cached_property, lru_cache, reduce
from math import gcd

from . import _linalg
from .errors import InvalidInputError

FAMILIES = ("A", "D", "E")

Perm = tuple[int, ...]


@dataclass(frozen=True)
class Diagram:
    family: str
    rank: int
    affine: bool
    labels: tuple[int, ...] = field(repr=False)
    # (label, label, multiplicity) triples
    edges: tuple[tuple[int, int, int], ...] = field(repr=False)

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}" + ("~" if self.affine else "")

    @property
    def size(self) -> int:
        """Number of vertices (rank of the K-lattice)."""
        return len(self.labels)

    @cached_property
    def _pos(self) -> dict[int, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def index(self, label: int) -> int:
        try:
            return self._pos[label]
        except KeyError:
            raise InvalidInputError(f"{self.name} has no vertex {label}") from None

    def multiplicity(self, i: int, j: int) -> int:
        """Edge count between vertices with *labels* i and j."""
        return self.adjacency[self.index(i)][self.index(j)]

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        r = self.size
        adj = [[0] * r for _ in range(r)]
        for a, b, m in self.edges:
            i, j = self._pos[a], self._pos[b]
            adj[i][j] = adj[j][i] = m
        return tuple(map(tuple, adj))

    @cached_property
    def euler_matrix(self) -> tuple[tuple[int, ...], ...]:
        r = self.size
        return tuple(
            tuple(2 if i == j else -self.adjacency[i][j] for j in range(r)) for i in range(r)
        )

    def joined(self, i: int, j: int) -> bool:
        return i != j and self.multiplicity(i, j) > 0

    def __str__(self) -> str:
        return self.name


def _edges_for(family: str, n: int, affine: bool) -> list[tuple[int, int, int]]:
    e: list[tuple[int, int, int]] = []
    if family == "A":
        e += [(i, i + 1, 1) for i in range(1, n)]
        if affine:
            if n == 1:
                e.append((0, 1, 2))
            else:
                e += [(0, 1, 1), (0, n, 1)]
    elif family == "D":
        e += [(i, i + 1, 1) for i in range(1, n - 2)]
        e += [(n - 2, n - 1, 1), (n - 2, n, 1)]
        if affine:
            e.append((0, 2, 1))
    else:
        e += [(1, 3, 1), (2, 4, 1)] + [(i, i + 1, 1) for i in range(3, n)]
        if affine:
            e.append({6: (0, 2, 1), 7: (0, 1, 1), 8: (0, 8, 1)}[n])
    return e


def build_diagram(family: str, rank: int, affine: bool = False) -> Diagram:
    """Build the (possibly affine) diagram of the given type.

    >>> build_diagram("A", 2).euler_matrix
    ((2, -1), (-1, 2))
    """
    family = family.upper()
    if family not in FAMILIES:
        raise InvalidInputError(f"unknown family {family!r}")
    if not isinstance(rank, int) or isinstance(rank, bool):
        raise InvalidInputError("rank must be an integer")
    ok = {"A": rank >= 1, "D": rank >= 4, "E": rank in (6, 7, 8)}[family]
    if not ok:
        raise InvalidInputError(f"{family}_{rank} is not in the catalog")
    labels = tuple(range(0 if affine else 1, rank + 1))
    return Diagram(family, rank, bool(affine), labels, tuple(_edges_for(family, rank, affine)))


_NAME_RE = re.compile(r"^\s*([ADEade])_?(\d+)\s*(~|hat|\^)?\s*$")


def parse_diagram(name: str) -> Diagram:
    """Parse CLI names like ``"A2"``, ``"E8"``, ``"A1~"``, ``"D_4~"``."""
    m = _NAME_RE.match(name)
    if not m:
        raise InvalidInputError(f"cannot parse diagram name {name!r}")
    return build_diagram(m.group(1).upper(), int(m.group(2)), bool(m.group(3)))


def catalog(max_rank: int = 8, affine: bool | None = None) -> list[Diagram]:
    """Every catalog diagram with rank ``n <= max_rank``."""
    out = []
    for aff in ((False, True) if affine is None else (affine,)):
        for n in range(1, max_rank + 1):
            out.append(build_diagram("A", n, aff))
        for n in range(4, max_rank + 1):
            out.append(build_diagram("D", n, aff))
        for n in (6, 7, 8):
            if n <= max_rank:
                out.append(build_diagram("E", n, aff))
    return out


@lru_cache(maxsize=None)
def delta(d: Diagram) -> tuple[int, ...]:
    """Marks: the primitive positive kernel generator of the Euler matrix."""
    if not d.affine:
        raise InvalidInputError("delta is only defined for affine diagrams")
    basis = _linalg.nullspace(d.euler_matrix)
    if len(basis) != 1:
        raise AssertionError(f"kernel of {d.name} has dimension {len(basis)}")
    v = basis[0]
    v0 = v[d.index(0)]
    scaled = [x / v0 for x in v]
    den = reduce(lambda a, b: a * b // gcd(a, b), (x.denominator for x in scaled), 1)
    ints = [int(x * den) for x in scaled]
    g = reduce(gcd, ints)
    marks = tuple(x // g for x in ints)
    if marks[d.index(0)] != 1 or min(marks) <= 0:
        raise AssertionError("kernel generator is not positive with mark 1 at vertex 0")
    return marks


def is_automorphism(d: Diagram, perm: Perm) -> bool:
    """``perm`` maps position i to position perm[i]."""
    adj = d.adjacency
    r = d.size
    return sorted(perm) == list(range(r)) and all(
        adj[perm[i]][perm[j]] == adj[i][j] for i in range(r) for j in range(r)
    )


def all_automorphisms(d: Diagram, fix_special: bool = False) -> list[Perm]:
    """All graph automorphisms as position permutations (backtracking)."""
    adj = d.adjacency
    r = d.size
    degree = [sum(1 for x in row if x) for row in adj]
    found: list[Perm] = []

    def extend(img: list[int]) -> None:
        i = len(img)
        if i == r:
            found.append(tuple(img))
            return
        for j in range(r):
            if j in img or degree[j] != degree[i]:
                continue
            if fix_special and d.affine and i == d.index(0) and j != i:
                continue
            if all(adj[i][k] == adj[j][img[k]] for k in range(i)):
                img.append(j)
                extend(img)
                img.pop()

    extend([])
    return found


def _compose(p: Perm, q: Perm) -> Perm:
    return tuple(p[q[i]] for i in range(len(p)))


def _closure(gens: list[Perm], r: int) -> set[Perm]:
    ident = tuple(range(r))
    group = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = _compose(s, g)
                if h not in group:
                    group.add(h)
                    nxt.append(h)
        frontier = nxt
    return group


def automorphisms(d: Diagram, fix_special: bool = False) -> list[Perm]:
    """A generating set for the automorphism group (empty if trivial)."""
    elements = all_automorphisms(d, fix_special)
    gens: list[Perm] = []
    generated = _closure(gens, d.size)
    for g in sorted(elements):
        if g not in generated:
            gens.append(g)
            generated = _closure(gens, d.size)
    return gens


def group_order(d: Diagram, gens: list[Perm]) -> int:
    return len(_closure(gens, d.size))


def permutation_from_labels(d: Diagram, mapping: dict[int, int]) -> Perm:
    """Convert a label map {vertex: image} into a position permutation."""
    perm = tuple(d.index(mapping.get(lab, lab)) for lab in d.labels)
    if not is_automorphism(d, perm):
        raise InvalidInputError(f"{mapping} is not an automorphism of {d.name}")
    return perm


def to_json(d: Diagram) -> dict:
    out = {
        "family": d.family,
        "rank": d.rank,
        "affine": d.affine,
        "labels": list(d.labels),
        "euler_matrix": [list(row) for row in d.euler_matrix],
    }
    if d.affine:
        out["marks"] = list(delta(d))
    return out


def is_positive_definite(mat) -> bool:
    """Sylvester's criterion on leading principal minors."""
    return all(_linalg.det([row[:k] for row in mat[:k]]) > 0 for k in range(1, len(mat) + 1))


def principal_minors_nonnegative(mat) -> bool:
    r = len(mat)
    return all(
        _linalg.det([[mat[i][j] for j in idx] for i in idx]) >= 0
        for k in range(1, r + 1)
        for idx in itertools.combinations(range(r), k)
    )


__all__ = [
    "Diagram", "build_diagram", "parse_diagram", "catalog", "delta", "automorphisms",
    "all_automorphisms", "is_automorphism", "group_order", "permutation_from_labels", "to_json",
]
