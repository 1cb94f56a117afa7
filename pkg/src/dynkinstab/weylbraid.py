"""Braid words and their Weyl-group shadows.

A word is a tuple of letters ``(vertex_label, sign)``. The first letter is
the outermost functor: the word ``((1, 1), (2, -1))`` stands for
``Phi_1 o Phi_2^{-1}``. Signs are dropped by :func:`word_to_matrix`, since
every simple reflection is an involution, but the covering-space code needs
them.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from . import _linalg
from .diagrams import Diagram
from .errors import InvalidInputError

Letter = tuple[int, int]
Word = tuple[Letter, ...]
Matrix = tuple[tuple[int, ...], ...]


def make_word(d: Diagram | None, letters: Iterable) -> Word:
    """Normalize letters given as ``(label, sign)`` pairs or signed ints.

    A bare string ``"-0"`` denotes the inverse of vertex 0.
    """
    out = []
    for x in letters:
        if isinstance(x, (tuple, list)) and len(x) == 2:
            lab, sgn = int(x[0]), int(x[1])
        elif isinstance(x, str):
            s = x.strip()
            sgn = -1 if s.startswith("-") else 1
            lab = int(s.lstrip("+-"))
        elif isinstance(x, int) and not isinstance(x, bool):
            lab, sgn = abs(x), (-1 if x < 0 else 1)
        else:
            raise InvalidInputError(f"cannot read braid letter {x!r}")
        if sgn not in (1, -1):
            raise InvalidInputError(f"letter sign must be +1 or -1, got {sgn}")
        if d is not None:
            d.index(lab)
        out.append((lab, sgn))
    return tuple(out)


def parse_word(d: Diagram | None, text: str) -> Word:
    """``"1,2,-1"`` -> ((1,1),(2,1),(1,-1)); empty string is the empty word."""
    tokens = [t for t in text.replace(" ", "").split(",") if t]
    return make_word(d, tokens)


def word_to_json(w: Word) -> list:
    return [("-0" if (lab == 0 and s < 0) else lab * s) for lab, s in w]


def inverse_word(w: Word) -> Word:
    return tuple((lab, -s) for lab, s in reversed(w))


def simple_reflection(d: Diagram, label: int) -> Matrix:
    """Matrix of v -> v - chi(e_i, v) e_i acting on column vectors."""
    i = d.index(label)
    r = d.size
    E = d.euler_matrix
    rows = [[int(a == b) for b in range(r)] for a in range(r)]
    for j in range(r):
        rows[i][j] -= E[i][j]
    return tuple(map(tuple, rows))


def identity(r: int) -> Matrix:
    return tuple(map(tuple, _linalg.identity(r)))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    return tuple(map(tuple, _linalg.matmul(a, b)))


def word_to_matrix(d: Diagram, w: Sequence[Letter]) -> Matrix:
    m = identity(d.size)
    for lab, _ in w:
        m = matmul(m, simple_reflection(d, lab))
    return m


def shift_matrix(m: int, size: int | None = None):
    """Action of the shift [m] on K: the scalar (-1)^m, or that scalar times I."""
    sign = -1 if m % 2 else 1
    if size is None:
        return sign
    return tuple(tuple(sign * int(i == j) for j in range(size)) for i in range(size))


def preserves_form(d: Diagram, m: Matrix) -> bool:
    E = d.euler_matrix
    mt = tuple(zip(*m))
    return matmul(matmul(mt, E), m) == E


def matrix_power_order(m: Matrix, limit: int) -> int | None:
    """Smallest k <= limit with m^k = I, or None."""
    ident = identity(len(m))
    p = m
    for k in range(1, limit + 1):
        if p == ident:
            return k
        p = matmul(p, m)
    return None


def coxeter_word(d: Diagram, power: int = 1) -> Word:
    return tuple((lab, 1) for lab in d.labels) * power


def coxeter_number(d: Diagram) -> int:
    """Order of the Coxeter element s_1 ... s_n (finite diagrams only)."""
    if d.affine:
        raise InvalidInputError("affine Coxeter elements have infinite order")
    k = matrix_power_order(word_to_matrix(d, coxeter_word(d)), 1000)
    assert k is not None
    return k


def verify_relations(d: Diagram, infinite_order_bound: int = 100) -> list[dict]:
    """Matrix-level check of the defining relations, one record per relation.

    Joined pairs with a single edge must satisfy the braid relation,
    disjoint pairs must commute. The double edge of affine A_1 has no
    relation; there we check that ``s_0 s_1`` has no power up to the bound
    equal to the identity.
    """
    report = []
    ident = identity(d.size)
    for lab in d.labels:
        s = simple_reflection(d, lab)
        report.append({"relation": "involution", "vertices": [lab],
                       "passed": matmul(s, s) == ident})
    labels = d.labels
    for a_i, a in enumerate(labels):
        for b in labels[a_i + 1:]:
            sa, sb = simple_reflection(d, a), simple_reflection(d, b)
            m = d.multiplicity(a, b)
            if m == 0:
                ok = matmul(sa, sb) == matmul(sb, sa)
                report.append({"relation": "commute", "vertices": [a, b], "passed": ok})
            elif m == 1:
                ok = matmul(matmul(sa, sb), sa) == matmul(matmul(sb, sa), sb)
                report.append({"relation": "braid", "vertices": [a, b], "passed": ok})
            else:
                order = matrix_power_order(matmul(sa, sb), infinite_order_bound)
                report.append({"relation": "infinite-order", "vertices": [a, b],
                               "passed": order is None,
                               "note": f"no power <= {infinite_order_bound} gives identity"
                               if order is None else f"order {order}"})
    return report
