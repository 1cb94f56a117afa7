"""Exact path lifting on the covering space of the regular charges.

A :class:`CoverState` models a point of the distinguished component: a
regular charge together with a finite-length heart, recorded by the K-classes
of its simple objects (one per slot) and an integer shift ledger per slot.
Crossing a wall replaces the heart by its spherical-twist tilt at the slot
whose charge leaves the upper half plane.

Ledgers come from root windings. Each positive root ``b`` carries a sheet
number ``n_b``: how often ``Z(b)`` has crossed the negative real axis
(counted with sign) since the base state. The slot ledger is
``[c_t < 0] - 2 n_b`` for ``b = +-c_t``, i.e. the slot object's phase in
``(0, 1]`` minus the continuous phase of its root. Windings are homotopy
invariants of paths of regular charges, so homotopic lifts end with equal
ledgers.

State equality compares charge, classes and ledgers; the word log is an
audit trail. This is a quotient of the true covering space, so every check
built on it is a necessary condition only.

Conventions
-----------
* Slots are indexed by vertex labels and keep their label under crossings.
* A crossing is *ascending* when the slot charge leaves through the negative
  real axis (phase rising through 1); it appends ``(slot, +1)`` to the log
  and lowers the slot's ledger by one. *Descending* is the inverse.
* Between events every root is a positive or negative combination of slot
  classes, so no root charge is real. At an event only ``+-c_s`` is, and
  only its sheet can change. Other slots change ledger only when their
  class moves to a root on a different sheet.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable, NamedTuple, Sequence

from . import _linalg
from .charges import GQ, I, Charge, evaluate, in_fundamental, scale
from .diagrams import Diagram, delta, is_automorphism
from .errors import (
    InvalidInputError,
    InvariantViolation,
    NonGenericEndpointError,
    NonGenericPathError,
    OutOfModelError,
)
from .rootsys import ClassVector, class_sign, euler_form, is_regular, positive_roots, reflect, finite_part
from .weylbraid import Word, simple_reflection, word_to_matrix

ASCENDING = "ascending"
DESCENDING = "descending"

MAX_RETRIES = 8
MAX_EVENTS = 10_000


@dataclass(frozen=True)
class CoverState:
    diagram: Diagram
    charge: Charge
    classes: tuple[ClassVector, ...]
    ledgers: tuple[int, ...]
    log: Word = field(default=(), compare=False)
    # nonzero sheet numbers as sorted (positive root, n) pairs
    sheets: tuple[tuple[ClassVector, int], ...] = field(default=(), compare=False)

    def slot_charge(self, label: int) -> GQ:
        return evaluate(self.charge, self.classes[self.diagram.index(label)])

    def key(self):
        return (self.charge, self.classes, self.ledgers)


class Event(NamedTuple):
    segment: int
    time: Fraction
    slot: int
    direction: str


@dataclass(frozen=True)
class DeckTransform:
    word: Word
    matrix: tuple[tuple[int, ...], ...]
    ledger: tuple[int, ...]
    pure_shift: bool
    shift: int | None = None


def standard_classes(d: Diagram) -> tuple[ClassVector, ...]:
    r = d.size
    return tuple(tuple(int(i == j) for j in range(r)) for i in range(r))


def standard_basepoint(d: Diagram) -> Charge:
    """(i, ..., i) for finite diagrams; i/(m_j r) on vertex j for affine ones.

    The affine point satisfies Z(delta) = i and sits inside the fundamental
    alcove of the slice Z(delta) = i.
    """
    r = d.size
    if not d.affine:
        return tuple(I for _ in range(r))
    return tuple(GQ(0, Fraction(1, m * r)) for m in delta(d))


def initial_state(d: Diagram, Z: Sequence[GQ]) -> CoverState:
    Z = tuple(GQ.of(z) for z in Z)
    if len(Z) != d.size:
        raise InvalidInputError(f"charge must have length {d.size}")
    if not in_fundamental(Z):
        raise InvalidInputError("charge is outside the fundamental chamber (need Im Z(e_i) > 0)")
    reg = is_regular(d, Z)
    if not reg.regular:
        raise InvalidInputError(f"charge is not regular; vanishes on {reg.witness}")
    return CoverState(d, Z, standard_classes(d), (0,) * d.size)


def _positive(c: ClassVector) -> ClassVector:
    return c if class_sign(c) > 0 else tuple(-x for x in c)


def ledgers_from_sheets(classes, sheets) -> tuple[int, ...]:
    table = dict(sheets)
    return tuple(int(class_sign(c) < 0) - 2 * table.get(_positive(c), 0) for c in classes)


def sheets_from_ledgers(classes, ledgers) -> tuple[tuple[ClassVector, int], ...]:
    """Smallest sheet table reproducing the given slot ledgers."""
    table = {}
    for c, k in zip(classes, ledgers):
        neg = int(class_sign(c) < 0)
        if (neg - k) % 2:
            raise InvalidInputError(f"ledger {k} has the wrong parity for class {c}")
        if neg != k:
            table[_positive(c)] = (neg - k) // 2
    return tuple(sorted(table.items()))


def _direction(direction) -> str:
    if direction in (ASCENDING, "asc", "+", 1):
        return ASCENDING
    if direction in (DESCENDING, "desc", "-", -1):
        return DESCENDING
    raise InvalidInputError(f"unknown crossing direction {direction!r}")


def cross(state: CoverState, slot: int, direction, charge: Charge | None = None) -> CoverState:
    """Tilt the heart at ``slot``; no charge check (combinatorial mode)."""
    d = state.diagram
    s = d.index(slot)
    direction = _direction(direction)
    cs = state.classes[s]
    new_classes = tuple(reflect(d, cs, c) for c in state.classes)
    # Z(b) for the positive root b = +-c_s crosses the negative real axis
    # when b = c_s exits through R<0, or b = -c_s exits through R>0.
    positive = class_sign(cs) > 0
    table = dict(state.sheets)
    b = _positive(cs)
    if direction == ASCENDING and positive:
        table[b] = table.get(b, 0) + 1
    elif direction == DESCENDING and not positive:
        table[b] = table.get(b, 0) - 1
    sheets = tuple(sorted((k, v) for k, v in table.items() if v))
    letter = (slot, 1 if direction == ASCENDING else -1)
    return CoverState(
        d,
        state.charge if charge is None else charge,
        new_classes,
        ledgers_from_sheets(new_classes, sheets),
        state.log + (letter,),
        sheets,
    )


# ------------------------------------------------------------ invariants

def check_state(state: CoverState, *, allow_zero: int | None = None, matrix=None) -> None:
    """Raise :class:`InvariantViolation` unless every state invariant holds.

    ``allow_zero`` names a slot position whose charge may sit on the real
    axis (the slot just crossed at an event). ``matrix`` may carry a
    precomputed ``word_to_matrix(state.log)``.
    """
    d = state.diagram
    classes = state.classes
    r = d.size
    double = d.affine and d.family == "A" and d.rank == 1
    for s in range(r):
        for t in range(r):
            chi = euler_form(d, classes[s], classes[t])
            ok = chi == 2 if s == t else chi in ((0, -1, -2) if double else (0, -1))
            if not ok:
                raise InvariantViolation(f"chi pattern broken at slots {s},{t}: {chi}")
    cols = [list(row) for row in zip(*classes)]
    if abs(_linalg.det(cols)) != 1:
        raise InvariantViolation("slot classes are not a lattice basis")
    M = word_to_matrix(d, state.log) if matrix is None else matrix
    if tuple(zip(*M)) != classes:
        raise InvariantViolation("slot classes disagree with the word log")
    if state.ledgers != ledgers_from_sheets(classes, state.sheets):
        raise InvariantViolation("ledgers disagree with the root sheets")
    for t, (c, k) in enumerate(zip(classes, state.ledgers)):
        if (k % 2 == 1) != (class_sign(c) < 0):
            raise InvariantViolation(f"ledger parity disagrees with class sign at slot {t}")
        if class_sign(c) == 0:
            raise InvariantViolation(f"slot {t} class {c} is not a root of definite sign")
        z = evaluate(state.charge, c)
        if z.im < 0 or (z.im == 0 and t != allow_zero):
            raise InvariantViolation(f"slot {t} charge {z} left the upper half plane")
    if d.affine and not evaluate(state.charge, delta(d)):
        raise InvariantViolation("charge vanishes on the imaginary root")


# ------------------------------------------------------------ lifting

def _lerp(A: Charge, B: Charge, t: Fraction) -> Charge:
    return tuple(a + (b - a) * t for a, b in zip(A, B))


def lift_path(
    state: CoverState,
    path: Sequence[Sequence[GQ]],
    *,
    check: bool = False,
    endpoint: str = "error",
    max_events: int = MAX_EVENTS,
) -> tuple[CoverState, list[Event]]:
    """Lift a polyline of charges starting at ``state.charge``.

    Events are the exact parameter values where the charge of a current slot
    meets the real axis. ``endpoint="heart"`` resolves a final vertex lying
    on a wall with the phase convention (0, 1] instead of raising.
    """
    d = state.diagram
    path = [tuple(GQ.of(z) for z in Z) for Z in path]
    if not path:
        raise InvalidInputError("path needs at least one vertex")
    for Z in path:
        if len(Z) != d.size:
            raise InvalidInputError(f"path vertex has length {len(Z)}, expected {d.size}")
    if path[0] != state.charge:
        raise InvalidInputError("path does not start at the state's charge")
    for c in state.classes:
        if evaluate(state.charge, c).im <= 0:
            raise InvalidInputError("start state is on a wall; lifting needs an interior point")
    marks = delta(d) if d.affine else None
    M = word_to_matrix(d, state.log) if check else None
    events: list[Event] = []
    nseg = len(path) - 1
    for seg in range(nseg):
        A, B = path[seg], path[seg + 1]
        if marks is not None and evaluate(B, marks).im <= 0:
            raise OutOfModelError(
                "Im Z(delta) must stay positive: walls accumulate where Z(delta) turns real, "
                "so no finite tilting chain follows this path"
            )
        last = seg == nseg - 1
        t0 = Fraction(0)
        while True:
            cands: list[tuple[Fraction, int]] = []
            for pos, c in enumerate(state.classes):
                a = evaluate(A, c).im
                b = evaluate(B, c).im
                if b <= 0 and a > b:
                    t = a / (a - b)
                    if t > t0:
                        cands.append((t, pos))
            if not cands:
                if check:
                    mid = _lerp(A, B, (t0 + 1) / 2)
                    _check_open(state, mid)
                break
            tmin = min(t for t, _ in cands)
            hits = [pos for t, pos in cands if t == tmin]
            if len(hits) > 1:
                labels = [d.labels[p] for p in hits]
                raise NonGenericPathError(
                    f"segment {seg}: slots {labels} cross simultaneously at t={tmin}")
            pos = hits[0]
            Zt = _lerp(A, B, tmin)
            re = evaluate(Zt, state.classes[pos]).re
            if re == 0:
                raise NonGenericPathError(
                    f"segment {seg}: charge of slot {d.labels[pos]} vanishes at t={tmin} "
                    "(non-regular point)")
            if tmin == 1:
                if not last:
                    raise NonGenericPathError(f"path vertex {seg + 1} lies on a wall")
                if endpoint != "heart":
                    raise NonGenericEndpointError(
                        f"path endpoint lies on the wall of slot {d.labels[pos]}")
                if re < 0:
                    break  # phase exactly 1 belongs to the heart
            if check:
                _check_open(state, _lerp(A, B, (t0 + tmin) / 2))
            direction = ASCENDING if re < 0 else DESCENDING
            state = cross(state, d.labels[pos], direction, Zt)
            events.append(Event(seg, tmin, d.labels[pos], direction))
            if check:
                M = tuple(map(tuple, _linalg.matmul(M, simple_reflection(d, d.labels[pos]))))
                check_state(state, allow_zero=pos, matrix=M)
            if len(events) > max_events:
                raise OutOfModelError(f"more than {max_events} wall crossings")
            t0 = tmin
        state = replace(state, charge=B)
    if check and endpoint != "heart":
        check_state(state, matrix=M)
    return state, events


def _check_open(state: CoverState, Z: Charge) -> None:
    for t, c in enumerate(state.classes):
        if evaluate(Z, c).im <= 0:
            raise InvariantViolation(f"slot {t} not strictly positive between events")


# ------------------------------------------------------------ perturbation

def _jitter(path: list[Charge], eps: Fraction, rng: random.Random) -> list[Charge]:
    def noise() -> Fraction:
        return eps * Fraction(rng.randint(-1000, 1000), 1000)

    out = [path[0]]
    for Z in path[1:-1]:
        out.append(tuple(z + GQ(noise(), noise()) for z in Z))
    if len(path) > 1:
        out.append(path[-1])
    return out


def _with_midpoints(path: list[Charge]) -> list[Charge]:
    out = [path[0]]
    for A, B in zip(path, path[1:]):
        out += [_lerp(A, B, Fraction(1, 2)), B]
    return out


def lift_with_retries(
    state: CoverState,
    path: list[Charge],
    eps: Fraction,
    *,
    validate: Callable[[CoverState, list[Event]], bool] | None = None,
    seed: int = 0,
    **kw,
) -> tuple[CoverState, list[Event], list[Charge]]:
    """Lift ``path``; on non-genericity jitter interior vertices and retry.

    The endpoints are never moved. ``eps`` halves on each retry, at most
    ``MAX_RETRIES`` times.
    """
    rng = random.Random(seed)
    candidate = path
    last_err: Exception | None = None
    for attempt in range(MAX_RETRIES + 1):
        try:
            final, events = lift_path(state, candidate, **kw)
            if validate is None or validate(final, events):
                return final, events, candidate
            last_err = NonGenericPathError("lifted path failed validation")
        except OutOfModelError:
            raise
        except NonGenericPathError as exc:
            last_err = exc
        if attempt == MAX_RETRIES:
            break
        base = path if len(path) > 2 else _with_midpoints(path)
        candidate = _jitter(base, eps, rng)
        eps /= 2
    raise NonGenericPathError(f"perturbation retries exhausted: {last_err}")


def _jitter_scale(d: Diagram, Z: Charge) -> Fraction:
    """A perturbation size small against every root charge (finite part)."""
    fin = finite_part(d)
    Zf = Z[1:] if d.affine else Z
    roots = positive_roots(fin)
    m = min(abs(evaluate(Zf, a).re) + abs(evaluate(Zf, a).im) for a in roots)
    if d.affine:
        zd = evaluate(Z, delta(d))
        m = min(m, abs(zd.re) + abs(zd.im))
    height = max(sum(a) for a in roots) + (sum(delta(d)) if d.affine else 0)
    return m / (16 * height * d.size)


# ------------------------------------------------------------ loops

_CLOCKWISE = (GQ(0, -1), GQ(-1, 0), GQ(0, 1), GQ(1, 0))


def rotation_path(Z: Charge, turns: int) -> list[Charge]:
    scalars = _CLOCKWISE if turns > 0 else tuple(m.conjugate() for m in _CLOCKWISE)
    path = [Z]
    for _ in range(abs(turns)):
        path += [scale(mu, Z) for mu in scalars]
    return path


def rotate_loop(state: CoverState, turns: int, *, check: bool = False) -> CoverState:
    """Lift ``|turns|`` full turns of the scalar loop 1 -> -i -> -1 -> i -> 1.

    Positive turns are clockwise, matching the action of the shift functor.
    """
    if not isinstance(turns, int) or turns == 0:
        raise InvalidInputError("turns must be a nonzero integer")
    d = state.diagram
    if d.affine:
        raise OutOfModelError(
            "a full rotation winds Z(delta) around 0; along any finite tilting chain "
            "Im Z(delta) stays positive, so the loop cannot be lifted in this model")
    path = rotation_path(state.charge, turns)
    final, _, _ = lift_with_retries(state, path, _jitter_scale(d, state.charge), check=check)
    return final


def loop_from_word(d: Diagram, w: Sequence, basepoint: Charge | None = None,
                   *, check: bool = False) -> list[Charge]:
    """Polyline in the regular charges whose lift realizes the word ``w``.

    Letters are processed left to right. Each letter contributes a two-step
    dip that pushes the transported simple across the negative (or, for an
    inverse letter, positive) real axis and lands on the reflected
    basepoint.
    """
    Z0 = standard_basepoint(d) if basepoint is None else tuple(basepoint)
    if not in_fundamental(Z0):
        raise InvalidInputError("loop basepoint must lie in the fundamental chamber")
    from .charges import act_weyl

    M = tuple(tuple(int(i == j) for j in range(d.size)) for i in range(d.size))
    path = [Z0]
    for lab, sgn in w:
        s = d.index(lab)
        sref = simple_reflection(d, lab)
        dip = list(Z0)
        dip[s] = GQ(-1 if sgn > 0 else 1, Z0[s].im / 2)
        path.append(act_weyl(M, tuple(dip)))
        M = tuple(map(tuple, _linalg.matmul(M, sref)))
        path.append(act_weyl(M, Z0))
    if len(path) == 1:
        path.append(Z0)

    expected = [(lab, ASCENDING if sgn > 0 else DESCENDING) for lab, sgn in w]

    def validate(final, events):
        return [(e.slot, e.direction) for e in events] == expected

    start = initial_state(d, Z0)
    _, _, used = lift_with_retries(start, path, _jitter_scale(d, Z0), validate=validate,
                                   check=check)
    return used


def _pure_shift(d: Diagram, classes, ledgers) -> int | None:
    m = ledgers[0]
    if any(k != m for k in ledgers):
        return None
    sign = -1 if m % 2 else 1
    if classes != tuple(tuple(sign * x for x in row) for row in standard_classes(d)):
        return None
    return m


def monodromy(d: Diagram, w: Sequence, *, check: bool = False) -> DeckTransform:
    """Deck transformation obtained by lifting the loop of ``w`` from the base state."""
    from .weylbraid import make_word

    w = make_word(d, w)
    Z0 = standard_basepoint(d)
    path = loop_from_word(d, w, Z0, check=check)
    final, _ = lift_path(initial_state(d, Z0), path, check=check)
    M = word_to_matrix(d, final.log)
    if M != word_to_matrix(d, w):
        raise InvariantViolation("monodromy K-matrix differs from the word's Weyl matrix")
    shift = _pure_shift(d, final.classes, final.ledgers)
    return DeckTransform(final.log, M, final.ledgers, shift is not None, shift)


# ------------------------------------------------------------ normalization

def _fan() -> list[GQ]:
    slopes = [Fraction(0), Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(-1, 2),
              Fraction(2), Fraction(-2), Fraction(1, 3), Fraction(-1, 3), Fraction(3),
              Fraction(-3), Fraction(1, 4), Fraction(-1, 4), Fraction(4), Fraction(-4)]
    return [GQ(1, q) for q in slopes] + [I]


@dataclass(frozen=True)
class Normalization:
    mu: GQ
    word: Word
    state: CoverState  # replayed state: normalized charge, standard classes, zero ledgers
    lifted: CoverState  # lifted state at mu * Z, before undoing the word
    events: tuple[Event, ...] = ()

    @property
    def normalized_charge(self) -> Charge:
        return self.state.charge


def normalize(d: Diagram, Z: Sequence[GQ], *, check: bool = False) -> Normalization:
    """Find ``mu`` and a word carrying ``mu * Z`` back to the closed chamber.

    The straight path from the standard basepoint to ``mu * Z`` is lifted
    from the base state; the event log is the deck word. For affine
    diagrams ``mu`` fixes Z(delta) = i, so the whole path stays in that
    slice and crosses finitely many alcove walls.
    """
    Z = tuple(GQ.of(z) for z in Z)
    reg = is_regular(d, Z)
    if not reg.regular:
        raise InvalidInputError(f"charge is not regular; vanishes on {reg.witness}")
    if d.affine:
        mu = I / evaluate(Z, delta(d))
    else:
        roots = positive_roots(d)
        for mu in _fan():
            if all((mu * evaluate(Z, a)).im != 0 for a in roots):
                break
        else:
            raise NonGenericEndpointError("no fan direction keeps every root off the real axis")
    target = standard_basepoint(d)
    Y = scale(mu, Z)
    start = initial_state(d, target)
    final, events, _ = lift_with_retries(
        start, [target, Y], _jitter_scale(d, target), check=check, endpoint="heart")
    normalized = tuple(evaluate(Y, c) for c in final.classes)
    from .charges import in_fundamental_closure

    if not in_fundamental_closure(normalized):
        raise InvariantViolation("normalized charge is outside the closed chamber")
    replayed = CoverState(d, normalized, standard_classes(d), (0,) * d.size)
    return Normalization(mu, final.log, replayed, final, tuple(events))


def replay_normalization(d: Diagram, Z: Sequence[GQ], mu: GQ, word: Word) -> Charge:
    """Apply ``mu`` and then the inverse deck word to ``Z`` (independent of lifting)."""
    from .charges import act_weyl

    M = word_to_matrix(d, word)
    Minv = _linalg.integer_inverse(M)
    return act_weyl(Minv, scale(mu, tuple(GQ.of(z) for z in Z)))


# ------------------------------------------------------------ exchange graph

def _shift_key(state: CoverState):
    k0 = state.ledgers[0]
    return state.classes, tuple(k - k0 for k in state.ledgers)


def exchange_bfs(d: Diagram, depth: int) -> dict:
    """Breadth-first exploration of hearts reachable by simple tilts.

    Nodes are (classes, ledgers) with ledgers normalized so slot 1 reads 0.
    ``closed`` is true when the frontier emptied before the depth bound.
    """
    if depth < 0:
        raise InvalidInputError("depth must be >= 0")
    base = CoverState(d, (), standard_classes(d), (0,) * d.size)
    keys = {_shift_key(base): 0}
    reps = [base]
    edges: list[tuple[int, int, str, int]] = []
    frontier = [0]
    level = 0
    involution_ok = True
    while frontier and level < depth:
        nxt = []
        for idx in frontier:
            st = reps[idx]
            for lab in d.labels:
                for direction in (ASCENDING, DESCENDING):
                    new = cross(st, lab, direction)
                    back = cross(new, lab, DESCENDING if direction == ASCENDING else ASCENDING)
                    if back.classes != st.classes or back.ledgers != st.ledgers:
                        involution_ok = False
                    key = _shift_key(new)
                    if key not in keys:
                        keys[key] = len(reps)
                        reps.append(replace(new, log=()))
                        nxt.append(keys[key])
                    edges.append((idx, lab, direction, keys[key]))
        frontier = nxt
        level += 1
    closed = not frontier
    nodes = [{"id": i, "classes": [list(c) for c in s.classes],
              "ledgers": list(_shift_key(s)[1])} for i, s in enumerate(reps)]
    return {
        "diagram": d.name,
        "nodes": nodes,
        "edges": [{"source": a, "slot": lab, "direction": dr, "target": b}
                  for a, lab, dr, b in edges],
        "closed": closed,
        "depth": level,
        "involution_ok": involution_ok,
    }


def exchange_to_dot(graph: dict) -> str:
    lines = [f'digraph "{graph["diagram"]}" {{']
    for n in graph["nodes"]:
        label = " ".join(str(tuple(c)) for c in n["classes"]) + " | " + str(tuple(n["ledgers"]))
        lines.append(f'  n{n["id"]} [label="{label}"];')
    for e in graph["edges"]:
        arrow = "+" if e["direction"] == ASCENDING else "-"
        lines.append(f'  n{e["source"]} -> n{e["target"]} [label="{arrow}{e["slot"]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# ------------------------------------------------------------ automorphisms

def permute_charge(perm: Sequence[int], Z: Sequence[GQ]) -> Charge:
    out: list[GQ] = [GQ()] * len(Z)
    for i, z in enumerate(Z):
        out[perm[i]] = z
    return tuple(out)


def _permute_vector(perm, v):
    out = [0] * len(v)
    for i, x in enumerate(v):
        out[perm[i]] = x
    return tuple(out)


def act_automorphism(perm: Sequence[int], state: CoverState) -> CoverState:
    """Relabel a state by a graph automorphism given as a position permutation."""
    d = state.diagram
    perm = tuple(perm)
    if not is_automorphism(d, perm):
        raise InvalidInputError(f"{perm} is not an automorphism of {d.name}")
    classes: list = [None] * d.size
    ledgers = [0] * d.size
    for t in range(d.size):
        classes[perm[t]] = _permute_vector(perm, state.classes[t])
        ledgers[perm[t]] = state.ledgers[t]
    log = tuple((d.labels[perm[d.index(lab)]], s) for lab, s in state.log)
    charge = permute_charge(perm, state.charge) if state.charge else state.charge
    sheets = tuple(sorted((_permute_vector(perm, b), n) for b, n in state.sheets))
    return CoverState(d, charge, tuple(classes), tuple(ledgers), log, sheets)


# ------------------------------------------------------------ JSON

def state_to_json(state: CoverState) -> dict:
    from .charges import charge_to_json
    from .weylbraid import word_to_json

    return {
        "diagram": state.diagram.name,
        "charge": charge_to_json(state.charge),
        "slots": [{"label": lab, "class": list(c), "ledger": k}
                  for lab, c, k in zip(state.diagram.labels, state.classes, state.ledgers)],
        "log": word_to_json(state.log),
        "sheets": [{"root": list(b), "n": n} for b, n in state.sheets],
    }


def state_from_json(data: dict) -> CoverState:
    from .charges import charge_from_json
    from .diagrams import parse_diagram
    from .weylbraid import make_word

    try:
        d = parse_diagram(data["diagram"])
        Z = charge_from_json(data["charge"], d.size)
        slots = data["slots"]
        if len(slots) != d.size:
            raise InvalidInputError("slot count does not match the diagram")
        classes = tuple(tuple(int(x) for x in s["class"]) for s in slots)
        ledgers = tuple(int(s["ledger"]) for s in slots)
        log = make_word(d, data.get("log", []))
        if "sheets" in data:
            sheets = tuple(sorted((tuple(int(x) for x in e["root"]), int(e["n"]))
                                  for e in data["sheets"] if int(e["n"])))
        else:
            sheets = sheets_from_ledgers(classes, ledgers)
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, InvalidInputError):
            raise
        raise InvalidInputError(f"malformed state: {exc}") from None
    if any(len(c) != d.size for c in classes):
        raise InvalidInputError("class vectors have the wrong length")
    return CoverState(d, Z, classes, ledgers, log, sheets)


def event_to_json(e: Event) -> dict:
    return {"segment": e.segment, "time": str(e.time), "slot": e.slot, "direction": e.direction}


def path_from_json(data, size: int) -> list[Charge]:
    from .charges import charge_from_json

    if not isinstance(data, list) or len(data) < 1:
        raise InvalidInputError("path must be a JSON list of charge vectors")
    return [charge_from_json(Z, size) for Z in data]
