"""Command-line interface: ``dynkinstab <subcommand> --diagram NAME ...``.

Exit codes: 0 success, 1 invalid input, 2 non-generic path, 3 invariant
violation. JSON goes to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import constellations as cons
from . import cover
from .charges import charge_from_json, charge_to_json, parse_rational
from .diagrams import automorphisms, catalog, delta, parse_diagram, to_json
from .errors import DynkinStabError, InvalidInputError
from .rootsys import enumerate_roots, is_regular, positive_roots
from .weylbraid import (
    coxeter_number,
    coxeter_word,
    parse_word,
    verify_relations,
    word_to_json,
)


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh, parse_float=_reject_float)
    except OSError as exc:
        raise InvalidInputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def _reject_float(text):
    raise InvalidInputError(f"floating point literal {text} not allowed; use 'p/q' strings")


def parse_charge_file(path: str, size: int | None = None):
    return charge_from_json(_load_json(path), size)


def _emit(args, payload, text: str | None = None, dot: str | None = None) -> None:
    if args.format == "dot":
        if dot is None:
            raise InvalidInputError(f"{args.command} has no DOT output")
        sys.stdout.write(dot)
    elif args.format == "text" and text is not None:
        sys.stdout.write(text.rstrip("\n") + "\n")
    else:
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _diagram_dot(d) -> str:
    lines = [f'graph "{d.name}" {{']
    for lab in d.labels:
        style = ", style=dashed" if d.affine and lab == 0 else ""
        lines.append(f'  v{lab} [label="{lab}"{style}];')
    for a, b, m in d.edges:
        for _ in range(m):
            lines.append(f"  v{a} -- v{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_diagram(args) -> int:
    d = parse_diagram(args.diagram)
    payload = to_json(d)
    payload["automorphism_generators"] = [
        {d.labels[i]: d.labels[p] for i, p in enumerate(g)} for g in automorphisms(d)
    ]
    rows = "\n".join(" ".join(f"{x:3d}" for x in row) for row in d.euler_matrix)
    text = f"{d.name}  vertices {list(d.labels)}\n{rows}"
    if d.affine:
        text += f"\nmarks {delta(d)}"
    _emit(args, payload, text, _diagram_dot(d))
    return 0


def cmd_roots(args) -> int:
    d = parse_diagram(args.diagram)
    roots = positive_roots(d) if args.positive else enumerate_roots(d)
    _emit(args, [list(r) for r in roots], "\n".join(" ".join(map(str, r)) for r in roots))
    return 0


def cmd_regular(args) -> int:
    d = parse_diagram(args.diagram)
    Z = parse_charge_file(args.charge, d.size)
    res = is_regular(d, Z)
    payload = {"regular": res.regular, "witness": list(res.witness) if res.witness else None}
    _emit(args, payload, f"regular: {res.regular}" + (f"  witness {res.witness}" if res.witness else ""))
    return 0


def _start_state(d, args, Z=None):
    if getattr(args, "state", None):
        st = cover.state_from_json(_load_json(args.state))
        if st.diagram != d:
            raise InvalidInputError("state file belongs to a different diagram")
        cover.check_state(st)
        return st
    if Z is None:
        Z = cover.standard_basepoint(d)
    return cover.initial_state(d, Z)


def _state_text(st) -> str:
    lines = [f"charge: {', '.join(map(str, st.charge))}"]
    for lab, c, k in zip(st.diagram.labels, st.classes, st.ledgers):
        lines.append(f"slot {lab}: class {c} ledger {k:+d}")
    lines.append("log: " + ",".join(map(str, word_to_json(st.log))))
    return "\n".join(lines)


def cmd_lift(args) -> int:
    d = parse_diagram(args.diagram)
    path = cover.path_from_json(_load_json(args.path), d.size)
    st = _start_state(d, args, path[0])
    final, events = cover.lift_path(st, path, check=args.check, endpoint=args.endpoint)
    payload = {"state": cover.state_to_json(final),
               "events": [cover.event_to_json(e) for e in events]}
    text = "\n".join(f"segment {e.segment} t={e.time} slot {e.slot} {e.direction}" for e in events)
    _emit(args, payload, (text + "\n" if text else "") + _state_text(final))
    return 0


def _deck_json(dt: cover.DeckTransform) -> dict:
    return {"word": word_to_json(dt.word), "matrix": [list(r) for r in dt.matrix],
            "ledger": list(dt.ledger), "pure_shift": dt.pure_shift, "shift": dt.shift}


def cmd_monodromy(args) -> int:
    d = parse_diagram(args.diagram)
    dt = cover.monodromy(d, parse_word(d, args.word), check=args.check)
    text = f"ledger {dt.ledger}  pure_shift {dt.pure_shift}" + (
        f" [{dt.shift}]" if dt.pure_shift else "")
    _emit(args, _deck_json(dt), text)
    return 0


def cmd_normalize(args) -> int:
    d = parse_diagram(args.diagram)
    Z = parse_charge_file(args.charge, d.size)
    res = cover.normalize(d, Z, check=args.check)
    payload = {"mu": charge_to_json([res.mu])[0], "word": word_to_json(res.word),
               "normalized_charge": charge_to_json(res.normalized_charge),
               "state": cover.state_to_json(res.state)}
    text = f"mu {res.mu}\nword {','.join(map(str, word_to_json(res.word)))}\n" + _state_text(res.state)
    _emit(args, payload, text)
    return 0


def cmd_rotate(args) -> int:
    d = parse_diagram(args.diagram)
    Z = parse_charge_file(args.charge, d.size) if args.charge else None
    st = _start_state(d, args, Z)
    final = cover.rotate_loop(st, args.turns, check=args.check)
    delta_k = [b - a for a, b in zip(st.ledgers, final.ledgers)]
    payload = {"state": cover.state_to_json(final), "classes_restored": final.classes == st.classes,
               "ledger_delta": delta_k}
    _emit(args, payload, _state_text(final))
    return 0


def cmd_coxeter_check(args) -> int:
    d = parse_diagram(args.diagram)
    if d.affine:
        raise InvalidInputError("coxeter-check needs a finite diagram")
    h = coxeter_number(d)
    dt = cover.monodromy(d, coxeter_word(d, h), check=args.check)
    uniform = len(set(dt.ledger)) == 1
    payload = {"diagram": d.name, "coxeter_number": h, "pure_shift": dt.pure_shift,
               "ledger": dt.ledger[0] if uniform else list(dt.ledger)}
    _emit(args, payload, f"(s_1...s_n)^{h}: pure_shift {dt.pure_shift}, ledger {payload['ledger']}")
    return 0


def cmd_exchange(args) -> int:
    d = parse_diagram(args.diagram)
    g = cover.exchange_bfs(d, args.depth)
    text = f"{len(g['nodes'])} nodes, {len(g['edges'])} edges, closed {g['closed']}"
    _emit(args, g, text, cover.exchange_to_dot(g))
    return 0


def cmd_constellation(args) -> int:
    d = parse_diagram(args.diagram)
    if not (d.affine and d.family == "A"):
        raise InvalidInputError("constellation supports affine type A diagrams only")
    theta = [parse_rational(t, f"theta[{k}]") for k, t in enumerate(args.theta.split(","))]
    rep = cons.find_semistable(d.rank, theta)
    res = cons.is_semistable(rep, theta)
    payload = {"rep": rep.to_json(), "theta": [str(t) for t in theta],
               "semistable": res.semistable,
               "closed_subsets": [sorted(S) for S in cons.closed_subsets(rep)],
               "certificate": sorted(res.certificate) if res.certificate else None}
    _emit(args, payload, f"x {[str(v) for v in rep.x]}  y {[str(v) for v in rep.y]}  semistable {res.semistable}")
    return 0


def cmd_verify_relations(args) -> int:
    diagrams = [parse_diagram(args.diagram)] if args.diagram else catalog(args.max_rank)
    out = []
    for d in diagrams:
        rep = verify_relations(d)
        out.append({"diagram": d.name, "passed": all(r["passed"] for r in rep), "relations": rep})
    text = "\n".join(f"{r['diagram']}: {'pass' if r['passed'] else 'FAIL'}" for r in out)
    _emit(args, out if not args.diagram else out[0], text)
    return 0 if all(r["passed"] for r in out) else 3


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dynkinstab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_, diagram=True):
        sp = sub.add_parser(name, help=help_)
        if diagram:
            sp.add_argument("--diagram", required=True, help='e.g. "A2", "D4", "A1~"')
        sp.add_argument("--format", choices=("json", "text", "dot"), default="json")
        sp.set_defaults(func=func)
        return sp

    add("diagram", cmd_diagram, "Euler matrix, marks and automorphisms")
    sp = add("roots", cmd_roots, "roots of a finite diagram")
    sp.add_argument("--positive", action="store_true")
    sp = add("regular", cmd_regular, "regularity test with witness root")
    sp.add_argument("--charge", required=True)
    sp = add("lift", cmd_lift, "lift a polyline of charges")
    sp.add_argument("--path", required=True, help="JSON list of charge vectors")
    sp.add_argument("--state", help="start state JSON (default: chamber state at the first vertex)")
    sp.add_argument("--endpoint", choices=("error", "heart"), default="error")
    sp.add_argument("--check", action="store_true", help="verify invariants at every event")
    sp = add("monodromy", cmd_monodromy, "deck transform of a braid word loop")
    sp.add_argument("--word", required=True, help='e.g. "1,2,-1"; use --word=-1,2 for a leading inverse')
    sp.add_argument("--check", action="store_true")
    sp = add("normalize", cmd_normalize, "scalar and word carrying a charge to the closed chamber")
    sp.add_argument("--charge", required=True)
    sp.add_argument("--check", action="store_true")
    sp = add("rotate", cmd_rotate, "lift full turns of the scalar loop")
    sp.add_argument("--turns", type=int, default=1)
    sp.add_argument("--charge", help="chamber charge (default: standard basepoint)")
    sp.add_argument("--state", help="start state JSON")
    sp.add_argument("--check", action="store_true")
    sp = add("coxeter-check", cmd_coxeter_check, "monodromy of the Coxeter word to the power h")
    sp.add_argument("--check", action="store_true")
    sp = add("exchange", cmd_exchange, "BFS over tilts of the standard heart")
    sp.add_argument("--depth", type=int, default=3)
    sp = add("constellation", cmd_constellation, "semistable delta-dimensional cycle rep")
    sp.add_argument("--theta", required=True, help='weights, e.g. "1,-1"')
    sp = add("verify-relations", cmd_verify_relations, "matrix-level braid relation checks",
             diagram=False)
    sp.add_argument("--diagram")
    sp.add_argument("--max-rank", type=int, default=8)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    try:
        return args.func(args)
    except DynkinStabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
