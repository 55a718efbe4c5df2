"""Command-line front end.

Exit codes: 0 exists/valid, 1 proven nonexistent/invalid, 2 input error,
3 oracle budget exhausted before a verdict.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .dimacs import as_nae, parse_dimacs
from .geometry import Family
from .oracle import CAPPED, FOUND, SearchBudget, brute_force_svr, exhaustive_lsvr_check
from .paths import algorithm_a, lsvr_decision, shared_edges
from .reductions import (
    NAE_MODE, SAT_MODE, GadgetIndex, ReductionError, assignment_bits, assignment_from_bits,
    build_rsvr_drawing, build_rsvr_instance, build_ussvr_drawing, build_ussvr_instance,
    decode_rsvr_assignment, decode_ussvr_assignment, nae_violations, sat_violations,
)
from .render import RenderConfig, render_svg
from .serialize import (
    FormatError, decision_to_json, drawing_from_json, drawing_to_json, dumps, pair_from_json, pair_to_json,
    parse_path_pair,
)
from .visibility import validate_svr

EXIT_OK, EXIT_NO, EXIT_INPUT, EXIT_CAPPED = 0, 1, 2, 3


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def _read_json(path: str):
    try:
        return json.loads(_read(path))
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from exc


def _emit(obj, out: str | None):
    text = dumps(obj)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _svg(path, d, ev=(), eh=()):
    if path and d is not None:
        Path(path).write_text(render_svg(d, ev, eh, RenderConfig()))


def _note(msg: str):
    print(msg, file=sys.stderr)


def cmd_decide_lsvr(args) -> int:
    p = parse_path_pair(_read(args.paths))
    dec = lsvr_decision(p)
    _emit(decision_to_json(dec, p), args.json)
    if dec.exists:
        g = p.graph_pair()
        _svg(args.svg, dec.drawing, g.ev, g.eh)
        _note(f"L-shape SVR exists ({dec.orientation} drawing)")
        return EXIT_OK
    _note("no L-shape SVR: every orientation violates the stretch condition")
    return EXIT_NO


def cmd_algorithm_a(args) -> int:
    p = parse_path_pair(_read(args.paths))
    d = algorithm_a(p, Family(args.family))
    g = p.graph_pair()
    report = validate_svr(d, g)
    shared = shared_edges(p)
    _emit({"drawing": drawing_to_json(d), "report": report.to_json(),
           "shared_edges": [list(e) for e in shared], "labels": list(p.labels)}, args.json)
    _svg(args.svg, d, report.vertical_edges, report.horizontal_edges)
    if shared:
        _note(f"paths share edge(s) {shared}; no {args.family} SVR exists")
        return EXIT_NO
    _note("drawing validated" if report.valid else "drawing failed validation")
    return EXIT_OK if report.valid else EXIT_NO


def cmd_reduce(args) -> int:
    cnf = parse_dimacs(_read(args.cnf))
    if args.mode == NAE_MODE:
        f = as_nae(cnf)
        pair, idx = build_ussvr_instance(f)
        build, bad = build_ussvr_drawing, nae_violations
    else:
        f = cnf
        pair, idx = build_rsvr_instance(f)
        build, bad = build_rsvr_drawing, sat_violations
    out = {"mode": args.mode, "pair": pair_to_json(pair), "index": idx.to_json()}
    if args.assign is None:
        _emit(out, args.json)
        _note(f"built {args.mode} instance with {pair.n} vertices")
        return EXIT_OK
    alpha = assignment_from_bits(args.assign, f.n_vars)
    if bad(f, alpha):
        raise InputError(f"assignment {args.assign} does not satisfy clause(s) {[i + 1 for i in bad(f, alpha)]}")
    d = build(f, alpha)
    report = validate_svr(d, pair)
    out["assignment"] = args.assign
    out["drawing"] = drawing_to_json(d)
    out["report"] = report.to_json()
    _emit(out, args.json)
    _svg(args.svg, d, pair.ev, pair.eh)
    _note("constructed drawing " + ("validates" if report.valid else "FAILS validation"))
    return EXIT_OK if report.valid else EXIT_NO


def cmd_verify(args) -> int:
    d = drawing_from_json(_read_json(args.drawing))
    g = pair_from_json(_read_json(args.pair))
    report = validate_svr(d, g)
    _emit(report.to_json(), args.json)
    _svg(args.svg, d, report.vertical_edges, report.horizontal_edges)
    _note("valid SVR" if report.valid else "not a valid SVR")
    return EXIT_OK if report.valid else EXIT_NO


def cmd_decode(args) -> int:
    d = drawing_from_json(_read_json(args.drawing))
    idx = GadgetIndex.from_json(_read_json(args.index))
    decode = decode_ussvr_assignment if idx.mode == NAE_MODE else decode_rsvr_assignment
    try:
        alpha = decode(d, idx)
    except ReductionError as exc:
        _emit({"error": str(exc)}, args.json)
        _note(f"refused: {exc}")
        return EXIT_NO
    bits = assignment_bits(alpha, idx.n_vars)
    _emit({"assignment": {str(v): alpha[v] for v in sorted(alpha)}, "bits": bits}, args.json)
    _note(f"decoded assignment {bits}")
    return EXIT_OK


def _budget(spec: str | None) -> SearchBudget:
    if not spec:
        return SearchBudget()
    if spec.isdigit():
        return SearchBudget(max_nodes=int(spec))
    fields = {"nodes": "max_nodes", "max_nodes": "max_nodes", "seconds": "time_limit",
              "time_limit": "time_limit", "range": "coord_range", "coord_range": "coord_range"}
    kw = {}
    for part in spec.split(","):
        key, _, val = part.partition("=")
        if key.strip() not in fields or not val:
            raise InputError(f"bad budget item {part!r}; use nodes=N,seconds=S,range=R")
        name = fields[key.strip()]
        kw[name] = float(val) if name == "time_limit" else int(val)
    return SearchBudget(**kw)


def cmd_oracle(args) -> int:
    g = pair_from_json(_read_json(args.pair))
    res = brute_force_svr(g, Family(args.family), _budget(args.budget), workers=args.workers)
    out = {"status": res.status, "nodes": res.nodes, "seconds": round(res.seconds, 3),
           "drawing": drawing_to_json(res.drawing) if res.drawing is not None else None}
    _emit(out, args.json)
    _svg(args.svg, res.drawing, g.ev, g.eh)
    _note(f"oracle: {res.status} after {res.nodes} nodes")
    return {FOUND: EXIT_OK, CAPPED: EXIT_CAPPED}.get(res.status, EXIT_NO)


def cmd_lsvr_check(args) -> int:
    rep = exhaustive_lsvr_check(args.n_max, min(args.n_max, args.completeness_max), _budget(args.budget))
    _emit(rep.to_json(), args.json)
    _note(f"discrepancies: {len(rep.discrepancies)}, capped: {len(rep.capped)}")
    if rep.discrepancies:
        return EXIT_NO
    return EXIT_CAPPED if rep.capped else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="svrkit", description="Simultaneous visibility representations.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, svg=True):
        p.add_argument("--json", metavar="OUT", help="write JSON here instead of stdout")
        if svg:
            p.add_argument("--svg", metavar="OUT", help="also write an SVG rendering")

    p = sub.add_parser("decide-lsvr", help="decide whether two paths have an L-shape SVR")
    p.add_argument("--paths", required=True, help="file: horizontal path on line 1, vertical path on line 2")
    common(p)
    p.set_defaults(func=cmd_decide_lsvr)

    p = sub.add_parser("algorithm-a", help="square/rectangle SVR of two paths")
    p.add_argument("--paths", required=True)
    p.add_argument("--family", choices=["usq", "rect"], default="usq")
    common(p)
    p.set_defaults(func=cmd_algorithm_a)

    p = sub.add_parser("reduce", help="build a hardness instance from a DIMACS formula")
    p.add_argument("--mode", choices=[NAE_MODE, SAT_MODE], required=True)
    p.add_argument("--cnf", required=True)
    p.add_argument("--assign", help="truth bits, character k is variable k+1, 1 = true")
    common(p)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("verify", help="validate a drawing against a graph pair")
    p.add_argument("--drawing", required=True)
    p.add_argument("--pair", required=True)
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("decode", help="read a truth assignment off a gadget drawing")
    p.add_argument("--drawing", required=True)
    p.add_argument("--index", required=True, help="gadget index JSON (the 'index' field of reduce)")
    common(p, svg=False)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("oracle", help="exhaustive SVR search for small graph pairs")
    p.add_argument("--pair", required=True)
    p.add_argument("--family", choices=[f.value for f in Family], required=True)
    p.add_argument("--budget", help="N, or nodes=N,seconds=S,range=R")
    p.add_argument("--workers", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("lsvr-check", help="cross-check the L-shape decision against validation and the oracle")
    p.add_argument("--n-max", type=int, default=4)
    p.add_argument("--completeness-max", type=int, default=4)
    p.add_argument("--budget")
    common(p, svg=False)
    p.set_defaults(func=cmd_lsvr_check)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, FormatError, ValueError, KeyError, TypeError) as exc:
        _note(f"error: {exc}")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
