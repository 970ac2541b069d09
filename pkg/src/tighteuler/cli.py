"""Command-line front end.

Exit codes: 0 success, 1 negative answer (no tour, not an Euler
certificate, unsatisfiable), 2 input error, 3 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import counting, generators, reduction, search
from .hypercore import (
    HypergraphError, divisibility_filter, format_hypergraph, format_walk, parse_hypergraph,
    parse_walk, verify_euler,
)

OK, NEGATIVE, INPUT_ERROR, INTERNAL_ERROR = 0, 1, 2, 3


@dataclass
class CommandResult:
    exit_code: int
    payload: str = ""


class _InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _InputError(message)


def _read(path: str | None, stdin: str | None) -> str:
    if path in (None, "-"):
        if stdin is not None:
            return stdin
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise _InputError(str(exc)) from None


def _emit(text: str, out: str | None) -> str:
    if out:
        Path(out).write_text(text)
        return ""
    return text


def _json(schema: str, **fields) -> str:
    return json.dumps({"schema": f"tighteuler.{schema}/1", **fields}, indent=1) + "\n"


def _hypergraph(args, stdin):
    return parse_hypergraph(_read(args.hypergraph, stdin))


def _cmd_count(args, stdin) -> CommandResult:
    h = _hypergraph(args, stdin)
    what = args.command
    if what == "exists-tour":
        if args.method == "search":
            found = counting.exists_euler_tour(h, method="search")
            if args.json:
                return CommandResult(OK if found else NEGATIVE, _json("exists", exists=found))
            return CommandResult(OK if found else NEGATIVE, f"{str(found).lower()}\n")
        if not divisibility_filter(h):
            if args.json:
                return CommandResult(NEGATIVE, _json("exists", exists=False,
                                                     reason="divisibility filter"))
            return CommandResult(NEGATIVE, "false\n")
    rep = counting.count(h, threads=args.threads, force_large=args.force_large)
    if what == "exists-tour":
        found = rep.tour_count > 0
        code = OK if found else NEGATIVE
        if args.json:
            return CommandResult(code, _json("exists", exists=found, **rep.to_json()))
        return CommandResult(code, f"{str(found).lower()}\n")
    value = rep.trail_count if what == "count-trails" else rep.tour_count
    if args.json:
        return CommandResult(OK, _json("count", **rep.to_json()))
    return CommandResult(OK, f"{value}\n")


def _cmd_enumerate(args, stdin) -> CommandResult:
    h = _hypergraph(args, stdin)
    if args.what == "trails":
        seqs = [w.verts for w in search.enumerate_euler_trails(h, args.limit)]
    else:
        seqs = search.enumerate_euler_tours(h, args.limit)
    if args.format == "json":
        return CommandResult(OK, _json("enumerate", what=args.what, count=len(seqs),
                                       sequences=[list(s) for s in seqs]))
    return CommandResult(OK, "".join(" ".join(map(str, s)) + "\n" for s in seqs))


def _cmd_verify(args, stdin) -> CommandResult:
    h = parse_hypergraph(_read(args.hypergraph, stdin))
    w = parse_walk(_read(args.walk, None))
    verdict = verify_euler(h, w)
    code = OK if verdict.is_euler else NEGATIVE
    if args.json:
        return CommandResult(code, _json("verdict", verdict=verdict.kind, reason=verdict.reason))
    return CommandResult(code, f"{verdict}\n")


def _cmd_gen(args, stdin) -> CommandResult:
    fam = args.family
    labels = None
    if fam == "cycle":
        h = generators.gen_tight_cycle(args.n, args.k)
        note = f"tight cycle n={args.n} k={args.k}"
    elif fam == "path":
        h = generators.gen_path(args.t)
        note = f"tight path t={args.t}"
    elif fam == "hell":
        h, labels = generators.gen_h_ell(args.l)
        note = f"torus gadget l={args.l}"
    elif fam == "complete":
        h = generators.gen_complete(args.n, args.k)
        note = f"complete n={args.n} k={args.k}"
    elif fam == "wreath":
        perm = [int(x) for x in args.perm.split()] if args.perm else None
        h = generators.gen_wreath(args.n, args.k, perm)
        note = f"wreath n={args.n} k={args.k}"
    else:
        h = generators.gen_random(args.n, args.k, args.m, args.seed)
        note = f"random n={args.n} k={args.k} m={args.m} seed={args.seed}"
    if getattr(args, "labels", None):
        Path(args.labels).write_text(json.dumps(
            {"schema": "tighteuler.hell-labels/1", **labels.to_json()}, indent=1) + "\n")
    return CommandResult(OK, _emit(format_hypergraph(h, note), args.out))


def _load_formula(args):
    raw = reduction.parse_dimacs(_read(args.cnf, None))
    return raw, reduction.preprocess(raw)


def _trivial(raw) -> CommandResult:
    cleaned = reduction.CnfFormula(raw.t, [c for j, c in enumerate(raw.clauses)
                                           if j not in set(raw.tautologies())])
    sat = reduction.sat_brute_force(cleaned)
    return CommandResult(OK if sat is not None else NEGATIVE,
                         f"fewer than 2 variables after preprocessing; "
                         f"{'satisfiable' if sat is not None else 'unsatisfiable'}\n")


def _cmd_reduce(args, stdin) -> CommandResult:
    raw = reduction.parse_dimacs(_read(args.cnf, None))
    try:
        f = reduction.preprocess(raw)
    except reduction.CnfError as exc:
        if "at least 2 variables" in str(exc):
            return _trivial(raw)
        raise
    h, rmap = reduction.reduce(f)
    if args.map:
        Path(args.map).write_text(rmap.dumps() + "\n")
    return CommandResult(OK, _emit(format_hypergraph(h, f"reduction of {args.cnf}"), args.out))


def _load_map(path: str) -> reduction.ReductionMap:
    try:
        return reduction.ReductionMap.from_json(json.loads(Path(path).read_text()))
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise _InputError(f"bad map file: {exc}") from None


def _cmd_certify(args, stdin) -> CommandResult:
    raw, f = _load_formula(args)
    rmap = _load_map(args.map)
    bits = args.assignment.split()
    if len(bits) != raw.t or any(b not in ("0", "1") for b in bits):
        raise _InputError(f"assignment must be {raw.t} values of 0/1")
    original = [b == "1" for b in bits]
    if not raw.evaluate(original):
        return CommandResult(NEGATIVE, "assignment does not satisfy the formula\n")
    tour = reduction.tour_from_assignment(f, rmap, reduction.from_original(f, original))
    return CommandResult(OK, _emit(format_walk(tour), args.out))


def _cmd_decode(args, stdin) -> CommandResult:
    raw, f = _load_formula(args)
    rmap = _load_map(args.map)
    tour = parse_walk(_read(args.tour, stdin))
    h, _ = reduction.reduce(f)
    verdict = verify_euler(h, tour)
    if verdict.kind != "euler_tour":
        return CommandResult(NEGATIVE, f"{verdict}\n")
    assignment = reduction.assignment_from_tour(f, rmap, tour, h)
    lifted = reduction.to_original(f, assignment, raw.t)
    return CommandResult(OK, " ".join("1" if v else "0" for v in lifted) + "\n")


def _add_count_flags(p):
    p.add_argument("hypergraph", nargs="?", default="-")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--force-large", action="store_true")
    p.add_argument("--json", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tighteuler", description="Tight Euler trails and tours.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name in ("count-trails", "count-tours", "exists-tour"):
        p = sub.add_parser(name)
        _add_count_flags(p)
        if name == "exists-tour":
            p.add_argument("--method", choices=("count", "search"), default="count")
        p.set_defaults(func=_cmd_count)

    p = sub.add_parser("enumerate")
    p.add_argument("hypergraph", nargs="?", default="-")
    p.add_argument("--what", choices=("trails", "tours"), default="tours")
    p.add_argument("--limit", type=int)
    p.add_argument("--format", choices=("lines", "json"), default="lines")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify")
    p.add_argument("hypergraph")
    p.add_argument("walk")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("gen")
    fams = p.add_subparsers(dest="family", required=True, parser_class=_Parser)
    q = fams.add_parser("cycle")
    q.add_argument("-n", type=int, required=True)
    q.add_argument("-k", type=int, default=3)
    q = fams.add_parser("path")
    q.add_argument("-t", type=int, required=True)
    q = fams.add_parser("hell")
    q.add_argument("-l", type=int, required=True)
    q.add_argument("--labels", help="write the vertex label table as JSON here")
    q = fams.add_parser("complete")
    q.add_argument("-n", type=int, required=True)
    q.add_argument("-k", type=int, default=3)
    q = fams.add_parser("wreath")
    q.add_argument("-n", type=int, required=True)
    q.add_argument("-k", type=int, default=3)
    q.add_argument("--perm", help="space-separated image of 0..n-1")
    q = fams.add_parser("random")
    q.add_argument("-n", type=int, required=True)
    q.add_argument("-k", type=int, default=3)
    q.add_argument("-m", type=int, required=True)
    q.add_argument("--seed", type=int, required=True)
    for q in fams.choices.values():
        q.add_argument("--out")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("reduce")
    p.add_argument("--cnf", required=True)
    p.add_argument("--out")
    p.add_argument("--map")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("certify")
    p.add_argument("--cnf", required=True)
    p.add_argument("--map", required=True)
    p.add_argument("--assignment", required=True, help='e.g. "1 0 1"')
    p.add_argument("--out")
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("decode")
    p.add_argument("--cnf", required=True)
    p.add_argument("--map", required=True)
    p.add_argument("--tour", default="-")
    p.set_defaults(func=_cmd_decode)
    return parser


def run(argv: list[str], stdin: str | None = None) -> CommandResult:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, stdin)
    except (counting.CountingError, reduction.ReductionError) as exc:
        return CommandResult(INTERNAL_ERROR, f"internal error: {exc}\n")
    except (_InputError, HypergraphError, reduction.CnfError, counting.TooLargeError) as exc:
        return CommandResult(INPUT_ERROR, f"error: {exc}\n")


def main(argv: list[str] | None = None) -> None:
    res = run(sys.argv[1:] if argv is None else argv)
    stream = sys.stdout if res.exit_code in (OK, NEGATIVE) else sys.stderr
    stream.write(res.payload)
    sys.exit(res.exit_code)
