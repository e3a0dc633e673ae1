"""Command-line interface: ``latcut <command> ...``.

Exit codes: 0 success (checked property holds), 1 property false,
2 usage or input error, 3 enumeration budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

from . import cutsets as cs
from .errors import (
    IsLevelClassError,
    LatcutError,
    LimitError,
    NotLatticeError,
    NotSemimodularError,
)
from .generators import KINDS, GeneratorSpec, generate
from .io import emit_document, emit_dot, parse_document
from .lattice import jordan_dedekind_violation, lattice_violation, semimodularity_violation
from .levels import level_classes

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class _Usage(Exception):
    pass


def _fmt(elems):
    return ",".join(str(e) for e in elems)


def _parse_set(text):
    try:
        return sorted({int(tok) for tok in text.split(",") if tok.strip()})
    except ValueError:
        raise _Usage(f"--set expects comma-separated element ids, got {text!r}") from None


def _read(path, strict):
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        P = parse_document(text, strict=strict)
    for w in caught:
        print(f"latcut: warning: {w.message}", file=sys.stderr)
    return P


def _write(path, text):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _dump(obj):
    print(json.dumps(obj, indent=2))


def cmd_gen(args):
    spec = GeneratorSpec(args.kind, tuple(args.params), args.seed)
    P = generate(spec)
    meta = {"generator": " ".join([args.kind] + [str(p) for p in args.params])}
    if args.seed is not None:
        meta["seed"] = str(args.seed)
    _write(args.output, emit_document(P, meta))
    return EXIT_OK


def cmd_check(args):
    P = _read(args.file, args.strict)
    wanted = [k for k in ("lattice", "semimodular", "jd") if getattr(args, k)]
    if not wanted:
        wanted = ["lattice", "semimodular", "jd"]
    results = {}
    lines = []
    lat = lattice_violation(P)
    if "lattice" in wanted:
        if lat is None:
            results["lattice"] = {"holds": True}
            lines.append("lattice: true")
        else:
            results["lattice"] = {"holds": False, "pair": list(lat.pair), "op": lat.op,
                                  "bounds": list(lat.bounds)}
            lines.append(f"lattice: false ({lat.op} of {lat.pair[0]} and {lat.pair[1]}: "
                         f"candidates [{_fmt(lat.bounds)}])")
    if "semimodular" in wanted:
        if lat is not None:
            results["semimodular"] = {"holds": False, "reason": "not a lattice"}
            lines.append("semimodular: false (not a lattice)")
        else:
            bad = semimodularity_violation(P)
            if bad is None:
                results["semimodular"] = {"holds": True}
                lines.append("semimodular: true")
            else:
                x, y = bad
                results["semimodular"] = {"holds": False, "witness": [x, y]}
                lines.append(f"semimodular: false (x={x} y={y}: {x} covers {x}^{y} "
                             f"but {x}v{y} does not cover {y})")
    if "jd" in wanted:
        bad = jordan_dedekind_violation(P)
        if bad is None:
            results["jordan_dedekind"] = {"holds": True}
            lines.append("jordan-dedekind: true")
        else:
            x, y, c1, c2 = bad
            results["jordan_dedekind"] = {"holds": False, "interval": [x, y],
                                          "chains": [list(c1), list(c2)]}
            lines.append(f"jordan-dedekind: false (interval [{x},{y}]: chains "
                         f"{_fmt(c1)} and {_fmt(c2)})")
    if args.json:
        _dump(results)
    else:
        print("\n".join(lines))
    return EXIT_OK if all(r["holds"] for r in results.values()) else EXIT_FALSE


def cmd_levels(args):
    P = _read(args.file, args.strict)
    classes = level_classes(P).classes
    if args.json:
        _dump({"classes": [list(c) for c in classes]})
    else:
        for c in classes:
            print(_fmt(c))
    return EXIT_OK


def cmd_cutsets(args):
    P = _read(args.file, args.strict)
    found = cs.enumerate_antichain_cutsets(P, chain_limit=args.max_chains, node_budget=args.budget)
    if args.json:
        _dump({"cutsets": [list(c) for c in found]})
    else:
        for c in found:
            print(_fmt(c))
    return EXIT_OK


def _report_text(report):
    lines = [f"holds: {str(report.holds).lower()}",
             f"level classes: {len(report.level_classes)}"]
    lines += [f"  {_fmt(c)}" for c in report.level_classes]
    lines.append(f"cutsets: {len(report.cutsets)}")
    lines += [f"  {_fmt(c)}" for c in report.cutsets]
    lines.append(f"mismatches: {len(report.mismatches)}")
    for m in report.mismatches:
        if m.kind == cs.LEVEL_NOT_CUTSET:
            lines.append(f"  {m.kind} {{{_fmt(m.elems)}}}: chain {_fmt(m.witness)}")
        else:
            a, b = m.witness
            lines.append(f"  {m.kind} {{{_fmt(m.elems)}}}: elements {a} and {b}")
    return "\n".join(lines)


def cmd_verify(args):
    P = _read(args.file, args.strict)
    run = cs.compare_unchecked if args.unchecked else cs.verify_theorem
    try:
        report = run(P, chain_limit=args.max_chains, node_budget=args.budget)
    except NotSemimodularError as exc:
        raise _Usage(f"{exc}; use --unchecked to compare anyway") from None
    if args.json:
        _dump(report.to_dict())
    else:
        print(_report_text(report))
    return EXIT_OK if report.holds else EXIT_FALSE


def cmd_witness(args):
    P = _read(args.file, args.strict)
    elems = _parse_set(args.set)
    try:
        w = cs.proof_witness_chain(P, elems)
    except IsLevelClassError as exc:
        print(f"latcut: {exc}; it is an antichain cutset, no witness exists", file=sys.stderr)
        return EXIT_FALSE
    if args.json:
        _dump(w.to_dict())
    else:
        c = w.config
        print(f"chain: {_fmt(w.chain)}")
        print(f"config: a={c.a} b={c.b} x={c.x} y={c.y} z={c.z} w={c.w} path={_fmt(c.path)}")
    return EXIT_OK


def cmd_dot(args):
    P = _read(args.file, args.strict)
    highlight = [_parse_set(s) for s in args.set or []]
    if args.levels:
        highlight += [list(c) for c in level_classes(P).classes]
    _write(args.output, emit_dot(P, highlight))
    return EXIT_OK


def _positive(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def build_parser():
    parser = argparse.ArgumentParser(
        prog="latcut",
        description="Level classes and antichain cutsets of finite lattices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_file(p):
        p.add_argument("file", metavar="FILE", help="poset document, '-' for stdin")
        p.add_argument("--strict", action="store_true",
                       help="reject covers pairs implied by other pairs")
        return p

    def with_budget(p):
        p.add_argument("--budget", type=_positive, default=None,
                       help=f"search-node budget (default: ${cs.BUDGET_ENV} or {cs.DEFAULT_NODE_BUDGET})")
        p.add_argument("--max-chains", type=_positive, default=cs.DEFAULT_ENUM_CHAIN_LIMIT,
                       help="maximum number of maximal chains to enumerate")
        return p

    p = sub.add_parser("gen", help="generate a fixture poset")
    p.add_argument("kind", choices=KINDS)
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_gen)

    p = with_file(sub.add_parser("check", help="test lattice, semimodularity and gradedness"))
    p.add_argument("--lattice", action="store_true")
    p.add_argument("--semimodular", action="store_true")
    p.add_argument("--jd", action="store_true", help="Jordan-Dedekind chain condition")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = with_file(sub.add_parser("levels", help="print level classes"))
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_levels)

    p = with_budget(with_file(sub.add_parser("cutsets", help="enumerate antichain cutsets")))
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_cutsets)

    p = with_budget(with_file(sub.add_parser("verify", help="compare level classes with cutsets")))
    p.add_argument("--unchecked", action="store_true",
                   help="skip the semimodularity requirement")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = with_file(sub.add_parser("witness", help="maximal chain avoiding a non-level antichain"))
    p.add_argument("--set", required=True, help="comma-separated element ids")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_witness)

    p = with_file(sub.add_parser("dot", help="Hasse diagram in Graphviz DOT"))
    p.add_argument("--levels", action="store_true", help="colour each level class")
    p.add_argument("--set", action="append", help="comma-separated ids to highlight (repeatable)")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_dot)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    try:
        return args.func(args)
    except LimitError as exc:
        print(f"latcut: budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except NotLatticeError as exc:
        print(f"latcut: not a lattice: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (_Usage, LatcutError, OSError, ValueError) as exc:
        print(f"latcut: {exc}", file=sys.stderr)
        return EXIT_INPUT


cli_main = main

if __name__ == "__main__":
    sys.exit(main())
