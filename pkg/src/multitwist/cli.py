"""Command-line front end.

Exit status: 0 for success and YES-style answers, 1 for NO-style answers,
2 for bad input. Reports are plain text, one fact per line.
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable

from . import homology, surface, textformat, torelli
from .edge_classes import classify
from .multigraph import GraphError
from .torelli import BPMap, NotTorelliError, SeparatingTwist

EXIT_OK, EXIT_NO, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _read(path: str) -> textformat.ParsedInput:
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return textformat.parse_input(text)


def _surface(parsed: textformat.ParsedInput) -> surface.SurfaceModel:
    model = parsed.surface()
    report = surface.validate(model)
    if not report.ok:
        raise InputError("invalid surface model: " + "; ".join(report.violations))
    return model


def cmd_classify(args, out) -> int:
    parsed = _read(args.file)
    cls = classify(parsed.graph)
    for e in parsed.graph.edge_ids:
        kind, j = cls.kind(e)
        out(f"{e} {kind}" + ("" if j is None else f" {j}"))
    return EXIT_OK


def cmd_check_torelli(args, out) -> int:
    parsed = _read(args.file)
    bad = torelli.violations(classify(parsed.graph), parsed.weights)
    out("YES" if not bad else f"NO {bad[0]}")
    return EXIT_NO if bad else EXIT_OK


def cmd_rank(args, out) -> int:
    parsed = _read(args.file)
    out(str(torelli.torelli_rank(classify(parsed.graph))))
    return EXIT_OK


def cmd_decompose(args, out) -> int:
    parsed = _read(args.file)
    try:
        factors = torelli.decompose(parsed.multitwist())
    except NotTorelliError as exc:
        out(f"NO {exc}")
        return EXIT_NO
    for f in factors:
        if isinstance(f, SeparatingTwist):
            out(f"SEP {f.edge} {f.exponent}")
        elif isinstance(f, BPMap):
            out(f"BP {f.edge_plus} {f.edge_minus} {f.exponent}")
    return EXIT_OK


def cmd_check_mod(args, out) -> int:
    if args.modulus < 2:
        raise InputError(f"modulus must be >= 2, got {args.modulus}")
    parsed = _read(args.file)
    bad = torelli.violations(classify(parsed.graph), parsed.weights, args.modulus)
    out("YES" if not bad else f"NO {bad[0]}")
    return EXIT_NO if bad else EXIT_OK


def cmd_verify_homology(args, out) -> int:
    parsed = _read(args.file)
    model = _surface(parsed)
    m = parsed.multitwist()
    combinatorial = torelli.is_torelli(m)
    algebraic = homology.is_identity_action(homology.build_model(model), m)
    out(f"torelli {'YES' if combinatorial else 'NO'}")
    out(f"identity_action {'YES' if algebraic else 'NO'}")
    out("AGREE" if combinatorial == algebraic else "DISAGREE")
    return EXIT_OK if combinatorial == algebraic else EXIT_NO


def cmd_bounds(args, out) -> int:
    model = _surface(_read(args.file))
    report = surface.check_bounds(model)
    for line in report.lines():
        out(line)
    return EXIT_OK if report.ok else EXIT_NO


def cmd_gen_extremal(args, out) -> int:
    if args.g < 2:
        raise InputError(f"g must be >= 2, got {args.g}")
    sys.stdout.write(textformat.dump_surface(surface.gen_extremal(args.g)))
    return EXIT_OK


def cmd_gen_random(args, out) -> int:
    if args.g < 2:
        raise InputError(f"g must be >= 2, got {args.g}")
    sys.stdout.write(textformat.dump_surface(surface.gen_random(args.g, args.seed)))
    return EXIT_OK


def cmd_conjecture_demo(args, out) -> int:
    ce = homology.conjecture_counterexample()
    out(f"lattice rank {ce.lattice.rank} basis a1 b1 a2 b2")
    for i, (v, m) in enumerate(ce.pairs, 1):
        out(f"vector {i} {' '.join(map(str, v))} exponent {m}")
    for row in ce.matrix:
        out("matrix " + " ".join(map(str, row)))
    ok = ce.matrix == homology.la.identity(ce.lattice.rank)
    out(f"identity {'YES' if ok else 'NO'}")
    return EXIT_OK if ok else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="multitwist", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=["text"], default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, fn: Callable, *positionals):
        p = sub.add_parser(name)
        for arg, typ in positionals:
            p.add_argument(arg, type=typ)
        p.set_defaults(func=fn)

    add("classify", cmd_classify, ("file", str))
    add("check-torelli", cmd_check_torelli, ("file", str))
    add("rank", cmd_rank, ("file", str))
    add("decompose", cmd_decompose, ("file", str))
    add("check-mod", cmd_check_mod, ("modulus", int), ("file", str))
    add("verify-homology", cmd_verify_homology, ("file", str))
    add("bounds", cmd_bounds, ("file", str))
    add("gen-extremal", cmd_gen_extremal, ("g", int))
    add("gen-random", cmd_gen_random, ("g", int), ("seed", int))
    add("conjecture-demo", cmd_conjecture_demo)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK

    def out(line: str) -> None:
        sys.stdout.write(line + "\n")

    try:
        return args.func(args, out)
    except (InputError, textformat.ParseError, GraphError, surface.SurfaceError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
