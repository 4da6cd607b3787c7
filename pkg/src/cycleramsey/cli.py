"""Command line: ``cycleramsey {witness, extremal, check-lemma, gen}``.

Exit codes for ``witness``: 0 when a cycle or an independent set is found,
2 when the input violates the hypotheses, 3 on an internal failure, and 1
for unreadable input or bad parameters.  Certificates go to ``--out`` (or
stdout); reports go to stdout.
"""

from __future__ import annotations

import argparse
import sys

from .checks import SUITES, run_suite
from .errors import CycleRamseyError, ParseError
from .formats import read_graph, to_edgelist, to_graph6
from .generators import clique_union_cross, extremal_graph, saw_tail, two_connected_random
from .rng import XorShift64Star
from .witness import Kind, ramsey_witness, verify_certificate

EXIT_OK, EXIT_USAGE, EXIT_HYPOTHESIS, EXIT_FAILURE = 0, 1, 2, 3


def _emit(text: str, out: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _graph_text(g, fmt: str) -> str:
    return to_graph6(g) if fmt == "graph6" else to_edgelist(g)


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def cmd_witness(args) -> int:
    try:
        with open(args.input, encoding="utf-8") as fh:
            g = read_graph(fh.read())
    except (OSError, ParseError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    p, r = args.p, args.r
    if args.unshifted:
        p, r = p - 1, r - 1
    cert = ramsey_witness(g, p, r)
    _emit(cert.to_json(), args.out)
    if cert.kind == Kind.HYPOTHESIS:
        print(f"hypothesis violated: {cert.message}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    if cert.kind == Kind.FAILURE:
        print(f"failure: {cert.message}", file=sys.stderr)
        return EXIT_FAILURE
    check = verify_certificate(g, p, r, cert)
    if not check:
        print(f"failure: certificate does not verify ({check.reason})", file=sys.stderr)
        return EXIT_FAILURE
    what = f"cycle of order {p + 1}" if cert.kind == Kind.CYCLE else f"independent set of size {r + 1}"
    print(f"{cert.kind.value}: {what}", file=sys.stderr if args.out in (None, "-") else sys.stdout)
    return EXIT_OK


def cmd_extremal(args) -> int:
    try:
        g = extremal_graph(args.p, args.r)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    _emit(_graph_text(g, args.format), args.out)
    return EXIT_OK


def cmd_check_lemma(args) -> int:
    report = run_suite(args.lemma, args.trials, args.seed, args.max_n)
    print(report.summary())
    return EXIT_OK if report.ok else EXIT_FAILURE


def cmd_gen(args) -> int:
    rng = XorShift64Star(args.seed)
    try:
        if args.kind == "clique_union_cross":
            text = _graph_text(clique_union_cross(args.sizes, args.m, rng), args.format)
        elif args.kind == "saw_tail":
            text = saw_tail(args.k, args.d, rng, density=args.density).to_line()
        else:
            text = _graph_text(two_connected_random(args.n, args.delta, rng, extra=args.extra), args.format)
    except (ValueError, CycleRamseyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    _emit(text, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cycleramsey",
        description="Find a cycle C_{p+1} or an independent set of size r+1 in a graph of order p*r+1.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    w = sub.add_parser("witness", help="run the witness search on a graph file")
    w.add_argument("--input", required=True, help="edge-list or graph6 file")
    w.add_argument("--p", type=int, required=True)
    w.add_argument("--r", type=int, required=True)
    w.add_argument("--unshifted", action="store_true",
                   help="read --p/--r as the cycle order and independent-set size (p+1, r+1)")
    w.add_argument("--out", help="certificate path (default: stdout)")
    w.set_defaults(func=cmd_witness)

    e = sub.add_parser("extremal", help="write r disjoint copies of K_p")
    e.add_argument("--p", type=int, required=True)
    e.add_argument("--r", type=int, required=True)
    e.add_argument("--format", choices=["edgelist", "graph6"], default="edgelist")
    e.add_argument("--out")
    e.set_defaults(func=cmd_extremal)

    c = sub.add_parser("check-lemma", help="run a randomized property suite against the oracles")
    c.add_argument("--lemma", required=True, choices=sorted(SUITES))
    c.add_argument("--trials", type=int, default=100)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--max-n", type=int, default=13)
    c.set_defaults(func=cmd_check_lemma)

    gen = sub.add_parser("gen", help="generate a seeded instance")
    gen.add_argument("kind", choices=["clique_union_cross", "saw_tail", "two_connected_random"])
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out")
    gen.add_argument("--format", choices=["edgelist", "graph6"], default="edgelist")
    gen.add_argument("--sizes", type=_int_list, default=[13, 14], help="clique sizes, e.g. 13,14")
    gen.add_argument("--m", type=int, default=0, help="number of cross edges")
    gen.add_argument("--k", type=int, default=3, help="saw has 2k+1 vertices")
    gen.add_argument("--d", type=int, default=4, help="saw degree")
    gen.add_argument("--density", type=float, default=0.0)
    gen.add_argument("--n", type=int, default=10)
    gen.add_argument("--delta", type=int, default=3)
    gen.add_argument("--extra", type=float, default=0.0)
    gen.set_defaults(func=cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
