"""Command-line front end.

Exit codes: 0 ok, 2 input error, 3 disconnected network, 4 oracle
mismatch, 5 enumeration bound exceeded.
"""

from __future__ import annotations

import argparse
import csv
import itertools
import sys
from contextlib import nullcontext
from fractions import Fraction

from . import __version__
from .errors import DisconnectedNetwork, InputError, JumplabError, TooLargeForEnumeration
from .graph import biconnected_blocks, contract, require_connected, resistance_oracle
from .green import CombinatorialDivisor, green, green_detailed
from .jump import height_jump, sweep
from .labels import is_aligned, pullback_orders
from .problem import ProblemError, load_problem
from .ratlin import format_rational

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_DISCONNECTED = 3
EXIT_MISMATCH = 4
EXIT_TOO_LARGE = 5


def parse_orders(text: str, basis: list[str]) -> dict[str, int]:
    """'Z1=2,Z2=3' or positional '2,3'."""
    parts = [p.strip() for p in text.split(",") if p.strip()]
    out: dict[str, int] = {}
    try:
        if parts and all("=" in p for p in parts):
            for p in parts:
                k, v = p.split("=", 1)
                out[k.strip()] = int(v)
        else:
            if len(parts) != len(basis):
                raise ProblemError(f"--orders needs {len(basis)} values, got {len(parts)}")
            out = {name: int(v) for name, v in zip(basis, parts)}
    except ValueError:
        raise ProblemError(f"cannot parse --orders {text!r}") from None
    if any(v < 0 for v in out.values()):
        raise ProblemError("orders must be nonnegative")
    return out


def _orders(problem, args):
    override = parse_orders(args.orders, problem.divisor_basis) if args.orders else None
    return problem.order_vector(override)


def _pick(problem, name: str | None, fallback: str | None = None) -> CombinatorialDivisor:
    if name is None:
        name = fallback
    if name is None:
        if not problem.divisors:
            raise ProblemError("file declares no divisors")
        name = next(iter(problem.divisors))
    return problem.divisor(name)


def cmd_green(args, out) -> int:
    problem = load_problem(args.file)
    lg = problem.labelled_graph()
    mu = pullback_orders(lg, _orders(problem, args))
    x, y = problem.divisor(args.X), problem.divisor(args.Y)
    res = green_detailed(lg.graph, mu, x, y)
    if not res.degree_zero:
        print("warning: divisor of nonzero degree", file=sys.stderr)
    print(format_rational(res.value), file=out)
    return EXIT_OK


def cmd_jump(args, out) -> int:
    problem = load_problem(args.file)
    lg = problem.labelled_graph()
    d = _pick(problem, args.D)
    e = _pick(problem, args.E, args.D or next(iter(problem.divisors), None))
    res = height_jump(lg, d, e, _orders(problem, args))
    print(f"j = {format_rational(res.value)}", file=out)
    print(f"  full: {format_rational(res.full)}", file=out)
    for name, v in zip(lg.basis.names, res.singles):
        print(f"  {name}: {format_rational(v)}", file=out)
    print(f"  {res.alignment.describe()}", file=out)
    return EXIT_OK


def cmd_align(args, out) -> int:
    problem = load_problem(args.file)
    print(is_aligned(problem.labelled_graph()).describe(), file=out)
    return EXIT_OK


def cmd_sweep(args, out) -> int:
    problem = load_problem(args.file)
    lg = problem.labelled_graph()
    d = _pick(problem, args.D)
    e = _pick(problem, args.E, args.D or next(iter(problem.divisors), None))
    report = sweep(lg, d, e, args.max, include_faces=args.faces, workers=args.workers)
    target = open(args.csv, "w", newline="", encoding="utf-8") if args.csv else nullcontext(out)
    with target as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(list(lg.basis.names) + ["num", "den"])
        for m, v in report.rows + report.face_rows:
            w.writerow(list(m) + [v.numerator, v.denominator])
    lo, hi = report.minimum, report.maximum
    homog = all(ok for _, _, ok in report.homogeneity)
    print(
        f"rows: {len(report.rows) + len(report.face_rows)}, "
        f"min: {format_rational(lo)}, max: {format_rational(hi)}, "
        f"all nonnegative: {str(report.all_nonnegative).lower()}, "
        f"all zero: {str(report.all_zero).lower()}, "
        f"homogeneity: {'ok' if homog else 'FAILED'}",
        file=out,
    )
    return EXIT_OK


def cmd_oracle(args, out) -> int:
    problem = load_problem(args.file)
    lg = problem.labelled_graph()
    g = lg.graph
    require_connected(g)
    mu = pullback_orders(lg, _orders(problem, args))
    res = contract(g, [eid for eid, r in mu.items() if r == 0])
    q = res.quotient
    qmu = {eid: mu[eid] for eid in res.surviving_edges}
    for u, v in itertools.combinations(g.vertices, 2):
        d = CombinatorialDivisor.difference(u, v)
        lhs = green(g, mu, d, d)
        a, b = res.vertex_map[u], res.vertex_map[v]
        rhs = resistance_oracle(q, qmu, a, b) if a != b else Fraction(0)
        if lhs != rhs:
            print(f"MISMATCH {u} {v}: green {format_rational(lhs)} oracle {format_rational(rhs)}",
                  file=out)
            return EXIT_MISMATCH
        print(f"{u} {v}: {format_rational(lhs)}", file=out)
    print("MATCH", file=out)
    return EXIT_OK


def cmd_blocks(args, out) -> int:
    problem = load_problem(args.file)
    dec = biconnected_blocks(problem.graph())
    order = {eid: k for k, eid in enumerate(problem.graph().edge_ids)}
    for i, blk in enumerate(dec.blocks):
        ids = " ".join(sorted(blk, key=order.__getitem__))
        print(f"block {i}: {ids} [{' '.join(dec.block_vertices[i])}]", file=out)
    print(f"cut vertices: {' '.join(dec.cut_vertices) or '(none)'}", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="jumplab", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("file")
        sp.set_defaults(func=func)
        return sp

    sp = add("green", cmd_green, "Green's function of two named divisors")
    sp.add_argument("--X", required=True)
    sp.add_argument("--Y", required=True)
    sp.add_argument("--orders")

    sp = add("jump", cmd_jump, "height jump with per-term breakdown")
    sp.add_argument("--D")
    sp.add_argument("--E")
    sp.add_argument("--orders")

    add("align", cmd_align, "alignment verdict and witness")

    sp = add("sweep", cmd_sweep, "jump over the order grid {1..N}^r as CSV")
    sp.add_argument("--max", type=int, required=True)
    sp.add_argument("--csv")
    sp.add_argument("--faces", action="store_true", help="also emit points with a zero order")
    sp.add_argument("--D")
    sp.add_argument("--E")
    sp.add_argument("--workers", type=int, default=1)

    sp = add("oracle", cmd_oracle, "compare Green's function with the spanning-forest oracle")
    sp.add_argument("--orders")

    add("blocks", cmd_blocks, "biconnected decomposition")
    return p


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if args.command == "sweep" and args.max < 1:
        print("error: --max must be at least 1", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args, out)
    except TooLargeForEnumeration as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except DisconnectedNetwork as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISCONNECTED
    except (InputError, JumplabError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
