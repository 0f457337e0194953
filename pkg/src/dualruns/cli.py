"""Command-line front end.

Subcommands: ``triangle`` prints families as CSV or JSON, ``verify`` runs
the identity registry, ``zeros`` reports roots and the zero-location
verdicts, ``grammar`` drives the derivative calculus, ``oeis-diff``
compares a family against a local b-file, and ``cache`` manages the
persisted rows.

Exit codes: 0 success, 1 check failure, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys

import mpmath
from mpmath import mp

from . import analytic, cache, oeis, triangles, verify
from .grammar import GRAMMAR_DUAL, GRAMMAR_RUNS, FormalSum, derive_n, substitute_ones

GRAMMARS = {"G": GRAMMAR_RUNS, "Gprime": GRAMMAR_DUAL}
SEEDS = {
    "x": lambda: FormalSum.letter("x"),
    "x2": lambda: FormalSum.term(1, x=2),
    "y": lambda: FormalSum.letter("y"),
    "z": lambda: FormalSum.letter("z"),
    "xy": lambda: FormalSum.term(1, x=1, y=1),
    "yz": lambda: FormalSum.term(1, y=1, z=1),
    "y2": lambda: FormalSum.term(1, y=2),
}


def _triangle_records(family: str, rows: int):
    for n in range(triangles.family_first_row(family), rows + 1):
        poly = triangles.family_row(family, n)
        for k, c in enumerate(poly.coeffs):
            if c:
                yield n, k, c


def cmd_triangle(args) -> int:
    if args.format == "csv":
        print("n,k,value")
        for n, k, c in _triangle_records(args.family, args.rows):
            print(f"{n},{k},{c}")
    else:
        records = [
            {"family": args.family, "n": n, "k": k, "value": str(c)}
            for n, k, c in _triangle_records(args.family, args.rows)
        ]
        print(json.dumps(records, indent=2))
    return 0


def cmd_verify(args) -> int:
    if args.id != "all" and args.id not in verify.identity_ids():
        print(f"unknown identity {args.id!r}; known ids:", file=sys.stderr)
        for i in verify.identity_ids():
            print(f"  {i}", file=sys.stderr)
        return 2
    ids = None if args.id == "all" else [args.id]
    overrides = (
        {i: args.max_n for i in (ids or verify.identity_ids())} if args.max_n else None
    )
    checks = verify.run_all(overrides, ids)
    if args.format == "json":
        sys.stdout.write(verify.report_json(checks))
    else:
        sys.stdout.write(verify.report_text(checks))
    return 1 if verify.theorem_failures(checks) else 0


def cmd_zeros(args) -> int:
    n = args.n
    if args.family == "T":
        poly = triangles.t_poly(n).divexact_x(1)
        label = f"T_{n}(x)/x"
    else:
        poly = triangles.r_poly(n)
        label = f"R_{n}(x)"
        if n < 2:
            print("R rows below 2 are constant; nothing to solve", file=sys.stderr)
            return 2
    rs = analytic.find_roots(poly, args.precision_bits, args.tol)
    print(f"zeros of {label} (degree {poly.degree})")
    with mp.workprec(rs.precision_bits):
        for z in rs.roots:
            print(f"  {mpmath.nstr(z.real, 20)}  {mpmath.nstr(z.imag, 20)}i")
    print(f"residual bound: {rs.residual_bound:.3e} (tolerance {rs.tolerance:.1e}, "
          f"{rs.precision_bits} bits, verified={rs.verified})")
    if args.family == "T":
        real_count = analytic.count_real_roots(poly)
        if real_count:
            print(f"verdict: conjecture fails at n={n}: {real_count} real zeros "
                  f"(exact count), so the zeros are not all non-real")
        else:
            sep = analytic.check_separation_complex(
                poly,
                triangles.t_poly(n + 1).divexact_x(1),
                args.tol,
                args.precision_bits,
            )
            print(f"verdict: conjecture (zeros non-real, row separates the next): "
                  f"{sep.value} (numerical evidence, not proof)")
    else:
        rooted = analytic.check_real_rooted_interval(
            poly, -1, 0, args.tol, args.precision_bits
        )
        inter = analytic.check_interlace_real(
            poly, triangles.r_poly(n + 1), args.tol, args.precision_bits
        )
        print(f"verdict: real-rooted in [-1,0]: {rooted.value}; "
              f"interlaces the next row: {inter.value}")
    return 0


def cmd_grammar(args) -> int:
    grammar = GRAMMARS[args.name]
    seed = SEEDS[args.seed]()
    result = derive_n(grammar, seed, args.steps)
    if args.sub:
        print(substitute_ones(result, ("x", "z")).to_str("y"))
    else:
        print(result)
    return 0


def cmd_oeis_diff(args) -> int:
    code, message = oeis.diff_family(
        args.family, args.bfile, args.max_terms, args.start_offset
    )
    print(message if code == 0 else f"oeis-diff: {message}",
          file=sys.stdout if code == 0 else sys.stderr)
    return code


def cmd_cache_write(args) -> int:
    path = cache.write_rows(cache.resolve_cache_dir(args.cache_dir), args.family, args.rows)
    print(f"wrote {path}")
    return 0


def cmd_cache_read(args) -> int:
    rows = cache.read_rows(cache.resolve_cache_dir(args.cache_dir), args.family, args.rows)
    print("n,k,value")
    for n, poly in rows:
        for k, c in enumerate(poly.coeffs):
            if c:
                print(f"{n},{k},{c}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dualruns",
        description="exact workbench for the alternating-run families and their identities",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("triangle", help="print a family as n,k,value records")
    p.add_argument("family", choices=triangles.FAMILY_NAMES)
    p.add_argument("--rows", type=int, default=8)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_triangle)

    p = sub.add_parser("verify", help="run the identity registry")
    p.add_argument("id", nargs="?", default="all")
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("zeros", help="roots and zero-location verdicts")
    p.add_argument("family", choices=("T", "R"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--precision-bits", type=int, default=256)
    p.add_argument("--tol", type=float, default=1e-20)
    p.set_defaults(func=cmd_zeros)

    p = sub.add_parser("grammar", help="iterate the grammar derivative")
    p.add_argument("name", choices=sorted(GRAMMARS))
    p.add_argument("--seed", choices=sorted(SEEDS), required=True)
    p.add_argument("--steps", type=int, default=1)
    p.add_argument("--sub", action="store_true", help="set x = z = 1 and print in y")
    p.set_defaults(func=cmd_grammar)

    p = sub.add_parser("oeis-diff", help="compare a family against a local b-file")
    p.add_argument("family", choices=triangles.FAMILY_NAMES)
    p.add_argument("bfile")
    p.add_argument("--max-terms", type=int, default=200)
    p.add_argument("--start-offset", type=int, default=None,
                   help="b-file index aligned with our first term (default: the file's first index)")
    p.set_defaults(func=cmd_oeis_diff)

    p = sub.add_parser("cache", help="manage the persisted row cache")
    cache_sub = p.add_subparsers(dest="cache_command", required=True)
    for name, fn in (("write", cmd_cache_write), ("read", cmd_cache_read)):
        q = cache_sub.add_parser(name)
        q.add_argument("family", choices=triangles.FAMILY_NAMES)
        q.add_argument("--rows", type=int, default=10)
        q.add_argument("--cache-dir", default=None)
        q.set_defaults(func=fn)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # internal failure contract
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
