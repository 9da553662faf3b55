"""Command-line interface: ``orthonf <subcommand> [options]``.

Exit codes: 0 ok, 2 parse/usage error, 3 invalid or duplicate points,
4 dimension guard, 5 field spec error, 6 oracle mismatch or failed check,
7 value-count mismatch.  Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .errors import (
    DimensionGuard,
    FieldError,
    InvalidPoints,
    NotMonomialOrder,
    ParseError,
)
from .field import FiniteField, field_of_order
from .io import read_points, read_values, resolve_order
from .orders import DEFAULT_CAP
from .ortho import OrthogonalSystem
from .poly import divide, format_polynomial, parse_polynomial
from .randomized import ORDERS, check_instance, random_instance
from .vanishing import vanishing_groebner_basis

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_POINTS = 3
EXIT_DIMENSION = 4
EXIT_FIELD = 5
EXIT_MISMATCH = 6
EXIT_VALUE_COUNT = 7


class _ValueCount(Exception):
    pass


def _emit(args, text, record):
    if args.json:
        print(json.dumps(record, sort_keys=True, separators=(",", ":")))
    else:
        print(text)


def _setup(args):
    field = FiniteField.from_spec(args.field)
    order = resolve_order(args.order)
    q_n = field.q**args.nvars
    if q_n > args.cap:
        raise DimensionGuard(q_n, args.cap)
    return field, order


def cmd_normal_form(args) -> int:
    field, order = _setup(args)
    f = parse_polynomial(args.poly, args.nvars, field)
    X = read_points(args.points, field, args.nvars)
    nf = OrthogonalSystem(X, order, args.cap).normal_form(f)
    text = format_polynomial(nf, order)
    match = None
    if args.oracle:
        G = vanishing_groebner_basis(X, order, args.cap)
        match = divide(f, G.generators, G.order)[1] == nf
    record = {
        "input": args.poly,
        "field": field.spec(),
        "order": str(order),
        "normal_form": text,
        "oracle_match": match,
    }
    lines = text if match is None else f"{text}\n{'MATCH' if match else 'MISMATCH'}"
    _emit(args, lines, record)
    if match is False:
        print("oracle mismatch: orthogonal and division normal forms differ", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_groebner(args) -> int:
    field, order = _setup(args)
    X = read_points(args.points, field, args.nvars)
    G = vanishing_groebner_basis(X, order, args.cap)
    gens = [format_polynomial(g, order) for g in G.generators]
    ok = G.check() if args.check else None
    lines = list(gens)
    if ok is not None:
        lines.append("OK" if ok else "FAIL")
    record = {"field": field.spec(), "order": str(order), "generators": gens, "check": ok}
    _emit(args, "\n".join(lines), record)
    return EXIT_MISMATCH if ok is False else EXIT_OK


def cmd_interpolate(args) -> int:
    field, order = _setup(args)
    X = read_points(args.points, field, args.nvars)
    values = read_values(args.values, field)
    if len(values) != X.m:
        raise _ValueCount(f"{len(values)} values for {X.m} points")
    g = OrthogonalSystem(X, order, args.cap).interpolate(values)
    text = format_polynomial(g, order)
    verified = None
    if args.verify:
        verified = [g.evaluate(x) for x in X] == list(values)
    record = {
        "field": field.spec(),
        "order": str(order),
        "values": list(values),
        "interpolant": text,
        "verified": verified,
    }
    lines = text if verified is None else f"{text}\n{'VERIFIED' if verified else 'FAILED'}"
    _emit(args, lines, record)
    return EXIT_MISMATCH if verified is False else EXIT_OK


def cmd_selftest(args) -> int:
    rng = random.Random(args.seed)
    qs = {int(x) for x in args.fields.split(",")}
    shapes = tuple(
        (q, n) for q in sorted(qs) for n in range(1, args.max_nvars + 1) if 1 < q**n <= args.max_dim
    )
    if args.count and not shapes:
        raise DimensionGuard(min(qs), args.max_dim)
    fields = {q: field_of_order(q) for q in qs}
    passed = failed = 0
    for idx in range(args.count):
        inst = random_instance(rng, shapes, fields)
        for order in ORDERS:
            if check_instance(inst, order, corrupt=args.corrupt):
                passed += 1
            else:
                failed += 1
                print(
                    f"instance {idx} ({order}, q={inst.field.q}, n={inst.n}, "
                    f"m={inst.points.m}): mismatch for f = {inst.f}",
                    file=sys.stderr,
                )
    record = {
        "seed": args.seed,
        "instances": args.count,
        "checks": passed + failed,
        "passed": passed,
        "failed": failed,
    }
    text = (
        f"selftest seed={args.seed}: {args.count} instances, "
        f"{passed + failed} checks, {passed} passed, {failed} failed"
    )
    _emit(args, text, record)
    return EXIT_MISMATCH if failed else EXIT_OK


def cmd_field_table(args) -> int:
    field = FiniteField.from_spec(args.field)
    if field.q > args.cap or field.q > 256:
        raise DimensionGuard(field.q, min(args.cap, 256))
    els = list(field.elements())
    add = [[field.add(a, b) for b in els] for a in els]
    mul = [[field.mul(a, b) for b in els] for a in els]
    if args.json:
        _emit(args, "", {"field": field.spec(), "q": field.q, "add": add, "mul": mul})
        return EXIT_OK
    width = len(str(field.q - 1))

    def table(name, rows):
        head = f"{name:>{width}} | " + " ".join(f"{b:>{width}}" for b in els)
        body = [f"{a:>{width}} | " + " ".join(f"{v:>{width}}" for v in row) for a, row in zip(els, rows)]
        return "\n".join([head, "-" * len(head)] + body)

    print(table("+", add))
    print()
    print(table("*", mul))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="2", help="p, p^k or p^k:m=<index> (default: 2)")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum basis dimension q^n")
    common.add_argument("--json", action="store_true", help="emit one JSON record per result")

    ring = argparse.ArgumentParser(add_help=False)
    ring.add_argument("--nvars", type=int, required=True, help="number of variables n")
    ring.add_argument("--order", default="lex", help="lex, grlex, grevlex or custom:<file>")
    ring.add_argument("--points", required=True, help="points file")

    parser = argparse.ArgumentParser(
        prog="orthonf",
        description="Normal forms modulo vanishing ideals over finite fields.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normal-form", parents=[common, ring], help="normal form of a polynomial")
    p.add_argument("--poly", required=True, help='polynomial, e.g. "2*x1^2*x2 + 1"')
    p.add_argument("--oracle", action="store_true", help="cross-check against Groebner division")
    p.set_defaults(func=cmd_normal_form)

    p = sub.add_parser("groebner", parents=[common, ring], help="Groebner basis of I(X)")
    p.add_argument("--check", action="store_true", help="verify with the S-pair criterion")
    p.set_defaults(func=cmd_groebner)

    p = sub.add_parser("interpolate", parents=[common, ring], help="orthogonal interpolant")
    p.add_argument("--values", required=True, help="values file, one element per point")
    p.add_argument("--verify", action="store_true", help="re-evaluate the result at every point")
    p.set_defaults(func=cmd_interpolate)

    p = sub.add_parser("selftest", parents=[common], help="random oracle-equivalence run")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--fields", default="2,3,5", help="comma-separated field orders")
    p.add_argument("--max-nvars", type=int, default=3)
    p.add_argument("--max-dim", type=int, default=125, help="largest q^n to draw")
    p.add_argument("--corrupt", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_selftest)

    p = sub.add_parser("field-table", parents=[common], help="addition and multiplication tables")
    p.set_defaults(func=cmd_field_table)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DimensionGuard as exc:
        code, msg = EXIT_DIMENSION, exc
    except InvalidPoints as exc:
        code, msg = EXIT_POINTS, exc
    except FieldError as exc:
        code, msg = EXIT_FIELD, exc
    except _ValueCount as exc:
        code, msg = EXIT_VALUE_COUNT, exc
    except (ParseError, NotMonomialOrder, ValueError, OSError) as exc:
        code, msg = EXIT_PARSE, exc
    print(f"orthonf: error: {msg}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
