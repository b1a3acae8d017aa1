"""Command-line interface.

Exit codes: 0 success, 1 verification or route-agreement failure, 2 usage
error (malformed input, unknown names, out-of-range indices).
"""

from __future__ import annotations

import argparse
import json
import sys

from .bijections import Trace, flip_b, flip_c, pair_maj_b, pair_maj_c, pi_b, pi_c
from .dominoes import enumerate_sdt, maj_domino
from .fakedeg import (
    BC_ROUTES,
    D_ROUTES,
    d_rep,
    fake_degree_bc,
    fake_degree_d,
    fake_degree_wreath,
    poincare_d,
    poincare_wreath,
)
from .qpoly import QPolynomial
from .shapes import (
    format_partition,
    lusztig_rho1,
    lusztig_rho2,
    parse_multipartition,
    parse_pair,
    parse_partition,
)
from .tableaux import (
    enumerate_syt,
    enumerate_tuple_tableaux,
    format_tableau,
    format_tuple_tableau,
    maj_syt,
    maj_tuple,
)
from .verify import SUITES, failures, run_suite, to_json_lines

WREATH_ROUTES = ("formula", "enumeration")


class UsageError(Exception):
    pass


def _poly_json(p: QPolynomial) -> dict:
    return {"coeffs": list(p.coeffs), "pretty": p.pretty()}


DEFAULT_ROUTE = {"wreath": "formula", "bc": "tuple", "d": "tuple"}


def _cmd_compute(args) -> int:
    if args.route is None:
        args.route = DEFAULT_ROUTE[args.group]
    if args.group == "wreath":
        d = args.d
        text = args.multi if args.multi is not None else args.pair
        if text is None:
            raise UsageError("--pair or --multi is required")
        mp = parse_multipartition(text)
        routes = WREATH_ROUTES if args.route == "all" else (args.route,)
        if any(r not in WREATH_ROUTES for r in routes):
            raise UsageError(f"invalid wreath route {args.route!r}")
        results = {r: fake_degree_wreath(mp, d, r) for r in routes}
    elif args.group == "bc":
        if args.pair is None:
            raise UsageError("--pair is required")
        pair = parse_pair(args.pair)
        routes = BC_ROUTES if args.route == "all" else (args.route,)
        if any(r not in BC_ROUTES for r in routes):
            raise UsageError(f"invalid B/C route {args.route!r}")
        results = {r: fake_degree_bc(pair, r) for r in routes}
    elif args.group == "d":
        if args.pair is None:
            raise UsageError("--pair is required")
        rep = d_rep(parse_pair(args.pair), args.marker)
        routes = D_ROUTES if args.route == "all" else (args.route,)
        if any(r not in D_ROUTES for r in routes):
            raise UsageError(f"invalid type-D route {args.route!r}")
        results = {r: fake_degree_d(rep, r) for r in routes}
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown group {args.group!r}")

    polys = list(results.values())
    agree = all(p == polys[0] for p in polys)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "group": args.group,
                    "routes": {name: _poly_json(p) for name, p in results.items()},
                    "agree": agree,
                },
                sort_keys=True,
            )
        )
    else:
        if len(results) == 1:
            print(polys[0].pretty())
        else:
            for name, p in results.items():
                print(f"{name}: {p.pretty()}")
            print("verdict:", "agree" if agree else "DISAGREE")
    return 0 if agree else 1


def _cmd_enumerate(args) -> int:
    count = 0
    if args.kind == "syt":
        shape = parse_partition(args.shape)
        for t in enumerate_syt(shape):
            line = format_tableau(t)
            if args.with_maj:
                line += f"  maj={maj_syt(t)}"
            print(line)
            count += 1
    elif args.kind == "sdt":
        shape = parse_partition(args.shape)
        for t in enumerate_sdt(shape):
            line = " / ".join(
                "[" + ",".join(f"({r},{c})" for (r, c) in cells) + "]"
                for cells in t.dominoes
            )
            if args.with_maj:
                line += f"  maj={maj_domino(t)}"
            print(line)
            count += 1
    elif args.kind == "tuple":
        mp = parse_multipartition(args.shape)
        for t in enumerate_tuple_tableaux(mp):
            line = format_tuple_tableau(t)
            if args.with_maj:
                line += f"  maj={maj_tuple(t)}"
            print(line)
            count += 1
    print(f"count: {count}")
    return 0


def _cmd_map(args) -> int:
    pair = parse_pair(args.pair)
    print("rho1:", format_partition(lusztig_rho1(pair)) or "-")
    print("rho2:", format_partition(lusztig_rho2(pair)))
    return 0


def _cmd_explain(args) -> int:
    shape = parse_partition(args.shape)
    tableaux = list(enumerate_sdt(shape))
    if not tableaux:
        raise UsageError(f"shape {args.shape!r} supports no standard domino tableaux")
    if not 0 <= args.index < len(tableaux):
        raise UsageError(
            f"index {args.index} out of range (0..{len(tableaux) - 1})"
        )
    t = tableaux[args.index]
    even = t.size % 2 == 0
    trace = Trace()
    pair = pi_c(t, trace) if even else pi_b(t, trace)
    pair_maj = pair_maj_c(pair) if even else pair_maj_b(pair)
    final = flip_c(pair, trace) if even else flip_b(pair, trace)

    print(f"standard domino tableau #{args.index} of shape {args.shape}:")
    print(t.render())
    print(f"map: {'even (size 2n)' if even else 'odd (size 2n+1)'}")
    for step in trace.steps:
        print(
            f"  label {step.label}: rule {step.rule} -> "
            f"tableau {step.target}, cell {step.cell}"
        )
    print("intermediate pair:", format_tuple_tableau(pair))
    print("pair descent major index:", pair_maj)
    if trace.swaps:
        print("flips:", ", ".join(f"({i},{i + 1})" for i in trace.swaps))
    else:
        print("flips: none")
    print("final pair:", format_tuple_tableau(final))
    print("maj(domino):", maj_domino(t))
    print("maj(tuple):", maj_tuple(final))
    print("maj preserved:", "true" if maj_tuple(final) == maj_domino(t) else "false")
    return 0 if maj_tuple(final) == maj_domino(t) else 1


def _cmd_verify(args) -> int:
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"invalid suite {args.suite!r}")
    records = run_suite(args.suite, args.max_n)
    text = to_json_lines(records)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    bad = failures(records)
    print(
        f"suite {args.suite}: {len(records)} checks, {len(bad)} failures",
        file=sys.stderr,
    )
    return 0 if not bad else 1


def _cmd_poincare(args) -> int:
    if args.group == "wreath":
        p = poincare_wreath(args.d, args.n)
    elif args.group == "bc":
        p = poincare_wreath(2, args.n)
    else:
        p = poincare_d(args.n)
    if args.format == "json":
        print(json.dumps(_poly_json(p), sort_keys=True))
    else:
        print(p.pretty())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fakedegrees",
        description="Fake degree polynomials of classical Weyl groups and "
        "wreath products, with cross-validating routes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute a fake degree polynomial")
    p.add_argument("--group", choices=("wreath", "bc", "d"), required=True)
    p.add_argument("--d", type=int, default=2, help="cyclic order for wreath")
    p.add_argument("--pair", help='ordered pair "p1|p2", e.g. "1,1|1"')
    p.add_argument("--multi", help='d-multipartition "p1|...|pd"')
    p.add_argument("--marker", type=int, default=1, choices=(1, 2))
    p.add_argument("--route", default=None, help="route name or 'all' (default: one canonical route)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("enumerate", help="list tableaux of a shape")
    p.add_argument("--kind", choices=("syt", "sdt", "tuple"), required=True)
    p.add_argument("--shape", required=True)
    p.add_argument("--with-maj", action="store_true")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("map", help="print both associated partitions of a pair")
    p.add_argument("--pair", required=True)
    p.set_defaults(func=_cmd_map)

    p = sub.add_parser("explain", help="trace the bijection on one tableau")
    p.add_argument("--shape", required=True)
    p.add_argument("--index", type=int, default=0)
    p.set_defaults(func=_cmd_explain)

    p = sub.add_parser("verify", help="run an exhaustive verification suite")
    p.add_argument("--suite", default="all")
    p.add_argument("--max-n", type=int, default=4, dest="max_n")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("poincare", help="Poincaré polynomial of a group")
    p.add_argument("--group", choices=("wreath", "bc", "d"), required=True)
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_poincare)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
