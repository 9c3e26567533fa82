"""Command-line interface.

Verbs: enumerate, count, stats, decompose, map, poly, tensor, tables,
verify.  Output formats are text (default), csv, and json; identical
invocations produce identical bytes (verify timing fields excepted).

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource
cap exceeded.
"""

import argparse
import csv
import io
import json
import sys

from catpark.caterpillar import (
    build_caterpillar,
    enumerate_caterpillar_pk,
    from_lattice_path,
    omega_tree,
    simulate,
    theta,
    theta_inv,
    to_lattice_path,
)
from catpark.decomposition import (
    decompose,
    eta,
    eta_inv,
    f_stat,
    g_stat,
    tau,
    u_luck,
    u_omega,
)
from catpark.engine import (
    fuss_catalan_series,
    gamma_poly_brute,
    joint_count_tensor,
    multi_stat_poly_brute,
    r_poly_brute,
)
from catpark.errors import EnumerationCapError, NonMembershipError
from catpark.harness import run_verification, CHECKS
from catpark.polynomials import MultiPoly
from catpark.sequences import (
    BoundFamily,
    DEFAULT_MAX_OBJECTS,
    canonical_family,
    count_u_pk,
    enumerate_u_pk,
)
from catpark.tables import build_table

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

DEFAULT_MAX_ORDER = 24


class UsageError(Exception):
    pass


class ResourceError(Exception):
    pass


def _parse_seq(text):
    try:
        seq = tuple(int(part) for part in text.split(",") if part != "")
    except ValueError:
        raise UsageError(f"--seq must be comma-separated integers, got {text!r}")
    return seq


def _family(args):
    if (args.k is None) != (args.r is None):
        raise UsageError("--k and --r must be given together")
    try:
        if args.k is None:
            return canonical_family(args.m)
        return BoundFamily(args.m, args.k, args.r)
    except ValueError as exc:
        raise UsageError(str(exc))


def _check_order(order, max_order):
    if order > max_order:
        raise ResourceError(
            f"order {order} exceeds --max-order {max_order}"
        )


def _emit_csv(out, header, rows):
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def _emit_json(out, payload):
    out.write(json.dumps(payload, indent=2))
    out.write("\n")


def seq_str(seq):
    return ",".join(str(v) for v in seq)


# -- subcommand implementations --------------------------------------------


def cmd_enumerate(args, out):
    fam = _family(args)
    if args.kind == "u":
        stream = enumerate_u_pk(args.n, fam, max_objects=args.max_objects)
        length = args.n
    else:
        if args.k is not None:
            raise UsageError("--k/--r only apply to --kind u")
        if args.n < 1:
            raise UsageError("--n must be >= 1 for --kind cat")
        stream = enumerate_caterpillar_pk(args.m, args.n,
                                          max_objects=args.max_objects)
        length = args.m * args.n - args.m + 1
    if args.format == "json":
        _emit_json(out, {"m": args.m, "n": args.n, "kind": args.kind,
                         "sequences": [list(s) for s in stream]})
    elif args.format == "csv":
        _emit_csv(out, [f"p{i}" for i in range(1, length + 1)], stream)
    else:
        for s in stream:
            out.write(seq_str(s) + "\n")
    return EXIT_OK


def cmd_count(args, out):
    fam = _family(args)
    if args.kind == "cat" and args.k is not None:
        raise UsageError("--k/--r only apply to --kind u")
    count = count_u_pk(args.n, fam)
    payload = {"m": args.m, "k": fam.k, "r": fam.r, "n": args.n,
               "kind": args.kind, "count": count}
    if args.format == "json":
        _emit_json(out, payload)
    elif args.format == "csv":
        _emit_csv(out, ["m", "k", "r", "n", "kind", "count"],
                  [[args.m, fam.k, fam.r, args.n, args.kind, count]])
    else:
        out.write(f"{count}\n")
    return EXIT_OK


def cmd_stats(args, out):
    seq = _parse_seq(args.seq)
    if args.kind == "u":
        try:
            stats = {
                "luck": u_luck(seq, args.m),
                "omega1": u_omega(seq, 1),
                "f": f_stat(seq, args.m),
                "g": g_stat(seq, args.m),
            }
        except ValueError as exc:
            raise UsageError(f"--seq: {exc}")
    else:
        length = len(seq)
        if length < 1 or (length - 1) % args.m:
            raise UsageError(
                f"--seq length {length} does not fit a regularity-{args.m} tree"
            )
        n = (length - 1) // args.m + 1
        tree = build_caterpillar(args.m, n)
        try:
            outcome = simulate(tree, seq)
        except ValueError as exc:
            raise UsageError(f"--seq: {exc}")
        stats = {"luck": len(outcome.lucky_set), "parked": outcome.all_parked}
        for j in range(1, args.m + 1):
            stats[f"omega{j}"] = omega_tree(tree, seq, j)
    if args.format == "json":
        _emit_json(out, stats)
    elif args.format == "csv":
        _emit_csv(out, list(stats), [list(stats.values())])
    else:
        for key, value in stats.items():
            out.write(f"{key} {value}\n")
    return EXIT_OK


def cmd_decompose(args, out):
    seq = _parse_seq(args.seq)
    try:
        result = decompose(seq, args.m)
    except ValueError as exc:
        raise UsageError(f"--seq: {exc}")
    comps = result.components
    if args.format == "json":
        _emit_json(out, {"components": [list(c) for c in comps],
                         "fixed_points": list(result.fixed_points.indices)})
    elif args.format == "csv":
        rows = [[f"p{i}", seq_str(c)] for i, c in enumerate(comps, start=1)]
        rows.append(["fixed-points", seq_str(result.fixed_points.indices)])
        _emit_csv(out, ["component", "values"], rows)
    else:
        for i, c in enumerate(comps, start=1):
            out.write(f"p{i} ({seq_str(c)})\n")
        out.write(f"fixed-points ({seq_str(result.fixed_points.indices)})\n")
    return EXIT_OK


MAP_NAMES = ("theta", "theta-inv", "tau", "eta", "eta-inv",
             "to-path", "from-path")


def cmd_map(args, out):
    m = args.m
    if args.name == "from-path":
        if args.word is None:
            raise UsageError("--word is required for --name from-path")
        try:
            result = from_lattice_path(args.word, m)
        except NonMembershipError as exc:
            raise UsageError(f"--word: {exc}")
        out_text = seq_str(result)
        payload = {"result": list(result)}
    else:
        if args.seq is None:
            raise UsageError(f"--seq is required for --name {args.name}")
        seq = _parse_seq(args.seq)
        try:
            if args.name == "theta":
                result = theta(seq, m, len(seq))
            elif args.name == "theta-inv":
                length = len(seq)
                if length < 1 or (length - 1) % m:
                    raise UsageError(
                        f"--seq length {length} does not fit a regularity-{m} tree"
                    )
                result = theta_inv(seq, m, (length - 1) // m + 1)
            elif args.name == "tau":
                result = tau(seq, m)
            elif args.name == "eta":
                result = eta(seq, m)
            elif args.name == "eta-inv":
                result = eta_inv(seq, m)
            else:  # to-path
                result = to_lattice_path(seq, m)
        except (ValueError, NonMembershipError) as exc:
            raise UsageError(f"--seq: {exc}")
        if args.name == "to-path":
            out_text = result
            payload = {"result": result}
        else:
            out_text = seq_str(result)
            payload = {"result": list(result)}
    if args.format == "json":
        _emit_json(out, payload)
    elif args.format == "csv":
        _emit_csv(out, ["result"], [[out_text]])
    else:
        out.write(out_text + "\n")
    return EXIT_OK


POLY_NAMES = ("R", "gamma", "multi", "B")


def _poly_for(args):
    if args.name == "B":
        order = args.n
        _check_order(order, args.max_order)
        series = fuss_catalan_series(args.m, order)
        terms = {}
        for j in range(order + 1):
            c = series.coefficient(j).coefficient(())
            if c:
                terms[(j,)] = c
        return MultiPoly(("x",), terms)
    _check_order(args.n, args.max_order)
    if args.name == "R":
        return r_poly_brute(args.m, args.n)
    if args.name == "gamma":
        return gamma_poly_brute(args.m, args.n)
    if args.n < 1:
        raise UsageError("--n must be >= 1 for --name multi")
    return multi_stat_poly_brute(args.m, args.n,
                                 max_objects=args.max_objects)


def cmd_poly(args, out):
    poly = _poly_for(args)
    if args.format == "json":
        _emit_json(out, poly.to_dict())
    elif args.format == "csv":
        header = list(poly.variables) + ["coeff"]
        rows = [list(exps) + [coeff] for exps, coeff in poly.items()]
        _emit_csv(out, header, rows)
    else:
        out.write(poly.render() + "\n")
    return EXIT_OK


def cmd_tensor(args, out):
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    tensor = joint_count_tensor(args.m, args.n, max_objects=args.max_objects)
    entries = sorted(tensor.entries.items())
    if args.format == "json":
        _emit_json(out, {"m": args.m, "n": args.n,
                         "entries": [{"key": list(k), "count": c}
                                     for k, c in entries]})
    elif args.format == "csv":
        header = ["k0"] + [f"k{j}" for j in range(1, args.m + 1)] + ["count"]
        _emit_csv(out, header, [list(k) + [c] for k, c in entries])
    else:
        for key, count in entries:
            out.write(f"{seq_str(key)} {count}\n")
    return EXIT_OK


def cmd_tables(args, out):
    try:
        table = build_table(args.id)
    except ValueError as exc:
        raise UsageError(f"--id: {exc}")
    if args.format == "json":
        _emit_json(out, table)
    elif args.format == "csv":
        _emit_csv(out, table["header"], table["rows"])
    else:
        out.write(table["title"] + "\n")
        out.write(" | ".join(table["header"]) + "\n")
        for row in table["rows"]:
            out.write(" | ".join(row) + "\n")
        for note in table["annotations"]:
            out.write(f"note: {note}\n")
    return EXIT_OK


def cmd_verify(args, out):
    if args.order is not None:
        _check_order(args.order, args.max_order)
    try:
        report = run_verification(args.scope, order=args.order,
                                  max_n=args.max_n, m=args.m)
    except ValueError as exc:
        raise UsageError(f"--scope: {exc}")
    if args.format == "json":
        _emit_json(out, report.to_dict())
    elif args.format == "csv":
        rows = [[e.identity, e.status, json.dumps(e.params, sort_keys=True),
                 e.millis] for e in report.entries]
        _emit_csv(out, ["identity", "status", "params", "millis"], rows)
    else:
        for e in report.entries:
            params = " ".join(f"{k}={v}" for k, v in e.params.items())
            out.write(f"{e.status:8s} {e.identity} [{params}] ({e.millis} ms)\n")
            if e.status == "fail" and e.counterexample is not None:
                out.write(f"         counterexample: {e.counterexample}\n")
        passed = sum(1 for e in report.entries if e.status == "pass")
        errata = sum(1 for e in report.entries if e.status == "erratum")
        failed = sum(1 for e in report.entries if e.status == "fail")
        out.write(
            f"summary: {passed} passed, {errata} errata demonstrated, "
            f"{failed} failed\n"
        )
    return EXIT_OK if report.ok else EXIT_VERIFY_FAILED


# -- argument wiring ---------------------------------------------------------


def _add_common(parser, *, m=True, n=False, seq=False, family=False,
                kind=False, max_objects=False, max_order=False):
    if m:
        parser.add_argument("--m", type=int, required=True,
                            help="tree regularity (>= 1)")
    if n:
        parser.add_argument("--n", type=int, required=True,
                            help="length / backbone size")
    if seq:
        parser.add_argument("--seq", type=str,
                            help="comma-separated sequence, e.g. 1,1,4")
    if family:
        parser.add_argument("--k", type=int, default=None,
                            help="bound family k (with --r); default canonical")
        parser.add_argument("--r", type=int, default=None,
                            help="bound family r (with --k)")
    if kind:
        parser.add_argument("--kind", choices=("u", "cat"), default="u",
                            help="bounded sequences (u) or tree distributions (cat)")
    if max_objects:
        parser.add_argument("--max-objects", type=int,
                            default=DEFAULT_MAX_OBJECTS,
                            help="enumeration cap (exit 3 when exceeded)")
    if max_order:
        parser.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER,
                            help="series/polynomial order cap")
    parser.add_argument("--format", choices=("text", "csv", "json"),
                        default="text", help="output format")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="catpark",
        description="Parking distributions on regular caterpillar trees: "
                    "enumeration, statistics, bijections, and identity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list distributions")
    _add_common(p, n=True, family=True, kind=True, max_objects=True)
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("count", help="count distributions without listing")
    _add_common(p, n=True, family=True, kind=True)
    p.set_defaults(fn=cmd_count)

    p = sub.add_parser("stats", help="statistics of one sequence")
    _add_common(p, seq=True, kind=True)
    p.set_defaults(fn=cmd_stats)

    p = sub.add_parser("decompose", help="first-return decomposition")
    _add_common(p, seq=True)
    p.set_defaults(fn=cmd_decompose)

    p = sub.add_parser("map", help="apply a bijection")
    p.add_argument("--name", choices=MAP_NAMES, required=True)
    p.add_argument("--word", type=str, help="step word for from-path")
    _add_common(p, seq=True)
    p.set_defaults(fn=cmd_map)

    p = sub.add_parser("poly", help="statistic polynomials")
    p.add_argument("--name", choices=POLY_NAMES, required=True)
    _add_common(p, n=True, max_objects=True, max_order=True)
    p.set_defaults(fn=cmd_poly)

    p = sub.add_parser("tensor", help="joint count tensor on the tree")
    _add_common(p, n=True, max_objects=True)
    p.set_defaults(fn=cmd_tensor)

    p = sub.add_parser("tables", help="reproduce a reference table")
    p.add_argument("--id", type=str, required=True, help="table id 1..10")
    _add_common(p, m=False)
    p.set_defaults(fn=cmd_tables)

    p = sub.add_parser("verify", help="run the identity verification suite")
    p.add_argument("--scope", default="all",
                   help=f"all or one of: {', '.join(CHECKS)}")
    p.add_argument("--order", type=int, default=None,
                   help="series order override")
    p.add_argument("--max-n", type=int, default=None,
                   help="length bound override")
    p.add_argument("--m", type=int, default=None,
                   help="restrict checks to one regularity")
    p.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER)
    p.add_argument("--format", choices=("text", "csv", "json"),
                   default="text")
    p.set_defaults(fn=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    out = io.StringIO()
    try:
        code = args.fn(args, out)
    except UsageError as exc:
        sys.stderr.write(f"catpark {args.command}: {exc}\n")
        return EXIT_USAGE
    except EnumerationCapError as exc:
        sys.stderr.write(f"catpark {args.command}: {exc}\n")
        return EXIT_RESOURCE
    except ResourceError as exc:
        sys.stderr.write(f"catpark {args.command}: {exc}\n")
        return EXIT_RESOURCE
    sys.stdout.write(out.getvalue())
    return code


if __name__ == "__main__":
    raise SystemExit(main())
