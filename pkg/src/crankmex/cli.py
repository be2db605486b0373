"""Command line entry point: ``crankmex <subcommand> ...``.

Exit codes are 0 when every check passes, 1 when a check fails or an input
violates a precondition, and 2 for usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import identities
from . import partitions as pc
from .bijections import BijectionError
from .data import A064428, TABLE1_NS, TABLE1_ROWS
from .qseries import SeriesError
from .suites import SUITES, trace_line

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _stat_params(args) -> dict:
    params = {}
    if args.j is not None:
        params["j"] = args.j
    if args.m is not None:
        params["m"] = args.m
    return params


def _parse_kv(items) -> dict:
    out = {}
    for item in items or ():
        key, sep, value = item.partition("=")
        if not sep:
            raise UsageError(f"--param expects key=value, got {item!r}")
        try:
            out[key.strip()] = int(value)
        except ValueError:
            raise UsageError(f"--param {key}: {value!r} is not an integer") from None
    return out


# -- subcommands ------------------------------------------------------------------


def cmd_stats(args) -> int:
    if args.name not in pc.STATISTICS:
        raise UsageError(f"unknown statistic {args.name!r}; choose from {', '.join(sorted(pc.STATISTICS))}")
    if args.max_n < args.min_n:
        raise UsageError("--max-n must be at least --min-n")
    params = _stat_params(args)
    ns = range(args.min_n, args.max_n + 1)
    row = pc.stat_table(args.name, ns, **params).row(tuple(sorted(params.items())))
    if args.format == "json":
        _emit(args, _json({"name": args.name, "params": params, "values": {str(n): row[n] for n in ns}}))
    else:
        _emit(args, _csv(["n", args.name], [(n, row[n]) for n in ns]))
    return EXIT_OK


def table1_rows() -> dict:
    return {name: [pc.STATISTICS[name](n) for n in TABLE1_NS] for name in TABLE1_ROWS}


def cmd_table1(args) -> int:
    rows = table1_rows()
    if args.format == "json":
        _emit(args, _json({"n": list(TABLE1_NS), "rows": rows}))
    else:
        _emit(args, _csv(["statistic", *TABLE1_NS], [(name, *vals) for name, vals in rows.items()]))
    return EXIT_OK


def cmd_verify(args) -> int:
    params = _parse_kv(args.param)
    params.update(_stat_params(args))
    if args.order < 1:
        raise UsageError("--order must be at least 1")
    if args.all:
        if args.id:
            raise UsageError("give an identity id or --all, not both")
        reports = identities.verify_all(args.order)
    else:
        if not args.id:
            raise UsageError("give an identity id or --all")
        try:
            entry = identities.get_entry(args.id)
        except identities.UnknownIdentity:
            raise UsageError(f"unknown identity {args.id!r}") from None
        try:
            reports = [identities.check_entry(entry, params, args.order)]
        except ValueError as e:
            raise UsageError(str(e)) from None
    if args.format == "json":
        _emit(args, _json([r.to_dict() for r in reports]))
    else:
        rows = []
        for r in reports:
            mm = r.first_mismatch
            rows.append((r.id, json.dumps(r.params, sort_keys=True), r.order, "pass" if r.passed else "fail",
                         mm.check if mm else "", " ".join(map(str, mm.exponents)) if mm else "",
                         mm.lhs if mm else "", mm.rhs if mm else ""))
        _emit(args, _csv(["id", "params", "order", "result", "check", "exponents", "lhs", "rhs"], rows))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_bijection(args) -> int:
    suite = SUITES.get(args.name)
    if suite is None:
        raise UsageError(f"unknown map {args.name!r}; choose from {', '.join(SUITES)}")
    if (args.check is None) == (args.trace is None):
        raise UsageError("give exactly one of --check or --trace")
    j = args.j if args.j is not None else 0
    if j < 0:
        raise UsageError("--j must be nonnegative")
    if args.trace is not None:
        try:
            line = trace_line(suite, args.trace, j)
        except (BijectionError, pc.PartitionError) as e:
            print(f"error: {e}", file=sys.stderr)
            return EXIT_FAIL
        _emit(args, line + "\n")
        return EXIT_OK
    if args.check < 0:
        raise UsageError("--check needs a nonnegative weight bound")
    report = suite.check(args.check, j)
    if args.format == "json":
        _emit(args, _json(report.to_dict()))
    else:
        rows = [(r.name, r.domain_size, r.ok) for r in report.reports]
        rows.append((f"{report.name} oracle", "", report.oracle_ok if report.oracle_ok is not None else "n/a"))
        _emit(args, _csv(["check", "domain_size", "ok"], rows))
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_sequence(args) -> int:
    """Compare ``m_{1,2}(n)`` with the embedded A064428 prefix."""
    top = min(args.max_n, len(A064428) - 1)
    rows = [(n, A064428[n], pc.mex_count(1, 2, n)) for n in range(top + 1)]
    ok = all(a == b for _, a, b in rows)
    if args.format == "json":
        _emit(args, _json({"sequence": "A064428", "match": ok,
                           "terms": [{"n": n, "embedded": a, "computed": b} for n, a, b in rows]}))
    else:
        _emit(args, _csv(["n", "A064428", "m_1_2"], rows))
    return EXIT_OK if ok else EXIT_FAIL


# -- parser -----------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out", help="write to this file instead of stdout")

    parser = _Parser(prog="crankmex", description="Crank and mex statistics, identities and bijections.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("stats", parents=[common], help="tabulate a statistic")
    p.add_argument("name")
    p.add_argument("--max-n", type=int, default=15)
    p.add_argument("--min-n", type=int, default=0)
    p.add_argument("--j", type=int)
    p.add_argument("--m", type=int)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("table1", parents=[common], help="refined odd mex table for n = 2..15")
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("verify", parents=[common], help="check identities coefficientwise")
    p.add_argument("id", nargs="?")
    p.add_argument("--all", action="store_true")
    p.add_argument("--order", type=int, default=40)
    p.add_argument("--j", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--param", action="append", metavar="KEY=VALUE")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bijection", parents=[common], help="check or trace a combinatorial map")
    p.add_argument("name")
    p.add_argument("--check", type=int, metavar="WEIGHT")
    p.add_argument("--trace", metavar="INPUT")
    p.add_argument("--j", type=int)
    p.set_defaults(func=cmd_bijection)

    p = sub.add_parser("sequence", parents=[common], help="compare m_1_2 with the embedded A064428 prefix")
    p.add_argument("--max-n", type=int, default=30)
    p.set_defaults(func=cmd_sequence)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "command", None):
            raise UsageError("missing subcommand")
        return args.func(args)
    except UsageError as e:
        print(f"crankmex: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (BijectionError, pc.PartitionError, SeriesError) as e:
        print(f"crankmex: error: {e}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
