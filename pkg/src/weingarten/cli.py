"""``wg`` command line interface.

Exit codes: 0 success, 1 domain or usage error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from fractions import Fraction

from . import cache
from .algebra import format_fraction, laurent_expand, parse_fraction
from .combinatorics import Partition, standard_permutation
from .counts import FAMILIES, convention_by_name, count_table
from .enumeration import (
    EnumerationError,
    enumerate_orthogonal,
    enumerate_unitary,
    orthogonal_map_census,
    unitary_map_series,
    unitary_map_coefficient,
    orthogonal_map_series,
    orthogonal_map_coefficient,
    unitary_map_census,
)
from .verify import SUITES, run_suite
from .weingarten import GROUPS, weingarten
from .wick import IndexedProduct, complex_wick_moment, real_wick_moment

log = logging.getLogger("wg")

FORMATS = ("text", "json", "csv")
GROUP_ALIASES = {"u": "unitary", "unitary": "unitary", "o": "orthogonal", "orthogonal": "orthogonal"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wg", description="Exact Weingarten functions, factorization counts and map enumeration.")
    parser.add_argument("--format", choices=FORMATS, default="text")
    parser.add_argument("--cache-dir", help=f"table cache directory (default ${cache.ENV_VAR} or {cache.DEFAULT_CLI_DIR})")
    parser.add_argument("--no-cache", action="store_true", help="do not read or write table files")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", help="Weingarten function as a rational function or Laurent series")
    p.add_argument("--group", choices=GROUPS, required=True)
    p.add_argument("--partition", type=_partition, required=True)
    p.add_argument("--form", choices=("rational", "factored", "series"), default="rational")
    p.add_argument("--order", type=int, help="last power N^-order kept in --form series")

    p = sub.add_parser("counts", help="factorization counts")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--partition", type=_partition, required=True)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--convention", help="order convention for palindromic-monotone (default: calibrated)")

    p = sub.add_parser("enumerate", help="factorizations behind the map expansions")
    p.add_argument("--group", choices=sorted(GROUP_ALIASES), required=True)
    p.add_argument("--partition", type=_partition, required=True)
    p.add_argument("--chi", type=int, required=True, help="Euler characteristic (lowest one for --emit series)")
    p.add_argument("--emit", choices=("records", "census", "coefficient", "series"), default="records")
    p.add_argument("--unoriented", action="store_true", help="orthogonal census with vertex orientations identified")

    p = sub.add_parser("wick", help="Gaussian moment of a product of matrix elements")
    p.add_argument("--kind", choices=("real", "complex"), required=True)
    p.add_argument("--factors", required=True, help='e.g. "1,1;1,1" (complex factors alternate Z, Zbar)')
    p.add_argument("--omega", default="1")

    p = sub.add_parser("verify", help="run the acceptance checks")
    p.add_argument("--suite", choices=SUITES, default="small")
    return parser


def _csv(rows: list[list]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue().rstrip("\n")


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _series_json(series) -> dict:
    return {"terms": {str(k): format_fraction(c) for k, c in sorted(series.terms().items())}, **series.to_json()}


def cmd_eval(args) -> str:
    result = weingarten(args.group, args.partition)
    if args.form == "series":
        order = args.order if args.order is not None else 2 * args.partition.size + args.partition.length + 4
        series = laurent_expand(result.value, order)
        if args.format == "json":
            return _dump({"group": args.group, "partition": str(args.partition), **_series_json(series)})
        if args.format == "csv":
            return _csv([["power", "coefficient"]] + [[-k, format_fraction(c)] for k, c in sorted(series.terms().items())])
        return str(series)
    if args.format == "json":
        return _dump(result.to_json())
    text = result.value.to_string(factored=args.form == "factored")
    if args.format == "csv":
        return _csv([["group", "partition", "value"], [args.group, str(args.partition), text]])
    return text


def cmd_counts(args) -> str:
    conv = convention_by_name(args.convention) if args.convention else None
    table = count_table(args.family, args.partition, args.kmax, conv)
    if args.format == "json":
        return _dump(table.to_json())
    payload = table.to_json()
    if args.format == "csv":
        return _csv([["k", "count"]] + [[k, v] for k, v in payload["counts"].items()])
    return " ".join(str(v) for v in payload["counts"].values())


def cmd_enumerate(args) -> str:
    group = GROUP_ALIASES[args.group]
    part = args.partition
    unitary = group == "unitary"
    if args.emit == "records":
        records = enumerate_unitary(standard_permutation(part), args.chi) if unitary else enumerate_orthogonal(part, args.chi)
        rows = [r.to_json() for r in records]
        if args.format == "csv":
            if not rows:
                return ""
            keys = list(rows[0])
            return _csv([keys] + [[r[k] for k in keys] for r in rows])
        return "\n".join(_dump(r) for r in rows)
    if args.emit == "census":
        if unitary:
            census = unitary_map_census(standard_permutation(part), args.chi)
        else:
            census = orthogonal_map_census(part, args.chi, unoriented=args.unoriented)
        payload = {str(k): v for k, v in census.items()}
        if args.format == "csv":
            return _csv([["complement_type", "maps"]] + [[k, v] for k, v in payload.items()])
        return _dump(payload)
    if args.emit == "coefficient":
        value = unitary_map_coefficient(standard_permutation(part), args.chi) if unitary else orthogonal_map_coefficient(part, args.chi)
        if args.format == "json":
            return _dump({"group": group, "partition": str(part), "chi": args.chi, "coefficient": format_fraction(value)})
        if args.format == "csv":
            return _csv([["chi", "coefficient"], [args.chi, format_fraction(value)]])
        return format_fraction(value)
    series = unitary_map_series(part, args.chi) if unitary else orthogonal_map_series(part, args.chi)
    if args.format == "json":
        return _dump({"group": group, "partition": str(part), "chi_min": args.chi, **_series_json(series)})
    if args.format == "csv":
        return _csv([["power", "coefficient"]] + [[-k, format_fraction(c)] for k, c in sorted(series.terms().items())])
    return str(series)


def cmd_wick(args) -> str:
    omega = parse_fraction(args.omega)
    product = IndexedProduct.parse(args.factors, args.kind, omega)
    value = real_wick_moment(product) if args.kind == "real" else complex_wick_moment(product)
    if args.format == "json":
        return _dump({"kind": args.kind, "factors": args.factors, "omega": format_fraction(Fraction(omega)),
                      "value": format_fraction(value)})
    if args.format == "csv":
        return _csv([["kind", "factors", "omega", "value"], [args.kind, args.factors, args.omega, format_fraction(value)]])
    return format_fraction(value)


def cmd_verify(args) -> tuple[str, bool]:
    results = run_suite(args.suite)
    ok = all(r.passed for r in results)
    if args.format == "json":
        return _dump({"suite": args.suite, "passed": ok, "criteria": [r.to_json() for r in results]}), ok
    if args.format == "csv":
        return _csv([["criterion", "name", "passed"]] + [[r.number, r.name, r.passed] for r in results]), ok
    lines = []
    for r in results:
        lines.append(f"[{'PASS' if r.passed else 'FAIL'}] {r.number:2d} {r.name}")
        if not r.passed:
            lines.append(f"     computed: {_dump(r.computed)}")
            lines.append(f"     expected: {_dump(r.expected)}")
        for flag in r.flags:
            lines.append(f"     note: {flag}")
    return "\n".join(lines), ok


COMMANDS = {"eval": cmd_eval, "counts": cmd_counts, "enumerate": cmd_enumerate, "wick": cmd_wick}


def run(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=err)
        return 1
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2), stream=err)
    if args.no_cache:
        cache.disable_cache()
    else:
        cache.set_cache_dir(args.cache_dir or os.environ.get(cache.ENV_VAR) or cache.DEFAULT_CLI_DIR)
    try:
        if args.command == "verify":
            text, ok = cmd_verify(args)
            if text:
                print(text, file=out)
            return 0 if ok else 2
        text = COMMANDS[args.command](args)
    except (ValueError, EnumerationError, ArithmeticError, ZeroDivisionError) as exc:
        print(f"wg {args.command}: {exc}", file=err)
        return 1
    if text:
        print(text, file=out)
    return 0


def main() -> None:
    sys.exit(run())
