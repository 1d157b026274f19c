"""Command-line interface.

Subcommands::

    walks N K I J        number of length-K walks from I to J in X_N
    unit-sums N K R      ordered K-tuples of units mod N summing to R
    circ-row N K         first row of the K-th adjacency-matrix power
    rad N                radical of N
    phi N                Euler totient of N
    verify               sweep closed form against the brute-force oracle

Every subcommand accepts ``--json`` for one machine-readable object per
line; the default output is just the value(s).  The three walk-counting
subcommands accept ``--method oracle`` to force the brute-force path.

Exit codes: 0 success, 1 domain or resource error, 2 usage error,
3 verification mismatch.
"""

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field
from typing import Union

from .circulant import adjacency_power_row
from .closed_form import unit_sum_count, walks
from .errors import UnitwalksError
from .numtheory import factorize, radical, totient
from .oracle import (
    DEFAULT_ORACLE_CAP,
    build_adjacency,
    enumerate_unit_sums,
    matrix_power,
    matrix_power_walks,
)
from .verify import SweepConfig, run_sweep

ORACLE_CAP_ENV = "UNITWALKS_ORACLE_CAP"


@dataclass
class QueryResult:
    """One answered query, ready for either output format."""

    command: str
    params: dict = field(default_factory=dict)
    value: Union[str, list[str]] = ""
    method: str = "closed-form"
    elapsed_ms: float = 0.0

    def json_line(self) -> str:
        return json.dumps(
            {
                "query": {"command": self.command, **self.params},
                "value": self.value,
                "method": self.method,
                "elapsed_ms": round(self.elapsed_ms, 3),
            }
        )

    def text(self) -> str:
        if isinstance(self.value, list):
            return " ".join(self.value)
        return self.value


def _emit(result: QueryResult, as_json: bool) -> None:
    print(result.json_line() if as_json else result.text())


def _default_oracle_cap() -> int:
    raw = os.environ.get(ORACLE_CAP_ENV)
    if raw is None:
        return DEFAULT_ORACLE_CAP
    try:
        return int(raw)
    except ValueError:
        return DEFAULT_ORACLE_CAP


def _cmd_walks(args) -> int:
    t0 = time.perf_counter()
    if args.method == "oracle":
        a = build_adjacency(args.n, cap=args.oracle_cap)
        value = matrix_power_walks(a, args.k, args.i, args.j)
    else:
        value = walks(args.n, args.k, args.i, args.j)
    result = QueryResult(
        command="walks",
        params={"n": args.n, "k": args.k, "i": args.i, "j": args.j},
        value=str(value),
        method=args.method,
        elapsed_ms=(time.perf_counter() - t0) * 1000.0,
    )
    _emit(result, args.json)
    return 0


def _cmd_unit_sums(args) -> int:
    t0 = time.perf_counter()
    if args.method == "oracle":
        value = enumerate_unit_sums(args.n, args.k, args.r)
    else:
        value = unit_sum_count(args.n, args.k, args.r)
    result = QueryResult(
        command="unit-sums",
        params={"n": args.n, "k": args.k, "r": args.r},
        value=str(value),
        method=args.method,
        elapsed_ms=(time.perf_counter() - t0) * 1000.0,
    )
    _emit(result, args.json)
    return 0


def _cmd_circ_row(args) -> int:
    t0 = time.perf_counter()
    if args.method == "oracle":
        a = build_adjacency(args.n, cap=args.oracle_cap)
        row = matrix_power(a, args.k).entries[0]
    else:
        row = adjacency_power_row(args.n, args.k).row
    result = QueryResult(
        command="circ-row",
        params={"n": args.n, "k": args.k},
        value=[str(v) for v in row],
        method=args.method,
        elapsed_ms=(time.perf_counter() - t0) * 1000.0,
    )
    _emit(result, args.json)
    return 0


def _cmd_rad(args) -> int:
    t0 = time.perf_counter()
    value = radical(factorize(args.n))
    result = QueryResult(
        command="rad",
        params={"n": args.n},
        value=str(value),
        elapsed_ms=(time.perf_counter() - t0) * 1000.0,
    )
    _emit(result, args.json)
    return 0


def _cmd_phi(args) -> int:
    t0 = time.perf_counter()
    value = totient(factorize(args.n))
    result = QueryResult(
        command="phi",
        params={"n": args.n},
        value=str(value),
        elapsed_ms=(time.perf_counter() - t0) * 1000.0,
    )
    _emit(result, args.json)
    return 0


def _cmd_verify(args) -> int:
    config = SweepConfig(
        max_n=args.max_n, max_k=args.max_k, oracle_cap=args.oracle_cap
    )
    report = run_sweep(config)
    if args.json:
        for check, count in report.comparisons.items():
            line = {
                "query": {"command": "verify", "max_n": args.max_n, "max_k": args.max_k},
                "check": check,
                "comparisons": count,
                "mismatch": report.mismatch.describe()
                if report.mismatch and report.mismatch.check == check
                else None,
                "elapsed_ms": round(report.elapsed_ms, 3),
            }
            print(json.dumps(line))
    else:
        for check, count in report.comparisons.items():
            print(f"{check}: {count} comparisons")
        if report.skipped_unit_sum_cells:
            print(
                f"unit-sums: {report.skipped_unit_sum_cells} cells skipped "
                "(enumeration budget)"
            )
        if report.ok:
            print(
                f"all {report.total_comparisons} comparisons passed "
                f"({report.elapsed_ms:.0f} ms)"
            )
        else:
            print(f"MISMATCH: {report.mismatch.describe()}", file=sys.stderr)
    return 0 if report.ok else 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unitwalks",
        description="Exact walk counts on unitary Cayley graphs and sums of units mod n.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    oracle_cap = _default_oracle_cap()

    def add_common(p, method=False, cap=False):
        p.add_argument("--json", action="store_true", help="one JSON object per line")
        if method:
            p.add_argument(
                "--method",
                choices=["closed-form", "oracle"],
                default="closed-form",
                help="computation path (default: closed-form)",
            )
        if cap:
            p.add_argument(
                "--oracle-cap",
                type=int,
                default=oracle_cap,
                metavar="N",
                help=f"max oracle matrix dimension (default {oracle_cap}, "
                f"env {ORACLE_CAP_ENV})",
            )

    p = sub.add_parser("walks", help="count length-K walks from I to J in X_N")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("i", type=int)
    p.add_argument("j", type=int)
    add_common(p, method=True, cap=True)
    p.set_defaults(handler=_cmd_walks)

    # no --oracle-cap here: the unit-sums oracle is bounded by the
    # enumeration cap, not a matrix dimension
    p = sub.add_parser("unit-sums", help="count ordered K-sums of units hitting R mod N")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("r", type=int)
    add_common(p, method=True)
    p.set_defaults(handler=_cmd_unit_sums)

    p = sub.add_parser("circ-row", help="first row of the K-th adjacency power of X_N")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    add_common(p, method=True, cap=True)
    p.set_defaults(handler=_cmd_circ_row)

    p = sub.add_parser("rad", help="radical of N")
    p.add_argument("n", type=int)
    add_common(p)
    p.set_defaults(handler=_cmd_rad)

    p = sub.add_parser("phi", help="Euler totient of N")
    p.add_argument("n", type=int)
    add_common(p)
    p.set_defaults(handler=_cmd_phi)

    p = sub.add_parser("verify", help="sweep closed form against the oracle")
    p.add_argument("--max-n", type=int, default=20, metavar="N")
    p.add_argument("--max-k", type=int, default=6, metavar="K")
    add_common(p, cap=True)
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv=None) -> int:
    # Counts are printed in full decimal no matter how large; lift the
    # interpreter's int-to-str digit guard.
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except UnitwalksError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
