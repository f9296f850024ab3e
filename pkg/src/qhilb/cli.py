"""Command-line interface: series computation, oracles, and verification.

Exit codes are a stable contract: 0 on success/agreement, 1 when an exact
comparison differed, 2 on usage errors.  JSON output serializes every
count as a decimal string, since JSON numbers are not interoperable past
2^53, and orders all rows deterministically so outputs diff cleanly.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field
from typing import Sequence

from . import fountains, hilbert, verification
from .hilbert import ZetaSeries

CACHE_ENV_VAR = "QHILB_CACHE_DIR"


class UsageError(Exception):
    """Invalid parameter combination (CLI exit code 2)."""


@dataclass
class RunReport:
    """Outcome of a CLI verification run."""

    command: str
    parameters: dict
    results: list[tuple[str, str, str]] = field(default_factory=list)
    elapsed_ms: int = 0

    def add(self, name: str, passed: bool, details: str = "") -> None:
        self.results.append((name, "pass" if passed else "fail", details))

    @property
    def all_passed(self) -> bool:
        return all(status == "pass" for _, status, _ in self.results)

    def to_payload(self) -> dict:
        return {
            "command": self.command,
            "parameters": self.parameters,
            "results": [
                {"name": name, "status": status, "details": details}
                for name, status, details in self.results
            ],
            "elapsed_ms": self.elapsed_ms,
        }


def canonical_json(payload: object) -> str:
    """The one JSON form used everywhere, so output round-trips bytewise."""
    return json.dumps(payload, indent=2) + "\n"


def _resolve_cache_dir(args: argparse.Namespace) -> str | None:
    if args.cache_dir:
        return args.cache_dir
    return os.environ.get(CACHE_ENV_VAR) or None


def _parse_p_list(text: str) -> list[int]:
    try:
        values = [int(chunk) for chunk in text.split(",") if chunk.strip() != ""]
    except ValueError as exc:
        raise UsageError(f"invalid p list {text!r}") from exc
    if not values or any(p < 1 for p in values):
        raise UsageError(f"p values must be >= 1, got {text!r}")
    return values


def _theorem_series(p: int, order: int, cache_dir: str | None) -> ZetaSeries:
    table = None
    if cache_dir is not None:
        table = fountains.load_or_build(
            p, hilbert.triangle_weight(p, order), p * order + 1, cache_dir
        )
    return hilbert.zeta_theorem(p, order, table)


# -- zeta ---------------------------------------------------------------------

def _zeta_methods(p: int, order: int, method: str, cache_dir: str | None) -> dict[str, ZetaSeries]:
    if method == "closed" and p not in (1, 2):
        raise UsageError(f"--method closed needs p in {{1, 2}}, got p={p}")
    series: dict[str, ZetaSeries] = {}
    wanted = ["theorem", "oracle", "closed"] if method == "all" else [method]
    for name in wanted:
        if name == "theorem":
            series[name] = _theorem_series(p, order, cache_dir)
        elif name == "oracle":
            series[name] = hilbert.zeta_oracle(p, order)
        elif name == "closed":
            if p == 1:
                series[name] = hilbert.zeta_closed_p1(order)
            elif p == 2:
                series[name] = hilbert.zeta_closed_p2(order)
            # no closed form otherwise; skipped under method=all
    return series


def cmd_zeta(args: argparse.Namespace) -> int:
    if args.p < 1:
        raise UsageError(f"p must be >= 1, got {args.p}")
    if args.order < 0:
        raise UsageError(f"order must be >= 0, got {args.order}")
    series = _zeta_methods(args.p, args.order, args.method, _resolve_cache_dir(args))
    coefficient_lists = {
        name: [str(c) for c in zs.coefficients] for name, zs in series.items()
    }
    agreed = len(set(map(tuple, coefficient_lists.values()))) == 1
    if args.format == "json":
        payload = {
            "p": args.p,
            "order": args.order,
            "method": args.method,
            "coefficients": next(iter(coefficient_lists.values())),
        }
        if args.method == "all":
            payload["methods"] = coefficient_lists
            payload["verdict"] = "pass" if agreed else "fail"
        print(canonical_json(payload), end="")
    elif args.format == "csv":
        if args.method == "all":
            print("method,m,coefficient")
            for name in coefficient_lists:
                for m, c in enumerate(coefficient_lists[name]):
                    print(f"{name},{m},{c}")
        else:
            print("m,coefficient")
            for m, c in enumerate(coefficient_lists[args.method]):
                print(f"{m},{c}")
    else:
        for name, coeffs in coefficient_lists.items():
            print(f"{name}: {','.join(coeffs)}")
        if args.method == "all":
            print(f"verdict: {'pass' if agreed else 'fail'}")
    return 0 if agreed else 1


# -- fountains ----------------------------------------------------------------

def cmd_fountains(args: argparse.Namespace) -> int:
    if args.p < 1:
        raise UsageError(f"p must be >= 1, got {args.p}")
    if args.max_n < 0:
        raise UsageError(f"--max-n must be >= 0, got {args.max_n}")
    table = fountains.load_or_build(
        args.p, args.max_n, args.max_n, _resolve_cache_dir(args)
    )
    array = getattr(table, args.table)
    entries = [
        (n, k, array[n][k])
        for n in range(args.max_n + 1)
        for k in range(args.max_n + 1)
        if array[n][k]
    ]
    oracle_ok = True
    oracle_details = ""
    if args.check_oracle:
        oracle_ok, oracle_details = _compare_with_enumeration(args.p, args.max_n, args.table, array)
    if args.format == "json":
        payload = {
            "p": args.p,
            "table": args.table,
            "entries": [
                {"n": n, "k": k, "count": str(c)} for n, k, c in entries
            ],
        }
        if args.check_oracle:
            payload["oracle"] = {
                "status": "pass" if oracle_ok else "fail",
                "details": oracle_details,
            }
        print(canonical_json(payload), end="")
    elif args.format == "csv":
        print("n,k,count")
        for n, k, c in entries:
            print(f"{n},{k},{c}")
        if args.check_oracle:
            print(f"# oracle: {'pass' if oracle_ok else 'fail'} {oracle_details}".rstrip())
    else:
        for n, k, c in entries:
            print(f"{args.table}({n},{k}) = {c}")
        if args.check_oracle:
            print(f"oracle: {'pass' if oracle_ok else 'fail'} {oracle_details}".rstrip())
    return 0 if oracle_ok else 1


def _compare_with_enumeration(
    p: int, n_max: int, which: str, array: list[list[int]]
) -> tuple[bool, str]:
    counts: dict[tuple[int, int], int] = {}
    for fountain in fountains.iter_fountains(p, n_max):
        primitive = fountains.is_primitive(fountain)
        if (which == "g" and not primitive) or (which == "h" and primitive):
            continue
        shape = fountain.shape()
        counts[shape] = counts.get(shape, 0) + 1
    for n in range(n_max + 1):
        for k in range(n_max + 1):
            expected = counts.get((n, k), 0)
            if array[n][k] != expected:
                return False, f"{which}({n},{k}): table {array[n][k]} != enumeration {expected}"
    return True, f"{sum(counts.values())} fountains compared"


# -- verify / identities --------------------------------------------------------

def _emit_report(report: RunReport, fmt: str) -> None:
    if fmt == "json":
        print(canonical_json(report.to_payload()), end="")
    elif fmt == "csv":
        print("name,status,details")
        for name, status, details in report.results:
            detail = details.replace(",", ";")
            print(f"{name},{status},{detail}")
    else:
        for name, status, details in report.results:
            suffix = f"  ({details})" if details else ""
            print(f"[{status.upper():4}] {name}{suffix}")
        verdict = "all checks passed" if report.all_passed else "FAILURES present"
        print(f"{verdict} in {report.elapsed_ms} ms")


def cmd_verify(args: argparse.Namespace) -> int:
    p_values = _parse_p_list(args.p)
    if args.order < 0:
        raise UsageError(f"order must be >= 0, got {args.order}")
    started = time.monotonic()
    checks = verification.run_checks(p_values, args.order, _resolve_cache_dir(args))
    report = RunReport(
        command="verify",
        parameters={"p": p_values, "order": args.order},
    )
    for check in checks:
        report.add(check.name, check.passed, check.details)
    report.elapsed_ms = int((time.monotonic() - started) * 1000)
    _emit_report(report, args.format)
    return 0 if report.all_passed else 1


def cmd_identities(args: argparse.Namespace) -> int:
    p_values = _parse_p_list(args.p)
    if args.order < 0:
        raise UsageError(f"order must be >= 0, got {args.order}")
    started = time.monotonic()
    report = RunReport(
        command="identities",
        parameters={"p": p_values, "order": args.order},
    )
    jacobi = verification.check_jacobi(args.order)
    report.add(jacobi.name, jacobi.passed, jacobi.details)
    for p in p_values:
        for check in (
            verification.check_shift_identity(p, args.order),
            verification.check_functional_equation(p, args.order),
            verification.check_g_continued_fraction(p, args.order),
            verification.check_t_product(p, args.order),
        ):
            report.add(check.name, check.passed, check.details)
        if p == 1:
            ram = verification.check_ramanujan(args.order)
            report.add(ram.name, ram.passed, ram.details)
    report.elapsed_ms = int((time.monotonic() - started) * 1000)
    _emit_report(report, args.format)
    return 0 if report.all_passed else 1


# -- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qhilb",
        description=(
            "Exact generating series of Euler characteristics of Hilbert "
            "schemes of points on (p,1) cyclic quotient singularities, "
            "via fountain-of-coins combinatorics."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--format", choices=("json", "csv", "text"), default="text",
            help="output format (default: text)",
        )
        p.add_argument(
            "--cache-dir", default=None,
            help=f"fountain-table cache directory (or ${CACHE_ENV_VAR})",
        )

    zeta = sub.add_parser("zeta", help="series coefficients by one or all methods")
    zeta.add_argument("--p", type=int, required=True, help="group order, >= 1")
    zeta.add_argument("--order", type=int, required=True, help="truncation order")
    zeta.add_argument(
        "--method", choices=("theorem", "oracle", "closed", "all"),
        default="theorem",
        help="theorem = triangle/fountain pairing, oracle = diagram "
             "enumeration, closed = product formula (p <= 2 only)",
    )
    add_common(zeta)
    zeta.set_defaults(func=cmd_zeta)

    fnt = sub.add_parser("fountains", help="emit an (n, k) fountain count table")
    fnt.add_argument("--p", type=int, required=True)
    fnt.add_argument("--max-n", type=int, required=True, help="table bound")
    fnt.add_argument(
        "--table", choices=("f", "g", "h"), default="f",
        help="f = all, g = primitive, h = non-primitive (default: f)",
    )
    fnt.add_argument(
        "--check-oracle", action="store_true",
        help="also compare against exhaustive enumeration (desk scale only)",
    )
    add_common(fnt)
    fnt.set_defaults(func=cmd_fountains)

    ver = sub.add_parser("verify", help="run the full cross-check battery")
    ver.add_argument("--p", required=True, help="comma-separated p values, e.g. 1,2,3")
    ver.add_argument("--order", type=int, required=True)
    add_common(ver)
    ver.set_defaults(func=cmd_verify)

    idn = sub.add_parser("identities", help="run only the series-identity checks")
    idn.add_argument("--p", required=True, help="comma-separated p values")
    idn.add_argument("--order", type=int, required=True)
    add_common(idn)
    idn.set_defaults(func=cmd_identities)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help; keep its code
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
