"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 parse error, 3 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path
from typing import Callable, Optional, TextIO

from pydantic import ValidationError

from vknots import __version__
from vknots.alexander import alexander_suite
from vknots.checks import run_checks, selftest
from vknots.errors import GaussCodeError, KnotError, MalformedPolynomialError
from vknots.gauss import format_gauss_code, parse_gauss_code
from vknots.log import attach_handler
from vknots.moves import apply_moves
from vknots.schemas.moves import MoveScript
from vknots.summary import (
    alexander_out,
    bounds_out,
    index_rows,
    mutant_summary,
    v_out,
    writhe_out,
)
from vknots.table import load_table, verify_table, write_results
from vknots.writhe import v_polynomial, writhe_invariants

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_MISMATCH = 3

logger = logging.getLogger("vknots.cli")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _configure_logging(level_name: str) -> None:
    attach_handler(logging.getLogger("vknots"), level_name, default=logging.WARNING)


def _emit(out: TextIO, args, payload, lines: Callable[[], list[str]]) -> None:
    if args.json:
        if hasattr(payload, "model_dump"):
            payload = payload.model_dump()
        out.write(json.dumps(payload, indent=2, default=str) + "\n")
    else:
        for line in lines():
            out.write(line + "\n")


def _cmd_index(args, out: TextIO) -> int:
    d = parse_gauss_code(args.code)
    rows = index_rows(d)
    _emit(
        out,
        args,
        [row.model_dump() for row in rows],
        lambda: ["chord sign RO RU LO LU Ind"]
        + [
            f"{r.chord} {r.sign:+d} {r.ro} {r.ru} {r.lo} {r.lu} {r.ind}"
            for r in rows
        ],
    )
    return EXIT_OK


def _cmd_alexander(args, out: TextIO) -> int:
    d = parse_gauss_code(args.code)
    result = alexander_out(d)
    _emit(
        out,
        args,
        result,
        lambda: [
            f"{name}: {poly.text}"
            for name, poly in (
                ("delta0", result.delta0),
                ("delta0_raw", result.delta0_raw),
                ("delta0_prime", result.delta0_prime),
                ("delta0_bar", result.delta0_bar),
                ("phi", result.phi),
            )
        ],
    )
    return EXIT_OK


def _cmd_writhe(args, out: TextIO) -> int:
    d = parse_gauss_code(args.code)
    result = writhe_out(d)
    _emit(
        out,
        args,
        result,
        lambda: [
            result.w.text,
            "wn: " + (" ".join(f"{n}:{v}" for n, v in result.wn.items()) or "none"),
            f"odd_writhe: {result.odd_writhe}",
        ],
    )
    return EXIT_OK


def _cmd_vwrithe(args, out: TextIO) -> int:
    d = parse_gauss_code(args.code)
    result = v_out(d)
    _emit(
        out,
        args,
        result,
        lambda: [f"v_rep: {result.v_rep.text}", f"modulus: {result.modulus.text}"],
    )
    return EXIT_OK


def _cmd_bounds(args, out: TextIO) -> int:
    d = parse_gauss_code(args.code)
    result = bounds_out(d)
    _emit(
        out,
        args,
        result,
        lambda: [f"{key}: {value}" for key, value in result.model_dump().items()],
    )
    return EXIT_OK


def _cmd_verify(args, out: TextIO) -> int:
    d = parse_gauss_code(args.code)
    result = run_checks(d)
    payload = {
        "code": format_gauss_code(d),
        "ok": result.ok,
        "checks": result.checks,
        "skipped": result.skipped,
    }
    _emit(
        out,
        args,
        payload,
        lambda: [
            f"{name}: {'ok' if passed else 'FAIL'}"
            for name, passed in result.checks.items()
        ]
        + [f"{name}: skipped" for name in result.skipped],
    )
    return EXIT_OK if result.ok else EXIT_MISMATCH


def _cmd_moves(args, out: TextIO) -> int:
    d = parse_gauss_code(args.code)
    raw = json.loads(Path(args.script).read_text(encoding="utf-8"))
    script = MoveScript.model_validate(raw if isinstance(raw, dict) else {"moves": raw})
    final = apply_moves(d, script.moves)[-1]
    raw_before = alexander_suite(d).delta0_raw
    raw_after = alexander_suite(final).delta0_raw
    w_delta = writhe_invariants(final).w - writhe_invariants(d).w
    v_delta = v_polynomial(final).v_rep - v_polynomial(d).v_rep
    payload = {
        "code": format_gauss_code(final),
        "moves": len(script.moves),
        "delta0_raw_before": raw_before.render(),
        "delta0_raw_after": raw_after.render(),
        "w_delta": w_delta.render(),
        "v_delta": v_delta.render(),
    }
    _emit(
        out,
        args,
        payload,
        lambda: [f"{key}: {value}" for key, value in payload.items()],
    )
    return EXIT_OK


def _cmd_mutants(args, out: TextIO) -> int:
    if args.k < 1:
        raise UsageError("--k must be at least 1")
    result = mutant_summary(args.k)
    _emit(
        out,
        args,
        result,
        lambda: [
            f"K: {result.knot}",
            f"MK: {result.mutant}",
            f"W: {result.w.text}",
            f"V_K: {result.v_knot.text}",
            f"V_MK: {result.v_mutant.text}",
            f"V_K - V_MK: {result.difference.text}",
            f"difference is a multiple of W: {result.difference_is_multiple}",
            f"pair ({args.k + 1}, {args.k + 3}): K {result.pair_type_knot}, "
            f"MK {result.pair_type_mutant}",
        ],
    )
    return EXIT_OK


def _table_line(row) -> str:
    if not row.matched_image:
        return f"{row.name} {row.status}"
    note = ", negated V" if row.v_sign == -1 else ""
    return f"{row.name} {row.status} ({row.matched_image}{note})"


def _cmd_table(args, out: TextIO) -> int:
    records = load_table(args.file)
    if not args.check:
        records = [
            r if r.error else type(r)(r.name, r.code, line=r.line) for r in records
        ]
    report = verify_table(records, workers=args.workers)
    if args.out:
        fmt = args.format or ("csv" if args.out.endswith(".csv") else "json")
        write_results(report.rows, fmt, args.out)
    _emit(
        out,
        args,
        {
            "totals": report.totals,
            "rows": [row.model_dump() for row in report.rows],
        },
        lambda: [_table_line(row) for row in report.rows]
        + [" ".join(f"{k}={v}" for k, v in report.totals.items())],
    )
    if report.totals["parse_error"]:
        return EXIT_PARSE
    if args.check and not report.ok:
        return EXIT_MISMATCH
    return EXIT_OK


def _cmd_selftest(args, out: TextIO) -> int:
    report = selftest(args.n, args.trials, args.seed)
    payload = {
        "trials": report.trials,
        "ok": report.ok,
        "failures": report.failures,
        "examples": report.examples,
    }
    _emit(
        out,
        args,
        payload,
        lambda: [f"trials: {report.trials}"]
        + [
            f"FAIL {name}: {count} (e.g. {report.examples[name]})"
            for name, count in report.failures.items()
        ]
        + (["all checks passed"] if report.ok else []),
    )
    return EXIT_OK if report.ok else EXIT_MISMATCH


def _cmd_serve(args, out: TextIO) -> int:
    import uvicorn

    uvicorn.run("vknots.main:app", host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)

    parser = _Parser(prog="vknots", description="Virtual knot invariants")
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument(
        "--seed",
        type=int,
        default=int(os.getenv("VKNOTS_SEED", "0") or 0),
        help="seed for randomized subcommands",
    )
    parser.add_argument(
        "--log-level", default=os.getenv("VKNOTS_LOG_LEVEL", "WARNING")
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, handler, help_text in (
        ("index", _cmd_index, "per-chord index table"),
        ("alexander", _cmd_alexander, "generalized Alexander polynomial and quotients"),
        ("writhe", _cmd_writhe, "writhe polynomial, n-writhes, odd writhe"),
        ("vwrithe", _cmd_vwrithe, "second-order writhe polynomial and its modulus"),
        ("bounds", _cmd_bounds, "virtual crossing and forbidden number bounds"),
        ("verify", _cmd_verify, "run the identity battery on one diagram"),
    ):
        cmd = sub.add_parser(name, parents=[common], help=help_text)
        cmd.add_argument("code")
        cmd.set_defaults(handler=handler)

    cmd = sub.add_parser("moves", parents=[common], help="apply a JSON move script")
    cmd.add_argument("code")
    cmd.add_argument("--script", required=True)
    cmd.set_defaults(handler=_cmd_moves)

    cmd = sub.add_parser("mutants", parents=[common], help="mutant pair report")
    cmd.add_argument("--k", type=int, required=True)
    cmd.set_defaults(handler=_cmd_mutants)

    cmd = sub.add_parser("table", parents=[common], help="batch over a knot table")
    cmd.add_argument("file")
    cmd.add_argument("--check", action="store_true")
    cmd.add_argument("--out")
    cmd.add_argument("--format", choices=["json", "csv"])
    cmd.add_argument("--workers", type=int)
    cmd.set_defaults(handler=_cmd_table)

    cmd = sub.add_parser("selftest", parents=[common], help="random property suite")
    cmd.add_argument("--n", type=int, default=5, help="maximum chord count")
    cmd.add_argument("--trials", type=int, default=100)
    cmd.set_defaults(handler=_cmd_selftest)

    cmd = sub.add_parser("serve", parents=[common], help="run the HTTP API")
    cmd.add_argument("--host", default="127.0.0.1")
    cmd.add_argument("--port", type=int, default=8000)
    cmd.set_defaults(handler=_cmd_serve)
    return parser


def run(argv: Optional[list[str]] = None, out: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    _configure_logging(args.log_level)
    try:
        return args.handler(args, out)
    except UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except (GaussCodeError, MalformedPolynomialError) as exc:
        sys.stderr.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except (KnotError, ValidationError, OSError, ValueError) as exc:
        logger.debug("command %s failed", args.command, exc_info=True)
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
