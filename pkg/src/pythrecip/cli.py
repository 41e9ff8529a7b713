"""Command-line interface: one JSON record per line (or TSV) on standard output.

Exit codes: 0 found/verified, 1 empty result or falsified claim, 2 usage/domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Any, Sequence, TextIO

from .exact_math import DomainError, format_rational
from .oracles import CLAIMS, SweepReport, run_claim
from .reciprocal_solver import (
    SolutionRecord,
    classify_345,
    find_triples,
    group_members_345,
    obstructions,
)
from .triples import (
    ReciprocalSpec,
    Triple,
    altitude,
    enumerate_generators,
    has_property,
    reciprocal_sum,
    triple_from_generator,
)

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_EMPTY = 1
EXIT_USAGE = 2


class CLIError(Exception):
    def __init__(self, message: str, exit_code: int = EXIT_USAGE):
        super().__init__(message)
        self.exit_code = exit_code


class _Emitter:
    def __init__(self, fmt: str, out: TextIO):
        self.fmt = fmt
        self.out = out
        self._tsv_header: list[str] | None = None
        self.count = 0

    def emit(self, kind: str, **fields: Any) -> None:
        record = {"kind": kind, "schema_version": SCHEMA_VERSION, **fields}
        self.count += 1
        if self.fmt == "line-records":
            self.out.write(json.dumps(record, separators=(",", ":")) + "\n")
            return
        flat = _flatten(record)
        header = list(flat)
        if header != self._tsv_header:
            self.out.write("\t".join(header) + "\n")
            self._tsv_header = header
        self.out.write("\t".join(_tsv_cell(v) for v in flat.values()) + "\n")


def _flatten(record: dict, prefix: str = "") -> dict[str, Any]:
    flat: dict[str, Any] = {}
    for key, value in record.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict) and value and key != "notes":
            flat.update(_flatten(value, name + "."))
        else:
            flat[name] = value
    return flat


def _tsv_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, dict)):
        return json.dumps(value, separators=(",", ":"))
    return str(value)


def _int_tuple(size: int, names: str):
    def parse(text: str) -> tuple[int, ...]:
        parts = text.split(",")
        try:
            values = tuple(int(p) for p in parts)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected {names}, got {text!r}") from None
        if len(values) != size:
            raise argparse.ArgumentTypeError(f"expected {size} values {names}, got {text!r}")
        if any(v < 1 for v in values):
            raise argparse.ArgumentTypeError(f"values must be positive integers: {text!r}")
        return values

    return parse


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {text!r}")
    return value


def _positive_int(text: str) -> int:
    value = _nonneg_int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return value


def _spec(values: tuple[int, ...]) -> ReciprocalSpec:
    try:
        return ReciprocalSpec(*values)
    except DomainError as exc:
        raise CLIError(f"invalid spec: {exc}") from None


def _solution_fields(rec: SolutionRecord) -> dict[str, Any]:
    return {
        "generator": rec.generator.as_dict(),
        "triple": rec.triple.as_dict(),
        "spec": rec.spec.as_dict(),
    }


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_enumerate(args: argparse.Namespace, em: _Emitter) -> int:
    for g in enumerate_generators(args.max_c):
        if args.primitive and g.d != 1:
            continue
        t = triple_from_generator(g)
        em.emit("triple", generator=g.as_dict(), triple=t.as_dict(), primitive=g.d == 1)
    return EXIT_OK if em.count else EXIT_EMPTY


def cmd_check(args: argparse.Namespace, em: _Emitter) -> int:
    try:
        triple = Triple(*args.triple)
    except DomainError as exc:
        raise CLIError(str(exc)) from None
    spec = _spec(args.spec)
    holds = has_property(triple, spec)
    em.emit(
        "check",
        triple=triple.as_dict(),
        spec=spec.as_dict(),
        holds=holds,
        altitude=format_rational(altitude(triple)),
        reciprocal_sum=format_rational(reciprocal_sum(triple, spec.v)),
    )
    return EXIT_OK if holds else EXIT_EMPTY


def cmd_solve(args: argparse.Namespace, em: _Emitter) -> int:
    spec = _spec(args.spec)
    records = find_triples(spec, args.max_m)
    for rec in records:
        em.emit("solution", **_solution_fields(rec))
    if records:
        return EXIT_OK
    for note in obstructions(spec):
        em.emit("obstruction", spec=spec.as_dict(), note=note)
    return EXIT_EMPTY


def cmd_classify345(args: argparse.Namespace, em: _Emitter) -> int:
    spec = _spec(args.spec)
    found = classify_345(spec)
    group, t = found if found else (None, None)
    em.emit("classification", triple={"a": 3, "b": 4, "c": 5}, spec=spec.as_dict(), group=group, t=t)
    return EXIT_OK if found else EXIT_EMPTY


def cmd_groups345(args: argparse.Namespace, em: _Emitter) -> int:
    for gid, t, (v, k, l) in group_members_345(args.t_max, args.include_noncoprime):  # noqa: E741
        em.emit("group_member", group=gid, t=t, spec={"v": v, "k": k, "l": l})
    return EXIT_OK if em.count else EXIT_EMPTY


def cmd_verify(args: argparse.Namespace, em: _Emitter) -> int:
    deadline = None if args.max_seconds is None else time.monotonic() + args.max_seconds
    report: SweepReport = run_claim(args.claim, args.bound, deadline=deadline)
    em.emit("sweep_report", **report.as_dict())
    return EXIT_OK if report.held else EXIT_EMPTY


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--output",
        choices=("line-records", "tsv"),
        default=argparse.SUPPRESS,
        help="record format (default: line-records, one JSON object per line)",
    )
    common.add_argument(
        "--max-seconds",
        type=float,
        default=argparse.SUPPRESS,
        help="soft time limit for sweeps; an aborted sweep is reported as partial",
    )

    parser = argparse.ArgumentParser(
        prog="pythrecip",
        description="Pythagorean triples with the reciprocal property 1/a + 1/b + v/h = k/l.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list triples with c <= MAX_C")
    p.add_argument("--max-c", type=_positive_int, required=True)
    p.add_argument("--primitive", action="store_true", help="only d = 1")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("check", parents=[common], help="decide R(v,k,l) for one triple")
    p.add_argument("--triple", type=_int_tuple(3, "a,b,c"), required=True)
    p.add_argument("--spec", type=_int_tuple(3, "v,k,l"), required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("solve", parents=[common], help="all triples with R(v,k,l) and m <= MAX_M")
    p.add_argument("--spec", type=_int_tuple(3, "v,k,l"), required=True)
    p.add_argument("--max-m", type=_positive_int, default=100)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("classify-345", parents=[common], help="group of R(v,k,l) for (3,4,5)")
    p.add_argument("--spec", type=_int_tuple(3, "v,k,l"), required=True)
    p.set_defaults(func=cmd_classify345)

    p = sub.add_parser("groups-345", parents=[common], help="members of the six (3,4,5) groups")
    p.add_argument("--t-max", type=_nonneg_int, default=10)
    p.add_argument(
        "--include-noncoprime",
        action="store_true",
        help="keep members with gcd(k, l) > 1",
    )
    p.set_defaults(func=cmd_groups345)

    p = sub.add_parser("verify", parents=[common], help="run a bounded verification sweep")
    p.add_argument("--claim", required=True, help=f"one of: {', '.join(CLAIMS)}")
    p.add_argument("--bound", type=_positive_int, default=100)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    args.output = getattr(args, "output", "line-records")
    args.max_seconds = getattr(args, "max_seconds", None)
    if args.command == "verify" and args.claim not in CLAIMS:
        print(f"pythrecip: unknown claim {args.claim!r}; choose from {', '.join(CLAIMS)}", file=sys.stderr)
        return EXIT_USAGE
    em = _Emitter(args.output, out if out is not None else sys.stdout)
    try:
        return args.func(args, em)
    except CLIError as exc:
        print(f"pythrecip: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
