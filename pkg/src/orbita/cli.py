"""Command-line interface: ``orbita analyze | list | minimal | tables | verify``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import catalog
from .errors import OrbitaError
from .grading import WeightedDiagram
from .report import analyze, record_dict, report_dict, to_json, to_table, to_text, to_tsv
from .rootsys import LieTypeSpec
from .verify import CHECKS, run_checks, supported_specs

TYPES = ("A", "B", "C", "D", "E6", "E7", "E8", "F4", "G2")

NODE_ORDER = """\
labels follow the simple-root order:
  A, B, C, D   nodes 1..r along the chain; B ends on the short root e_n,
               C on the long root 2e_n, D forks into nodes r-1 and r
  E6, E7, E8   chain 1-3-4-5-6(-7(-8)), node 2 attached to node 4
  F4           chain 1-2=>3-4, numbered from the short end
  G2           node 1 short (e1-e2), node 2 long
"""


class UsageError(Exception):
    pass


def _spec(args) -> LieTypeSpec:
    if args.type in "ABCD":
        if args.rank is None:
            raise UsageError(f"--rank is required for type {args.type}")
        return LieTypeSpec(args.type, args.rank)
    return LieTypeSpec.parse(args.type, args.rank)


def _emit(text: str):
    sys.stdout.write(text)


def cmd_analyze(args) -> int:
    spec = _spec(args)
    labels = WeightedDiagram.parse(spec, args.labels).labels
    data = report_dict(analyze(spec, labels))
    _emit(to_json(data) if args.format == "json" else to_text(data))
    return 0


def _render_records(records, fmt: str) -> str:
    if fmt == "json":
        return to_json([record_dict(r) for r in records])
    if fmt == "tsv":
        return to_tsv(records)
    return to_table(records)


def cmd_list(args) -> int:
    _emit(_render_records(catalog.enumerate_spherical(_spec(args)), args.format))
    return 0


def cmd_minimal(args) -> int:
    _emit(_render_records([catalog.minimal_orbit(_spec(args))], args.format))
    return 0


def cmd_tables(args) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    specs = [s for s in supported_specs(args.max_rank) if s.rank >= 2 or not s.is_classical]
    for spec in specs:
        (out / f"{spec.name}.tsv").write_text(to_tsv(catalog.enumerate_spherical(spec)), encoding="utf-8")
    _emit(f"wrote {len(specs)} tables to {out}\n")
    return 0


def cmd_verify(args) -> int:
    only = args.only or None
    results = run_checks(only)
    failures = [(r.name, f) for r in results for f in r.failures]
    total = sum(r.count for r in results)
    if args.format == "json":
        _emit(to_json({"ok": not failures, "checks": total, "failures": [{"check": c, "detail": d} for c, d in failures]}))
    elif failures:
        for check, detail in failures:
            _emit(f"FAIL {check}: {detail}\n")
    else:
        _emit(f"ok: {total} checks\n")
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbita",
        description="Spherical nilpotent orbits from weighted Dynkin diagrams.",
        epilog=NODE_ORDER,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def typed(name, help_, labels=False):
        p = sub.add_parser(name, help=help_, epilog=NODE_ORDER, formatter_class=argparse.RawDescriptionHelpFormatter)
        p.add_argument("--type", required=True, choices=TYPES)
        p.add_argument("--rank", type=int, help="rank (required for A, B, C, D)")
        if labels:
            p.add_argument("--labels", required=True, help="comma-separated node labels m1,...,mr")
            p.add_argument("--format", choices=("text", "json"), default="text")
        else:
            p.add_argument("--format", choices=("text", "json", "tsv"), default="text")
        return p

    typed("analyze", "grading, Levi, slice and action data for one diagram", labels=True).set_defaults(func=cmd_analyze)
    typed("list", "spherical nilpotent orbits of one type").set_defaults(func=cmd_list)
    typed("minimal", "the minimal nilpotent orbit").set_defaults(func=cmd_minimal)

    t = sub.add_parser("tables", help="write one TSV table per type and rank")
    t.add_argument("--out", required=True)
    t.add_argument("--max-rank", type=int, default=12)
    t.set_defaults(func=cmd_tables)

    v = sub.add_parser("verify", help="run the self-check suite")
    v.add_argument("--only", action="append", choices=sorted(CHECKS), help="run only this check (repeatable)")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        sys.stderr.write(f"orbita: error: {exc}\n")
        return 2
    except OrbitaError as exc:
        sys.stderr.write(f"orbita: internal failure: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
