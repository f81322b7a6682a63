"""Command-line front end: ``cycone analyze | survey | catalog | selftest``.

Exit codes: 0 success, 1 usage error, 2 domain or invariant error.  Data
output is deterministic (stable ordering, no timestamps); ``--meta`` adds a
provenance block separately.  ``CYCONE_WORKERS`` sets the survey
parallelism; results are assembled in input order, so the output is
identical for any worker count.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from datetime import datetime, timezone

from . import report as report_mod
from . import selftest as selftest_mod
from .bundles import BundleSpec, catalog_entries, h0_anticanonical
from .chow import split_types
from .errors import CyconeError, DomainError
from .report import (
    ANALYZE_EXTRA_COLUMNS,
    SURVEY_COLUMNS,
    build_report,
    render_text_report,
    survey_row,
)

DEFAULT_MAX_RANGE = 12


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2; we use 1
        raise UsageError(message)


def _parse_ints(text: str, count: int, what: str) -> tuple[int, ...]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != count:
        raise UsageError(f"{what} needs {count} comma-separated integers, got {text!r}")
    try:
        return tuple(int(p) for p in parts)
    except ValueError as exc:
        raise UsageError(f"{what}: not integers: {text!r}") from exc


def _spec_from_args(args) -> BundleSpec:
    if args.split is not None:
        spec = BundleSpec.split(*_parse_ints(args.split, 3, "--split"))
    elif args.named is not None:
        try:
            spec = BundleSpec.named(args.named)
        except DomainError as exc:
            raise UsageError(str(exc)) from exc
    else:
        spec = BundleSpec.chern_only(*_parse_ints(args.chern, 2, "--chern"))
    if args.twist:
        spec = spec.twist(args.twist)
    return spec


def _meta_block() -> dict:
    from . import __version__

    return {
        "tool": "cycone",
        "version": __version__,
        "generated_at": datetime.now(timezone.utc).isoformat(),
    }


def _emit(text: str, out_path: str | None):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def cmd_analyze(args) -> int:
    spec = _spec_from_args(args)
    rep = build_report(spec)
    if args.json:
        meta = _meta_block() if args.meta else None
        _emit(report_mod.report_to_json(rep, meta), args.out)
    elif args.tsv:
        header = "\t".join(SURVEY_COLUMNS + ANALYZE_EXTRA_COLUMNS)
        row = "\t".join(report_mod.analyze_row_cells(rep))
        lines = []
        if args.meta:
            meta = _meta_block()
            lines.append(f"# generated_at={meta['generated_at']} version={meta['version']}")
        lines += [header, row]
        _emit("\n".join(lines), args.out)
    else:
        _emit(render_text_report(rep), args.out)
    return 0


def _parse_filters(filters):
    keyed, flags = {}, []
    for f in filters or ():
        if "=" in f:
            key, _, value = f.partition("=")
            key = key.strip()
            if key not in ("c1", "c2", "gamma"):
                raise UsageError(f"unknown filter key {key!r}")
            try:
                keyed[key] = int(value)
            except ValueError as exc:
                raise UsageError(f"filter {f!r}: value must be an integer") from exc
        elif f in ("nef", "ample", "big", "tab"):
            flags.append(f)
        else:
            raise UsageError(f"unknown filter {f!r}")
    return keyed, flags


def _row_passes(row, keyed, flags) -> bool:
    values = {"c1": row.c1, "c2": row.c2, "gamma": row.gamma}
    if any(values[k] != v for k, v in keyed.items()):
        return False
    checks = {
        "nef": row.nef is True,
        "ample": row.ample is True,
        "big": row.big is True,
        "tab": row.tab_admissible,
    }
    return all(checks[f] for f in flags)


def _worker_count() -> int:
    raw = os.environ.get("CYCONE_WORKERS", "")
    try:
        return max(1, int(raw)) if raw else 1
    except ValueError:
        raise UsageError(f"CYCONE_WORKERS must be an integer, got {raw!r}")


def cmd_survey(args) -> int:
    if args.emin > args.emax:
        raise UsageError("--emin must not exceed --emax")
    if args.emax - args.emin > args.max_range:
        raise UsageError(
            f"range size {args.emax - args.emin} exceeds the cap {args.max_range}"
        )
    keyed, flags = _parse_filters(args.filter)
    types = split_types(args.emin, args.emax)  # already lexicographically sorted
    workers = _worker_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(survey_row, types))
    else:
        rows = [survey_row(t) for t in types]
    rows = [r for r in rows if _row_passes(r, keyed, flags)]
    lines = []
    if args.meta:
        meta = _meta_block()
        if args.json:
            lines.append(json.dumps({"meta": meta}))
        else:
            lines.append(f"# generated_at={meta['generated_at']} version={meta['version']}")
    if args.json:
        lines += [json.dumps(r.to_json_dict()) for r in rows]
    else:
        lines.append("\t".join(SURVEY_COLUMNS))
        lines += ["\t".join(r.cells()) for r in rows]
    _emit("\n".join(lines), args.out)
    return 0


def cmd_catalog(args) -> int:
    entries = catalog_entries()
    if args.json:
        payload = []
        for e in entries:
            spec = BundleSpec.named(e.name)
            payload.append(
                {
                    "name": e.name,
                    "c1": e.chern.c1,
                    "c2": e.chern.c2,
                    "gamma": e.chern.gamma,
                    "splitting_type": list(e.splitting_type),
                    "strategy": e.strategy,
                    "h0_minus_k": h0_anticanonical(spec).value,
                }
            )
        _emit(json.dumps(payload, indent=2), args.out)
        return 0
    lines = ["name\tc1\tc2\tgamma\tsplitting_type\tstrategy\th0_minus_k"]
    for e in entries:
        spec = BundleSpec.named(e.name)
        h0 = h0_anticanonical(spec).value
        stype = ",".join(str(x) for x in e.splitting_type)
        lines.append(
            f"{e.name}\t{e.chern.c1}\t{e.chern.c2}\t{e.chern.gamma}"
            f"\t({stype})\t{e.strategy}\t{h0 if h0 is not None else 'n/a'}"
        )
    _emit("\n".join(lines), args.out)
    return 0


def cmd_selftest(args) -> int:
    failures = selftest_mod.run_selftest()
    return 2 if failures else 0


def build_parser() -> _Parser:
    parser = _Parser(
        prog="cycone",
        description=(
            "Exact invariants and Kahler-cone verdicts for Calabi-Yau "
            "hypersurfaces in P2-bundles over P2."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser(
        "analyze",
        help="full report for one bundle spec",
        epilog=(
            "TSV columns: "
            + " ".join(SURVEY_COLUMNS + ANALYZE_EXTRA_COLUMNS)
            + ". Tri-state columns print true/false/unknown."
        ),
    )
    spec_group = analyze.add_mutually_exclusive_group(required=True)
    spec_group.add_argument("--split", metavar="E1,E2,E3", help="split bundle exponents")
    spec_group.add_argument("--named", metavar="ID", help="catalog id or line-bundle sum")
    spec_group.add_argument("--chern", metavar="C1,C2", help="Chern numbers only")
    analyze.add_argument("--twist", type=int, default=0, help="tensor E by O(t) first")
    fmt = analyze.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="emit the JSON report")
    fmt.add_argument("--tsv", action="store_true", help="emit a one-row TSV report")
    analyze.add_argument("--meta", action="store_true", help="add provenance metadata")
    analyze.add_argument("--out", metavar="FILE", help="write output to FILE")
    analyze.set_defaults(func=cmd_analyze)

    survey = sub.add_parser(
        "survey",
        help="sweep all split types in a range",
        epilog=(
            "TSV columns: "
            + " ".join(SURVEY_COLUMNS)
            + ". Tri-state columns print true/false/unknown; rows are sorted by (e1, e2, e3). "
            "CYCONE_WORKERS sets the parallelism without changing the output."
        ),
    )
    survey.add_argument("--emin", type=int, required=True)
    survey.add_argument("--emax", type=int, required=True)
    survey.add_argument(
        "--filter",
        action="append",
        metavar="F",
        help="c1=N, c2=N, gamma=N, or one of: nef ample big tab (repeatable)",
    )
    survey.add_argument(
        "--max-range", type=int, default=DEFAULT_MAX_RANGE,
        help=f"cap on emax - emin (default {DEFAULT_MAX_RANGE})",
    )
    survey.add_argument("--json", action="store_true", help="JSON-lines instead of TSV")
    survey.add_argument("--meta", action="store_true", help="add provenance metadata")
    survey.add_argument("--out", metavar="FILE")
    survey.set_defaults(func=cmd_survey)

    catalog = sub.add_parser("catalog", help="list the named bundles")
    catalog.add_argument("--json", action="store_true")
    catalog.add_argument("--out", metavar="FILE")
    catalog.set_defaults(func=cmd_catalog)

    selftest = sub.add_parser("selftest", help="run the built-in regression checks")
    selftest.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"cycone: usage error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"cycone: cannot write output: {exc}", file=sys.stderr)
        return 1
    except CyconeError as exc:
        print(f"cycone: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
