"""Command-line interface: skewbrace <subcommand> ..."""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .brace import brace_from_tables, isomorphism
from .catalog import Catalog, CatalogEntry, parse_catalog, parse_raw, render_catalog
from .enumeration import brute_force_oracle, enumerate_braces
from .errors import OrderTooLarge, ParseError, SkewBraceError, UnknownCheckId, ValidationError
from .report import build_report
from .theorems import REGISTRY, CellResult, get_check, run_cell, summarize
from .ybe import export_solution, solution_from_brace, verify_solution

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _load(path: str) -> Catalog:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_catalog(text)


def _entry(cat: Catalog, entry_id: str) -> CatalogEntry:
    try:
        return cat.by_id(entry_id)
    except KeyError:
        raise UsageError(f"no brace with id {entry_id!r}") from None


def _write(path: str | None, data: str | bytes, out) -> None:
    if path is None or path == "-":
        out.write(data if isinstance(data, str) else data.decode())
    elif isinstance(data, bytes):
        Path(path).write_bytes(data)
    else:
        Path(path).write_text(data)


# subcommands ------------------------------------------------------------------

def cmd_validate(args, out) -> int:
    try:
        raw = parse_raw(Path(args.file).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc.strerror}") from None
    bad = 0
    for r in raw:
        try:
            r.build()
            out.write(f"{r.id}: ok\n")
        except ValidationError as exc:
            bad += 1
            out.write(f"{r.id}: invalid ({exc.reason})\n")
    out.write(f"{len(raw) - bad}/{len(raw)} entries valid\n")
    return EXIT_FAIL if bad else EXIT_OK


def cmd_analyze(args, out) -> int:
    cat = _load(args.file)
    entries = [_entry(cat, args.brace)] if args.brace else list(cat)
    reports = [build_report(e.brace, e.id) for e in entries]
    if args.json:
        doc = {"reports": [r.to_dict() for r in reports]}
        out.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    else:
        for r in reports:
            out.write(r.render_text())
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    entries: list[CatalogEntry] = []
    status = EXIT_OK
    for n in args.order:
        cat = enumerate_braces(n)
        line = f"order {n}: {len(cat)} braces"
        if args.oracle:
            agree = brute_force_oracle(n).keys() == cat.keys()
            line += ", oracle " + ("agrees" if agree else "DISAGREES")
            if not agree:
                status = EXIT_FAIL
        out.write(line + "\n")
        entries.extend(cat)
    if args.output:
        _write(args.output, render_catalog(Catalog(entries)), out)
    return status


def _run_chunk(payload: tuple[list[tuple[str, list, list]], list[str]]) -> list[CellResult]:
    items, ids = payload
    checks = [get_check(i) for i in ids]
    cells = []
    for bid, add, mul in items:
        B = brace_from_tables(add, mul, check=False)
        cells.extend(run_cell(c, bid, B) for c in checks)
    return cells


def cmd_check(args, out) -> int:
    ids = list(args.check) if args.check else list(REGISTRY)
    for i in ids:
        get_check(i)
    cat = _load(args.file)
    jobs = max(1, args.jobs)
    if jobs == 1:
        cells = _run_chunk(([(e.id, e.brace.add.table, e.brace.mul.table) for e in cat], ids))
    else:
        items = [(e.id, e.brace.add.table, e.brace.mul.table) for e in cat]
        chunks = [(items[k::jobs], ids) for k in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_run_chunk, chunks))
        by_key = {(c.brace_id, c.check_id): c for part in parts for c in part}
        cells = [by_key[(e.id, i)] for e in cat for i in ids]
    summary = summarize(cells, ids)
    failures = sum(len(s.failures) for s in summary)
    if args.json:
        doc = {
            "checks": [
                {
                    "id": s.check_id,
                    "statement": REGISTRY[s.check_id].statement,
                    "applicable": s.applicable,
                    "passed": s.passed,
                    "skipped": s.skipped,
                    "failures": [{"brace": f.brace_id, "witness": f.witness.as_dict()} for f in s.failures],
                }
                for s in summary
            ],
            "braces": len(cat),
            "failures": failures,
        }
        out.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    else:
        width = max(len(i) for i in ids)
        for s in summary:
            mark = "ok  " if not s.failures else "FAIL"
            out.write(f"{mark} {s.check_id:<{width}}  applicable {s.applicable:4d}  passed {s.passed:4d}  "
                      f"skipped {s.skipped:4d}  failed {len(s.failures):4d}\n")
            for f in s.failures:
                w = f.witness
                elems = " ".join("{" + ",".join(map(str, e)) + "}" for e in w.elements)
                out.write(f"     {f.brace_id}: {w.tag} {elems}\n")
        out.write(f"{len(summary)} checks over {len(cat)} braces, {failures} failures\n")
    return EXIT_FAIL if failures else EXIT_OK


def cmd_ybe(args, out) -> int:
    cat = _load(args.file)
    r = solution_from_brace(_entry(cat, args.brace).brace)
    status = EXIT_OK
    if args.verify:
        rep = verify_solution(r)
        flags = ("bijective", "braid", "left_nondegenerate", "right_nondegenerate")
        msg = ", ".join(f"{k}={'yes' if getattr(rep, k) else 'no'}" for k in flags)
        # keep stdout clean when the solution itself goes to stdout
        stream = args.err if args.output in (None, "-") else out
        stream.write(msg + "\n")
        if not rep.ok:
            status = EXIT_FAIL
    _write(args.output, export_solution(r, args.format), out)
    return status


def cmd_iso(args, out) -> int:
    cat = _load(args.file)
    a = _entry(cat, args.id_a).brace
    b = _entry(cat, args.id_b).brace
    phi = isomorphism(a, b)
    if phi is None:
        out.write("not isomorphic\n")
        return EXIT_FAIL
    out.write("isomorphic: " + " ".join(f"{x}->{y}" for x, y in enumerate(phi)) + "\n")
    return EXIT_OK


# entry points -----------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def make_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="skewbrace", description="Finite skew brace toolkit.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("validate", help="check the brace axioms for every catalog entry")
    v.add_argument("file")
    v.set_defaults(func=cmd_validate)

    a = sub.add_parser("analyze", help="classification report")
    a.add_argument("file")
    a.add_argument("--brace")
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_analyze)

    e = sub.add_parser("enumerate", help="all braces of the given orders, up to isomorphism")
    e.add_argument("--order", type=int, nargs="+", required=True)
    e.add_argument("--oracle", action="store_true", help="compare with the brute-force enumeration")
    e.add_argument("-o", "--output")
    e.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("check-theorems", help="run the structural checks over a catalog")
    c.add_argument("file")
    c.add_argument("--check", nargs="+", action="extend")
    c.add_argument("--jobs", type=int, default=1)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_check)

    y = sub.add_parser("ybe", help="export the Yang-Baxter solution of a brace")
    y.add_argument("file")
    y.add_argument("--brace", required=True)
    y.add_argument("--verify", action="store_true")
    y.add_argument("--format", choices=("pairs-text", "matrix-text"), default="pairs-text")
    y.add_argument("-o", "--output")
    y.set_defaults(func=cmd_ybe)

    i = sub.add_parser("iso", help="test two catalog entries for isomorphism")
    i.add_argument("file")
    i.add_argument("id_a")
    i.add_argument("id_b")
    i.set_defaults(func=cmd_iso)
    return p


def run_cli(argv: list[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = make_parser().parse_args(argv)
        args.err = err
        return args.func(args, out)
    except (UsageError, ParseError, UnknownCheckId, OrderTooLarge) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except ValidationError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_FAIL
    except SkewBraceError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_FAIL


def main() -> None:
    sys.exit(run_cli())
