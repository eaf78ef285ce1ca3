"""Command-line front end: ``ratlink <command> ...``.

Exit status is 0 on success, 1 when a library precondition fails and 2 for
usage errors. Output is deterministic for fixed arguments.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Any, Sequence

from .counting import compare_counts
from .errors import DomainError
from .fertility import (
    Catalog,
    default_catalog,
    fertility_number,
    generate_rational_classes,
    is_fertile,
    load_catalog,
    rational_fertility_number,
    trunk,
)
from .frac import LinkClass, canonical_word, classify, format_word, parse_word
from .resultants import resultant_distribution
from .rewrite import normalize


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _word(text: str):
    try:
        return parse_word(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--mirror-distinct", action="store_true",
                        help="keep a link and its mirror image apart")
    common.add_argument("--catalog", metavar="PATH", help="catalog CSV replacing the embedded one")

    p = _Parser(prog="ratlink", description="Rational links, their resultants and fertility.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("classify", parents=[common], help="classify N[word]")
    s.add_argument("word", type=_word)
    s.add_argument("--trace", action="store_true", help="show the rewrite trace to one-signed form")

    s = sub.add_parser("resultants", parents=[common], help="resultant distribution of a shadow")
    s.add_argument("word", type=_word)
    s.add_argument("--distinct", action="store_true", help="list distinct classes without counts")

    s = sub.add_parser("fertility", parents=[common], help="fertility number F")
    s.add_argument("word", type=_word)

    s = sub.add_parser("frn", parents=[common], help="rational fertility number")
    s.add_argument("word", type=_word)
    s.add_argument("--max-crossing", type=int, default=12)

    s = sub.add_parser("trunk", parents=[common], help="members of a trunk")
    s.add_argument("length", type=int)
    s.add_argument("--components", type=int, choices=(1, 2))

    s = sub.add_parser("counts", parents=[common], help="closed-form counts against enumeration")
    s.add_argument("kind", choices=("torus", "even-even", "even-odd", "three"))
    s.add_argument("args", type=int, nargs="+")

    s = sub.add_parser("table", parents=[common], help="fertility table")
    s.add_argument("--components", type=int, choices=(1, 2))
    s.add_argument("--max-crossing", type=int,
                   help="tabulate every rational class up to this crossing number instead of the catalog")

    s = sub.add_parser("verify-paper", parents=[common], help="run the acceptance checks")
    s.add_argument("--slow", action="store_true", help="include the exhaustive boundary sweeps")
    s.add_argument("--only", type=int, nargs="+", metavar="N")
    return p


# --- output --------------------------------------------------------------

def _emit(data: Any, fmt: str, out) -> None:
    """Scalars print bare; dicts as one row; lists of dicts as a table."""
    if fmt == "json":
        out.write(json.dumps(data, indent=2) + "\n")
        return
    rows = data if isinstance(data, list) else [data] if isinstance(data, dict) else None
    if rows is None:
        out.write(f"{data}\n")
        return
    if not rows:
        return
    cols = list(rows[0])
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        out.write(buf.getvalue())
        return
    cells = [[str(r[c]) for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    out.write("  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip() + "\n")
    for row in cells:
        out.write("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() + "\n")


def _class_row(cls: LinkClass, catalog: Catalog, mirror_distinct: bool) -> dict:
    return {
        "p": cls.p,
        "q": cls.q_chiral if mirror_distinct else cls.q_amphi,
        "components": cls.components,
        "crossing": cls.crossing_number,
        "name": catalog.name_of(cls),
    }


# --- commands ------------------------------------------------------------

def _cmd_classify(a, catalog, out):
    cls = classify(a.word)
    row = _class_row(cls, catalog, a.mirror_distinct)
    if not a.trace:
        return _emit(row, a.format, out)
    trace = normalize(a.word).trace
    if a.format == "json":
        return _emit({**row, "trace": [list(w) for w in trace]}, "json", out)
    _emit(row, a.format, out)
    _emit([{"step": i, "word": format_word(w)} for i, w in enumerate(trace)], a.format, out)


def _cmd_resultants(a, catalog, out):
    dist = resultant_distribution(a.word)
    rows = dist.rows(mirror_identified=not a.mirror_distinct, namer=catalog.name_of)
    if a.distinct:
        rows = [{k: v for k, v in r.items() if k != "count"} for r in rows]
    _emit(rows, a.format, out)


def _cmd_fertility(a, catalog, out):
    f = fertility_number(a.word)
    if a.format == "text":
        return _emit(f, "text", out)
    cls = classify(a.word)
    _emit({"word": format_word(canonical_word(cls)), "name": catalog.name_of(cls),
           "fertility": f, "fertile": is_fertile(a.word)}, a.format, out)


def _cmd_frn(a, catalog, out):
    f = rational_fertility_number(a.word, a.max_crossing)
    if a.format == "text":
        return _emit(f, "text", out)
    cls = classify(a.word)
    _emit({"word": format_word(canonical_word(cls)), "name": catalog.name_of(cls),
           "max_crossing": a.max_crossing, "rational_fertility": f}, a.format, out)


def _cmd_trunk(a, catalog, out):
    t = trunk(a.length)
    words = t.with_components(a.components) if a.components else t.members
    rows = []
    for w in words:
        cls = classify(w)
        rows.append({"word": format_word(w), "name": catalog.name_of(cls),
                     "components": cls.components, "crossing": cls.crossing_number,
                     "fertility": fertility_number(w)})
    _emit(rows, a.format, out)


def _cmd_counts(a, catalog, out):
    _emit(compare_counts(a.kind, a.args), a.format, out)


def _cmd_table(a, catalog, out):
    if a.max_crossing is not None:
        classes = generate_rational_classes(a.max_crossing, a.components)
        items = [(catalog.name_of(c), canonical_word(c), c, None) for c in classes]
    else:
        items = [(e.name, e.word, e.link_class, e.fertility) for e in catalog
                 if a.components is None or e.components == a.components]
    rows = []
    for name, word, cls, listed in items:
        row = _class_row(cls, catalog, a.mirror_distinct)
        row["name"] = name
        row["word"] = format_word(word)
        row["fertility"] = fertility_number(word)
        if a.max_crossing is None:
            row["listed"] = "" if listed is None else listed
        rows.append(row)
    rows.sort(key=lambda r: (r["crossing"], r["p"], r["q"]))
    _emit(rows, a.format, out)


def _cmd_verify(a, catalog, out) -> int:
    from .verify import run_checks

    results = run_checks(slow=a.slow, only=a.only)
    if a.format == "text":
        for r in results:
            out.write(r.line() + "\n")
        passed = sum(r.passed for r in results)
        out.write(f"{passed}/{len(results)} checks passed\n")
    else:
        _emit([{"check": r.number, "title": r.title, "status": "PASS" if r.passed else "FAIL",
                "detail": r.detail} for r in results], a.format, out)
    return 0 if all(r.passed for r in results) else 1


COMMANDS = {
    "classify": _cmd_classify,
    "resultants": _cmd_resultants,
    "fertility": _cmd_fertility,
    "frn": _cmd_frn,
    "trunk": _cmd_trunk,
    "counts": _cmd_counts,
    "table": _cmd_table,
    "verify-paper": _cmd_verify,
}


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        err.write(f"{parser.prog}: usage error: {exc}\n")
        return 2
    try:
        catalog = load_catalog(args.catalog) if args.catalog else default_catalog()
        status = COMMANDS[args.command](args, catalog, out)
    except DomainError as exc:
        err.write(f"{parser.prog}: {type(exc).__name__}: {exc}\n")
        return 1
    except OSError as exc:
        err.write(f"{parser.prog}: {exc}\n")
        return 1
    return status or 0


def main() -> None:
    sys.exit(run())
