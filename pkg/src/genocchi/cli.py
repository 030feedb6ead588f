"""Command-line front end.

    genocchi numbers   --family genocchi --max 8
    genocchi poly      --family euler --max 4
    genocchi expand    --poly "0,1" --basis genocchi
    genocchi matrix    --n 3 --format json
    genocchi integrals --kind T --m-max 4 --n-max 4 --format csv
    genocchi verify    --suite all --max-n 12 --report report.json
    genocchi verify    --suite all --max-n 12 --ledger discrepancy_ledger.json

Exit codes: 0 success (every identity has an exact reading), 1 a
verified identity has no exact reading, 2 usage or I/O error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import __version__
from .basis import BasisKind, genocchi_change_matrix, matrix_discrepancies, to_basis
from .exact_arith import format_rational
from .identities import SUITES, all_identities_hold, summarize, verify_suite
from .integrals import moment_grid
from .polynomial import Polynomial
from .sequences import FAMILIES, number, poly, published_poly_discrepancies

FORMATS = ("plain", "json", "csv", "latex")


def _human(q: Fraction) -> str:
    return format_rational(q)


def _machine(q: Fraction) -> str:
    return format_rational(q, machine=True)


def _latex(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    sign = "-" if q < 0 else ""
    return f"{sign}\\frac{{{abs(q.numerator)}}}{{{q.denominator}}}"


def _json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _latex_table(header: list[str], rows: list[list[str]]) -> str:
    lines = [r"\begin{tabular}{" + "c" * len(header) + "}", " & ".join(header) + r" \\", r"\hline"]
    lines += [" & ".join(r) + r" \\" for r in rows]
    lines.append(r"\end{tabular}")
    return "\n".join(lines) + "\n"


def cmd_numbers(family: str, max_n: int, fmt: str) -> str:
    values = [(n, number(family, n)) for n in range(max_n + 1)]
    if fmt == "json":
        return _json({"family": family, "values": [{"n": n, "value": _machine(v)} for n, v in values]})
    if fmt == "csv":
        return _csv(["n", "value"], [[n, _machine(v)] for n, v in values])
    if fmt == "latex":
        return _latex_table(["n", "value"], [[str(n), _latex(v)] for n, v in values])
    return "".join(f"{n}\t{_human(v)}\n" for n, v in values)


def cmd_poly(family: str, max_n: int, fmt: str) -> str:
    polys = [(n, poly(family, n)) for n in range(max_n + 1)]
    if fmt == "json":
        return _json(
            {"family": family, "polynomials": [{"n": n, "coefficients": p.to_strings()} for n, p in polys]}
        )
    if fmt == "csv":
        return _csv(["n", "coefficients"], [[n, ",".join(p.to_strings())] for n, p in polys])
    if fmt == "latex":
        return _latex_table(["n", "polynomial"], [[str(n), f"${p}$"] for n, p in polys])
    return "".join(f"{n}\t{p}\n" for n, p in polys)


def cmd_expand(p: Polynomial, basis: str, fmt: str) -> str:
    e = to_basis(p, basis)
    rows = e.indexed()
    if fmt == "json":
        return _json(
            {
                "basis": e.kind.value,
                "start": e.start,
                "input": p.to_strings(),
                "coefficients": [_machine(c) for _, c in rows],
            }
        )
    if fmt == "csv":
        return _csv(["k", "coefficient"], [[k, _machine(c)] for k, c in rows])
    if fmt == "latex":
        return _latex_table(["k", "a_k"], [[str(k), _latex(c)] for k, c in rows])
    return "".join(f"a_{k} = {_human(c)}\n" for k, c in rows)


def cmd_matrix(n: int, fmt: str) -> str:
    m = genocchi_change_matrix(n)
    if fmt == "json":
        out = m.to_json()
        out["metadata"] = {"discrepancies": matrix_discrepancies(m)}
        return _json(out)
    if fmt == "csv":
        return _csv([f"G_{j}" for j in range(1, n + 2)], [[_machine(v) for v in row] for row in m.entries])
    if fmt == "latex":
        return m.to_latex() + "\n"
    width = max(len(_human(v)) for row in m.entries for v in row)
    return "".join(" ".join(_human(v).rjust(width) for v in row) + "\n" for row in m.entries)


def cmd_integrals(kind: str, m_max: int, n_max: int, fmt: str) -> str:
    cells = moment_grid(kind, m_max, n_max)
    if fmt == "json":
        return _json({"kind": kind, "cells": [{"m": m, "n": n, "value": _machine(v)} for m, n, v in cells]})
    if fmt == "csv":
        return _csv(["m", "n", "value"], [[m, n, _machine(v)] for m, n, v in cells])
    if fmt == "latex":
        return _latex_table(["m", "n", "value"], [[str(m), str(n), _latex(v)] for m, n, v in cells])
    return "".join(f"{m}\t{n}\t{_human(v)}\n" for m, n, v in cells)


def build_report(suite: str, max_n: int) -> dict:
    reports = verify_suite(suite, max_n)
    summary = summarize(reports)
    discrepancies = published_poly_discrepancies()
    if max_n >= 3:
        discrepancies += matrix_discrepancies(genocchi_change_matrix(3))
    return {
        "metadata": {"tool": "genocchi", "version": __version__, "suite": suite, "max_n": max_n},
        "reports": [r.to_json() for r in reports],
        "summary": summary,
        "all_identities_hold": all_identities_hold(summary),
        "discrepancies": discrepancies,
    }


LEDGER_KEYS = ("metadata", "summary", "all_identities_hold", "discrepancies")


def ledger_of(report: dict) -> dict:
    """The committed discrepancy ledger: a report without its per-n rows."""
    return {k: report[k] for k in LEDGER_KEYS}


def _plain_summary(report: dict) -> str:
    lines = []
    for identity, entry in report["summary"].items():
        exact = ", ".join(entry["exact_readings"]) or "none"
        failed = ", ".join(f"{r} (n={n})" for r, n in entry["failed_readings"].items())
        line = f"{identity}: exact [{exact}]"
        if failed:
            line += f"; failing from {failed}"
        if entry["not_applicable_readings"]:
            line += f"; not applicable [{', '.join(entry['not_applicable_readings'])}]"
        lines.append(line)
    return "\n".join(lines) + "\n"


def _non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="genocchi", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=FORMATS, default="plain")
        p.add_argument("--output", "-o", help="write to this file instead of standard output")

    p = sub.add_parser("numbers", help="table of Bernoulli/Euler/Genocchi numbers")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--max", dest="max_n", type=_non_negative, default=20)
    common(p)

    p = sub.add_parser("poly", help="table of Bernoulli/Euler/Genocchi polynomials")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--max", dest="max_n", type=_non_negative, default=10)
    common(p)

    p = sub.add_parser("expand", help="expand a polynomial in another basis")
    p.add_argument("--poly", required=True, help='ascending coefficients, e.g. "-1,2" for 2x-1')
    p.add_argument("--basis", choices=[k.value for k in BasisKind], required=True)
    common(p)

    p = sub.add_parser("matrix", help="Genocchi change-of-basis matrix")
    p.add_argument("--n", type=_non_negative, required=True)
    common(p)

    p = sub.add_parser("integrals", help="moment integral grids")
    p.add_argument("--kind", choices=("T", "T-closed", "I", "J"), required=True)
    p.add_argument("--m-max", type=_non_negative, default=5)
    p.add_argument("--n-max", type=_non_negative, default=5)
    common(p)

    p = sub.add_parser("verify", help="verify the identity registry")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--max-n", type=_non_negative, default=12)
    p.add_argument("--report", help="write the JSON report here (default: standard output)")
    p.add_argument("--ledger", help="also write the discrepancy ledger (summary and discrepancies) here")
    p.add_argument("--format", choices=("json", "plain"), default="json")
    return parser


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _bind_poly_value(argv: list[str]) -> list[str]:
    # "--poly -1,2" would otherwise be read as an unknown option
    out = []
    it = iter(argv)
    for tok in it:
        if tok == "--poly":
            nxt = next(it, None)
            out.append(tok if nxt is None else f"--poly={nxt}")
        else:
            out.append(tok)
    return out


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(_bind_poly_value(sys.argv[1:] if argv is None else list(argv)))
    status = 0
    try:
        if args.command == "numbers":
            text = cmd_numbers(args.family, args.max_n, args.format)
        elif args.command == "poly":
            text = cmd_poly(args.family, args.max_n, args.format)
        elif args.command == "expand":
            try:
                p = Polynomial.parse(args.poly)
            except ValueError as exc:
                parser.error(f"--poly: {exc}")
            text = cmd_expand(p, args.basis, args.format)
        elif args.command == "matrix":
            text = cmd_matrix(args.n, args.format)
        elif args.command == "integrals":
            if args.kind.startswith("T") and args.m_max < 1:
                parser.error("--m-max must be at least 1 for T")
            text = cmd_integrals(args.kind, args.m_max, args.n_max, args.format)
        else:
            report = build_report(args.suite, args.max_n)
            status = 0 if report["all_identities_hold"] else 1
            if args.ledger is not None:
                _emit(_json(ledger_of(report)), args.ledger)
            if args.report is not None:
                _emit(_json(report), args.report)
                text = _plain_summary(report)
            else:
                text = _json(report) if args.format == "json" else _plain_summary(report)
            args.output = None
        _emit(text, getattr(args, "output", None))
    except OSError as exc:
        print(f"genocchi: {exc}", file=sys.stderr)
        return 2
    return status


if __name__ == "__main__":
    sys.exit(main())
