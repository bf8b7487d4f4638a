"""Command-line front end.

Exit status: 0 on success, 1 when a computation ran but disagreed with its
expectation (failed axiom, catalog mismatch, oracle failure), 2 on usage or
input errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from .solver import b_norm_sq, classify, classify_catalog, tension_coeff
from .triad import InvalidTriadError, Kind, SymmetricTriad1D, fundamental_cell, validate_kind

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class TriadDoc(BaseModel):
    model_config = ConfigDict(extra="forbid")

    kind: Optional[Kind] = None
    m1: int = Field(0, ge=0)
    m2: int = Field(0, ge=0)
    n1: int = Field(0, ge=0)
    n2: int = Field(0, ge=0)


def _fmt(x: float) -> str:
    return format(x, ".17g")


# -- input ------------------------------------------------------------------

def _load_doc(path: str) -> dict:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise UsageError(f"{path}: expected a JSON object")
    # documents emitted by solve/classify carry the triad under "triad"
    return doc["triad"] if "triad" in doc else doc


def _parse_triad_doc(args) -> TriadDoc:
    if args.input:
        raw = _load_doc(args.input)
        try:
            return TriadDoc.model_validate(raw)
        except ValidationError as exc:
            lines = [f"{'.'.join(str(p) for p in e['loc']) or '<root>'}: {e['msg']}" for e in exc.errors()]
            raise UsageError(f"{args.input}: invalid triad document\n  " + "\n  ".join(lines)) from None
    if args.kind is None and not any((args.m1, args.m2, args.n1, args.n2)):
        raise UsageError("give a triad with --kind/--m1..--n2 or --input")
    return TriadDoc(kind=args.kind, m1=args.m1, m2=args.m2, n1=args.n1, n2=args.n2)


def _triad(args) -> SymmetricTriad1D:
    doc = _parse_triad_doc(args)
    try:
        if doc.kind is None:
            return SymmetricTriad1D.infer(doc.m1, doc.m2, doc.n1, doc.n2)
        return SymmetricTriad1D.create(doc.kind, doc.m1, doc.m2, doc.n1, doc.n2)
    except InvalidTriadError as exc:
        raise UsageError(str(exc)) from None


# -- output -----------------------------------------------------------------

def _csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_fmt(v) if isinstance(v, float) else v for v in row])
    return buf.getvalue()


def _emit(args, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _json(doc) -> str:
    return json.dumps(doc, indent=2)


# -- subcommands --------------------------------------------------------------

def cmd_validate(args) -> int:
    doc = _parse_triad_doc(args)
    if doc.kind is None:
        raise UsageError("validate needs an explicit --kind")
    try:
        report = validate_kind(doc.kind, doc.m1, doc.m2, doc.n1, doc.n2)
    except InvalidTriadError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        out = _json(report.to_dict())
    elif args.format == "csv":
        out = _csv(["condition", "passed", "witness"],
                   [[c.condition, c.passed, c.witness or ""] for c in report.checks])
    else:
        lines = [f"{'ok  ' if c.passed else 'FAIL'} {c.condition}" + (f": {c.witness}" if c.witness else "")
                 for c in report.checks]
        out = "\n".join([report.subject] + lines + ["valid" if report.passed else "invalid"])
    _emit(args, out)
    return EXIT_OK if report.passed else EXIT_MISMATCH


def _result_rows(result) -> list[list]:
    rows = [["harmonic", *result.harmonic_t.to_dict().values(), float(result.harmonic_t)]]
    for x in result.biharmonic_t:
        role = "proper" if x in result.proper_biharmonic_t else "biharmonic"
        rows.append([role, *x.to_dict().values(), float(x)])
    return rows


def cmd_solve(args) -> int:
    result = classify(_triad(args))
    doc = result.to_dict()
    if args.command == "solve":
        doc.pop("harmonic_angles_rad")
    if args.format == "json":
        out = _json(doc)
    elif args.format == "csv":
        out = _csv(["role", "p", "q", "d", "r", "value"], _result_rows(result))
    else:
        t = result.triad
        lines = [
            f"triad     {t.kind.value} (m1,m2,n1,n2)={t.mults}",
            f"variable  {result.variable}",
            f"harmonic  {result.harmonic_t}",
            f"biharm.   {', '.join(map(str, result.biharmonic_t)) or '-'}",
            f"proper    {', '.join(map(str, result.proper_biharmonic_t)) or '-'}",
            f"angles    {', '.join(f'{a:.12g}' for a in result.angles_radians) or '-'}",
            f"case      {result.case_label.value}",
        ]
        out = "\n".join(lines)
    _emit(args, out)
    return EXIT_OK


def cmd_catalog(args) -> int:
    try:
        report = classify_catalog(args.max_param)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    doc = report.to_dict()
    if args.format == "json":
        out = _json(doc)
    elif args.format == "csv":
        keys = ["group_g", "group_k1", "group_k2", "kind", "m1", "m2", "n1", "n2", "params",
                "theorem_case", "case"]
        rows = [[json.dumps(r[k]) if k == "params" else r[k] for k in keys] for r in doc["rows"]]
        out = _csv(keys, rows)
    else:
        lines = [f"{len(report.rows)} instances, {doc['families']} families, "
                 f"group sizes {'/'.join(map(str, doc['group_sizes']))}"]
        for g, cases in doc["groups"].items():
            lines.append(f"  ({g}) {', '.join(cases)}")
        for m in doc["mismatches"]:
            lines.append(f"MISMATCH {m['theorem_case']} {m['group_g']}: expected {m['expected']}, got {m['got']}")
        lines.append("pass" if report.passed else "FAIL")
        out = "\n".join(lines)
    _emit(args, out)
    return EXIT_OK if report.passed else EXIT_MISMATCH


def cmd_oracle(args) -> int:
    from .oracle import ResourceError, run_oracle

    try:
        report = run_oracle(args.case, args.b, args.c, samples=args.samples, seed=args.seed,
                            tol=args.tolerance, size_cap=args.size_cap)
    except (ResourceError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        out = _json(report.to_dict())
    elif args.format == "csv":
        keys = ["s", "b_geometric", "b_rules", "tau_geometric", "tau_rules"]
        out = _csv(keys, [[float(d[k]) for k in keys] for d in report.deviations])
    else:
        d = report.to_dict()
        out = "\n".join([
            f"{args.case}(1+{args.b}+{args.c})",
            f"multiplicities  recovered {d['recovered_mults']}  catalog {d['catalog_mults']}",
            f"<alpha,alpha>   {d['alpha_sq']}  (formula {d['formula_alpha_sq']})",
            f"max rel dev     {d['max_rel_dev']:.3g} over {d['samples']} samples (tol {d['tolerance']:g})",
            *([f"error           {d['error']}"] if d["error"] else []),
            "pass" if report.passed else "FAIL",
        ])
    _emit(args, out)
    return EXIT_OK if report.passed else EXIT_MISMATCH


def curve_grid(t: SymmetricTriad1D, points: int) -> np.ndarray:
    """``points`` equally spaced interior points of the fundamental cell."""
    lo, hi = fundamental_cell(t).bounds
    return np.linspace(lo, hi, points + 2)[1:-1]


def cmd_curve(args) -> int:
    t = _triad(args)
    rows = [[float(s), b_norm_sq(t, float(s)), tension_coeff(t, float(s))] for s in curve_grid(t, args.samples)]
    if args.format == "json":
        out = _json({"triad": t.to_dict(), "s_rad": [r[0] for r in rows],
                     "b_norm_sq": [r[1] for r in rows], "tension_coeff": [r[2] for r in rows]})
    else:
        # csv is the natural form for curves, so it is also the default
        out = _csv(["s_rad", "b_norm_sq", "tension_coeff"], rows)
    _emit(args, out)
    return EXIT_OK


# -- parser -----------------------------------------------------------------

def _positive_float(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("must be > 0")
    return v


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hermann-biharmonic",
        description="Harmonic and proper-biharmonic regular orbits of rank-one commutative Hermann actions.")
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="format", action="store_const", const="json")
    fmt.add_argument("--csv", dest="format", action="store_const", const="csv")
    common.add_argument("--out", metavar="PATH", help="write the document here instead of stdout")
    common.add_argument("--seed", type=int, default=0)

    triad = argparse.ArgumentParser(add_help=False)
    triad.add_argument("--kind", type=Kind, choices=list(Kind), metavar="KIND",
                       help="one of " + ", ".join(k.value for k in Kind))
    for name in ("m1", "m2", "n1", "n2"):
        triad.add_argument(f"--{name}", type=int, default=0)
    triad.add_argument("--input", metavar="PATH", help="JSON triad document ('-' for stdin)")

    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("validate", parents=[common, triad], help="check the triad and multiplicity axioms")
    p.set_defaults(func=cmd_validate)
    p = sub.add_parser("solve", parents=[common, triad], help="exact harmonic and biharmonic solutions")
    p.set_defaults(func=cmd_solve)
    p = sub.add_parser("classify", parents=[common, triad], help="solutions, angles and case label")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("catalog", parents=[common], help="classify every catalog family")
    p.add_argument("--max-param", type=int, default=12)
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("oracle", parents=[common], help="matrix-level check of the closed forms")
    p.add_argument("--case", choices=("so", "su"), default="so")
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--samples", type=_positive_int, default=20)
    p.add_argument("--tolerance", type=_positive_float, default=1e-9)
    p.add_argument("--size-cap", type=_positive_int, default=10)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("curve", parents=[common, triad], help="sample |B|^2 and the tension across the cell")
    p.add_argument("--samples", type=_positive_int, default=200)
    p.set_defaults(func=cmd_curve)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
