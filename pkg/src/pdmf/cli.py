"""Command-line surface: fit, arithmetic, curve sampling and validation.

Machine output is deterministic: numbers are rendered with 12 significant
digits (or a fixed decimal count under ``--round``), and curve abscissas are
quantized to the rendering precision before evaluation so an emitted CSV can
be parsed and re-evaluated to the printed grades.

Exit codes: 0 success, 2 usage error, 3 domain/precondition error,
4 parse error.
"""

import argparse
import json
import sys
from pathlib import Path

from .algebra import add, scale, solve_add_equation, sub
from .auxiliary import TANGENT, validate_laf
from .documents import ParsedDocument, load_documents
from .errors import DocumentError, DomainError
from .membership import (
    GPdmf,
    PdmfSpec,
    check_monotone_fuzzy_number,
    membership,
    sample_curve,
)

__all__ = ["main"]


def _fmt(value: float, round_: int | None) -> str:
    value = float(value)
    if value == 0.0:
        value = 0.0  # fold -0.0
    if round_ is None:
        return format(value, ".12g")
    return format(value, f".{round_}f")


def _snap(value: float, round_: int | None) -> float:
    return float(_fmt(value, round_))


def _parameter_doc(number: GPdmf, round_: int | None) -> dict:
    return {
        "a": _snap(number.a, round_),
        "b": _snap(number.b, round_),
        "c": _snap(number.c, round_),
        "mu_left": _snap(number.mu_left, round_),
        "mu_right": _snap(number.mu_right, round_),
    }


def _density_doc(density, round_: int | None) -> dict:
    if hasattr(density, "breakpoints"):
        return {
            "kind": "step",
            "breakpoints": [_snap(z, round_) for z in density.breakpoints],
            "densities": [_snap(d, round_) for d in density.densities],
        }
    return {"kind": "gaussian", "mean": _snap(density.mu, round_)}


def _fit_doc(doc: ParsedDocument, round_: int | None) -> dict:
    if isinstance(doc.number, GPdmf):
        return _parameter_doc(doc.number, round_)
    spec: PdmfSpec = doc.number
    out = {
        "form": doc.form,
        "a": _snap(spec.a, round_),
        "b": _snap(spec.b, round_),
        "c": _snap(spec.c, round_),
        "h": spec.h.kind,
    }
    if spec.h.kind == "quantile":
        out["mu"] = _snap(spec.h.mu, round_)
    out["p_left"] = _density_doc(spec.p_left, round_)
    out["p_right"] = _density_doc(spec.p_right, round_)
    return out


def _load_single(path: str, what: str) -> ParsedDocument:
    docs = load_documents(_read(path), path)
    if len(docs) != 1:
        raise DocumentError(f"{path}: {what} requires exactly one document")
    return docs[0]


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as e:
        raise DocumentError(f"{path}: {e.strerror or e}") from e


def _emit(doc: dict):
    print(json.dumps(doc))


def _cmd_fit(args) -> int:
    for doc in load_documents(_read(args.input), args.input):
        _emit(_fit_doc(doc, args.round))
    return 0


def _cmd_add(args) -> int:
    b1 = _load_single(args.first, "add").require_gpdmf("add")
    b2 = _load_single(args.second, "add").require_gpdmf("add")
    _emit(_parameter_doc(add(b1, b2), args.round))
    return 0


def _cmd_sub(args) -> int:
    b1 = _load_single(args.first, "sub").require_gpdmf("sub")
    b2 = _load_single(args.second, "sub").require_gpdmf("sub")
    _emit(_parameter_doc(sub(b1, b2), args.round))
    return 0


def _cmd_scale(args) -> int:
    number = _load_single(args.input, "scale").require_gpdmf("scale")
    _emit(_parameter_doc(scale(args.factor, number), args.round))
    return 0


def _cmd_solve(args) -> int:
    b1 = _load_single(args.first, "solve").require_gpdmf("solve")
    b2 = _load_single(args.second, "solve").require_gpdmf("solve")
    result = solve_add_equation(b1, b2)
    residual = {
        key: _snap(value, args.round)
        for key, value in zip(("a", "b", "c", "mu_left", "mu_right"), result.residual)
    }
    _emit(
        {
            "solution": _parameter_doc(result.solution, args.round),
            "residual": residual,
        }
    )
    return 0


def _cmd_curve(args) -> int:
    number = _load_single(args.input, "curve").number
    baselines = None
    if args.compare:
        baselines = tuple(
            _load_single(path, "curve --compare").number for path in args.compare
        )
    rows = []
    for x, _ in sample_curve(number, args.n):
        sx = _snap(x, args.round)
        row = [_fmt(sx, args.round), _fmt(membership(number, sx), args.round)]
        if baselines is not None:
            f1 = membership(baselines[0], sx)
            f2 = membership(baselines[1], sx)
            row.extend(
                (_fmt(min(f1, f2), args.round), _fmt(max(f1, f2), args.round))
            )
        rows.append(row)
    header = "x,f" if baselines is None else "x,f_op,f_min,f_max"
    print(header)
    for row in rows:
        print(",".join(row))
    return 0


def _cmd_check(args) -> int:
    doc = _load_single(args.input, "check")
    number = doc.number
    shape = check_monotone_fuzzy_number(number, args.grid)
    h = number.h if isinstance(number, PdmfSpec) else TANGENT
    laf = validate_laf(h, args.grid)
    print(f"membership structure (grid={args.grid}):")
    for line in shape.lines():
        print(f"  {line}")
    print(f"auxiliary function ({h.kind}):")
    for line in laf.lines():
        print(f"  {line}")
    print("result:", "all checks passed" if shape.passed and laf.passed else "FAILURES reported above")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pdmf",
        description=(
            "Fit, combine and sample fuzzy numbers whose membership functions "
            "are induced by probability densities."
        ),
    )
    sub_parsers = parser.add_subparsers(dest="command", required=True)

    def add_round(p):
        p.add_argument(
            "--round",
            type=int,
            default=None,
            metavar="N",
            help="render numbers with N fixed decimals instead of 12 significant digits",
        )

    p = sub_parsers.add_parser("fit", help="resolve a document to parameter form")
    p.add_argument("input", help="document file (one object, or one per line)")
    add_round(p)
    p.set_defaults(func=_cmd_fit)

    p = sub_parsers.add_parser("add", help="sum of two numbers")
    p.add_argument("first")
    p.add_argument("second")
    add_round(p)
    p.set_defaults(func=_cmd_add)

    p = sub_parsers.add_parser("sub", help="difference of two numbers")
    p.add_argument("first")
    p.add_argument("second")
    add_round(p)
    p.set_defaults(func=_cmd_sub)

    p = sub_parsers.add_parser("scale", help="scalar multiple of a number")
    p.add_argument("--lambda", dest="factor", type=float, required=True, metavar="REAL")
    p.add_argument("input")
    add_round(p)
    p.set_defaults(func=_cmd_scale)

    p = sub_parsers.add_parser(
        "solve", help="solve SECOND (+) X = FIRST and report the residual"
    )
    p.add_argument("first")
    p.add_argument("second")
    add_round(p)
    p.set_defaults(func=_cmd_solve)

    p = sub_parsers.add_parser("curve", help="emit a sampled membership curve as CSV")
    p.add_argument("input")
    p.add_argument("--n", type=int, required=True, help="number of uniform samples (>= 2)")
    p.add_argument(
        "--compare",
        nargs=2,
        metavar=("FILEA", "FILEB"),
        help="add pointwise min/max columns over two baseline numbers",
    )
    add_round(p)
    p.set_defaults(func=_cmd_curve)

    p = sub_parsers.add_parser("check", help="validate shape and auxiliary function")
    p.add_argument("input")
    p.add_argument("--grid", type=int, default=1001, help="validation grid size")
    p.set_defaults(func=_cmd_check)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "curve" and args.n < 2:
        parser.error("--n must be at least 2")
    try:
        return args.func(args)
    except DocumentError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return 4
    except DomainError as e:
        print(f"domain error: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
