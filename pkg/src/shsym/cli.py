"""Command-line surface.

Subcommands: basis, decompose, qbracket, recognize, eval, verify, tables.
Expressions come from an argument or stdin, results go to stdout,
diagnostics to stderr.  Exit codes: 0 ok, 1 verification or recognition
failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .harmonic import basis_element, decompose, is_harmonic
from .partitions import enumerate_min_part, format_partition, parse_partition
from .qseries import QSeries, q_bracket
from .quasimodular import (
    InsufficientOrderError,
    QMForm,
    RecognitionError,
    format_qmform,
    format_qmform_latex,
    recognize,
)
from .ssym import (
    ParseError,
    SSPoly,
    eval_at,
    format_poly,
    format_poly_latex,
    parse_poly,
)
from .verify import run_all

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def _read_expr(arg: str | None) -> str:
    if arg is None or arg == "-":
        return sys.stdin.read()
    return arg


def _poly_json(f: SSPoly) -> list[dict]:
    out = []
    for mono, coeff in f.terms():
        out.append(
            {
                "coeff": str(coeff),
                "monomial": {str(k): e2 // 2 for k, e2 in mono.items2()},
            }
        )
    return out


def _form_json(m: QMForm) -> list[dict]:
    return [
        {"coeff": str(c), "P": a, "Q": b, "R": r} for (a, b, r), c in m.terms()
    ]


def _series_json(s: QSeries) -> dict:
    return {"order": s.order, "coefficients": [str(c) for c in s.coeffs]}


def _recognize_components(f: SSPoly, order: int) -> QMForm:
    """Recognize the bracket of each weight component and sum the forms.

    Odd-weight components must produce the zero series.
    """
    total = QMForm.zero()
    for w, fw in f.weight_components().items():
        series = q_bracket(fw, order)
        if w % 2:
            if not series.is_zero:
                raise RecognitionError(f"odd-weight component {w} has nonzero average")
            continue
        total = total + recognize(series, w)
    return total


def cmd_basis(args) -> int:
    rows = [(lam, basis_element(lam)) for lam in enumerate_min_part(args.n, args.min_part)]
    if args.format == "json":
        payload = [
            {"lambda": list(lam), "h": _poly_json(h)} for lam, h in rows
        ]
        print(json.dumps(payload, indent=2))
    elif args.format == "latex":
        print(r"\begin{array}{ll}")
        print(r"\lambda & h_\lambda \\ \hline")
        for lam, h in rows:
            print(f"{format_partition(lam)} & {format_poly_latex(h)} \\\\")
        print(r"\end{array}")
    else:
        for lam, h in rows:
            print(f"{format_partition(lam)}: {format_poly(h)}")
    return EXIT_OK


def cmd_decompose(args) -> int:
    f = parse_poly(_read_expr(args.expr))
    dec = decompose(f)
    flags = [is_harmonic(h) for h in dec.components]
    if args.format == "json":
        payload = {
            "components": [_poly_json(h) for h in dec.components],
            "harmonic": flags,
            "depth": dec.depth,
        }
        print(json.dumps(payload, indent=2))
    else:
        render = format_poly_latex if args.format == "latex" else format_poly
        for r, (h, flag) in enumerate(zip(dec.components, flags)):
            marker = "harmonic" if flag else "NOT harmonic"
            print(f"h{r}: {render(h)}   [{marker}]")
        print(f"depth: {dec.depth}")
    return EXIT_OK


def cmd_qbracket(args) -> int:
    f = parse_poly(_read_expr(args.expr))
    series = q_bracket(f, args.order)
    if args.weight is not None:
        form = recognize(series, args.weight) if args.weight % 2 == 0 else QMForm.zero()
        if args.weight % 2 and not series.is_zero:
            raise RecognitionError("odd weight requires a vanishing series")
    else:
        form = _recognize_components(f, args.order)
    if args.format == "json":
        payload = {"series": _series_json(series), "q_bracket": _form_json(form)}
        print(json.dumps(payload, indent=2))
    else:
        render = format_qmform_latex if args.format == "latex" else format_qmform
        print(f"series: {series}")
        print(render(form))
    return EXIT_OK


def cmd_recognize(args) -> int:
    text = _read_expr(args.coefficients)
    try:
        coeffs = [Fraction(tok) for tok in text.replace(",", " ").split()]
    except ValueError as exc:
        raise ParseError(f"bad coefficient: {exc}", 0) from None
    if not coeffs:
        raise ParseError("no coefficients given", 0)
    series = QSeries(coeffs)
    form = recognize(series, args.weight, min(args.order, series.order))
    if args.format == "json":
        print(json.dumps({"q_bracket": _form_json(form)}, indent=2))
    else:
        render = format_qmform_latex if args.format == "latex" else format_qmform
        print(render(form))
    return EXIT_OK


def cmd_eval(args) -> int:
    f = parse_poly(_read_expr(args.expr))
    lam = parse_partition(args.partition)
    value = eval_at(f, lam)
    if args.format == "json":
        print(json.dumps({"value": str(value)}))
    else:
        print(value)
    return EXIT_OK


def cmd_verify(args) -> int:
    ok = run_all(max_weight=args.max_weight, order=args.order)
    return EXIT_OK if ok else EXIT_FAILURE


def cmd_tables(args) -> int:
    rows = []
    for n in range(args.max_weight + 1):
        for lam in enumerate_min_part(n, args.min_part):
            h = basis_element(lam)
            if n % 2 == 0:
                form = recognize(q_bracket(h, args.order), n)
            else:
                if not q_bracket(h, args.order).is_zero:
                    raise RecognitionError(f"odd-weight average nonzero at {lam}")
                form = QMForm.zero()
            rows.append((lam, h, form))
    if args.format == "json":
        payload = [
            {"lambda": list(lam), "h": _poly_json(h), "q_bracket": _form_json(form)}
            for lam, h, form in rows
        ]
        print(json.dumps(payload, indent=2))
    elif args.format == "latex":
        print(r"\begin{array}{lll}")
        print(r"\lambda & h_\lambda & \langle h_\lambda\rangle_q \\ \hline")
        for lam, h, form in rows:
            print(
                f"{format_partition(lam)} & {format_poly_latex(h)}"
                f" & {format_qmform_latex(form)} \\\\"
            )
        print(r"\end{array}")
    else:
        for lam, h, form in rows:
            print(f"{format_partition(lam)}\t{format_poly(h)}\t{format_qmform(form)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shsym",
        description=(
            "Exact computations with shifted symmetric polynomials: harmonic "
            "bases and decompositions, partition averages as q-series, and "
            "their quasimodular forms."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, order=True, fmt=True):
        if order:
            p.add_argument(
                "-N", "--order", type=int, default=30, help="series truncation order"
            )
        if fmt:
            p.add_argument(
                "--format",
                choices=("text", "latex", "json"),
                default="text",
                help="output format",
            )

    p = sub.add_parser("basis", help="harmonic basis of a given weight")
    p.add_argument("n", type=int, help="weight")
    p.add_argument("--min-part", type=int, default=3, help="smallest allowed part")
    add_common(p, order=False)
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("decompose", help="harmonic decomposition of an expression")
    p.add_argument("expr", nargs="?", help="expression (stdin if omitted)")
    add_common(p, order=False)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("qbracket", help="partition average of an expression")
    p.add_argument("expr", nargs="?", help="expression (stdin if omitted)")
    p.add_argument("--weight", type=int, help="recognition weight (inferred if omitted)")
    add_common(p)
    p.set_defaults(func=cmd_qbracket)

    p = sub.add_parser("recognize", help="identify a series as a form of given weight")
    p.add_argument(
        "coefficients", nargs="?", help="series coefficients c0 c1 ... (stdin if omitted)"
    )
    p.add_argument("--weight", type=int, required=True, help="target weight")
    add_common(p)
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("eval", help="evaluate an expression at a partition")
    p.add_argument("expr", help="expression")
    p.add_argument("partition", help='partition, e.g. "(4,3,3)" or "()"')
    add_common(p, order=False)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", help="run the self-verification suites")
    p.add_argument("--max-weight", type=int, default=10, help="largest random weight")
    p.add_argument("-N", "--order", type=int, default=30, help="series truncation order")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tables", help="full basis/average tables up to a weight")
    p.add_argument("--max-weight", type=int, default=10, help="largest weight")
    p.add_argument("--min-part", type=int, default=3, help="smallest allowed part")
    add_common(p)
    p.set_defaults(func=cmd_tables)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (RecognitionError, InsufficientOrderError) as exc:
        print(f"recognition error: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
