"""Command-line front end.

Exit status: 0 on success, 1 when ``verify`` meets an unexpected verdict,
2 on usage or input errors (diagnostic on stderr).
"""
from __future__ import annotations

import argparse
import json
import re
import sys

from .errors import PastRevError
from .matrices import (
    SYMMETRY_MODES,
    Matrix,
    decompose_full,
    decompose_rc,
    det,
    inverse,
    paste_blocks,
    paste_cols,
    paste_rows,
    reverse_cols,
    reverse_full,
    reverse_rows,
    symmetry_basis,
    trace,
)
from .crossn import generalized_cross_matrix
from .polynomials import Poly, decompose_poly, paste_poly, reverse_poly
from .scalar import Scalar, parse_field
from .transform import eigenspace_basis, exchange_matrix, reversing_char_poly, reversing_min_poly
from .vectors import (
    Vector,
    antipalindromic_basis,
    cross3,
    decompose,
    dot,
    palindromic_basis,
    paste_vectors,
    reverse_vector,
)


_NEGATIVE = re.compile(r"^-[\d./]")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


# -- rendering ---------------------------------------------------------------

def _to_json(value):
    if isinstance(value, Scalar):
        return str(value)
    if isinstance(value, (Vector, Matrix, Poly)):
        return value.to_json()
    if isinstance(value, dict):
        return {k: _to_json(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_to_json(v) for v in value]
    return value


def _human(value) -> str:
    if isinstance(value, Scalar):
        return str(value)
    if isinstance(value, Vector):
        return ",".join(value.to_json())
    if isinstance(value, Matrix):
        if value.rows == 0:
            return "[]"
        return "\n".join(",".join(value.field.format(x) for x in r) for r in value.row_tuples())
    if isinstance(value, Poly):
        return f"{value.pretty()}  (ambient {value.ambient})"
    if isinstance(value, dict):
        blocks = []
        for k, v in value.items():
            body = _human(v)
            blocks.append(f"{k}:\n{body}" if "\n" in body else f"{k}: {body}")
        return "\n".join(blocks)
    if isinstance(value, (list, tuple)):
        return "\n".join(_human(v) if not isinstance(v, Matrix) else _human(v) + "\n" for v in value).rstrip("\n")
    return str(value)


def _emit(value, as_json: bool) -> None:
    if as_json:
        print(json.dumps(_to_json(value), sort_keys=False))
    else:
        print(_human(value))


# -- operand loading ---------------------------------------------------------

def _operands(args, count: int, parse_inline, parse_json) -> list:
    """Inline positional operands, or ``--file`` holding a JSON array of operands."""
    if args.file:
        if args.operands:
            raise UsageError("give operands inline or via --file, not both")
        try:
            with open(args.file, encoding="utf-8") as fh:
                items = json.load(fh)
        except OSError as exc:
            raise UsageError(f"cannot read {args.file}: {exc.strerror}") from None
        except json.JSONDecodeError as exc:
            raise UsageError(f"{args.file}: invalid JSON ({exc.msg})") from None
        if not isinstance(items, list) or len(items) != count:
            raise UsageError(f"{args.file} must hold a JSON array of {count} operand(s)")
        return [parse_json(x) for x in items]
    if len(args.operands) != count:
        raise UsageError(f"expected {count} operand(s), got {len(args.operands)}")
    return [parse_inline(t) for t in args.operands]


def _vectors(args, count):
    f = args.field
    return _operands(args, count, lambda t: Vector.parse(t, f), lambda d: Vector.from_json(d, f))


def _matrices(args, count):
    f = args.field
    return _operands(args, count, lambda t: Matrix.parse(t, f), lambda d: Matrix.from_json(d, f))


def _polys(args, count):
    f = args.field
    ambients = iter([args.n, args.m])
    return _operands(args, count, lambda t: Poly.parse(t, f, next(ambients)), lambda d: Poly.from_json(d, f))


def _need(value, flag):
    if value is None:
        raise UsageError(f"{flag} is required")
    if value < 0:
        raise UsageError(f"{flag} must be non-negative")
    return value


# -- commands ----------------------------------------------------------------

def _cmd_vec(args):
    op, f = args.op, args.field
    if op == "basis":
        n = _need(args.n, "--n")
        return palindromic_basis(n, f) if args.mode == "pal" else antipalindromic_basis(n, f)
    if op == "reverse":
        (v,) = _vectors(args, 1)
        return reverse_vector(v)
    if op == "decompose":
        (v,) = _vectors(args, 1)
        pal, anti = decompose(v)
        return {"pal": pal, "anti": anti}
    v, w = _vectors(args, 2)
    if op == "paste":
        return paste_vectors(v, w)
    if op == "dot":
        return dot(v, w)
    return cross3(v, w)


def _cmd_poly(args):
    if args.op == "paste":
        p, q = _polys(args, 2)
        return paste_poly(p, q)
    (p,) = _polys(args, 1)
    if args.op == "reverse":
        return reverse_poly(p)
    pal, anti = decompose_poly(p)
    return {"pal": pal, "anti": anti}


_REVERSE = {"rows": reverse_rows, "cols": reverse_cols, "full": reverse_full}
_PASTE = {"rows": paste_rows, "cols": paste_cols, "blocks": paste_blocks}
_OP_MODES = {
    "reverse": ("rows", "cols", "full"),
    "paste": ("rows", "cols", "blocks"),
    "decompose": ("rc", "full"),
    "basis": SYMMETRY_MODES,
}


def _cmd_mat(args):
    op, mode = args.op, args.mode
    if op in _OP_MODES:
        if mode is None:
            raise UsageError(f"mat {op} needs --mode ({'|'.join(_OP_MODES[op])})")
        if mode not in _OP_MODES[op]:
            raise UsageError(f"mat {op}: unknown mode {mode!r}; choose from {', '.join(_OP_MODES[op])}")
    elif mode is not None:
        raise UsageError(f"mat {op} takes no --mode")
    if op == "basis":
        return symmetry_basis(_need(args.n, "--n"), _need(args.m, "--m"), mode, args.field)
    if op == "paste":
        a, b = _matrices(args, 2)
        return _PASTE[mode](a, b)
    (a,) = _matrices(args, 1)
    if op == "reverse":
        return _REVERSE[mode](a)
    if op == "decompose":
        if mode == "rc":
            return decompose_rc(a)._asdict()
        pal, anti = decompose_full(a)
        return {"pal": pal, "anti": anti}
    return {"det": det, "inv": inverse, "trace": trace}[op](a)


def _cmd_crossn(args):
    (a,) = _matrices(args, 1)
    return generalized_cross_matrix(a)


def _cmd_transform(args):
    n, f = _need(args.n, "--n"), args.field
    if args.op == "exchange":
        return exchange_matrix(n, f)
    if args.op == "charpoly":
        return reversing_char_poly(n, f)
    if args.op == "minpoly":
        return reversing_min_poly(n, f)
    return eigenspace_basis(n, args.sign, f)


def _cmd_verify(args):
    from .verifier import DomainSpec, check_law, run_suite
    from .verifier.engine import DEFAULT_BUDGET

    if bool(args.law) == bool(args.suite):
        raise UsageError("verify needs exactly one of --law or --suite")
    f = args.field
    strategy = args.strategy
    if strategy is None:
        strategy = "exhaustive" if f.kind == "prime" and args.trials is None else "random"
    domain = DomainSpec(
        field=f,
        n=args.n,
        m=args.m,
        p=args.p,
        strategy=strategy,
        trials=200 if args.trials is None else args.trials,
        seed=args.seed,
        budget=DEFAULT_BUDGET if args.budget is None else args.budget,
    )
    if args.law:
        report = check_law(args.law, domain)
        print(json.dumps(report.to_json()))
        return 0 if report.as_expected else 1
    suite = run_suite(domain)
    if args.json:
        print(json.dumps([r.to_json() for r in suite.reports]))
    else:
        print(_suite_table(suite))
    return 0 if suite.ok else 1


def _suite_table(suite) -> str:
    from .verifier import CATALOG

    header = f"{'law':<5} {'alias':<26} {'status':<8} {'expected':<8} {'cases':>7}  note"
    lines = [header, "-" * len(header)]
    counts = {"pass": 0, "fail": 0, "skipped": 0}
    for r in suite.reports:
        counts[r.status] += 1
        note = r.reason or ("" if r.as_expected else "UNEXPECTED")
        if r.status == "fail" and r.as_expected:
            note = "refuted as expected"
        lines.append(f"{r.law:<5} {CATALOG[r.law].alias:<26} {r.status:<8} {r.expected:<8} {r.cases_checked:>7}  {note}")
    verdict = "OK" if suite.ok else "VIOLATIONS"
    lines.append(f"{counts['pass']} pass, {counts['fail']} fail, {counts['skipped']} skipped: {verdict}")
    return "\n".join(lines)


# -- parser ------------------------------------------------------------------

def _field_type(text: str):
    try:
        return parse_field(text)
    except (PastRevError, ValueError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _sign_type(text: str) -> int:
    text = text.strip()
    if text in ("+1", "1", "+"):
        return 1
    if text in ("-1", "-"):
        return -1
    raise argparse.ArgumentTypeError("sign must be +1 or -1")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=_field_type, default=parse_field("q"),
                        help="q (rationals, default), gf:P, f64 or f64:TOL")
    common.add_argument("--n", type=int)
    common.add_argument("--m", type=int)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("--file", help="read operands from a JSON file")

    parser = _Parser(prog="pastrev", description="Reversing and Pasting over vectors, polynomials and matrices.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    vec = sub.add_parser("vec", parents=[common], help="vector operations")
    vec.add_argument("op", choices=["reverse", "paste", "dot", "cross3", "decompose", "basis"])
    vec.add_argument("operands", nargs="*", help="comma-separated entries")
    vec.add_argument("--mode", choices=["pal", "anti"], default="pal", help="basis kind")

    poly = sub.add_parser("poly", parents=[common], help="polynomials of bounded degree")
    poly.add_argument("op", choices=["reverse", "paste", "decompose"])
    poly.add_argument("operands", nargs="*", help="comma-separated coefficients, constant term first; "
                                                  "--n/--m set the ambient degrees")

    mat = sub.add_parser("mat", parents=[common], help="matrix operations")
    mat.add_argument("op", choices=["reverse", "paste", "decompose", "det", "inv", "trace", "basis"])
    mat.add_argument("operands", nargs="*", help='rows separated by ";", entries by ","')
    mat.add_argument("--mode")

    cr = sub.add_parser("crossn", parents=[common], help="(n-1)-ary vector product of the rows of an (n-1) x n matrix")
    cr.add_argument("operands", nargs="*")

    tr = sub.add_parser("transform", parents=[common], help="the exchange matrix and its spectral data")
    tr.add_argument("op", choices=["exchange", "charpoly", "minpoly", "eigenbasis"])
    tr.add_argument("--sign", type=_sign_type, default=1, help="eigenvalue for eigenbasis (+1 or -1)")

    ver = sub.add_parser("verify", parents=[common], help="check cataloged laws")
    ver.add_argument("--law")
    ver.add_argument("--suite", action="store_true")
    ver.add_argument("--p", type=int)
    ver.add_argument("--strategy", choices=["exhaustive", "random"])
    ver.add_argument("--trials", type=int)
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--budget", type=int)
    parser.commands = sub.choices
    return parser


_DISPATCH = {
    "vec": _cmd_vec,
    "poly": _cmd_poly,
    "mat": _cmd_mat,
    "crossn": _cmd_crossn,
    "transform": _cmd_transform,
}


def run(argv=None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    # argparse takes "-1,2" for an option; a leading space keeps it positional
    # and the value parsers strip it again.
    argv = [" " + a if _NEGATIVE.match(a) else a for a in argv]
    try:
        if argv and argv[0] in parser.commands:
            args = parser.commands[argv[0]].parse_intermixed_args(argv[1:])
            args.command = argv[0]
        else:
            args = parser.parse_args(argv)
        if args.command == "verify":
            return _cmd_verify(args)
        result = _DISPATCH[args.command](args)
        _emit(result, args.json)
        return 0
    except UsageError as exc:
        print(f"pastrev: {exc}", file=sys.stderr)
        return 2
    except (PastRevError, ValueError, ArithmeticError, TypeError, IndexError) as exc:
        print(f"pastrev: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
