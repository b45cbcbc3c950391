"""Command-line front end.

    leglog eval   -n N -m M --sign plus|minus [--rep R] (--at Z | --segment X)
    leglog emit   -n N -m M --sign plus|minus [--rep R] --format json|latex|csv
    leglog verify [--n-max N] [--m-overflow-max K] [--parallelism P] [--report-sign-finding]
    leglog bench  --out PATH [--n 4,16,64] [--z 1.001,1.01,1.1,2,10]

Exit codes: 0 ok, 1 usage, 2 domain error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .assoc import Sign
from .bench import run_bench, write_csv
from .exact import GammaResidueError
from .logderiv import DomainError, LogDerivExpr, Rep, degree_deriv_eval, eval_off_cut, eval_on_segment, log_deriv
from .oracle import leibniz_log_deriv
from .polys import Poly
from .verify import default_parallelism, run_sweep

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_VERIFY = 0, 1, 2, 3

REP_CHOICES = [r.value for r in Rep] + ["leibniz"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_complex(text: str) -> complex:
    t = text.strip().replace(" ", "").replace("i", "j")
    try:
        return complex(t)
    except ValueError:
        raise UsageError(f"cannot parse complex number {text!r}") from None


def _sign(text: str) -> Sign:
    return {"plus": Sign.PLUS, "+": Sign.PLUS, "minus": Sign.MINUS, "-": Sign.MINUS}[text]


def build_expr(n: int, m: int, sign: Sign, rep: str | None) -> LogDerivExpr:
    if rep == "leibniz":
        return leibniz_log_deriv(n, m, sign)
    return log_deriv(n, m, sign, Rep(rep) if rep else None)


def fmt_real(x: float) -> str:
    # 17 significant digits, trailing zeros kept
    return "0" if x == 0 else f"{x:#.17g}"


def fmt_complex(z: complex) -> str:
    im = fmt_real(abs(z.imag))
    return f"{fmt_real(z.real)}{'-' if z.imag < 0 else '+'}{im}i"


# -- emit formats


def _latex_coeff(c: Fraction) -> str:
    if c.denominator == 1:
        return str(abs(c.numerator))
    return rf"\frac{{{abs(c.numerator)}}}{{{c.denominator}}}"


def latex_poly(p: Poly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        sgn = "-" if c < 0 else "+"
        mag = _latex_coeff(c)
        if k and mag == "1":
            mag = ""
        var = "" if k == 0 else "z" if k == 1 else f"z^{{{k}}}"
        parts.append((sgn, f"{mag}{var}"))
    first_sgn, first = parts[0]
    out = ("-" if first_sgn == "-" else "") + first
    for sgn, term in parts[1:]:
        out += f" {sgn} {term}"
    return out


def to_latex(e: LogDerivExpr) -> str:
    s = e.sign.symbol
    zs = f"z{s}1"
    lhs = rf"\frac{{d^{{{e.m}}}}}{{dz^{{{e.m}}}}}\left[P_{{{e.n}}}(z)\ln({zs})\right]"
    terms = []
    if not e.log_coeff.is_zero():
        terms.append(rf"\left({latex_poly(e.log_coeff)}\right)\ln({zs})")
    if not e.rest.poly.is_zero():
        terms.append(latex_poly(e.rest.poly))
    if e.rest.pole_order and not e.rest.pole_num.is_zero():
        den = zs if e.rest.pole_order == 1 else f"({zs})^{{{e.rest.pole_order}}}"
        terms.append(rf"\frac{{{latex_poly(e.rest.pole_num)}}}{{{den}}}")
    rhs = " + ".join(terms) if terms else "0"
    return rf"\[ {lhs} = {rhs} \]"


def to_csv(e: LogDerivExpr) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["part", "power", "numerator", "denominator"])
    for part, poly in (("log_coeff", e.log_coeff), ("entire", e.rest.poly), ("pole_num", e.rest.pole_num)):
        for k, c in enumerate(poly.coeffs):
            c = Fraction(c)
            w.writerow([part, k, c.numerator, c.denominator])
    return buf.getvalue()


def to_json(e: LogDerivExpr) -> str:
    return json.dumps(e.to_dict(), separators=(",", ":"), ensure_ascii=False)


# -- subcommands


def cmd_eval(args) -> int:
    sign = _sign(args.sign)
    if args.degree_deriv:
        if args.at is None:
            raise UsageError("--degree-deriv needs --at")
        val = degree_deriv_eval(args.n, args.m, parse_complex(args.at))
        print(fmt_complex(val) if val.imag else fmt_real(val.real))
        return EXIT_OK
    if args.segment is not None:
        val = eval_on_segment(args.n, args.m, sign, float(args.segment),
                              None if args.rep in (None, "leibniz") else Rep(args.rep))
        print(fmt_real(val))
        return EXIT_OK
    if args.at is None:
        raise UsageError("one of --at or --segment is required")
    z = parse_complex(args.at)
    e = build_expr(args.n, args.m, sign, args.rep)
    val = eval_off_cut(e, z)
    print(fmt_real(val.real) if z.imag == 0 else fmt_complex(val))
    return EXIT_OK


def cmd_emit(args) -> int:
    e = build_expr(args.n, args.m, _sign(args.sign), args.rep)
    out = {"json": to_json, "latex": to_latex, "csv": to_csv}[args.format](e)
    sys.stdout.write(out if out.endswith("\n") else out + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    par = args.parallelism if args.parallelism else default_parallelism()
    report = run_sweep(args.n_max, args.m_overflow_max, args.overflow_n_max, par)
    if not args.quiet:
        print(f"{'n':>3} {'m':>3} {'sign':>4} {'rep':<20} status")
        for c in report.checks:
            print(f"{c.n:>3} {c.m:>3} {c.sign:>4} {c.rep:<20} {c.status}")
    if args.report_sign_finding:
        print(report.sign_finding())
    if not report.ok:
        c = report.failures[0]
        print(f"first failure: n={c.n} m={c.m} sign={c.sign} rep={c.rep}", file=sys.stderr)
        print(f"  built:    {c.got}", file=sys.stderr)
        print(f"  expected: {c.expected}", file=sys.stderr)
        print(report.summary())
        return EXIT_VERIFY
    print(report.summary())
    return EXIT_OK


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad integer list {text!r}") from None


def cmd_bench(args) -> int:
    ns = _int_list(args.n)
    zs = [parse_complex(x) for x in args.z.split(",") if x.strip()]
    signs = [Sign.PLUS, Sign.MINUS] if args.sign == "both" else [_sign(args.sign)]
    m_of_n = (lambda n: args.m) if args.m is not None else (lambda n: n // 2)
    reps = args.reps.split(",") if args.reps else None
    try:
        open(args.out, "w", encoding="utf-8").close()
    except OSError as exc:
        raise UsageError(f"cannot write {args.out}: {exc}") from None
    rows = run_bench(ns, zs, m_of_n=m_of_n, signs=signs, reps=reps)
    write_csv(rows, args.out)
    print(f"wrote {len(rows)} rows to {args.out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="leglog", description="Derivatives of P_n(z) ln(z±1): build, evaluate, verify.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("-n", type=int, required=True, help="Legendre degree")
        sp.add_argument("-m", type=int, required=True, help="derivative order")
        sp.add_argument("--sign", choices=["plus", "minus"], default="plus")
        sp.add_argument("--rep", choices=REP_CHOICES, default=None)

    ev = sub.add_parser("eval", help="evaluate at a point")
    common(ev)
    where = ev.add_mutually_exclusive_group()
    where.add_argument("--at", help="complex point off the cut, e.g. 2.5 or 1.1+0.3i")
    where.add_argument("--segment", help="real x in (-1, 1); uses ln(1±x)")
    ev.add_argument("--degree-deriv", action="store_true",
                    help="evaluate dP_nu^m/dnu at nu = n instead")
    ev.set_defaults(func=cmd_eval)

    em = sub.add_parser("emit", help="print the exact expression")
    common(em)
    em.add_argument("--format", choices=["json", "latex", "csv"], default="json")
    em.set_defaults(func=cmd_emit)

    ve = sub.add_parser("verify", help="exact cross-check of every form")
    ve.add_argument("--n-max", type=int, default=12)
    ve.add_argument("--m-overflow-max", type=int, default=6)
    ve.add_argument("--overflow-n-max", type=int, default=None)
    ve.add_argument("--parallelism", type=int, default=0)
    ve.add_argument("--report-sign-finding", action="store_true")
    ve.add_argument("--quiet", action="store_true", help="omit the per-check table")
    ve.set_defaults(func=cmd_verify)

    be = sub.add_parser("bench", help="double-precision accuracy and timing per form")
    be.add_argument("--out", required=True)
    be.add_argument("--n", default="4,16,64")
    be.add_argument("--z", default="1.001,1.01,1.1,2,10")
    be.add_argument("-m", type=int, default=None, help="fixed order (default n // 2)")
    be.add_argument("--sign", choices=["plus", "minus", "both"], default="both")
    be.add_argument("--reps", default=None, help="comma-separated subset of forms")
    be.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # --help and parse errors: report the code instead of exiting
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GammaResidueError as exc:
        print(f"γ residue: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
