"""Command-line interface: ``qgauss {eval,table,verify,circle,fixed,rational,word}``.

Exit codes: 0 success, 1 usage error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import random
import sys
from collections.abc import Callable
from fractions import Fraction

from .errors import QGaussError, UnsupportedOperation
from .field.ratfunc import RatFunc
from .moebius import MoebiusOp, fixed_points
from .render import ratfunc_latex, ratfunc_plain

EXIT_OK, EXIT_USAGE, EXIT_FAIL = 0, 1, 2
MAX_N = 200


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _render(f: RatFunc, fmt: str, var: str) -> str:
    if fmt == "latex":
        return ratfunc_latex(f)
    if fmt == "json":
        return json.dumps(f.to_json_obj(), sort_keys=True)
    return ratfunc_plain(f, var)


def _csv_line(row) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="").writerow(row)
    return buf.getvalue()


def _qpoly_times_i(p) -> str:
    text = str(p)
    if text == "0":
        return "0"
    if text == "1":
        return "[i]_q"
    if text == "-1":
        return "-[i]_q"
    return f"({text})·[i]_q"


def _matrix_text(op: MoebiusOp, fmt: str, var: str) -> str:
    if fmt == "json":
        return json.dumps({"matrix": [x.to_json_obj() for x in op.matrix], "flip": op.flip},
                          sort_keys=True)
    a, b, c, d = (_render(x, fmt, var) for x in op.matrix)
    if fmt == "latex":
        return (f"\\left(\\begin{{array}}{{cc}} {a} & {b} \\\\ {c} & {d} \\end{{array}}\\right)"
                f"\\quad flip={op.flip:+d}")
    return f"[[{a}, {b}], [{c}, {d}]] flip={op.flip:+d}"


# -- commands --------------------------------------------------------------------

def cmd_eval(args) -> int:
    from .qnum import q_gaussian_closed, q_gaussian_orbit, q_rep

    value = q_gaussian_orbit(args.m, args.n).value
    if args.closed:
        closed = q_gaussian_closed(args.m, args.n)
        if closed != value:
            print("closed form and orbit disagree", file=sys.stderr)
            print(f"orbit:  {ratfunc_plain(value)}", file=sys.stderr)
            print(f"closed: {ratfunc_plain(closed)}", file=sys.stderr)
            return EXIT_FAIL
        shape = _qpoly_times_i(q_rep(args.n))
        if args.m:
            shape = f"q^{args.m}·{shape} + [{args.m}]_q"
        if args.format == "json":
            print(json.dumps({"m": args.m, "n": args.n, "closed": shape,
                              "value": value.to_json_obj()}, sort_keys=True))
        elif args.format == "csv":
            print(_csv_line([args.m, args.n, shape, ratfunc_plain(value, args.var)]))
        else:
            print(f"{shape} = {_render(value, args.format, args.var)}")
        return EXIT_OK
    if args.format == "json":
        print(json.dumps({"m": args.m, "n": args.n, "value": value.to_json_obj()}, sort_keys=True))
    elif args.format == "csv":
        print(_csv_line([args.m, args.n, ratfunc_plain(value, args.var)]))
    else:
        print(_render(value, args.format, args.var))
    return EXIT_OK


def cmd_table(args) -> int:
    from .qnum import q_gaussian_closed, q_rep

    max_n = 4 if args.max is None else args.max
    if max_n < 0 or max_n > MAX_N:
        raise UsageError(f"--max must lie in [0, {MAX_N}]")
    rows = []
    for n in range(-max_n, max_n + 1):
        rows.append((n, q_rep(n), q_gaussian_closed(0, n)))
    if args.format == "json":
        print(json.dumps([{"n": n, "Q_form": _qpoly_times_i(p), "value": v.to_json_obj()}
                          for n, p, v in rows], sort_keys=True))
    elif args.format == "csv":
        print(_csv_line(["n", "Q_form", "value"]))
        for n, p, v in rows:
            print(_csv_line([n, _qpoly_times_i(p), ratfunc_plain(v, args.var)]))
    elif args.format == "latex":
        for n, p, v in rows:
            print(f"{n} & {_qpoly_times_i(p)} & {ratfunc_latex(v)} \\\\")
    else:
        for n, p, v in rows:
            print(f"{n}\t{_qpoly_times_i(p)}\t{ratfunc_plain(v, args.var)}")
    return EXIT_OK


def cmd_circle(args) -> int:
    from .qnum import Q_param

    if args.samples < 2:
        raise UsageError("--samples must be at least 2")
    Q = Q_param()
    print(_csv_line(["q", "re_Q", "im_Q", "abs_Q"]))
    for k in range(1, args.samples + 1):
        q = k / args.samples
        val = Q.eval_numeric(math.sqrt(q))
        print(_csv_line([repr(q), repr(val.real), repr(val.imag), repr(abs(val))]))
    return EXIT_OK


def cmd_fixed(args) -> int:
    op = _operator(args.word)
    try:
        fp = fixed_points(op)
    except (UnsupportedOperation, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "json":
        print(json.dumps({
            "word": args.word, "kind": fp.kind,
            "roots": [r.to_json_obj() for r in fp.roots],
            "infinity": fp.includes_infinity,
            "discriminant": fp.discriminant.to_json_obj() if fp.discriminant is not None else None,
            "numeric_roots_at_s1": [[z.real, z.imag] for z in fp.numeric_roots(1.0)],
        }, sort_keys=True))
        return EXIT_OK
    if fp.kind == "roots":
        for r in fp.roots:
            print(_render(r, args.format, args.var))
        if fp.includes_infinity:
            print("infinity")
    else:
        print(f"irreducible discriminant: {_render(fp.discriminant, args.format, args.var)}")
        for z in fp.numeric_roots(1.0):
            print(f"numeric root at s=1: {z.real!r} {z.imag:+.17g}i")
    return EXIT_OK


def cmd_rational(args) -> int:
    from .qnum import q_rational

    try:
        x = Fraction(args.value)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot read a rational number from {args.value!r}") from exc
    value = q_rational(x.numerator, x.denominator)
    if args.format == "csv":
        print(_csv_line([str(x), ratfunc_plain(value, args.var)]))
    else:
        print(_render(value, args.format, args.var))
    return EXIT_OK


def cmd_word(args) -> int:
    from .picard import word_eval

    _operator(args.word)
    print(_matrix_text(word_eval(args.word, deformed=not args.classical), args.format, args.var))
    return EXIT_OK


def _operator(word: str) -> MoebiusOp:
    from .picard import word_eval

    try:
        return word_eval(word)
    except (QGaussError, ValueError) as exc:
        raise UsageError(str(exc)) from exc


# -- verification suites ------------------------------------------------------------

Check = dict


def _check(name: str, anchor: str, passed: bool, expected: bool = True, **extra) -> Check:
    out = {"check": name, "anchor": anchor, "pass": bool(passed), "expected": expected}
    out.update(extra)
    return out


def suite_relations(max_n: int | None, seed: int) -> list[Check]:
    from .picard import n_membership, relation_suite, usl_cubed_check, word_eval

    out = []
    for deformed in (False, True):
        for r in relation_suite(deformed):
            kind = "deformed" if deformed else "classical"
            out.append(_check(f"{r.relation} ({kind})", "relations of the Picard group",
                              r.holds, r.expected))
    rep = usl_cubed_check()
    out.append(_check("U_qS_qL_q matrix", "displayed matrix of U_qS_qL_q", rep.usl_matches))
    out.append(_check("(U_qS_qL_q)^-1 matrix", "displayed inverse of U_qS_qL_q", rep.inverse_matches))
    out.append(_check("(U_qS_qL_q)^3 in N", "normal subgroup condition", rep.cube_in_n))
    out.append(_check("(U_qS_qL_q)^2 != Id", "missing relation", not word_eval("U S L U S L").is_identity()))
    out.append(_check("Id in N", "normal subgroup condition", n_membership(word_eval(""))))
    return out


def suite_closed_form(max_n: int | None, seed: int) -> list[Check]:
    from .qnum import q_gaussian_closed, q_gaussian_orbit

    max_n = 50 if max_n is None else max_n
    bad = [n for n in range(-max_n, max_n + 1)
           if q_gaussian_closed(0, n) != q_gaussian_orbit(0, n).value]
    return [_check(f"closed form = orbit for |n| <= {max_n}",
                   "[n i]_q as a Laurent polynomial in Q times [i]_q", not bad, failures=bad)]


def suite_recurrence(max_n: int | None, seed: int) -> list[Check]:
    from .qnum import Q_param, q_gaussian_orbit

    max_n = 48 if max_n is None else max_n
    Q = Q_param()
    val = lambda n: q_gaussian_orbit(0, n).value  # noqa: E731
    bad = [n for n in range(-max_n, max_n + 1)
           if val(n + 2) != (Q + 1) * val(n) - Q * val(n - 2)]
    return [_check(f"[(n+2)i]_q = (Q+1)[ni]_q - Q[(n-2)i]_q for |n| <= {max_n}",
                   "linear recurrence with constant coefficients", not bad, failures=bad)]


def suite_chebyshev(max_n: int | None, seed: int) -> list[Check]:
    from .chebyshev import (
        check_im_recurrence, check_re_recurrence, continuant_check, triangle_row,
        verify_cheb_relation,
    )

    max_n = 30 if max_n is None else max_n
    out = []
    bad = [n for n in range(0, max_n + 1) if not verify_cheb_relation(n)]
    out.append(_check(f"I_(n+1) = U~I_n(z), R_(n+2) - R_n = U~II_n(z) for n <= {max_n}",
                      "imaginary and real parts as Chebyshev variants", not bad, failures=bad))
    rows = [triangle_row(n) for n in range(1, 8)]
    expected_rows = [[1], [2], [-1, 4], [-4, 8], [1, -12, 16], [6, -32, 32], [-1, 24, -80, 64]]
    out.append(_check("coefficient triangle rows 1..7", "triangle of imaginary-part coefficients",
                      rows == expected_rows))
    bad = [n for n in range(1, min(max_n, 10) + 1) if not continuant_check(n)]
    out.append(_check("continuants", "tridiagonal determinants", not bad, failures=bad))
    bad = [n for n in range(1, max_n + 1) if not check_im_recurrence(n)]
    out.append(_check("imaginary-part recurrence", "recurrence for I_n", not bad, failures=bad))
    bad = [n for n in range(1, max_n + 1) if not check_re_recurrence(n, -1)]
    out.append(_check("real-part recurrence, odd branch with -1",
                      "recurrence for R_n as stated", not bad, expected=False, failures=bad))
    bad = [n for n in range(1, max_n + 1) if not check_re_recurrence(n, +1)]
    out.append(_check("real-part recurrence, odd branch with +1",
                      "recurrence for R_n, sign of the inhomogeneity corrected", not bad, failures=bad))
    return out


def suite_conjugation(max_n: int | None, seed: int) -> list[Check]:
    from .qnum import check_conjugation

    max_n = 30 if max_n is None else max_n
    bad = [n for n in range(-max_n, max_n + 1) if not check_conjugation(n)]
    return [_check(f"[-ni]_q = conj [ni]_q and P_-n(Q) = -P_n(1/Q) for |n| <= {max_n}",
                   "complex conjugation symmetry", not bad, failures=bad)]


def suite_circle(max_n: int | None, seed: int) -> list[Check]:
    from .qnum import Q_param

    Q = Q_param()
    rng = random.Random(seed)
    pts = [k / 100 for k in range(1, 101)] + [rng.uniform(1e-6, 1.0) for _ in range(100)]
    worst = max(abs(abs(Q.eval_numeric(math.sqrt(q))) - 1) for q in pts)
    root = math.sqrt((3 - math.sqrt(5)) / 2)
    pos, neg = Q.eval_numeric(root), Q.eval_numeric(-root)
    return [
        _check("Q conj(Q) = 1", "Q lies on the unit circle", Q * Q.conj_i() == 1),
        _check("|Q(q)| = 1 on (0, 1]", "Q lies on the unit circle", worst <= 1e-12, max_deviation=worst),
        _check("Q(1) = 1", "special values of Q", Q.specialize(1) == 1),
        _check("Q(0) = -1", "special values of Q", Q.specialize(0) == -1),
        # with s = +sqrt(q) the interval (0, 1) maps to the lower half-circle
        _check("Q((3-sqrt5)/2) = i, positive branch", "special values of Q as drawn",
               abs(pos - 1j) <= 1e-12, expected=False, value=[pos.real, pos.imag]),
        _check("Q((3-sqrt5)/2) = -i, positive branch", "special values of Q", abs(pos + 1j) <= 1e-12),
        _check("Q((3-sqrt5)/2) = i, negative branch", "special values of Q", abs(neg - 1j) <= 1e-12),
    ]


SUITES: dict[str, Callable[[int | None, int], list[Check]]] = {
    "relations": suite_relations,
    "closed-form": suite_closed_form,
    "recurrence": suite_recurrence,
    "chebyshev": suite_chebyshev,
    "conjugation": suite_conjugation,
    "circle": suite_circle,
}


def run_suite(name: str, max_n: int | None = None, seed: int = 0) -> dict:
    if max_n is not None and (max_n < 0 or max_n > MAX_N):
        raise UsageError(f"--max must lie in [0, {MAX_N}]")
    names = list(SUITES) if name == "all" else [name]
    checks = []
    for n in names:
        for c in SUITES[n](max_n, seed):
            c["suite"] = n
            checks.append(c)
    unexpected = [c["check"] for c in checks if c["pass"] != c["expected"]]
    return {"suite": name, "max": max_n, "seed": seed, "checks": checks,
            "unexpected": unexpected, "ok": not unexpected}


def cmd_verify(args) -> int:
    report = run_suite(args.suite, args.max, args.seed)
    print(json.dumps(report, indent=2, default=str))
    return EXIT_OK if report["ok"] else EXIT_FAIL


# -- entry point ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("plain", "latex", "json", "csv"), default="plain")
    common.add_argument("--var", choices=("s", "q"), default="s",
                        help="render even powers of s as powers of q")

    p = _Parser(prog="qgauss", description="q-deformed Gaussian integers and the q-Picard group")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("eval", parents=[common], help="print [m + n i]_q")
    e.add_argument("m", type=int)
    e.add_argument("n", type=int)
    e.add_argument("--closed", action="store_true", help="print the form in the parameter Q")
    e.set_defaults(func=cmd_eval)

    t = sub.add_parser("table", parents=[common], help="[n i]_q as polynomials in Q")
    t.add_argument("--max", type=int, default=None)
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="run verification suites, print a JSON report")
    v.add_argument("suite", nargs="?", default="all", choices=("all", *SUITES))
    v.add_argument("--max", type=int, default=None)
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("circle", help="CSV of Q(q) for q in (0, 1]")
    c.add_argument("--samples", "--max", dest="samples", type=int, default=100)
    c.set_defaults(func=cmd_circle)

    f = sub.add_parser("fixed", parents=[common], help="fixed points of a word")
    f.add_argument("word", nargs="+")
    f.set_defaults(func=cmd_fixed)

    r = sub.add_parser("rational", parents=[common], help="the q-rational [p/r]_q")
    r.add_argument("value", help="p/r or an integer")
    r.set_defaults(func=cmd_rational)

    w = sub.add_parser("word", parents=[common], help="matrix of a word in T, S, U, L")
    w.add_argument("word", nargs="+")
    w.add_argument("--classical", action="store_true")
    w.set_defaults(func=cmd_word)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if isinstance(getattr(args, "word", None), list):
        args.word = " ".join(args.word)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"qgauss: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
