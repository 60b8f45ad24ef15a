"""Text renderings of field elements: plain (re-parseable), LaTeX, and a plain parser.

Plain syntax::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := ("+" | "-") unary | power
    power  := atom ("^" exponent)?
    atom   := integer | "i" | "s" | "q" | "(" expr ")"

``q`` is read as ``s^2``.  Exponents are signed integers, optionally in parentheses.
"""

from __future__ import annotations

import re

from .errors import ParseError
from .field.gaussrat import GaussRat, rational_str
from .field.ratfunc import RatFunc
from .field.spoly import SPoly


# -- plain --------------------------------------------------------------------

def _monomial(e: int, var: str) -> str:
    if var == "q" and e % 2 == 0:
        k = e // 2
        return "q" if k == 1 else f"q^{k}"
    return "s" if e == 1 else f"s^{e}"


def _coeff_times(c: GaussRat, mono: str) -> str:
    if not c.im:
        if c.re == 1:
            return mono
        if c.re == -1:
            return "-" + mono
        return f"{rational_str(c.re)}*{mono}"
    if not c.re:
        if c.im == 1:
            return f"i*{mono}"
        if c.im == -1:
            return f"-i*{mono}"
        return f"{rational_str(c.im)}*i*{mono}"
    return f"{c}*{mono}"


def spoly_plain(p: SPoly, var: str = "s") -> str:
    if not p:
        return "0"
    parts = []
    for e, c in sorted(p.terms(), reverse=True):
        parts.append(str(c) if e == 0 else _coeff_times(c, _monomial(e, var)))
    out = parts[0]
    for t in parts[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


def ratfunc_plain(f: RatFunc, var: str = "s") -> str:
    num = spoly_plain(f.num, var)
    if f.den.is_one():
        return num
    return f"({num})/({spoly_plain(f.den, var)})"


# -- LaTeX --------------------------------------------------------------------

def _latex_rational(x) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    sign = "-" if x < 0 else ""
    return f"{sign}\\frac{{{abs(x.numerator)}}}{{{x.denominator}}}"


def _latex_monomial(e: int) -> str:
    if e == 0:
        return ""
    if e % 2 == 0:
        k = e // 2
        return "q" if k == 1 else f"q^{{{k}}}"
    sign = "-" if e < 0 else ""
    return f"q^{{{sign}\\frac{{{abs(e)}}}{{2}}}}"


def _latex_coeff(c: GaussRat, bare: bool) -> str:
    """Coefficient text; with ``bare`` a unit coefficient collapses to its sign."""
    if not c.im:
        if bare and abs(c.re) == 1:
            return "-" if c.re < 0 else ""
        return _latex_rational(c.re)
    if not c.re:
        if abs(c.im) == 1:
            return "-i" if c.im < 0 else "i"
        return f"{_latex_rational(c.im)}i"
    im = _latex_rational(abs(c.im)) if abs(c.im) != 1 else ""
    sign = "-" if c.im < 0 else "+"
    return f"\\left({_latex_rational(c.re)}{sign}{im}i\\right)"


def spoly_latex(p: SPoly) -> str:
    if not p:
        return "0"
    parts = []
    for e, c in sorted(p.terms(), reverse=True):
        mono = _latex_monomial(e)
        coeff = _latex_coeff(c, bare=bool(mono))
        if coeff in ("", "-"):
            parts.append(coeff + mono)
        else:
            parts.append(coeff + (("\\," + mono) if mono else ""))
    out = parts[0]
    for t in parts[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


def ratfunc_latex(f: RatFunc) -> str:
    if f.den.is_one():
        return spoly_latex(f.num)
    return f"\\frac{{{spoly_latex(f.num)}}}{{{spoly_latex(f.den)}}}"


_LATEX_COMMANDS = {"frac", "left", "right", ","}


def latex_is_well_formed(text: str) -> bool:
    """Syntactic check: balanced braces/parens/brackets and only known commands."""
    depth = {"{": 0, "(": 0, "[": 0}
    closers = {"}": "{", ")": "(", "]": "["}
    stack = []
    k = 0
    while k < len(text):
        ch = text[k]
        if ch == "\\":
            m = re.match(r"\\([A-Za-z]+|,)", text[k:])
            if not m or m.group(1) not in _LATEX_COMMANDS:
                return False
            k += m.end()
            continue
        if ch in depth:
            stack.append(ch)
        elif ch in closers:
            if not stack or stack[-1] != closers[ch]:
                return False
            stack.pop()
        k += 1
    return not stack


# -- plain parser ---------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([isq])|(\*\*|[-+*/^()]))")


def _tokenize(text: str) -> list[str]:
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
        tok = m.group(1) or m.group(2) or m.group(3)
        out.append("^" if tok == "**" else tok)
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens: list[str]) -> None:
        self.toks = tokens
        self.k = 0

    def peek(self) -> str | None:
        return self.toks[self.k] if self.k < len(self.toks) else None

    def take(self, expected: str | None = None) -> str:
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise ParseError(f"expected {expected or 'token'}, got {tok!r}")
        self.k += 1
        return tok

    def expr(self) -> RatFunc:
        val = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self) -> RatFunc:
        val = self.unary()
        while self.peek() in ("*", "/"):
            op = self.take()
            rhs = self.unary()
            if op == "*":
                val = val * rhs
            else:
                if not rhs:
                    raise ParseError("division by zero in expression")
                val = val / rhs
        return val

    def unary(self) -> RatFunc:
        tok = self.peek()
        if tok == "-":
            self.take()
            return -self.unary()
        if tok == "+":
            self.take()
            return self.unary()
        return self.power()

    def exponent(self) -> int:
        if self.peek() == "(":
            self.take("(")
            e = self.exponent()
            self.take(")")
            return e
        sign = 1
        while self.peek() in ("-", "+"):
            if self.take() == "-":
                sign = -sign
        tok = self.take()
        if not tok.isdigit():
            raise ParseError(f"exponent must be an integer, got {tok!r}")
        return sign * int(tok)

    def power(self) -> RatFunc:
        base = self.atom()
        if self.peek() == "^":
            self.take()
            e = self.exponent()
            if e < 0 and not base:
                raise ParseError("negative power of zero")
            base = base ** e
        return base

    def atom(self) -> RatFunc:
        tok = self.take()
        if tok.isdigit():
            return RatFunc.const(int(tok))
        if tok == "i":
            return RatFunc.const(GaussRat(0, 1))
        if tok == "s":
            return RatFunc.monomial(1, 1)
        if tok == "q":
            return RatFunc.monomial(1, 2)
        if tok == "(":
            val = self.expr()
            self.take(")")
            return val
        raise ParseError(f"unexpected token {tok!r}")


def parse_plain(text: str) -> RatFunc:
    """Parse the plain syntax into a canonical :class:`RatFunc`."""
    p = _Parser(_tokenize(text))
    if p.peek() is None:
        raise ParseError("empty expression")
    val = p.expr()
    if p.peek() is not None:
        raise ParseError(f"trailing input at token {p.peek()!r}")
    return val
