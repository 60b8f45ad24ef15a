"""The rational-function field Q(i)(s), with q = s**2.

Canonical form of ``num/den``:

* ``den`` is an ordinary polynomial with nonzero constant term and leading
  coefficient 1 (any power of s is moved into ``num``);
* ``num`` and ``den`` are coprime in Q(i)[s];
* zero is ``0/1``.

Equal field elements therefore have identical components.
"""

from __future__ import annotations

import json
from collections.abc import Mapping

from ..errors import PoleError
from .gaussrat import ONE, GaussRat
from .polygcd import poly_gcd
from .spoly import ONE_POLY, ZERO_POLY, SPoly

POLE_TOLERANCE = 1e-12


class RatFunc:
    """An element of Q(i)(s) in canonical form.  Immutable and hashable."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=ZERO_POLY, den=ONE_POLY) -> None:
        num = SPoly.coerce(num)
        den = SPoly.coerce(den)
        n, d = _normalize(num, den)
        self._set(n, d)

    def _set(self, num: SPoly, den: SPoly) -> None:
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    def __reduce__(self):
        return (RatFunc, (self.num, self.den))

    @classmethod
    def _raw(cls, num: SPoly, den: SPoly) -> RatFunc:
        obj = object.__new__(cls)
        obj._set(num, den)
        return obj

    @classmethod
    def coerce(cls, x) -> RatFunc:
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, SPoly):
            return cls._raw(x, ONE_POLY)
        return cls._raw(SPoly.const(x), ONE_POLY)

    @classmethod
    def const(cls, c) -> RatFunc:
        return cls._raw(SPoly.const(c), ONE_POLY)

    @classmethod
    def monomial(cls, c, e: int) -> RatFunc:
        return cls._raw(SPoly.monomial(c, e), ONE_POLY)

    # -- predicates -------------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.num)

    def is_zero(self) -> bool:
        return not self.num

    def is_polynomial(self) -> bool:
        """True when the value lies in Q(i)[s, s^-1]."""
        return self.den.is_one()

    def is_const(self) -> bool:
        return self.den.is_one() and self.num.is_const()

    def is_real(self) -> bool:
        return self.num.is_real() and self.den.is_real()

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatFunc):
            try:
                other = RatFunc.coerce(other)
            except TypeError:
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.num, self.den)))
        return self._hash

    # -- field operations ---------------------------------------------------
    def __neg__(self) -> RatFunc:
        return RatFunc._raw(-self.num, self.den)

    def __pos__(self) -> RatFunc:
        return self

    def _add(self, other: RatFunc, sign: int) -> RatFunc:
        a, b, c, d = self.num, self.den, other.num, other.den
        if not c:
            return self
        if not a:
            return other if sign > 0 else -other
        if sign < 0:
            c = -c
        if b == d:
            return _from_sum(a + c, b)
        if b.is_one():
            return RatFunc._raw(a * d + c, d)
        if d.is_one():
            return RatFunc._raw(a + c * b, b)
        g = poly_gcd(b, d)
        if g.is_one():
            return RatFunc._raw(a * d + c * b, b * d)
        b1 = b.exact_div(g)
        d1 = d.exact_div(g)
        t = a * d1 + c * b1
        if not t:
            return ZERO
        # gcd(t, b1*d1*g) == gcd(t, g) because t is coprime to b1 and d1
        h = poly_gcd(t, g)
        if h.is_one():
            return RatFunc._raw(t, b1 * d)
        return RatFunc._raw(t.exact_div(h), _monic_den(b1 * d.exact_div(h)))

    def __add__(self, other) -> RatFunc:
        try:
            return self._add(RatFunc.coerce(other), 1)
        except TypeError:
            return NotImplemented

    __radd__ = __add__

    def __sub__(self, other) -> RatFunc:
        try:
            return self._add(RatFunc.coerce(other), -1)
        except TypeError:
            return NotImplemented

    def __rsub__(self, other) -> RatFunc:
        return RatFunc.coerce(other)._add(self, -1)

    def __mul__(self, other) -> RatFunc:
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        a, b, c, d = self.num, self.den, other.num, other.den
        if not a or not c:
            return ZERO
        if b.is_one() and d.is_one():
            return RatFunc._raw(a * c, ONE_POLY)
        g1 = ONE_POLY if d.is_one() else poly_gcd(a, d)
        g2 = ONE_POLY if b.is_one() else poly_gcd(c, b)
        if not g1.is_one():
            a, d = a.exact_div(g1), d.exact_div(g1)
        if not g2.is_one():
            c, b = c.exact_div(g2), b.exact_div(g2)
        return RatFunc._raw(a * c, b * d)

    __rmul__ = __mul__

    def inverse(self) -> RatFunc:
        if not self.num:
            raise ZeroDivisionError("inverse of zero in Q(i)(s)")
        k, n0 = self.num.strip_monomial()
        lc = n0.lc
        inv = lc.inverse()
        return RatFunc._raw(self.den.shift(-k).scale(inv), n0.scale(inv))

    def __truediv__(self, other) -> RatFunc:
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> RatFunc:
        return RatFunc.coerce(other) * self.inverse()

    def __pow__(self, k: int) -> RatFunc:
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        # powers of coprime polynomials stay coprime
        return RatFunc._raw(self.num ** k, self.den ** k)

    # -- automorphisms ------------------------------------------------------
    def subst_q_inverse(self) -> RatFunc:
        """s -> s^-1 (equivalently q -> q^-1 on the principal branch)."""
        n = self.num.subst_inverse()
        d = self.den.subst_inverse()
        k, d0 = d.strip_monomial()
        inv = d0.lc.inverse()
        return RatFunc._raw(n.shift(-k).scale(inv), d0.scale(inv))

    def conj_i(self) -> RatFunc:
        """Conjugate every Gaussian coefficient (complex conjugation for real q)."""
        return RatFunc._raw(self.num.conj(), self.den.conj())

    def neg_s(self) -> RatFunc:
        """s -> -s (the other branch of q^(1/2))."""
        d = self.den.neg_s()
        inv = d.lc.inverse()
        return RatFunc._raw(self.num.neg_s().scale(inv), d.scale(inv))

    # -- evaluation -----------------------------------------------------------
    def eval_numeric(self, s0: complex) -> complex:
        d = self.den.eval_numeric(s0)
        if abs(d) <= POLE_TOLERANCE:
            raise PoleError(f"denominator vanishes at s = {s0!r} (|den| = {abs(d):.3g})", abs(d))
        return self.num.eval_numeric(s0) / d

    def specialize(self, s0) -> GaussRat:
        """Exact value at a Gaussian-rational point s = s0."""
        d = self.den.eval_exact(s0)
        if not d:
            raise PoleError(f"pole at s = {s0}")
        return self.num.eval_exact(s0) / d

    # -- serialization ----------------------------------------------------------
    def to_json_obj(self) -> dict:
        return {"num": self.num.to_json_obj(), "den": self.den.to_json_obj()}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> RatFunc:
        return cls(SPoly.from_json_obj(obj["num"]), SPoly.from_json_obj(obj["den"]))

    @classmethod
    def from_json(cls, text: str) -> RatFunc:
        return cls.from_json_obj(json.loads(text))

    def __repr__(self) -> str:
        return f"RatFunc({self.num!r}, {self.den!r})"

    def __str__(self) -> str:
        from ..render import ratfunc_plain

        return ratfunc_plain(self)


def _monic_den(d: SPoly) -> SPoly:
    return d.monic()


def _from_sum(t: SPoly, b: SPoly) -> RatFunc:
    if not t:
        return ZERO
    if b.is_one():
        return RatFunc._raw(t, b)
    h = poly_gcd(t, b)
    if h.is_one():
        return RatFunc._raw(t, b)
    return RatFunc._raw(t.exact_div(h), b.exact_div(h))


def _normalize(num: SPoly, den: SPoly) -> tuple[SPoly, SPoly]:
    if not den:
        raise ZeroDivisionError("rational function with zero denominator")
    if not num:
        return ZERO_POLY, ONE_POLY
    k, d0 = den.strip_monomial()
    n = num.shift(-k)
    g = poly_gcd(n, d0)
    if not g.is_one():
        n = n.exact_div(g)
        d0 = d0.exact_div(g)
    inv = d0.lc.inverse()
    if inv != 1:
        n = n.scale(inv)
        d0 = d0.scale(inv)
    return n, d0


def rf_normalize(num: SPoly, den: SPoly) -> RatFunc:
    """Canonical form of num/den; raises ZeroDivisionError when den == 0."""
    return RatFunc(num, den)


def rf_arith(op: str, x: RatFunc, y: RatFunc) -> RatFunc:
    """Exact field operation ``op`` in {add, sub, mul, div}."""
    x, y = RatFunc.coerce(x), RatFunc.coerce(y)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown field operation {op!r}")


def subst_q_inverse(f: RatFunc) -> RatFunc:
    return RatFunc.coerce(f).subst_q_inverse()


def conj_i(f: RatFunc) -> RatFunc:
    return RatFunc.coerce(f).conj_i()


def eval_numeric(f: RatFunc, s0: complex) -> complex:
    return RatFunc.coerce(f).eval_numeric(s0)


ZERO = RatFunc._raw(ZERO_POLY, ONE_POLY)
ONE_RF = RatFunc._raw(ONE_POLY, ONE_POLY)
S = RatFunc._raw(SPoly.monomial(ONE, 1), ONE_POLY)
Q = RatFunc._raw(SPoly.monomial(ONE, 2), ONE_POLY)
I = RatFunc._raw(SPoly.const(GaussRat(0, 1)), ONE_POLY)

__all__ = ["RatFunc", "rf_arith", "rf_normalize", "subst_q_inverse", "conj_i",
           "eval_numeric", "ZERO", "ONE_RF", "S", "Q", "I", "POLE_TOLERANCE"]
