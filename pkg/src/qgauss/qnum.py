"""q-integers, q-rationals and q-Gaussian integers.

q-Gaussian integers are orbit points ``[m + n i]_q = T_q^m U_q^n (0)``.  Their
imaginary part is a Laurent polynomial in the parameter

    Q = (2 i s (q - 1) - (q^2 - 3q + 1)) / (q^2 - q + 1)

times ``[i]_q = i s^-1``; see :func:`q_rep` and :func:`q_gaussian_closed`.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from gmpy2 import mpq

from .errors import DecompositionError
from .field.gaussrat import GaussRat
from .field.polygcd import poly_gcd
from .field.ratfunc import RatFunc
from .field.spoly import ONE_POLY, SPoly
from .moebius import generator, op_apply

_s = RatFunc.monomial(1, 1)
_q = RatFunc.monomial(1, 2)
I_Q = RatFunc.monomial(GaussRat(0, 1), -1)  # [i]_q


class QPoly:
    """Laurent polynomial in Q with exact rational coefficients (zeros never stored)."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None) -> None:
        c = {}
        for e, v in dict(coeffs or {}).items():
            v = mpq(v)
            if v:
                c[int(e)] = v
        self._c = c

    @classmethod
    def monomial(cls, e: int, c=1) -> QPoly:
        return cls({e: c})

    @property
    def coeffs(self) -> dict[int, mpq]:
        return dict(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = QPoly({0: other})
        if not isinstance(other, QPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    @property
    def low(self) -> int:
        return min(self._c) if self._c else 0

    @property
    def high(self) -> int:
        return max(self._c) if self._c else 0

    def __neg__(self) -> QPoly:
        return QPoly({e: -v for e, v in self._c.items()})

    def __add__(self, other) -> QPoly:
        other = _qcoerce(other)
        out = dict(self._c)
        for e, v in other._c.items():
            out[e] = out.get(e, 0) + v
        return QPoly(out)

    __radd__ = __add__

    def __sub__(self, other) -> QPoly:
        return self + (-_qcoerce(other))

    def __rsub__(self, other) -> QPoly:
        return _qcoerce(other) - self

    def __mul__(self, other) -> QPoly:
        other = _qcoerce(other)
        out: dict[int, mpq] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + v1 * v2
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> QPoly:
        if k < 0:
            if len(self._c) != 1:
                raise ValueError("negative powers exist only for monomials")
            (e, v), = self._c.items()
            return QPoly({e * k: v ** k})
        out = QPoly({0: 1})
        for _ in range(k):
            out = out * self
        return out

    def exact_div(self, other) -> QPoly:
        """Exact Laurent division; raises ArithmeticError on a remainder."""
        other = _qcoerce(other)
        if not other:
            raise ZeroDivisionError("division by the zero Q-polynomial")
        if not self._c:
            return QPoly()
        a = [mpq(0)] * (self.high - self.low + 1)
        for e, v in self._c.items():
            a[e - self.low] = v
        b = [mpq(0)] * (other.high - other.low + 1)
        for e, v in other._c.items():
            b[e - other.low] = v
        if len(a) < len(b):
            raise ArithmeticError("Q-polynomial division is not exact")
        quot = [mpq(0)] * (len(a) - len(b) + 1)
        for k in range(len(quot) - 1, -1, -1):
            c = a[k + len(b) - 1] / b[-1]
            quot[k] = c
            if c:
                for j, bj in enumerate(b):
                    a[k + j] -= c * bj
        if any(a):
            raise ArithmeticError("Q-polynomial division is not exact")
        shift = self.low - other.low
        return QPoly({k + shift: c for k, c in enumerate(quot)})

    def subst_inverse(self) -> QPoly:
        """Q -> Q^-1."""
        return QPoly({-e: v for e, v in self._c.items()})

    def eval_at(self, x: RatFunc) -> RatFunc:
        """Exact value at Q = x, with one common denominator and cheap cancellation."""
        if not self._c:
            return RatFunc()
        x = RatFunc.coerce(x)
        lo, hi = self.low, self.high
        pos, neg = max(hi, 0), max(-lo, 0)
        n, d = x.num, x.den
        if neg and not n:
            raise ZeroDivisionError("negative power of zero")
        # sum_j c_j n^(j+neg) d^(pos-j) over n^neg d^pos
        total = SPoly()
        for j, c in self._c.items():
            total = total + (n ** (j + neg) * d ** (pos - j)).scale(GaussRat(c))
        if not total:
            return RatFunc()
        k, n0 = n.strip_monomial() if neg else (0, ONE_POLY)
        den = n0 ** neg * d ** pos
        total = total.shift(-k * neg)
        base = n0 * d if neg else d
        while not den.is_const():
            g = poly_gcd(poly_gcd(total, base), den)
            if g.is_one():
                break
            total = total.exact_div(g)
            den = den.exact_div(g)
        inv = den.lc.inverse()
        return RatFunc._raw(total.scale(inv), den.scale(inv))

    def __call__(self, x) -> RatFunc:
        return self.eval_at(x)

    def __str__(self) -> str:
        if not self._c:
            return "0"
        out = ""
        for e in sorted(self._c):
            v = self._c[e]
            mono = "" if e == 0 else ("Q" if e == 1 else f"Q^{e}")
            mag = abs(v)
            if mono and mag == 1:
                body = mono
            else:
                body = str(mag) + mono
            sign = "-" if v < 0 else "+"
            out += body if not out and sign == "+" else sign + body
        return out

    def __repr__(self) -> str:
        return f"QPoly({str(self)!r})"


def _qcoerce(x) -> QPoly:
    if isinstance(x, QPoly):
        return x
    return QPoly({0: x})


# -- q-integers and q-rationals ------------------------------------------------

def euler_q_int(n: int) -> RatFunc:
    """[n]_q = (1 - q^n)/(1 - q) as a Laurent polynomial in q."""
    if n >= 0:
        return RatFunc.coerce(SPoly({2 * k: 1 for k in range(n)}))
    return RatFunc.coerce(SPoly({-2 * k: -1 for k in range(1, -n + 1)}))


def _q_frac(x: Fraction) -> RatFunc:
    k = x.numerator // x.denominator
    f = x - k
    if f:
        # [f]_q = S_q([-1/f]_q) = -1/(q [-1/f]_q)
        inner = _q_frac(-1 / f)
        base = -(_q * inner).inverse()
    else:
        base = RatFunc()
    if k == 0:
        return base
    # T_q^k: x -> q^k x + [k]_q
    return RatFunc.monomial(1, 2 * k) * base + euler_q_int(k)


def q_rational(p: int, r: int) -> RatFunc:
    """[p/r]_q by Euclidean descent on the defining T_q and S_q recurrences."""
    if r == 0:
        raise ZeroDivisionError("q_rational: zero denominator")
    if r < 0:
        raise ValueError("q_rational: denominator must be positive")
    if gcd(p, r) != 1:
        raise ValueError(f"q_rational: {p}/{r} is not in lowest terms")
    return _q_frac(Fraction(p, r))


# -- q-Gaussian integers --------------------------------------------------------

@dataclass(frozen=True)
class GaussianQInt:
    m: int
    n: int
    value: RatFunc

    def classical(self) -> GaussRat:
        """Exact value at s = 1."""
        return self.value.specialize(1)


class _OrbitCache:
    """U_q^n(0) for a contiguous range of n, extended on demand under a lock."""

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._pos = [RatFunc()]
        self._neg = [RatFunc()]

    def get(self, n: int) -> RatFunc:
        with self._lock:
            seq, k = (self._pos, n) if n >= 0 else (self._neg, -n)
            if k >= len(seq):
                op = generator("U") if n >= 0 else _u_inverse()
                x = seq[-1]
                for _ in range(len(seq), k + 1):
                    x = op_apply(op, x)
                    seq.append(x)
            return seq[k]


def _u_inverse():
    from .moebius import op_inverse

    return op_inverse(generator("U"))


_ORBITS = _OrbitCache()


def _translate(x: RatFunc, m: int) -> RatFunc:
    if m == 0:
        return x
    return RatFunc.monomial(1, 2 * m) * x + euler_q_int(m)


def q_gaussian_orbit(m: int, n: int) -> GaussianQInt:
    """[m + n i]_q = T_q^m U_q^n (0), computed by exact iteration."""
    return GaussianQInt(m, n, _translate(_ORBITS.get(n), m))


def Q_param() -> RatFunc:
    return _Q


_D = _q * _q - _q + 1
_Q = (2 * RatFunc.const(GaussRat(0, 1)) * _s * (_q - 1) - (_q * _q - 3 * _q + 1)) / _D


def q_bracket(n: int) -> QPoly:
    """[n]_Q = (1 - Q^n)/(1 - Q) expanded as a Laurent polynomial."""
    one_minus = QPoly({0: 1, 1: -1})
    return (QPoly({0: 1}) - QPoly.monomial(n)).exact_div(one_minus)


def q_rep(n: int) -> QPoly:
    """P_n(Q) with [n i]_q = P_n(Q) [i]_q."""
    half = (n + 1) // 2
    two = QPoly({0: 1, 1: 1})
    p = two * q_bracket(half)
    if n % 2:
        p = p - QPoly.monomial(half)
    return p


def q_gaussian_closed(m: int, n: int) -> RatFunc:
    """Closed form q^m P_n(Q) [i]_q + [m]_q."""
    return _translate(q_rep(n).eval_at(_Q) * I_Q, m)


def decompose(x: RatFunc) -> tuple[RatFunc, RatFunc]:
    """Split x = A(q) + B(q) [i]_q with A, B real rational functions of q."""
    x = RatFunc.coerce(x)
    num, den = x.num, x.den
    if not (den.is_real() and _is_even(den)):
        if not den.is_real():
            c = den.conj()
            num, den = num * c, den * c
        if not _is_even(den):
            c = den.neg_s()
            num, den = num * c, den * c
    a_terms, b_terms = {}, {}
    for e, c in num.terms():
        if e % 2 == 0:
            if c.im:
                raise DecompositionError(f"non-real coefficient at s^{e}", monomial=(e, str(c)))
            a_terms[e] = c
        else:
            if c.re:
                raise DecompositionError(f"non-imaginary coefficient at s^{e}", monomial=(e, str(c)))
            b_terms[e + 1] = GaussRat(c.im, 0)
    A = RatFunc(SPoly(a_terms), den)
    B = RatFunc(SPoly(b_terms), den)
    if A + B * I_Q != x:
        raise ArithmeticError("decomposition failed to reassemble")
    return A, B


def _is_even(p: SPoly) -> bool:
    return all(e % 2 == 0 for e, _ in p.terms())


def check_conjugation(n: int) -> bool:
    """[-n i]_q = conj([n i]_q) and P_{-n}(Q) = -P_n(Q^-1)."""
    orbit_ok = q_gaussian_orbit(0, -n).value == q_gaussian_orbit(0, n).value.conj_i()
    rep_ok = q_rep(-n) == -q_rep(n).subst_inverse()
    return orbit_ok and rep_ok


__all__ = [
    "QPoly", "GaussianQInt", "euler_q_int", "q_rational", "q_gaussian_orbit", "Q_param",
    "q_bracket", "q_rep", "q_gaussian_closed", "decompose", "check_conjugation", "I_Q",
]
