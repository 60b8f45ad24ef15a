"""Chebyshev polynomials of the second kind, their alternating variants, and
their appearance in the real and imaginary parts of ``[n i]_q``.

With ``z = q/(q^2 - q + 1)`` write ``[n i]_q = A_n + B_n [i]_q`` and set

    I_n = B_n,        R_n = -A_n (q^2 - q + 1) / (2 (q - 1)).

Then ``I_{n+1}(z)`` is the variant-I polynomial and ``R_{n+2} - R_n`` the
variant-II polynomial.  The variants are tridiagonal determinants (continuants)
whose diagonal alternates between 2x and 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from gmpy2 import mpq

from .field.gaussrat import GaussRat
from .field.ratfunc import RatFunc
from .qnum import decompose, q_gaussian_orbit

_q = RatFunc.monomial(1, 2)
_D = _q * _q - _q + 1
Z = _q / _D


class UniPoly:
    """Dense univariate polynomial with exact rational coefficients (low -> high)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()) -> None:
        c = [mpq(x) for x in coeffs]
        while c and not c[-1]:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def x(cls) -> UniPoly:
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = UniPoly((other,))
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other) -> UniPoly:
        other = _ucoerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return UniPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> UniPoly:
        return UniPoly(-x for x in self.coeffs)

    def __sub__(self, other) -> UniPoly:
        return self + (-_ucoerce(other))

    def __rsub__(self, other) -> UniPoly:
        return _ucoerce(other) - self

    def __mul__(self, other) -> UniPoly:
        other = _ucoerce(other)
        if not self or not other:
            return UniPoly()
        out = [mpq(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for j, a in enumerate(self.coeffs):
            if a:
                for k, b in enumerate(other.coeffs):
                    out[j + k] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def eval_at(self, x):
        """Horner evaluation at a number or a RatFunc."""
        acc = RatFunc() if isinstance(x, RatFunc) else 0
        for c in reversed(self.coeffs):
            acc = acc * x + (RatFunc.const(GaussRat(c)) if isinstance(x, RatFunc) else c)
        return acc

    def nonzero_coeffs(self) -> list[int]:
        """Nonzero coefficients in ascending degree, as integers when integral."""
        return [int(c) if c.denominator == 1 else c for c in self.coeffs if c]

    def __str__(self) -> str:
        return self.to_str("x")

    def to_str(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        out = ""
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mag = abs(c)
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}{mono}")
            if not out:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out

    def __repr__(self) -> str:
        return f"UniPoly({self})"


def _ucoerce(x) -> UniPoly:
    return x if isinstance(x, UniPoly) else UniPoly((x,))


_X = UniPoly.x()
_TWO_X = 2 * _X
_TWO = UniPoly((2,))


def _diagonal(kind: str, k: int) -> UniPoly:
    """Entry k (1-based) of the continuant diagonal for a given kind."""
    if kind == "classical":
        return _TWO_X
    if kind == "I":
        return _TWO_X if k % 2 else _TWO
    if kind == "II":
        return _TWO if k % 2 else _TWO_X
    raise ValueError(f"unknown kind {kind!r}; expected 'classical', 'I' or 'II'")


@lru_cache(maxsize=None)
def _sequence(kind: str, n: int) -> UniPoly:
    if n < 0:
        raise ValueError("Chebyshev index must be nonnegative")
    prev, cur = UniPoly(), UniPoly((1,))
    for k in range(1, n + 1):
        prev, cur = cur, _diagonal(kind, k) * cur - prev
    return cur


def cheb_U(n: int) -> UniPoly:
    """U_n with U_0 = 1, U_1 = 2x, U_{n+1} = 2x U_n - U_{n-1}."""
    return _sequence("classical", n)


def cheb_variant(kind: str, n: int) -> UniPoly:
    """The alternating variant: U~_n = a_n U~_{n-1} - U~_{n-2}, U~_0 = 1.

    For variant I the factor a_n is 2x at odd n and 2 at even n (so
    U~_1 = 2x); variant II swaps the two (so U~_1 = 2).
    """
    if kind not in ("I", "II"):
        raise ValueError(f"unknown variant {kind!r}; expected 'I' or 'II'")
    return _sequence(kind, n)


def tridiagonal_det(diagonal: list[UniPoly]) -> UniPoly:
    """Determinant of the tridiagonal matrix with the given diagonal and unit off-diagonals.

    Cofactor expansion along the last row gives D_k = d_k D_{k-1} - D_{k-2}.
    """
    prev, cur = UniPoly(), UniPoly((1,))
    for d in diagonal:
        prev, cur = cur, d * cur - prev
    return cur


def continuant_check(n: int) -> bool:
    """The n x n continuant equals U_n, U~^I_n and U~^II_n for the three diagonals."""
    if n < 1:
        raise ValueError("continuant size must be at least 1")
    for kind in ("classical", "I", "II"):
        det = tridiagonal_det([_diagonal(kind, k) for k in range(1, n + 1)])
        expected = cheb_U(n) if kind == "classical" else cheb_variant(kind, n)
        if det != expected:
            return False
    return True


# -- real and imaginary parts of [n i]_q ------------------------------------------

@lru_cache(maxsize=None)
def im_re_parts(n: int) -> tuple[RatFunc, RatFunc]:
    """(I_n, R_n) as exact rational functions of q."""
    a, b = decompose(q_gaussian_orbit(0, n).value)
    return b, -a * _D / (2 * (_q - 1))


def I_part(n: int) -> RatFunc:
    return im_re_parts(n)[0]


def R_part(n: int) -> RatFunc:
    return im_re_parts(n)[1]


def in_z(f: RatFunc, max_degree: int = 256) -> UniPoly:
    """Write f(q) = P(z) with z = q/(q^2-q+1) and P a polynomial; raises ValueError otherwise.

    Uses z(0) = 0: the constant term of P is f(0) and (f - f(0))/z recurses.
    """
    if f.neg_s() != f:
        raise ValueError("not a function of q alone")
    coeffs = []
    zinv = Z.inverse()
    for _ in range(max_degree + 1):
        if not f:
            return UniPoly(coeffs)
        try:
            c = f.specialize(0)
        except ZeroDivisionError:
            raise ValueError("pole at q = 0, so not a polynomial in z") from None
        if c.im:
            raise ValueError("not a polynomial in z with rational coefficients")
        coeffs.append(c.re)
        f = (f - RatFunc.const(c)) * zinv
    raise ValueError("not a polynomial in z of bounded degree")


def triangle_row(n: int) -> list[int]:
    """Nonzero z-coefficients of I_n in ascending degree."""
    return in_z(I_part(n)).nonzero_coeffs()


def verify_cheb_relation(n: int) -> bool:
    """I_{n+1}(z) = U~^I_n(z) and R_{n+2}(z) - R_n(z) = U~^II_n(z) as identities in q."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    im_ok = I_part(n + 1) == cheb_variant("I", n).eval_at(Z)
    re_ok = R_part(n + 2) - R_part(n) == cheb_variant("II", n).eval_at(Z)
    return im_ok and re_ok


def check_im_recurrence(n: int) -> bool:
    """I_{n+1} = 2z I_n - I_{n-1} for odd n, 2 I_n - I_{n-1} for even n."""
    factor = 2 * Z if n % 2 else RatFunc.const(2)
    return I_part(n + 1) == factor * I_part(n) - I_part(n - 1)


def check_re_recurrence(n: int, odd_shift: int = -1) -> bool:
    """R_{n+1} = 2z R_n - R_{n-1} + odd_shift for odd n, 2 R_n - R_{n-1} for even n.

    The stated form of this recurrence has ``odd_shift = -1``.
    """
    if n % 2:
        rhs = 2 * Z * R_part(n) - R_part(n - 1) + odd_shift
    else:
        rhs = 2 * R_part(n) - R_part(n - 1)
    return R_part(n + 1) == rhs


@dataclass(frozen=True)
class RecurrenceReport:
    im: dict[int, bool]
    re_stated: dict[int, bool]
    re_plus_one: dict[int, bool]

    @property
    def im_ok(self) -> bool:
        return all(self.im.values())

    @property
    def re_stated_ok(self) -> bool:
        return all(self.re_stated.values())

    @property
    def re_plus_one_ok(self) -> bool:
        return all(self.re_plus_one.values())


def recurrence_report(max_n: int) -> RecurrenceReport:
    ns = range(1, max_n + 1)
    return RecurrenceReport(
        {n: check_im_recurrence(n) for n in ns},
        {n: check_re_recurrence(n, -1) for n in ns},
        {n: check_re_recurrence(n, +1) for n in ns},
    )


__all__ = [
    "UniPoly", "cheb_U", "cheb_variant", "tridiagonal_det", "continuant_check",
    "im_re_parts", "I_part", "R_part", "in_z", "triangle_row", "verify_cheb_relation",
    "check_im_recurrence", "check_re_recurrence", "recurrence_report", "RecurrenceReport", "Z",
]
