"""Exact Gaussian rationals a + b*i with a, b in Q."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from gmpy2 import is_square, isqrt, mpq, mpz

_ZERO = mpq(0)
_ONE = mpq(1)


def to_mpq(x) -> mpq:
    """Coerce an int, Fraction, mpq or ``"p/q"`` string to an exact ``mpq``."""
    if type(x) is type(_ZERO):
        return x
    if isinstance(x, (int, Rational)):
        return mpq(x.numerator, x.denominator) if isinstance(x, Fraction) else mpq(x)
    if isinstance(x, str):
        return mpq(Fraction(x.strip()))
    if type(x) is type(mpz(0)):
        return mpq(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def rational_str(x) -> str:
    """Render an exact rational as ``"p"`` or ``"p/q"``."""
    x = to_mpq(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _rational_sqrt(x: mpq) -> mpq | None:
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    if not (is_square(n) and is_square(d)):
        return None
    return mpq(isqrt(n), isqrt(d))


class GaussRat:
    """An element of Q(i). Immutable; components are kept as reduced ``mpq``."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0) -> None:
        object.__setattr__(self, "re", to_mpq(re))
        object.__setattr__(self, "im", to_mpq(im))

    @classmethod
    def _raw(cls, re: mpq, im: mpq) -> GaussRat:
        obj = object.__new__(cls)
        object.__setattr__(obj, "re", re)
        object.__setattr__(obj, "im", im)
        return obj

    @classmethod
    def coerce(cls, x) -> GaussRat:
        if isinstance(x, GaussRat):
            return x
        if isinstance(x, complex):
            raise TypeError("floating complex values are not exact; pass GaussRat(re, im)")
        return cls._raw(to_mpq(x), _ZERO)

    def __setattr__(self, name, value):
        raise AttributeError("GaussRat is immutable")

    def __reduce__(self):
        return (GaussRat, (Fraction(int(self.re.numerator), int(self.re.denominator)),
                           Fraction(int(self.im.numerator), int(self.im.denominator))))

    # -- predicates -------------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def is_real(self) -> bool:
        return not self.im

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussRat):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Rational)) or type(other) is type(_ZERO):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    # -- arithmetic -------------------------------------------------------
    def __neg__(self) -> GaussRat:
        return GaussRat._raw(-self.re, -self.im)

    def __pos__(self) -> GaussRat:
        return self

    def __add__(self, other) -> GaussRat:
        try:
            o = GaussRat.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussRat._raw(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other) -> GaussRat:
        try:
            o = GaussRat.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussRat._raw(self.re - o.re, self.im - o.im)

    def __rsub__(self, other) -> GaussRat:
        try:
            o = GaussRat.coerce(other)
        except TypeError:
            return NotImplemented
        return o - self

    def __mul__(self, other) -> GaussRat:
        try:
            o = GaussRat.coerce(other)
        except TypeError:
            return NotImplemented
        a, b, c, d = self.re, self.im, o.re, o.im
        return GaussRat._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def norm(self) -> mpq:
        """Field norm a^2 + b^2."""
        return self.re * self.re + self.im * self.im

    def inverse(self) -> GaussRat:
        n = self.norm()
        if not n:
            raise ZeroDivisionError("inverse of zero in Q(i)")
        return GaussRat._raw(self.re / n, -self.im / n)

    def __truediv__(self, other) -> GaussRat:
        try:
            o = GaussRat.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other) -> GaussRat:
        return GaussRat.coerce(other) * self.inverse()

    def __pow__(self, k: int) -> GaussRat:
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        result = ONE
        k = abs(k)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj(self) -> GaussRat:
        return GaussRat._raw(self.re, -self.im)

    def sqrt(self) -> GaussRat | None:
        """Square root in Q(i), or None when ``self`` is not a square there.

        Of the two roots, returns the one with positive real part
        (positive imaginary part when the real part vanishes).
        """
        if not self:
            return ZERO
        a, b = self.re, self.im
        r = _rational_sqrt(a * a + b * b)
        if r is None:
            return None
        x = _rational_sqrt((a + r) / 2)
        if x is None:
            return None
        if x:
            root = GaussRat._raw(x, b / (2 * x))
        else:
            y = _rational_sqrt((r - a) / 2)
            if y is None:
                return None
            root = GaussRat._raw(_ZERO, y)
        assert root * root == self
        return root

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def to_pair_str(self) -> tuple[str, str]:
        """``("p/q", "p/q")`` with explicit denominators, as used by the JSON form."""
        return (f"{self.re.numerator}/{self.re.denominator}",
                f"{self.im.numerator}/{self.im.denominator}")

    @classmethod
    def from_pair_str(cls, pair) -> GaussRat:
        re, im = pair
        return cls(to_mpq(re), to_mpq(im))

    def __repr__(self) -> str:
        return f"GaussRat({rational_str(self.re)!r}, {rational_str(self.im)!r})"

    def __str__(self) -> str:
        if not self.im:
            return rational_str(self.re)
        im = "i" if self.im == 1 else "-i" if self.im == -1 else f"{rational_str(self.im)}*i"
        if not self.re:
            return im
        sign = "-" if self.im < 0 else "+"
        mag = "i" if abs(self.im) == 1 else f"{rational_str(abs(self.im))}*i"
        return f"({rational_str(self.re)}{sign}{mag})"


ZERO = GaussRat._raw(_ZERO, _ZERO)
ONE = GaussRat._raw(_ONE, _ZERO)
I = GaussRat._raw(_ZERO, _ONE)
