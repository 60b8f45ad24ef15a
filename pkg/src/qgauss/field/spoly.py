"""Laurent polynomials in the formal variable s with Gaussian-rational coefficients.

Stored densely: ``low`` is the lowest exponent and ``_re[k]``, ``_im[k]`` hold the
coefficient of ``s**(low + k)``.  Both ends of the dense arrays are nonzero, and
the zero polynomial has empty arrays.
"""

from __future__ import annotations

from collections.abc import Iterator, Mapping

from gmpy2 import mpq

from .gaussrat import ONE, ZERO, GaussRat, to_mpq

_Z = mpq(0)


def _trim(low: int, re: list, im: list) -> tuple[int, tuple, tuple]:
    hi = len(re)
    while hi and not re[hi - 1] and not im[hi - 1]:
        hi -= 1
    lo = 0
    while lo < hi and not re[lo] and not im[lo]:
        lo += 1
    if lo == hi:
        return 0, (), ()
    return low + lo, tuple(re[lo:hi]), tuple(im[lo:hi])


def _conv(a, b) -> list:
    """Real convolution of two coefficient sequences."""
    if not a or not b:
        return []
    out = [_Z] * (len(a) + len(b) - 1)
    nz_b = [(j, y) for j, y in enumerate(b) if y]
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in nz_b:
            out[i + j] += x * y
    return out


def _any(seq) -> bool:
    for x in seq:
        if x:
            return True
    return False


class SPoly:
    """A Laurent polynomial in s over Q(i).  Immutable."""

    __slots__ = ("low", "_re", "_im", "_hash")

    def __init__(self, coeffs: Mapping[int, object] | None = None) -> None:
        if not coeffs:
            low, re, im = 0, (), ()
        else:
            items = {int(e): GaussRat.coerce(c) for e, c in coeffs.items()}
            lo, hi = min(items), max(items)
            re = [_Z] * (hi - lo + 1)
            im = [_Z] * (hi - lo + 1)
            for e, c in items.items():
                re[e - lo] += c.re
                im[e - lo] += c.im
            low, re, im = _trim(lo, re, im)
        self._set(low, re, im)

    def _set(self, low, re, im) -> None:
        object.__setattr__(self, "low", low)
        object.__setattr__(self, "_re", re)
        object.__setattr__(self, "_im", im)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("SPoly is immutable")

    def __reduce__(self):
        return (SPoly, (self.coeffs,))

    @classmethod
    def _dense(cls, low: int, re, im) -> SPoly:
        obj = object.__new__(cls)
        obj._set(*_trim(low, list(re), list(im)))
        return obj

    @classmethod
    def const(cls, c) -> SPoly:
        c = GaussRat.coerce(c)
        return cls._dense(0, [c.re], [c.im])

    @classmethod
    def monomial(cls, c, e: int) -> SPoly:
        c = GaussRat.coerce(c)
        return cls._dense(e, [c.re], [c.im])

    # -- inspection -------------------------------------------------------
    @property
    def coeffs(self) -> dict[int, GaussRat]:
        """Exponent -> nonzero coefficient."""
        return dict(self.terms())

    def terms(self) -> Iterator[tuple[int, GaussRat]]:
        for k, (a, b) in enumerate(zip(self._re, self._im)):
            if a or b:
                yield self.low + k, GaussRat._raw(a, b)

    def __getitem__(self, e: int) -> GaussRat:
        k = e - self.low
        if 0 <= k < len(self._re):
            return GaussRat._raw(self._re[k], self._im[k])
        return ZERO

    def __bool__(self) -> bool:
        return bool(self._re)

    def is_zero(self) -> bool:
        return not self._re

    @property
    def deg(self) -> int:
        if not self._re:
            raise ValueError("degree of the zero polynomial")
        return self.low + len(self._re) - 1

    @property
    def width(self) -> int:
        """deg - low, the degree of the polynomial part."""
        return len(self._re) - 1

    @property
    def lc(self) -> GaussRat:
        return GaussRat._raw(self._re[-1], self._im[-1])

    @property
    def tc(self) -> GaussRat:
        """Coefficient of the lowest power of s."""
        return GaussRat._raw(self._re[0], self._im[0])

    def is_real(self) -> bool:
        return not _any(self._im)

    def is_const(self) -> bool:
        return not self._re or (len(self._re) == 1 and self.low == 0)

    def is_one(self) -> bool:
        return self.low == 0 and len(self._re) == 1 and self._re[0] == 1 and not self._im[0]

    def is_ordinary(self) -> bool:
        return not self._re or self.low >= 0

    # -- equality ----------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, SPoly):
            return self.low == other.low and self._re == other._re and self._im == other._im
        try:
            return self == SPoly.const(other) if other is not None else False
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.low, self._re, self._im)))
        return self._hash

    # -- ring operations --------------------------------------------------
    @staticmethod
    def coerce(x) -> SPoly:
        return x if isinstance(x, SPoly) else SPoly.const(x)

    def __neg__(self) -> SPoly:
        obj = object.__new__(SPoly)
        obj._set(self.low, tuple(-a for a in self._re), tuple(-b for b in self._im))
        return obj

    def _addsub(self, other: SPoly, sign: int) -> SPoly:
        if not other._re:
            return self
        if not self._re:
            return other if sign > 0 else -other
        lo = min(self.low, other.low)
        hi = max(self.deg, other.deg)
        re = [_Z] * (hi - lo + 1)
        im = [_Z] * (hi - lo + 1)
        off = self.low - lo
        for k, (a, b) in enumerate(zip(self._re, self._im)):
            re[off + k] = a
            im[off + k] = b
        off = other.low - lo
        if sign > 0:
            for k, (a, b) in enumerate(zip(other._re, other._im)):
                re[off + k] += a
                im[off + k] += b
        else:
            for k, (a, b) in enumerate(zip(other._re, other._im)):
                re[off + k] -= a
                im[off + k] -= b
        return SPoly._dense(lo, re, im)

    def __add__(self, other) -> SPoly:
        try:
            return self._addsub(SPoly.coerce(other), 1)
        except TypeError:
            return NotImplemented

    __radd__ = __add__

    def __sub__(self, other) -> SPoly:
        try:
            return self._addsub(SPoly.coerce(other), -1)
        except TypeError:
            return NotImplemented

    def __rsub__(self, other) -> SPoly:
        return SPoly.coerce(other)._addsub(self, -1)

    def scale(self, c) -> SPoly:
        c = GaussRat.coerce(c)
        if not c or not self._re:
            return SPoly()
        cr, ci = c.re, c.im
        if not ci:
            return SPoly._dense(self.low, [a * cr for a in self._re], [b * cr for b in self._im])
        re = [a * cr - b * ci for a, b in zip(self._re, self._im)]
        im = [a * ci + b * cr for a, b in zip(self._re, self._im)]
        return SPoly._dense(self.low, re, im)

    def __mul__(self, other) -> SPoly:
        if not isinstance(other, SPoly):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        if not self._re or not other._re:
            return SPoly()
        ar, ai, br, bi = self._re, self._im, other._re, other._im
        ai_nz, bi_nz = _any(ai), _any(bi)
        re = _conv(ar, br)
        if ai_nz and bi_nz:
            re = [x - y for x, y in zip(re, _conv(ai, bi))]
        n = len(re)
        if ai_nz and bi_nz:
            im = [x + y for x, y in zip(_conv(ar, bi), _conv(ai, br))]
        elif bi_nz:
            im = _conv(ar, bi)
        elif ai_nz:
            im = _conv(ai, br)
        else:
            im = [_Z] * n
        return SPoly._dense(self.low + other.low, re, im)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> SPoly:
        if not isinstance(k, int) or k < 0:
            if isinstance(k, int) and len(self._re) == 1:
                c = self.lc ** k
                return SPoly.monomial(c, self.low * k)
            return NotImplemented
        result = SPoly.const(ONE)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, k: int) -> SPoly:
        """Multiply by s**k."""
        if not self._re or not k:
            return self
        obj = object.__new__(SPoly)
        obj._set(self.low + k, self._re, self._im)
        return obj

    def strip_monomial(self) -> tuple[int, SPoly]:
        """Split into ``s**low * p`` with p an ordinary polynomial with nonzero constant term."""
        if not self._re:
            return 0, self
        return self.low, self.shift(-self.low)

    # -- substitutions ----------------------------------------------------
    def subst_inverse(self) -> SPoly:
        """s -> s^-1."""
        if not self._re:
            return self
        obj = object.__new__(SPoly)
        obj._set(-self.deg, self._re[::-1], self._im[::-1])
        return obj

    def neg_s(self) -> SPoly:
        """s -> -s."""
        if not self._re:
            return self
        re, im = list(self._re), list(self._im)
        start = 1 if self.low % 2 == 0 else 0
        for k in range(start, len(re), 2):
            re[k] = -re[k]
            im[k] = -im[k]
        obj = object.__new__(SPoly)
        obj._set(self.low, tuple(re), tuple(im))
        return obj

    def conj(self) -> SPoly:
        """Conjugate every coefficient."""
        if not _any(self._im):
            return self
        obj = object.__new__(SPoly)
        obj._set(self.low, self._re, tuple(-b for b in self._im))
        return obj

    def monic(self) -> SPoly:
        if not self._re:
            return self
        lc = self.lc
        if lc == 1:
            return self
        return self.scale(lc.inverse())

    def derivative(self) -> SPoly:
        if not self._re:
            return self
        re = [a * (self.low + k) for k, a in enumerate(self._re)]
        im = [b * (self.low + k) for k, b in enumerate(self._im)]
        return SPoly._dense(self.low - 1, re, im)

    def real_part(self) -> SPoly:
        """Polynomial of real parts of the coefficients."""
        return SPoly._dense(self.low, self._re, [_Z] * len(self._re))

    def imag_part(self) -> SPoly:
        """Polynomial of imaginary parts of the coefficients (as real numbers)."""
        return SPoly._dense(self.low, self._im, [_Z] * len(self._im))

    # -- evaluation -------------------------------------------------------
    def eval_numeric(self, s0: complex) -> complex:
        """Horner evaluation in floating point."""
        if not self._re:
            return 0j
        acc = 0j
        for a, b in zip(reversed(self._re), reversed(self._im)):
            acc = acc * s0 + complex(float(a), float(b))
        if self.low:
            acc *= complex(s0) ** self.low
        return acc

    def eval_exact(self, x) -> GaussRat:
        x = GaussRat.coerce(x)
        if not self._re:
            return ZERO
        if self.low < 0 and not x:
            raise ZeroDivisionError("negative power of s evaluated at 0")
        acc = ZERO
        for a, b in zip(reversed(self._re), reversed(self._im)):
            acc = acc * x + GaussRat._raw(a, b)
        if self.low:
            acc = acc * x ** self.low
        return acc

    # -- division (ordinary polynomials) -----------------------------------
    def divmod(self, other: SPoly) -> tuple[SPoly, SPoly]:
        """Euclidean division; both operands must be ordinary polynomials."""
        if not other._re:
            raise ZeroDivisionError("polynomial division by zero")
        if not self.is_ordinary() or not other.is_ordinary():
            raise ValueError("divmod requires ordinary (non-Laurent) polynomials")
        q_re, q_im, r_re, r_im = _divmod_dense(
            self.low, self._re, self._im, other.low, other._re, other._im)
        return SPoly._dense(0, q_re, q_im), SPoly._dense(0, r_re, r_im)

    def exact_div(self, other: SPoly) -> SPoly:
        """Laurent division that must leave no remainder."""
        if not other._re:
            raise ZeroDivisionError("polynomial division by zero")
        if not self._re:
            return self
        a_low, a = self.strip_monomial()
        b_low, b = other.strip_monomial()
        q, r = a.divmod(b)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q.shift(a_low - b_low)

    # -- misc ---------------------------------------------------------------
    def to_json_obj(self) -> dict[str, list[str]]:
        return {str(e): list(c.to_pair_str()) for e, c in self.terms()}

    @classmethod
    def from_json_obj(cls, obj: Mapping[str, object]) -> SPoly:
        return cls({int(e): GaussRat.from_pair_str(v) for e, v in obj.items()})

    def __repr__(self) -> str:
        return f"SPoly({self.coeffs!r})"

    def __str__(self) -> str:
        from ..render import spoly_plain

        return spoly_plain(self)


def _divmod_dense(a_low, a_re, a_im, b_low, b_re, b_im):
    """Long division of dense ordinary polynomials over Q(i)."""
    a_re = [_Z] * a_low + list(a_re)
    a_im = [_Z] * a_low + list(a_im)
    b_re = [_Z] * b_low + list(b_re)
    b_im = [_Z] * b_low + list(b_im)
    db = len(b_re) - 1
    lr, li = b_re[-1], b_im[-1]
    n = lr * lr + li * li
    ir, ii = lr / n, -li / n
    if len(a_re) <= db:
        return [], [], a_re, a_im
    q_re = [_Z] * (len(a_re) - db)
    q_im = [_Z] * (len(a_re) - db)
    b_real = not _any(b_im)
    nz = [(j, x, y) for j, (x, y) in enumerate(zip(b_re, b_im)) if x or y]
    for k in range(len(a_re) - 1, db - 1, -1):
        cr, ci = a_re[k], a_im[k]
        if not cr and not ci:
            continue
        tr = cr * ir - ci * ii
        ti = cr * ii + ci * ir
        sh = k - db
        q_re[sh], q_im[sh] = tr, ti
        if b_real:
            for j, x, _ in nz:
                if tr:
                    a_re[sh + j] -= tr * x
                if ti:
                    a_im[sh + j] -= ti * x
        else:
            for j, x, y in nz:
                a_re[sh + j] -= tr * x - ti * y
                a_im[sh + j] -= tr * y + ti * x
    return q_re, q_im, a_re[:db], a_im[:db]


S = SPoly.monomial(ONE, 1)
ONE_POLY = SPoly.const(ONE)
ZERO_POLY = SPoly()

__all__ = ["SPoly", "S", "ONE_POLY", "ZERO_POLY", "to_mpq"]
