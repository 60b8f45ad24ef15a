"""Projective linear-fractional operators on Q(i)(s), optionally inverting q.

An operator with ``flip == -1`` reads its argument at q^-1 before applying its
matrix: ``A(X)(q) = (a X(q^-1) + b) / (c X(q^-1) + d)``.  Composition follows

    (A o B).matrix = A.matrix * sigma(B.matrix)   if A.flip == -1
    (A o B).matrix = A.matrix * B.matrix          otherwise
    (A o B).flip   = A.flip * B.flip

where ``sigma`` substitutes s -> s^-1 entrywise.
"""

from __future__ import annotations

import cmath
import re
from dataclasses import dataclass, field
from functools import cached_property, reduce

from .errors import ParseError, UnsupportedOperation
from .field.gaussrat import ONE, GaussRat
from .field.polygcd import poly_gcd, poly_gcd_many, squarefree_decomposition
from .field.ratfunc import RatFunc
from .field.spoly import ONE_POLY, SPoly

Matrix = tuple[RatFunc, RatFunc, RatFunc, RatFunc]


class _Infinity:
    """The point at infinity of the projective line over Q(i)(s)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITY"

    __str__ = __repr__

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()

_s = RatFunc.monomial(ONE, 1)
_q = RatFunc.monomial(ONE, 2)
_i = RatFunc.const(GaussRat(0, 1))
_one = RatFunc.const(1)
_zero = RatFunc()


def _lcm(a: SPoly, b: SPoly) -> SPoly:
    if a.is_one():
        return b
    if b.is_one() or a == b:
        return a
    return a * b.exact_div(poly_gcd(a, b))


def normalize_entries(entries) -> tuple[SPoly, ...]:
    """Canonical projective representative of a tuple of RatFunc entries.

    Entries are scaled to coprime ordinary polynomials, the smallest power of s
    among them is 0, and the first nonzero entry has leading coefficient 1.
    """
    entries = [RatFunc.coerce(e) for e in entries]
    den = reduce(_lcm, (e.den for e in entries), ONE_POLY)
    polys = [e.num * den.exact_div(e.den) if e else SPoly() for e in entries]
    g = poly_gcd_many(polys)
    if not g.is_one():
        polys = [p.exact_div(g) if p else p for p in polys]
    low = min(p.low for p in polys if p)
    polys = [p.shift(-low) for p in polys]
    lead = next(p for p in polys if p).lc
    if lead != 1:
        inv = lead.inverse()
        polys = [p.scale(inv) for p in polys]
    return tuple(polys)


def proportional(m1, m2) -> bool:
    """True when two entry tuples differ by a nonzero scalar (cross-multiplication)."""
    m1 = [RatFunc.coerce(x) for x in m1]
    m2 = [RatFunc.coerce(x) for x in m2]
    if not any(m1) or not any(m2):
        return False
    n = len(m1)
    for j in range(n):
        for k in range(j + 1, n):
            if m1[j] * m2[k] != m1[k] * m2[j]:
                return False
    return True


def _sigma(m: Matrix) -> Matrix:
    return tuple(x.subst_q_inverse() for x in m)


def _matmul(x: Matrix, y: Matrix) -> Matrix:
    a, b, c, d = x
    e, f, g, h = y
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


class MoebiusOp:
    """A projective 2x2 matrix over Q(i)(s) together with a flip sign."""

    __slots__ = ("a", "b", "c", "d", "flip", "__dict__")

    def __init__(self, a, b, c, d, flip: int = 1) -> None:
        if flip not in (1, -1):
            raise ValueError("flip must be +1 or -1")
        a, b, c, d = (RatFunc.coerce(x) for x in (a, b, c, d))
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "flip", flip)
        if not (a * d - b * c):
            raise ValueError("singular matrix: ad - bc = 0")

    def __setattr__(self, name, value):
        raise AttributeError("MoebiusOp is immutable")

    @classmethod
    def _from_polys(cls, polys, flip: int) -> MoebiusOp:
        norm = normalize_entries([RatFunc._raw(p, ONE_POLY) for p in polys])
        op = object.__new__(cls)
        for name, p in zip("abcd", norm):
            object.__setattr__(op, name, RatFunc._raw(p, ONE_POLY))
        object.__setattr__(op, "flip", flip)
        op.__dict__["normalized"] = norm
        return op

    @property
    def matrix(self) -> Matrix:
        return (self.a, self.b, self.c, self.d)

    @cached_property
    def normalized(self) -> tuple[SPoly, SPoly, SPoly, SPoly]:
        return normalize_entries(self.matrix)

    def det(self) -> RatFunc:
        return self.a * self.d - self.b * self.c

    def __eq__(self, other) -> bool:
        if not isinstance(other, MoebiusOp):
            return NotImplemented
        return self.flip == other.flip and self.normalized == other.normalized

    def __hash__(self) -> int:
        return hash((self.flip, self.normalized))

    def is_identity(self) -> bool:
        a, b, c, d = self.normalized
        return self.flip == 1 and not b and not c and a == d

    def __matmul__(self, other: MoebiusOp) -> MoebiusOp:
        return op_compose(self, other)

    def __call__(self, x):
        return op_apply(self, x)

    def specialize(self, s0=1) -> tuple[GaussRat, GaussRat, GaussRat, GaussRat]:
        """Exact entries of the normalized representative at s = s0."""
        return tuple(p.eval_exact(s0) for p in self.normalized)

    def __repr__(self) -> str:
        a, b, c, d = (str(x) for x in self.matrix)
        return f"MoebiusOp([[{a}, {b}], [{c}, {d}]], flip={self.flip:+d})"


IDENTITY = MoebiusOp(1, 0, 0, 1)


# -- application and composition -------------------------------------------------

def op_apply(A: MoebiusOp, x):
    """Apply A to a RatFunc (or to INFINITY); returns a RatFunc or INFINITY."""
    a, b, c, d = A.normalized
    if x is INFINITY:
        if not c:
            return INFINITY
        return RatFunc(a, c)
    x = RatFunc.coerce(x)
    if A.flip == -1:
        x = x.subst_q_inverse()
    n, m = x.num, x.den
    num = a * n + b * m
    den = c * n + d * m
    if not den:
        return INFINITY
    if not num:
        return RatFunc()
    # gcd(num, den) divides det * gcd(n, m) = det
    det = a * d - b * c
    g = poly_gcd(num, det)
    if not g.is_one():
        g = poly_gcd(g, den)
    if not g.is_one():
        num = num.exact_div(g)
        den = den.exact_div(g)
    k, den0 = den.strip_monomial()
    inv = den0.lc.inverse()
    return RatFunc._raw(num.shift(-k).scale(inv), den0.scale(inv))


def op_compose(A: MoebiusOp, B: MoebiusOp) -> MoebiusOp:
    """The operator ``x -> A(B(x))``."""
    a, b, c, d = A.normalized
    e, f, g, h = B.normalized
    if A.flip == -1:
        e, f, g, h = (p.subst_inverse() for p in (e, f, g, h))
    prod = (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)
    return MoebiusOp._from_polys(prod, A.flip * B.flip)


def op_inverse(A: MoebiusOp) -> MoebiusOp:
    a, b, c, d = A.normalized
    adj = (d, -b, -c, a)
    if A.flip == 1:
        return MoebiusOp._from_polys(adj, 1)
    inv = MoebiusOp._from_polys(tuple(p.subst_inverse() for p in adj), -1)
    if not op_compose(A, inv).is_identity():
        raise ArithmeticError("inverse of a q-inverting operator failed to verify")
    return inv


def op_pow(A: MoebiusOp, k: int) -> MoebiusOp:
    if k < 0:
        return op_pow(op_inverse(A), -k)
    result = IDENTITY
    base = A
    while k:
        if k & 1:
            result = op_compose(result, base)
        k >>= 1
        if k:
            base = op_compose(base, base)
    return result


# -- generators --------------------------------------------------------------------

def _build_generators() -> dict[str, MoebiusOp]:
    w = _s - _s.inverse()
    return {
        "T": MoebiusOp(_q, 1, 0, 1, 1),
        "S": MoebiusOp(0, -1, _q, 0, 1),
        "U": MoebiusOp(1, _i * _s, 1 - _q, _q, -1),
        "L": MoebiusOp(-1, 0, 0, _q, -1),
        "U2": MoebiusOp(1 + _i * w, 2 * _i * _s.inverse(), 0, 1 - _i * w, 1),
    }


_GENERATORS = _build_generators()


def generator(name: str) -> MoebiusOp:
    """The q-deformed operator called ``name`` (T, S, U, L or U2)."""
    try:
        return _GENERATORS[name]
    except KeyError:
        raise ValueError(f"unknown generator {name!r}; expected one of {sorted(_GENERATORS)}") from None


def classical_generator(name: str) -> MoebiusOp:
    """The s = 1 specialization of ``generator(name)``; acts without inverting q."""
    vals = generator(name).specialize(1)
    return MoebiusOp(*(RatFunc.const(v) for v in vals), flip=1)


_LETTER = re.compile(r"\s*(U2|[TSUL])(?:\s*\^\s*(?:\(\s*([+-]?\d+)\s*\)|([+-]?\d+)))?")


def parse_letters(text: str) -> list[tuple[str, int]]:
    """Tokenize an operator literal such as ``"T^2 U^-1 S"`` into (name, exponent) pairs."""
    out = []
    pos = 0
    text = text.strip()
    if not text:
        return out
    while pos < len(text):
        m = _LETTER.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"cannot parse operator literal at {pos}: {text[pos:]!r}")
        exp = m.group(2) or m.group(3)
        out.append((m.group(1), int(exp) if exp is not None else 1))
        pos = m.end()
        while pos < len(text) and text[pos] in " \t*·":
            pos += 1
    return out


def operator_from_literal(text: str) -> MoebiusOp:
    """Compose the letters of ``text``; the leftmost letter is applied last."""
    op = IDENTITY
    for name, k in parse_letters(text):
        op = op_compose(op, op_pow(generator(name), k))
    return op


# -- fixed points ---------------------------------------------------------------------

def rf_sqrt(f: RatFunc) -> RatFunc | None:
    """A square root of f in Q(i)(s), or None when f is not a square there."""
    if not f:
        return RatFunc()
    k, n0 = f.num.strip_monomial()
    if k % 2:
        return None
    c = n0.lc.sqrt()
    if c is None:
        return None
    parts = []
    for poly in (n0, f.den):
        root = ONE_POLY
        for factor, mult in squarefree_decomposition(poly):
            if mult % 2:
                return None
            root = root * factor ** (mult // 2)
        parts.append(root)
    root = RatFunc(parts[0].scale(c).shift(k // 2), parts[1])
    if root * root != f:
        raise ArithmeticError("square root failed to verify")
    return root


@dataclass(frozen=True)
class FixedPoints:
    """Finite fixed points of a flip +1 operator.

    ``kind`` is ``"roots"`` (``roots`` holds the exact solutions, possibly empty
    when only infinity is fixed) or ``"irreducible"`` (the discriminant is not
    a square in Q(i)(s) and is returned in ``discriminant``).
    """

    op: MoebiusOp
    kind: str
    roots: tuple[RatFunc, ...] = ()
    discriminant: RatFunc | None = None
    includes_infinity: bool = False

    def numeric_roots(self, s0: complex = 1.0) -> tuple[complex, ...]:
        """Floating-point fixed points at s = s0 (both branches of the quadratic)."""
        if self.kind == "roots":
            return tuple(r.eval_numeric(s0) for r in self.roots)
        a, b, c, d = (x.eval_numeric(s0) for x in self.op.matrix)
        disc = cmath.sqrt((d - a) ** 2 + 4 * b * c)
        return ((a - d + disc) / (2 * c), (a - d - disc) / (2 * c))


def fixed_points(A: MoebiusOp) -> FixedPoints:
    """Solve c x^2 + (d - a) x - b = 0 over Q(i)(s)."""
    if A.flip != 1:
        raise UnsupportedOperation("fixed points of q-inverting operators are not field elements")
    if A.is_identity():
        raise ValueError("every point is fixed by the identity")
    a, b, c, d = (RatFunc._raw(p, ONE_POLY) for p in A.normalized)
    if not c:
        if a == d:
            return FixedPoints(A, "roots", (), None, True)
        return FixedPoints(A, "roots", (b / (d - a),), None, True)
    disc = (d - a) ** 2 + 4 * b * c
    root = rf_sqrt(disc)
    if root is None:
        return FixedPoints(A, "irreducible", (), disc)
    if not root:
        return FixedPoints(A, "roots", ((a - d) / (2 * c),), disc)
    r1 = (a - d + root) / (2 * c)
    r2 = (a - d - root) / (2 * c)
    return FixedPoints(A, "roots", (r1, r2), disc)


# -- the commutant of T_q ------------------------------------------------------------

@dataclass(frozen=True)
class CommutantFamily:
    """Matrices commuting projectively with T_q, linear in free parameters.

    ``forms[k][j]`` is the coefficient of parameter j in matrix entry k (a, b, c, d).
    """

    kind: str
    flip: int
    forms: tuple[tuple[RatFunc, ...], ...]
    constraints: str
    representative: Matrix = field(init=False)

    def __post_init__(self) -> None:
        rep = self.member(*([_one] * self.nparams))
        object.__setattr__(self, "representative", rep)
        if not commutes_with_t(rep, self.flip):
            raise ArithmeticError(f"{self.kind} representative does not commute with T_q")

    @property
    def representative_op(self) -> MoebiusOp | None:
        """The representative as an operator; None when it is singular."""
        a, b, c, d = self.representative
        if not (a * d - b * c):
            return None
        return MoebiusOp(a, b, c, d, flip=self.flip)

    @property
    def nparams(self) -> int:
        return len(self.forms[0])

    def member(self, *params) -> Matrix:
        params = [RatFunc.coerce(p) for p in params]
        return tuple(sum((c * p for c, p in zip(form, params)), _zero) for form in self.forms)

    def operator(self, *params) -> MoebiusOp:
        return MoebiusOp(*self.member(*params), flip=self.flip)


def commutes_with_t(m, flip: int) -> bool:
    """Projective commutation of a (possibly singular) matrix with T_q."""
    t = generator("T").matrix
    m = tuple(RatFunc.coerce(x) for x in m)
    left = _matmul(t, m)
    right = _matmul(m, _sigma(t) if flip == -1 else t)
    return proportional(left, right)


def tq_commutant(flip: int) -> list[CommutantFamily]:
    if flip == 1:
        return [
            CommutantFamily(
                "triangular-two-parameter", 1,
                ((_one, _zero), (_zero, _one), (_zero, _zero), (_one, 1 - _q)),
                "a, b free; c = 0; d = a - (q - 1) b",
            ),
            CommutantFamily(
                "exceptional-one-parameter", 1,
                ((_one,), ((_q - 1).inverse(),), (1 - _q,), (-_one,)),
                "proportional to [[1, (q-1)^-1], [1-q, -1]] (determinant 0)",
            ),
        ]
    if flip == -1:
        return [
            CommutantFamily(
                "flipped-one-parameter", -1,
                ((_one, _zero), (_zero, _one), (1 - _q, _zero), (_q, _zero)),
                "a, b free; c = (1 - q) a; d = q a",
            ),
        ]
    raise ValueError("flip must be +1 or -1")


BOUNDARIES = {
    "-i->i": "maps [-i]_q to [i]_q",
    "-i->0,0->i": "maps [-i]_q to 0 and 0 to [i]_q",
}


def _boundary_points(boundary: str) -> list[tuple[RatFunc, RatFunc]]:
    i_q = _i * _s.inverse()
    key = boundary.replace(" ", "")
    if key == "-i->i":
        return [(-i_q, i_q)]
    if key in ("-i->0,0->i", "two-point"):
        return [(-i_q, _zero), (_zero, i_q)]
    raise ValueError(f"unknown boundary {boundary!r}; expected one of {sorted(BOUNDARIES)}")


def _nullspace(rows: list[list[RatFunc]], n: int) -> list[list[RatFunc]]:
    """Basis of {v : rows . v = 0} over Q(i)(s) by Gaussian elimination."""
    rows = [list(r) for r in rows if any(r)]
    pivots = []
    r = 0
    for col in range(n):
        piv = next((k for k in range(r, len(rows)) if rows[k][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][col].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for k in range(len(rows)):
            if k != r and rows[k][col]:
                fac = rows[k][col]
                rows[k] = [x - fac * y for x, y in zip(rows[k], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fcol in free:
        v = [_zero] * n
        v[fcol] = _one
        for k, pcol in enumerate(pivots):
            v[pcol] = -rows[k][fcol]
        basis.append(v)
    return basis


def unique_imaginary_translation(flip: int, boundary: str) -> MoebiusOp | None:
    """The unique invertible T_q-commuting operator with the given boundary behaviour.

    Intersects each family of :func:`tq_commutant` with the linear conditions
    ``a x' + b - y (c x' + d) = 0`` (x' = x read at q^-1 when flip = -1).
    Returns None when no invertible solution exists or it is not unique.
    """
    points = _boundary_points(boundary)
    found: list[MoebiusOp] = []
    for fam in tq_commutant(flip):
        rows = []
        for x, y in points:
            xx = x.subst_q_inverse() if flip == -1 else x
            a, b, c, d = fam.forms
            rows.append([a[j] * xx + b[j] - y * (c[j] * xx + d[j]) for j in range(fam.nparams)])
        basis = _nullspace(rows, fam.nparams)
        if len(basis) != 1:
            if len(basis) > 1:
                return None
            continue
        m = fam.member(*basis[0])
        if not (m[0] * m[3] - m[1] * m[2]):
            continue
        op = MoebiusOp(*m, flip=flip)
        if all(op_apply(op, x) == y for x, y in points):
            found.append(op)
    distinct = []
    for op in found:
        if op not in distinct:
            distinct.append(op)
    return distinct[0] if len(distinct) == 1 else None


__all__ = [
    "MoebiusOp", "INFINITY", "IDENTITY", "op_apply", "op_compose", "op_inverse", "op_pow",
    "generator", "classical_generator", "parse_letters", "operator_from_literal",
    "fixed_points", "FixedPoints", "rf_sqrt", "CommutantFamily", "tq_commutant",
    "commutes_with_t", "unique_imaginary_translation", "normalize_entries", "proportional",
]
