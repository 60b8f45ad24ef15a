from __future__ import annotations

import cmath

import pytest
from hypothesis import given, settings
from strategies import operators, ratfuncs

from qgauss.errors import ParseError, UnsupportedOperation
from qgauss.field import RatFunc
from qgauss.moebius import (
    IDENTITY, INFINITY, MoebiusOp, classical_generator, commutes_with_t, fixed_points,
    generator, op_apply, op_compose, op_inverse, op_pow, operator_from_literal, parse_letters,
    rf_sqrt, tq_commutant, unique_imaginary_translation,
)
from qgauss.render import parse_plain as P

T, S, U, L, U2 = (generator(n) for n in ("T", "S", "U", "L", "U2"))


def test_generator_matrices():
    assert T == MoebiusOp(P("q"), 1, 0, 1)
    assert U == MoebiusOp(1, P("i*s"), P("1-q"), P("q"), flip=-1)
    assert U2 == MoebiusOp(P("1+i*(s-1/s)"), P("2*i/s"), 0, P("1-i*(s-1/s)"))
    assert (T.flip, S.flip, U.flip, L.flip, U2.flip) == (1, 1, -1, -1, 1)
    with pytest.raises(ValueError):
        generator("V")


def test_singular_matrix_rejected():
    with pytest.raises(ValueError):
        MoebiusOp(1, 2, 2, 4)


def test_projective_equality():
    A = MoebiusOp(P("q"), 1, 0, 1)
    B = MoebiusOp(P("q*(s+i)"), P("s+i"), 0, P("s+i"))
    assert A == B and hash(A) == hash(B)
    assert A != MoebiusOp(P("q"), 1, 0, 1, flip=-1)


def test_apply_examples():
    assert op_apply(T, RatFunc()) == 1
    assert op_apply(U, RatFunc()) == P("i/s")
    assert op_apply(S, 1) == P("-1/q")
    assert op_apply(op_pow(T, 3), 0) == P("1+q+q^2")
    assert op_apply(S, 0) is INFINITY
    assert op_apply(S, INFINITY) == 0
    assert op_apply(T, INFINITY) is INFINITY


def test_compose_examples():
    assert op_compose(U, U) == U2
    assert op_compose(IDENTITY, T) == T
    assert op_compose(L, L).is_identity()
    assert op_pow(S, 2).is_identity()
    assert op_pow(op_compose(T, S), 3).is_identity()
    assert op_compose(op_pow(U, -1), U).is_identity()


def test_inverse_flip_minus_one():
    for g in (U, L, op_compose(U, S)):
        inv = op_inverse(g)
        assert inv.flip == g.flip
        assert op_compose(g, inv).is_identity()
        assert op_compose(inv, g).is_identity()


def test_literal_parsing():
    assert parse_letters("T^2 U^-1 S") == [("T", 2), ("U", -1), ("S", 1)]
    assert parse_letters("U2 T^(-3)") == [("U2", 1), ("T", -3)]
    assert operator_from_literal("T S") == op_compose(T, S)
    with pytest.raises(ParseError):
        parse_letters("T X")


def test_classical_generators():
    assert classical_generator("U") == MoebiusOp(1, P("i"), 0, 1)
    assert classical_generator("L") == MoebiusOp(-1, 0, 0, 1)
    assert classical_generator("U").flip == 1


def test_fixed_points_s():
    fp = fixed_points(S)
    assert fp.kind == "roots"
    assert set(fp.roots) == {P("i/s"), P("-i/s")}
    for r in fp.roots:
        assert op_apply(S, r) == r


def test_fixed_points_ts_irreducible():
    fp = fixed_points(op_compose(T, S))
    assert fp.kind == "irreducible"
    roots = sorted(fp.numeric_roots(1.0), key=lambda z: z.imag)
    expected = [(1 - cmath.sqrt(-3)) / 2, (1 + cmath.sqrt(-3)) / 2]
    for z, w in zip(roots, expected):
        assert abs(z - w) <= 1e-12


def test_fixed_points_translation():
    fp = fixed_points(T)
    assert fp.roots == (P("1/(1-q)"),) and fp.includes_infinity
    with pytest.raises(UnsupportedOperation):
        fixed_points(U)
    with pytest.raises(ValueError):
        fixed_points(IDENTITY)


def test_rf_sqrt():
    f = P("(s+i)^2*(q-3)^4/((s-2)^2*4)")
    r = rf_sqrt(f)
    assert r is not None and r * r == f
    assert rf_sqrt(P("q-2")) is None
    assert rf_sqrt(P("2")) is None
    assert rf_sqrt(P("-q")) == P("i*s") or rf_sqrt(P("-q")) == P("-i*s")


def test_commutant_families():
    plus = {f.kind: f for f in tq_commutant(1)}
    tri = plus["triangular-two-parameter"]
    assert tri.operator(P("q"), 1) == T
    exc = plus["exceptional-one-parameter"]
    assert commutes_with_t(exc.representative, 1)
    assert exc.representative_op is None  # determinant zero
    flipped, = tq_commutant(-1)
    assert flipped.operator(1, P("i*s")) == U
    for fam in tq_commutant(1) + tq_commutant(-1):
        op = fam.representative_op
        if op is not None:
            assert op_compose(T, op) == op_compose(op, T)


def test_unique_imaginary_translation():
    assert unique_imaginary_translation(1, "-i->i") == U2
    assert unique_imaginary_translation(1, "-i->0,0->i") is None
    assert unique_imaginary_translation(-1, "-i->0,0->i") == U
    with pytest.raises(ValueError):
        unique_imaginary_translation(1, "0->1")


@settings(max_examples=100, deadline=None)
@given(operators(), operators(), ratfuncs())
def test_homomorphism(A, B, x):
    lhs = op_apply(op_compose(A, B), x)
    inner = op_apply(B, x)
    rhs = op_apply(A, inner)
    assert lhs == rhs


@settings(max_examples=100, deadline=None)
@given(operators(), operators())
def test_flip_parity(A, B):
    assert op_compose(A, B).flip == A.flip * B.flip


@settings(max_examples=50, deadline=None)
@given(operators(), ratfuncs(nonzero=True))
def test_projective_scaling_invariance(A, c):
    B = MoebiusOp(*(x * c for x in A.matrix), flip=A.flip)
    assert A == B
