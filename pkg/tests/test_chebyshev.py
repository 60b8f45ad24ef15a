from __future__ import annotations

import pytest
import sympy

from qgauss.chebyshev import (
    UniPoly, Z, cheb_U, cheb_variant, check_im_recurrence, check_re_recurrence,
    continuant_check, I_part, in_z, R_part, triangle_row, verify_cheb_relation,
)
from qgauss.render import parse_plain as P

x = sympy.Symbol("x")


def _sym(p: UniPoly):
    return sum(sympy.Rational(int(c.numerator), int(c.denominator)) * x**k
               for k, c in enumerate(p.coeffs))


def _sym_det(diag) -> sympy.Expr:
    n = len(diag)
    m = sympy.zeros(n, n)
    for k, d in enumerate(diag):
        m[k, k] = d
        if k + 1 < n:
            m[k, k + 1] = m[k + 1, k] = 1
    return sympy.expand(m.det(method="berkowitz"))


def test_classical_examples():
    assert cheb_U(0) == UniPoly((1,))
    assert cheb_U(2) == UniPoly((-1, 0, 4))
    assert cheb_U(4) == UniPoly((1, 0, -12, 0, 16))
    assert sympy.expand(_sym(cheb_U(7)) - sympy.chebyshevu(7, x)) == 0
    with pytest.raises(ValueError):
        cheb_U(-1)


def test_variant_examples():
    assert str(cheb_variant("I", 3)) == "8x^2 - 4x"
    assert str(cheb_variant("II", 3)) == "8x - 4"
    assert str(cheb_variant("I", 4)) == "16x^2 - 12x + 1"
    assert str(cheb_variant("I", 2)) == str(cheb_variant("II", 2)) == "4x - 1"
    with pytest.raises(ValueError):
        cheb_variant("III", 2)


@pytest.mark.parametrize("n", range(1, 11))
def test_continuants_against_sympy(n):
    assert continuant_check(n)
    two_x, two = 2 * x, sympy.Integer(2)
    diag_i = [two_x if k % 2 else two for k in range(1, n + 1)]
    diag_ii = [two if k % 2 else two_x for k in range(1, n + 1)]
    assert sympy.expand(_sym_det(diag_i) - _sym(cheb_variant("I", n))) == 0
    assert sympy.expand(_sym_det(diag_ii) - _sym(cheb_variant("II", n))) == 0
    assert sympy.expand(_sym_det([two_x] * n) - _sym(cheb_U(n))) == 0


def test_even_variants_coincide_and_share_coefficients():
    for m in range(0, 11):
        assert cheb_variant("I", 2 * m) == cheb_variant("II", 2 * m)
    for n in range(1, 21):
        v, u = cheb_variant("I", n), cheb_U(n)
        assert sorted(v.nonzero_coeffs()) == sorted(u.nonzero_coeffs())
        assert v.degree == (n + 1) // 2
        if n >= 2:
            assert v.degree < u.degree


def test_first_parts():
    assert I_part(1) == 1 and I_part(2) == 2 * Z
    assert [R_part(n) for n in range(4)] == [0, 0, 1, 2]
    assert R_part(4) == 4 * Z


def test_triangle_rows():
    rows = [triangle_row(n) for n in range(1, 8)]
    assert rows == [[1], [2], [-1, 4], [-4, 8], [1, -12, 16], [6, -32, 32], [-1, 24, -80, 64]]


def test_in_z_rejects_non_polynomials():
    with pytest.raises(ValueError):
        in_z(P("s"))
    with pytest.raises(ValueError):
        in_z(P("1/(1-q)"), max_degree=8)


def test_cheb_relation():
    for n in range(0, 31):
        assert verify_cheb_relation(n), n


def test_im_recurrence():
    assert all(check_im_recurrence(n) for n in range(1, 31))


def test_re_recurrence_plus_one():
    assert all(check_re_recurrence(n, +1) for n in range(1, 31))


def test_re_recurrence_stated_minus_one_fails_at_odd_n():
    # R_0 = R_1 = 0 and R_2 = 1, so the odd branch at n = 1 needs +1
    assert not check_re_recurrence(1, -1)
    assert all(check_re_recurrence(n, -1) for n in range(2, 31, 2))


def test_classical_value_at_z_one():
    for n in range(0, 31):
        assert cheb_variant("I", n).eval_at(1) == n + 1
        assert I_part(n + 1).specialize(1) == n + 1
