from __future__ import annotations

import math
import threading
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qgauss.errors import DecompositionError
from qgauss.field import GaussRat, RatFunc
from qgauss.moebius import generator, op_apply, op_compose, op_pow
from qgauss.qnum import (
    I_Q, QPoly, Q_param, check_conjugation, decompose, euler_q_int, q_bracket,
    q_gaussian_closed, q_gaussian_orbit, q_rational, q_rep,
)
from qgauss.render import parse_plain as P

q = P("q")


def test_euler_q_int():
    assert euler_q_int(0) == 0
    assert euler_q_int(3) == P("1+q+q^2")
    assert euler_q_int(-1) == P("-1/q")
    for n in range(-6, 7):
        assert euler_q_int(n) * (1 - q) == 1 - q ** n


def test_q_rational_examples():
    assert q_rational(5, 1) == P("1+q+q^2+q^3+q^4")
    assert q_rational(-1, 1) == P("-1/q")
    assert q_rational(1, 2) == P("q/(1+q)")
    assert q_rational(0, 1) == 0 and q_rational(1, 1) == 1
    with pytest.raises(ZeroDivisionError):
        q_rational(1, 0)
    with pytest.raises(ValueError):
        q_rational(2, 4)


def test_q_rational_recurrences():
    for r in range(1, 41):
        for p in range(-40, 41):
            if math.gcd(p, r) != 1:
                continue
            x = Fraction(p, r)
            val = q_rational(p, r)
            nxt = x + 1
            assert q_rational(nxt.numerator, nxt.denominator) == q * val + 1
            if p:
                y = -1 / x
                assert q_rational(y.numerator, y.denominator) == -1 / (q * val)


def test_q_rational_matches_word():
    # 7/3 = T^2 S T^-3 (0)
    T, S = generator("T"), generator("S")
    op = op_compose(op_pow(T, 2), op_compose(S, op_pow(T, -3)))
    assert op_apply(op, 0) == q_rational(7, 3)


def test_orbit_examples():
    assert q_gaussian_orbit(0, 1).value == P("i/s")
    expected = (2 * q * I_Q - 2 * (q - 1)) / (q * q - q + 1)
    assert q_gaussian_orbit(0, 2).value == expected
    assert q_gaussian_orbit(1, 1).value == P("1 + i*s")


def test_orbit_order_independent():
    T, U = generator("T"), generator("U")
    for m, n in [(2, 3), (-1, 2), (3, -2)]:
        a = op_apply(op_compose(op_pow(T, m), op_pow(U, n)), 0)
        b = op_apply(op_compose(op_pow(U, n), op_pow(T, m)), 0)
        assert a == b == q_gaussian_orbit(m, n).value


def test_orbit_cache_threadsafe():
    results = {}

    def worker(n):
        results[n] = q_gaussian_orbit(0, n).value

    threads = [threading.Thread(target=worker, args=(n,)) for n in (12, -12, 7, 12, -3)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    U = generator("U")
    assert results[12] == op_apply(op_pow(U, 12), 0)
    assert results[-12] == op_apply(op_pow(U, -12), 0)


def test_q_param():
    Q = Q_param()
    assert Q.specialize(1) == 1
    assert Q.specialize(0) == -1
    assert Q * Q.conj_i() == 1


def test_qpoly_basics():
    a = QPoly({0: 1, 1: 2})
    assert str(a) == "1+2Q"
    assert str(QPoly({-1: -1, 0: -1})) == "-Q^-1-1"
    assert (a * a).exact_div(a) == a
    with pytest.raises(ArithmeticError):
        QPoly({0: 1, 2: 1}).exact_div(QPoly({0: 1, 1: 1}))
    assert a.subst_inverse() == QPoly({0: 1, -1: 2})
    assert q_bracket(3) == QPoly({0: 1, 1: 1, 2: 1})
    assert q_bracket(-2) == QPoly({-1: -1, -2: -1})


def test_qpoly_eval_matches_horner():
    p = QPoly({-2: 3, 0: -1, 3: Fraction(1, 2)})
    x = P("(s+2)/(s-i)")
    expected = 3 * x ** -2 - 1 + Fraction(1, 2) * x ** 3
    assert p.eval_at(x) == expected


def test_q_rep_examples():
    assert q_rep(4) == QPoly({0: 1, 1: 2, 2: 1})
    assert q_rep(1) == QPoly({0: 1})
    assert q_rep(-2) == -QPoly({0: 1, -1: 1})
    assert q_rep(0) == QPoly()


def test_closed_form_examples():
    Q = Q_param()
    assert q_gaussian_closed(0, 2) == (1 + Q) * I_Q
    assert q_gaussian_closed(0, -3) == -(1 + 2 * Q.inverse()) * I_Q
    assert q_gaussian_closed(0, 0) == 0


def test_closed_form_equals_orbit():
    for n in range(-50, 51):
        assert q_gaussian_closed(0, n) == q_gaussian_orbit(0, n).value, n
    for m in (-3, 2):
        for n in (-4, 5):
            assert q_gaussian_closed(m, n) == q_gaussian_orbit(m, n).value


def test_decompose():
    A, B = decompose(q_gaussian_orbit(0, 2).value)
    D = q * q - q + 1
    assert A == -2 * (q - 1) / D and B == 2 * q / D
    assert decompose(RatFunc.const(1)) == (1, 0)
    with pytest.raises(DecompositionError) as info:
        decompose(P("s"))
    assert info.value.monomial[0] == 1


def test_conjugation():
    assert check_conjugation(0) and check_conjugation(1) and check_conjugation(3)
    assert q_gaussian_orbit(0, -1).value == P("-i/s")


@settings(max_examples=30, deadline=None)
@given(st.integers(-20, 20), st.integers(-20, 20))
def test_classical_limit(m, n):
    assert q_gaussian_orbit(m, n).value.specialize(1) == GaussRat(m, n)
