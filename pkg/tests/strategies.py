"""Hypothesis strategies for field elements and operators."""

from __future__ import annotations

from fractions import Fraction

from hypothesis import strategies as st

from qgauss.field import GaussRat, RatFunc, SPoly
from qgauss.moebius import generator, op_compose, op_pow

small_fracs = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def gaussrats(draw, nonzero: bool = False) -> GaussRat:
    re = draw(small_fracs)
    im = draw(st.one_of(st.just(Fraction(0)), small_fracs))
    if nonzero and not re and not im:
        re = Fraction(1)
    return GaussRat(re, im)


@st.composite
def spolys(draw, max_terms: int = 4, nonzero: bool = False) -> SPoly:
    exps = draw(st.lists(st.integers(-3, 5), min_size=1 if nonzero else 0,
                         max_size=max_terms, unique=True))
    return SPoly({e: draw(gaussrats(nonzero=True)) for e in exps})


@st.composite
def ratfuncs(draw, nonzero: bool = False) -> RatFunc:
    num = draw(spolys(nonzero=nonzero))
    den = draw(spolys(nonzero=True))
    return RatFunc(num, den)


def words(max_size: int = 6):
    return st.lists(st.tuples(st.sampled_from("TSUL"), st.sampled_from([1, -1, 2])),
                    min_size=0, max_size=max_size)


word_letters = words()


@st.composite
def operators(draw):
    op = op_pow(generator("T"), 0)
    for name, k in draw(word_letters):
        op = op_compose(op, op_pow(generator(name), k))
    return op
