from __future__ import annotations

from fractions import Fraction

from hypothesis import given, strategies as st

from ospxi.scalar import MU, ONE, XI, ZERO, XiScalar, arith, substitute_scale, truncate

coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=6)
exps = st.integers(min_value=-2, max_value=4)
scalars = st.dictionaries(st.tuples(exps, st.integers(0, 2)), coeffs, max_size=4).map(XiScalar)
nonneg = st.dictionaries(st.tuples(st.integers(0, 4), st.just(0)), coeffs, max_size=4).map(XiScalar)


def test_arith_examples():
    assert arith(XI, XI.inverse(), "mul") == ONE
    assert (1 + 2 * XI) * (1 - 2 * XI) == 1 - 4 * XI**2
    assert arith(XI * Fraction(1, 2), XI * Fraction(1, 3), "add") == XI * Fraction(5, 6)
    assert arith(XI, XI, "sub") == ZERO
    assert arith(XI, XI, "neg") == -XI


def test_truncate_examples():
    assert truncate(1 + XI + XI**3, 2) == 1 + XI
    assert truncate(XI.inverse() + 1, 0) == XI.inverse() + 1
    assert truncate(ZERO, 5) == ZERO


def test_substitute_scale_examples():
    assert substitute_scale(XI) == MU**2 * XI
    assert substitute_scale(ONE) == ONE
    assert substitute_scale(XI**2 - 3) == MU**4 * XI**2 - 3


def test_render_and_evaluate():
    a = XiScalar({(1, 0): Fraction(1, 2), (-1, 0): -3})
    assert a.render() == "-3*xi^(-1) + 1/2*xi"
    assert a.evaluate(2) == Fraction(-3, 2) + 1
    assert ZERO.render() == "0"


@given(scalars, scalars, scalars)
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a + b == b + a
    assert a - a == ZERO


@given(nonneg, nonneg, st.integers(0, 5))
def test_truncation_is_multiplicative(a, b, n):
    assert truncate(a * b, n) == truncate(truncate(a, n) * truncate(b, n), n)


@given(scalars, scalars)
def test_substitute_scale_is_homomorphism(a, b):
    assert substitute_scale(a * b) == substitute_scale(a) * substitute_scale(b)
    assert substitute_scale(a + b) == substitute_scale(a) + substitute_scale(b)
