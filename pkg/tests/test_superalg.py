from __future__ import annotations

import itertools
from fractions import Fraction

from hypothesis import given, strategies as st

from ospxi import superalg as U
from ospxi.scalar import XI

GENS = {"h": U.h(), "v-": U.v_minus(), "v+": U.v_plus()}


def test_rewriting_rules():
    assert U.v_plus() * U.v_minus() == -(U.v_minus() * U.v_plus()) - U.h() / 4
    assert U.h() * U.v_minus() == U.monomial(1, 1, 0) - U.v_minus()
    assert U.v_plus() * U.h() == U.monomial(0, 1, 1) - U.v_plus()
    a = U.monomial(2, 1, 1, XI)
    assert U.one() * a == a and a * U.one() == a
    assert U.normal_product(U.one().scale(0), a).is_zero()


def test_super_brackets():
    Xp, Xm = U.X_plus(), U.X_minus()
    assert U.super_bracket(U.v_plus(), U.v_plus()) == Xp / 2
    assert U.super_bracket(U.v_plus(), U.v_plus()) == U.v_plus() * U.v_plus() * 2
    assert U.super_bracket(Xp, Xm) == U.h()
    assert U.super_bracket(U.h(), U.h()).is_zero()
    assert U.super_bracket(U.h(), Xp) == Xp * 2
    assert U.super_bracket(U.h(), Xm) == Xm * (-2)
    assert U.super_bracket(U.v_plus(), U.v_minus()) == -U.h() / 4


def test_associativity_exhaustive():
    monos = [(i, j, k) for i in range(3) for j in range(3) for k in range(3)]
    for a, b, c in itertools.product(monos, repeat=3):
        A, B, C = U.monomial(*a), U.monomial(*b), U.monomial(*c)
        assert (A * B) * C == A * (B * C), (a, b, c)


def test_graded_jacobi():
    def br(x, y):
        return U.super_bracket(x, y)

    for (na, a), (nb, b), (nc, c) in itertools.product(GENS.items(), repeat=3):
        pa, pb, pc = a.parity(), b.parity(), c.parity()
        total = (
            br(a, br(b, c)).scale((-1) ** (pa * pc))
            + br(b, br(c, a)).scale((-1) ** (pb * pa))
            + br(c, br(a, b)).scale((-1) ** (pc * pb))
        )
        assert total.is_zero(), (na, nb, nc)


def test_sigma_series():
    assert U.sigma_series(1) == U.monomial(2, 0, 0, -8 * XI)
    assert U.sigma_series(2) == U.monomial(2, 0, 0, -8 * XI) + U.monomial(4, 0, 0, 32 * XI**2)
    for n in range(1, 6):
        s = U.sigma_series(n)
        assert s == U.sigma_series(n, via="X")
        assert s.parity() == 0
        assert U.counit_u(s) == 0


def test_series_power():
    base = U.monomial(2, 0, 0, 8 * XI)
    assert U.series_power(base, Fraction(-1, 2), 1) == U.one() - U.monomial(2, 0, 0, 4 * XI)
    assert U.series_power(base, 1, 3) == (U.one() + base).with_prec(3)
    half = U.series_power(base, Fraction(1, 2), 4)
    assert half.mul(half, 4) == (U.one() + base).with_prec(4)


def test_counit():
    assert U.counit_u(U.one() + U.monomial(1, 1, 0, XI)) == 1
    assert U.counit_u(U.v_plus()) == 0


monomials = st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))


@given(monomials, monomials)
def test_parity_additive(a, b):
    A, B = U.monomial(*a), U.monomial(*b)
    prod = A * B
    if prod.terms:
        assert prod.parity() == (U.monomial_parity(a) + U.monomial_parity(b)) % 2
