from __future__ import annotations

from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from ospxi import dual, hopf
from ospxi import superalg as U
from ospxi.report import all_passed
from ospxi.scalar import XiScalar

M = dual.DEFAULT_M


def _zero_below_edge(t, M=M) -> bool:
    return dual.nu_degree_filter(t, M - 2).is_zero()


def test_defining_relations():
    x, eta, nu, one = dual.x(), dual.eta(), dual.nu(), dual.one()
    assert _zero_below_edge(nu * x - x * nu - (one - dual.exp_nu(-2)).scale(Fraction(1, 2)))
    assert (x * eta - eta * x - eta.scale(Fraction(1, 2))).is_zero()
    assert (eta * eta).is_zero()
    assert (nu * eta - eta * nu).is_zero()


def test_counit_and_exp():
    assert dual.counit(dual.exp_nu(3)) == XiScalar.const(1)
    assert dual.counit(dual.x()) == XiScalar.const(0)
    assert _zero_below_edge(dual.exp_nu(2) * dual.exp_nu(-2) - dual.one())


@pytest.mark.parametrize("name", ["x", "eta", "nu"])
def test_antipode_axiom_on_generators(name):
    g = getattr(dual, name)()
    d = dual.coproduct(g)
    unit = dual.one().scale(dual.counit(g))
    assert _zero_below_edge(dual.multiply(dual.leg_antipode(d, 0)) - unit)
    assert _zero_below_edge(dual.multiply(dual.leg_antipode(d, 1)) - unit)


def test_right_ordered_antipode_of_x_fails():
    # -x e^{2 nu} differs from the forced -e^{2 nu} x by e^{2 nu} - 1
    x = dual.x()
    wrong = -(x * dual.exp_nu(2))
    assert not _zero_below_edge(dual.antipode(x) - wrong)


monos = st.tuples(st.integers(0, 2), st.integers(0, 1), st.integers(0, 2))


@given(monos, monos, monos)
def test_associativity(a, b, c):
    A, B, C = (dual.dual_monomial(*m) for m in (a, b, c))
    assert _zero_below_edge((A * B) * C - A * (B * C))


@given(monos, monos)
def test_coproduct_is_multiplicative(a, b):
    A, B = dual.dual_monomial(*a), dual.dual_monomial(*b)
    assert _zero_below_edge(dual.coproduct(A * B) - dual.coproduct(A) * dual.coproduct(B))


def test_letter_functionals():
    vm, h = (1, 0, 0), (0, 1, 0)
    assert dual.letter_functional("eta", vm) == XiScalar.const(1)
    assert dual.letter_functional("nu", h) == XiScalar.const(1)
    assert dual.letter_functional("x", (2, 0, 0)) == XiScalar.monomial(Fraction(-1, 8), xi=-1)
    assert dual.letter_functional("x", vm).is_zero()


def test_pairing_units():
    assert dual.pairing(U.one(), dual.one()) == XiScalar.const(1)
    assert dual.pairing(U.h(), dual.nu()) == XiScalar.const(1)
    assert dual.pairing(U.v_minus(), dual.eta()) == XiScalar.const(1)
    assert dual.pairing(U.h(), dual.x()).is_zero()


def test_normalization_is_factorial():
    diag, off = dual.normalization_table(2)
    assert not off
    for (m, d, n), v in diag.items():
        assert v == XiScalar.const(factorial(m) * factorial(n))


def test_antipode_adjoint_under_pairing():
    order = 6
    S = hopf.twisted_hopf(order).antipode
    for u in (U.h(), U.v_minus(), U.v_minus() * U.h()):
        for f in (dual.x(), dual.eta(), dual.nu(), dual.eta() * dual.nu()):
            assert dual.pairing(S(u), f, order) == dual.pairing(u, dual.antipode(f), order)


def test_full_dual_suite_small():
    checks = dual.verify_dual(D=2, M=6)
    assert all_passed(checks), [c.id for c in checks if c.passed is False]


@pytest.mark.parametrize("key", sorted(dual.STRUCTURE))
def test_perturbed_structure_constant_is_detected(key):
    saved = dual.STRUCTURE[key]
    try:
        dual.STRUCTURE[key] = saved + 1
        dual.clear_caches()
        checks = dual.verify_dual_hopf(6) + dual.verify_letter_functionals(2, 6) + dual.verify_duality(2, 6)
        assert not all_passed(checks)
    finally:
        dual.STRUCTURE[key] = saved
        dual.clear_caches()
