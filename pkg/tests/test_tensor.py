from __future__ import annotations

import itertools
from ospxi import hopf
from ospxi import superalg as U
from ospxi.scalar import XI
from ospxi.tensor import (
    ArityError,
    apply_on_leg,
    embed,
    exp_trunc,
    graded_flip,
    invert_unipotent,
    log_trunc,
    tensor,
    tensor_mul,
    unit,
)

h, vm, vp, Xm = U.h(), U.v_minus(), U.v_plus(), U.X_minus()
one = U.one()


def test_koszul_products():
    assert tensor_mul(tensor(one, vp), tensor(vm, one)) == -tensor(vm, vp)
    assert tensor_mul(tensor(h, one), tensor(one, h)) == tensor(h, h)
    s = tensor_mul(tensor(one, vp), tensor(vp, one)) + tensor_mul(tensor(vp, one), tensor(one, vp))
    assert s.is_zero()


def test_graded_flip():
    assert graded_flip(tensor(h, Xm)) == tensor(Xm, h)
    assert graded_flip(tensor(vm, vp)) == -tensor(vp, vm)
    t = tensor(vm, h) + tensor(vp, vm).scale(XI)
    assert graded_flip(graded_flip(t)) == t


def test_flip_is_multiplicative_on_generators():
    gens = [h, vm, vp]
    for a, b, c, d in itertools.product(gens, repeat=4):
        s, t = tensor(a, b), tensor(c, d)
        assert graded_flip(s * t) == graded_flip(s) * graded_flip(t)


def test_apply_on_leg():
    assert apply_on_leg(unit() + tensor(h, Xm).scale(XI), "counit", 0) == one
    lhs = apply_on_leg(tensor(h, Xm), "coproduct", 0)
    assert lhs == tensor(h, one, Xm) + tensor(one, h, Xm)
    t = tensor(h, vm)
    assert apply_on_leg(t, "identity", 1) == t
    try:
        apply_on_leg(t, "counit", 2)
    except ArityError:
        pass
    else:
        raise AssertionError("leg index out of range must raise")


def test_associativity_on_triples():
    gens = [one, h, vm, vp]
    pairs = [tensor(a, b) for a in gens for b in gens]
    for s, t, u in itertools.product(pairs[::3], repeat=3):
        assert (s * t) * u == s * (t * u)


def test_exp_log_and_inverse():
    L = hopf.twist_log(2)
    F = exp_trunc(L, 2)
    want = unit() + tensor(h, Xm).scale(XI) + tensor(h * (h + 2), Xm * Xm).scale(XI**2 / 2)
    assert F == want.with_prec(2)
    assert exp_trunc(L.scale(0), 3) == unit()
    F4 = exp_trunc(hopf.twist_log(4), 4)
    assert log_trunc(F4, 4) == hopf.twist_log(4)
    first = (unit() + tensor(h, Xm).scale(XI)).with_prec(1)
    assert invert_unipotent(first, 1) == (unit() - tensor(h, Xm).scale(XI)).with_prec(1)
    inv = invert_unipotent(F4, 4)
    assert inv.mul(F4, 4) == unit().with_prec(4)
    assert inv == exp_trunc(-hopf.twist_log(4), 4)


def test_embed_places_legs():
    t = tensor(h, vm)
    assert embed(t, (0, 2), 3) == tensor(h, one, vm)
    try:
        embed(t, (2, 0), 3)
    except ArityError:
        pass
    else:
        raise AssertionError("decreasing positions must raise")
