from __future__ import annotations

from ospxi import hopf
from ospxi import superalg as U
from ospxi.report import all_passed
from ospxi.scalar import XI
from ospxi.tensor import TensorElement, apply_on_leg, tensor, unit

h, vm, vp, Xm = U.h(), U.v_minus(), U.v_plus(), U.X_minus()
one = U.one()


def test_primitive_coproduct():
    assert hopf.coproduct_primitive(h) == tensor(h, one) + tensor(one, h)
    v2 = vm * vm
    assert hopf.coproduct_primitive(v2) == tensor(v2, one) + tensor(one, v2)
    assert hopf.coproduct_primitive(one) == unit()


def test_twist_low_orders():
    assert hopf.twist_element(1) == (unit() + tensor(h, Xm).scale(XI)).with_prec(1)
    F2 = hopf.twist_element(2)
    second = TensorElement({k: c.drop_above(2) - c.drop_above(1) for k, c in F2.terms.items()})
    assert second == tensor(h * (h + 2), Xm * Xm).scale(XI**2 / 2)
    assert hopf.twist_element(6).mul(hopf.twist_inverse(6), 6) == unit().with_prec(6)
    assert hopf.twist_inverse(5) == hopf.twist_inverse_geometric(5)


def test_twist_axioms_and_wrong_second_order():
    assert all_passed(hopf.verify_twist_axioms(1))
    assert all_passed(hopf.verify_twist_axioms(6))
    wrong = (unit() + tensor(h, Xm).scale(XI) + tensor(h * h, Xm * Xm).scale(XI**2)).with_prec(2)
    checks = {c.id: c for c in hopf.verify_twist_axioms(2, F=wrong)}
    assert checks["twist.cocycle"].passed is False
    assert checks["twist.cocycle"].failing_order == 2


def test_twisted_coproducts_closed_forms():
    tw = hopf.twist(6)
    closed = hopf.closed_coproducts(6)
    for g in ("h", "v-", "v+", "X-", "X+"):
        assert tw.coproduct(U.GENERATORS[g]()) == closed[g], g
    assert tw.coproduct(one) == unit().with_prec(6)
    assert all_passed(hopf.verify_closed_coproducts(6))


def test_twisted_hopf_axioms():
    H = hopf.twisted_hopf(5)
    gens = {"h": h, "v-": vm, "v+": vp}
    for name, x in gens.items():
        d = H.coproduct(x)
        left = apply_on_leg(d, lambda m: H.coproduct_monomial(m), 0)
        right = apply_on_leg(d, lambda m: H.coproduct_monomial(m), 1)
        assert left == right, name
        assert apply_on_leg(d, "counit", 0) == x
        assert apply_on_leg(d, "counit", 1) == x
    for (na, a), (nb, b) in [(p, q) for p in gens.items() for q in gens.items()]:
        assert H.coproduct(a * b) == H.coproduct(a).mul(H.coproduct(b), 5), (na, nb)
    assert all_passed(hopf.verify_antipode(6))


def test_universal_R():
    R1 = hopf.universal_R(1)
    assert R1 == (unit() + (tensor(Xm, h) - tensor(h, Xm)).scale(XI)).with_prec(1)
    R = hopf.universal_R(6)
    assert R == hopf.universal_R_from_twist(6)
    assert all_passed(hopf.verify_R_properties(6))
