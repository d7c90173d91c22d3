from __future__ import annotations

from hypothesis import given, strategies as st

from ospxi import frt
from ospxi.report import all_passed
from ospxi.scalar import XI


def test_quotient_dimensions_match_supercommutative():
    rs = frt.relation_set()
    # even letters 5, odd letters 4: Sym^2(5) + 5*4 + Lambda^2(4) = 15 + 20 + 6
    assert 81 - rs.ideal_dimension(2) == 41
    assert 9**3 - rs.ideal_dimension(3) == 129


def test_xi0_limit_is_supercommutativity():
    rs = frt.relation_set()
    assert frt.same_span(rs.raw, frt.supercommutativity_relations(), 0)


def test_jordanian_block_relations_hold():
    rs = frt.relation_set()
    for e in frt.jordanian_relations():
        assert rs.reduces_to_zero(e)
    for eqs in frt.block_relations().values():
        assert all(rs.reduces_to_zero(e) for e in eqs)


def test_nonrelations_survive():
    rs = frt.relation_set()
    a, b, alpha = frt.gen("a"), frt.gen("b"), frt.gen("alpha")
    assert not rs.reduces_to_zero(a * b)
    assert not rs.reduces_to_zero(a * b + b * a)
    assert not rs.reduces_to_zero(alpha)
    # squares of even letters are free in the supercommutative limit
    assert not rs.reduces_to_zero(a * a)


def test_quantum_determinant_central():
    rs = frt.relation_set()
    det = frt.det_xi()
    for name in ("a", "b", "c", "d"):
        x = frt.gen(name)
        assert rs.reduces_to_zero(det * x - x * det), name


def test_perturbed_block_relation_is_not_in_ideal():
    rs = frt.relation_set()
    e = frt.jordanian_relations()[0]
    bumped = e + frt.gen("a") * frt.gen("b").scale(XI)
    assert not rs.reduces_to_zero(bumped)


letters = st.sampled_from(frt.LETTERS)


@given(st.lists(st.tuples(letters, letters), min_size=1, max_size=4))
def test_normal_form_is_idempotent_and_linear(pairs):
    rs = frt.relation_set()
    x = frt.FreePoly({})
    for i, (p, q) in enumerate(pairs):
        x = x + (frt.gen(p) * frt.gen(q)).scale(i + 1)
    nf = rs.normal_form(x)
    assert rs.normal_form(nf) == nf
    assert rs.reduces_to_zero(x - nf)


def test_full_frt_suite():
    checks = frt.verify_frt()
    failed = [c.id for c in checks if c.passed is False]
    assert all_passed(checks), failed
