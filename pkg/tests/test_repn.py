from __future__ import annotations

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ospxi import hopf, repn
from ospxi import superalg as U
from ospxi.report import all_passed
from ospxi.scalar import XI, XiScalar
from ospxi.tensor import tensor

SPINS = (0, Fraction(1, 2), 1, Fraction(3, 2))


@pytest.mark.parametrize("s", SPINS)
@pytest.mark.parametrize("convention", ["grading_001", "grading_010"])
def test_irrep_relations(s, convention):
    rep = repn.build_irrep(s, convention)
    assert rep.dim == 4 * Fraction(s) + 1
    assert all(r.is_zero() for r in repn.relation_residuals(rep).values())


def test_small_spins():
    triv = repn.build_irrep(0)
    assert triv.dim == 1 and triv.h.is_zero() and triv.v_minus.is_zero() and triv.v_plus.is_zero()
    assert sorted(repn.build_irrep(Fraction(1, 2)).weights) == [-1, 0, 1]
    assert sorted(repn.build_irrep(1).weights) == [-2, -1, 0, 1, 2]
    for s in SPINS:
        rep = repn.build_irrep(s, "grading_010")
        assert repn.sl2_content(rep) == repn.expected_sl2_content(s)


def test_evaluate_examples():
    rep = repn.fundamental_rep()
    vm2 = rep.v_minus @ rep.v_minus
    assert repn.rho_sigma(rep) == vm2.scale(XI * -8)
    assert repn.evaluate(U.sigma_series(6), rep) == repn.rho_sigma(rep)
    assert repn.evaluate(U.one(), rep) == repn.GradedMatrix.identity(rep.parity)
    assert repn.evaluate(U.X_plus(), rep) == (rep.v_plus @ rep.v_plus).scale(4)


monos = st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))


@given(monos, monos, st.sampled_from([Fraction(1, 2), 1]))
def test_evaluate_is_morphism(a, b, s):
    rep = repn.build_irrep(s)
    A, B = U.monomial(*a), U.monomial(*b)
    assert repn.evaluate(A * B, rep) == repn.evaluate(A, rep) @ repn.evaluate(B, rep)


def test_graded_kron_matches_tensor_products():
    rep = repn.fundamental_rep()
    eye = repn.GradedMatrix.identity(rep.parity)
    assert repn.graded_kron(eye, eye) == repn.GradedMatrix.identity([0, 0, 1, 0, 0, 1, 1, 1, 0])
    gens = [U.h(), U.v_minus(), U.v_plus()]
    for a, b, c, d in itertools.product(gens, repeat=4):
        prod = tensor(a, b) * tensor(c, d)
        lhs = repn.evaluate_tensor(prod, rep)
        rhs = repn.evaluate_tensor(tensor(a, b), rep) @ repn.evaluate_tensor(tensor(c, d), rep)
        assert lhs == rhs


def test_jordanian_R_and_block_form():
    J = repn.jordanian_R()
    assert J.rows[1][0] == -XI
    R = repn.fundamental_R()
    assert R.specialize(0) == repn.GradedMatrix.identity(R.parity)
    perm = repn.find_block_permutation(R, repn.jordanian_block_target())
    assert perm is not None
    assert R.permuted(perm).rows == repn.jordanian_block_target().rows


def test_R_truncation_stable():
    rep = repn.fundamental_rep()
    R = repn.universal_R_matrix(rep)
    for order in (2, 3, 6):
        assert repn.evaluate_tensor(hopf.universal_R(order), rep) == R


def test_matrix_properties():
    R = repn.fundamental_R()
    checks = repn.verify_matrix_properties(R, repn.fundamental_rep().parity)
    assert all_passed(checks)
    ranks = repn.projector_ranks(R, repn.fundamental_rep().parity)
    assert set(ranks.values()) == {(5, 4)}
    assert all_passed(repn.verify_matrix_properties(repn.jordanian_R(), (0, 0)))


def test_scaling():
    assert all_passed(repn.verify_scaling())
    J = repn.jordanian_R()
    assert J.substitute_scale().rows[1][0] == XiScalar.monomial(-1, xi=1, mu=2)


def _bump(R: repn.GradedMatrix, i: int, j: int) -> repn.GradedMatrix:
    rows = [list(r) for r in R.rows]
    rows[i][j] = rows[i][j] + 1
    return repn.GradedMatrix(rows, R.parity)


def test_perturbed_jordanian_block_fails():
    J = repn.jordanian_R()
    for i, j in itertools.product(range(4), repeat=2):
        assert not all_passed(repn.verify_matrix_properties(_bump(J, i, j), (0, 0))), (i, j)
