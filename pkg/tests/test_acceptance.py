"""One test per acceptance criterion; conftest prints a PASS/FAIL line for each."""

from __future__ import annotations

import fnmatch
import json
import random
from fractions import Fraction
from pathlib import Path

import pytest

from exprgen import random_value
from ospxi import cli, dual, hopf, repn
from ospxi.expr import round_trip
from ospxi.report import all_passed
from ospxi.scalar import XiScalar
from ospxi.tensor import TensorElement

GOLDEN = Path(__file__).parent / "golden" / "verify_all.json"


@pytest.fixture(scope="session")
def all_report(tmp_path_factory):
    out = tmp_path_factory.mktemp("golden") / "verify_all.json"
    code = cli.main(["verify", "all", "--format", "json", "--out", str(out)])
    data = out.read_bytes()
    return code, data, {c["id"]: c for c in json.loads(data)["checks"]}


def _select(checks: dict, include: list[str], exclude: list[str] = ()) -> dict:
    return {
        k: c for k, c in checks.items()
        if any(fnmatch.fnmatchcase(k, p) for p in include) and not any(fnmatch.fnmatchcase(k, p) for p in exclude)
    }


def _assert_group(checks: dict, include, required, exclude=()):
    group = _select(checks, include, exclude)
    missing = [r for r in required if r not in group]
    assert not missing, f"missing checks: {missing}"
    failed = {k: c["residual"] for k, c in group.items() if c["status"] != "pass"}
    assert not failed, failed
    return group


def test_criterion_01_twist_axioms(all_report):
    _, _, checks = all_report
    group = _assert_group(checks, ["hopf:twist.*"],
                          ["hopf:twist.counit_left", "hopf:twist.counit_right", "hopf:twist.cocycle"])
    assert all(c["order"] == 6 for c in group.values())


def test_criterion_02_twisted_coproducts(all_report):
    _, _, checks = all_report
    _assert_group(checks, ["hopf:coproduct.*"],
                  [f"hopf:coproduct.{g}" for g in ("h", "v-", "v+", "X-", "X+")] + ["hopf:coproduct.X+.squaring"])


def test_criterion_03_counit_and_antipode(all_report):
    _, _, checks = all_report
    _assert_group(checks, ["hopf:antipode.*"],
                  [f"hopf:antipode.{side}.{g}" for side in ("left", "right") for g in ("1", "h", "v-", "v+")])


def test_criterion_04_universal_R(all_report):
    _, _, checks = all_report
    _assert_group(checks, ["hopf:R.*"], ["hopf:R.twist_formula", "hopf:R.triangular", "hopf:R.quasi_left",
                                         "hopf:R.quasi_right", "hopf:R.intertwine.h", "hopf:R.intertwine.v-",
                                         "hopf:R.intertwine.v+"])


def test_criterion_05_representations(all_report):
    _, _, checks = all_report
    spins = ("0", "1/2", "1", "3/2")
    required = [f"ybe:irrep.s={s}.{k}" for s in spins for k in ("dimension", "sl2_content", "grading_001.relations")]
    _assert_group(checks, ["ybe:irrep.*"], required)


def test_criterion_06_matrix_R(all_report):
    _, _, checks = all_report
    required = [f"ybe:Rmat.{k}" for k in ("block_form", "ybe", "rhat_involutive", "projector_ranks")]
    required += ["ybe:Rjordan.ybe"]
    group = _assert_group(checks, ["ybe:Rmat.*", "ybe:Rjordan.*"], required)
    ranks = group["ybe:Rmat.projector_ranks"]["detail"]
    assert ranks, "projector ranks must be reported"


def test_criterion_07_scaling(all_report):
    _, _, checks = all_report
    _assert_group(checks, ["scaling:*"], ["scaling:scaling.jordanian", "scaling:scaling.fundamental"])


def test_criterion_08_frt(all_report):
    _, _, checks = all_report
    required = ["frt:frt.sl2_block", "frt:frt.central.det", "frt:frt.central.g", "frt:frt.central.theta",
                "frt:frt.inverse.product"]
    _assert_group(checks, ["frt:*"], required, exclude=["frt:frt.reduction.*"])


def test_criterion_09_duality(all_report):
    _, _, checks = all_report
    required = ["dual:duality.product_dual", "dual:duality.coproduct_dual", "dual:pairing.normalization",
                "dual:borel.duality.product", "dual:borel.duality.coproduct", "dual:borel.h_sigma",
                "dual:T.reproduction", "dual:T.bicharacter.left", "dual:T.bicharacter.right",
                "frt:frt.reduction.relations"]
    _assert_group(checks, ["dual:*", "frt:frt.reduction.*"], required)


# -- mutation sensitivity -----------------------------------------------------

def _bump_scalar(c: XiScalar) -> list[XiScalar]:
    # +1 on each rational coefficient, kept in its own xi/mu degree
    return [c + XiScalar.monomial(1, xi=a, mu=b) for (a, b) in c.terms]


def _twist_mutants(order: int):
    F = hopf.twist_element(order)
    for key, c in F.terms.items():
        for bumped in _bump_scalar(c):
            terms = dict(F.terms)
            terms[key] = bumped
            yield TensorElement(terms, F.prec, F.algebras)


def _bump_entry(R: repn.GradedMatrix, i: int, j: int) -> repn.GradedMatrix:
    rows = [list(r) for r in R.rows]
    rows[i][j] = rows[i][j] + 1
    return repn.GradedMatrix(rows, R.parity)


def _dual_checks():
    return (dual.verify_dual_algebra(6) + dual.verify_dual_hopf(6) + dual.verify_letter_functionals(2, 6)
            + dual.verify_normalization(2, 6) + dual.verify_duality(2, 6))


def test_criterion_10_mutation_sensitivity():
    undetected = []
    order = hopf.DEFAULT_ORDER
    assert all_passed(hopf.verify_twist_axioms(order))
    for n, F in enumerate(_twist_mutants(order)):
        if all_passed(hopf.verify_twist_axioms(order, F=F)):
            undetected.append(f"F mutant {n}")

    J = repn.jordanian_R()
    R9 = repn.fundamental_R()
    parity = repn.fundamental_rep().parity
    perm = repn.find_block_permutation(R9, repn.jordanian_block_target())
    assert perm is not None
    for i in range(4):
        for j in range(4):
            if all_passed(repn.verify_matrix_properties(_bump_entry(J, i, j), (0, 0))):
                undetected.append(f"R(xi)[{i},{j}]")
            # the same entry inside the 9x9 R, through the block permutation
            if all_passed(repn.verify_matrix_properties(_bump_entry(R9, perm[i], perm[j]), parity)):
                undetected.append(f"R[{perm[i]},{perm[j]}]")

    assert all_passed(_dual_checks())
    for key in sorted(dual.STRUCTURE):
        saved = dual.STRUCTURE[key]
        try:
            dual.STRUCTURE[key] = saved + 1
            dual.clear_caches()
            if all_passed(_dual_checks()):
                undetected.append(f"dual {key}")
        finally:
            dual.STRUCTURE[key] = saved
            dual.clear_caches()
    assert not undetected, undetected


# -- CLI ----------------------------------------------------------------------

def test_criterion_11_cli_golden_and_round_trip(all_report):
    code, data, _ = all_report
    assert code == cli.EXIT_OK
    assert data == GOLDEN.read_bytes()
    rng = random.Random(20261016)
    failures = [n for n in range(1000) if not round_trip(random_value(rng))]
    assert not failures, failures[:10]
