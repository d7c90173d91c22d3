from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from exprgen import random_value
from ospxi import dual as D
from ospxi import hopf
from ospxi import superalg as U
from ospxi.expr import (
    Context, EvalError, ParseError, UnknownSymbol, eval_expr, parse_expr, render_value, round_trip, tokenize,
)
from ospxi.scalar import XI, XiScalar
from ospxi.tensor import tensor


def test_commutation_relation():
    assert render_value(eval_expr("v+ * v-")) == "-v-*v+ - 1/4*h"
    assert eval_expr("h*v+ - v+*h") == U.v_plus()


def test_scalars():
    assert eval_expr("eps(1)") == XiScalar.const(1)
    assert eval_expr("2*xi^2/3 - xi^(-1)") == XI**2 * Fraction(2, 3) - XI ** -1
    assert eval_expr("eps(h + 5)") == XiScalar.const(5)


def test_tensor_separator_forms():
    t = eval_expr("h (x) v-")
    assert t == tensor(U.h(), U.v_minus())
    assert eval_expr("h ⊗ v-") == t
    assert eval_expr("x(x)x") == tensor(D.x(), D.x())
    # after a function name, (x) is a parenthesized dual generator
    assert eval_expr("S(x)") == D.antipode(D.x())


def test_coproducts_and_antipode():
    ctx = Context(4)
    assert eval_expr("Delta(h)") == tensor(U.h(), U.one()) + tensor(U.one(), U.h())
    dt = eval_expr("Delta_t(v-)", ctx)
    assert dt == hopf.twist(4).coproduct(U.v_minus())
    assert render_value(dt).endswith("+ O(xi^5)")
    assert eval_expr("Delta(nu)") == D.coproduct(D.nu())


def test_truncation_marker():
    v = eval_expr("h + xi*v- + O(xi^3)")
    assert v.prec == 2
    assert eval_expr("h + O(xi^3)") == eval_expr("h + xi^5*v+ + O(xi^3)")
    assert round_trip(v)


def test_series_functions():
    ctx = Context(5)
    expected = "xi^5*h^5/120 + xi^4*h^4/24 + xi^3*h^3/6 + xi^2*h^2/2 + xi*h + 1 + O(xi^6)"
    assert eval_expr("exp(xi*h)", ctx) == eval_expr(expected, ctx)
    assert eval_expr("log(exp(xi*h))", ctx) == eval_expr("xi*h", ctx)
    assert eval_expr("exp(-2*nu)") == D.exp_nu(-2)


@pytest.mark.parametrize(
    "text, exc, pos",
    [
        ("h +", ParseError, 3),
        ("h * * v-", ParseError, 4),
        ("foo + h", UnknownSymbol, 0),
        ("h + bar", UnknownSymbol, 4),
        ("h $ v-", ParseError, 2),
        ("Delta(h (x) h)", EvalError, None),
        ("exp(h)", EvalError, None),
    ],
)
def test_errors_carry_positions(text, exc, pos):
    with pytest.raises(exc) as info:
        eval_expr(text)
    if pos is not None:
        assert info.value.pos == pos


def test_tokenizer_positions():
    toks = tokenize("v- (x) h")
    assert [(t.kind, t.pos) for t in toks] == [("name", 0), ("sep", 3), ("name", 7), ("end", 8)]
    assert parse_expr("h (x) h") != parse_expr("h * h")


@given(st.integers(0, 10**6))
def test_round_trip_random_values(seed):
    assert round_trip(random_value(random.Random(seed)))


def test_order_from_environment(monkeypatch):
    monkeypatch.setenv("OSPXI_ORDER", "3")
    assert Context.from_env().order == 3
