"""Expression language for algebra elements: parser, evaluator and canonical renderer.

Grammar (loosest first)::

    tensor := sum (SEP sum)*           SEP is "(x)" or the tensor sign
    sum    := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := ("-" | "+") unary | power
    power  := atom ("^" exponent)?      exponent := INT | "(" "-"? INT ")"
    atom   := INT | SYMBOL | FUNC "(" tensor ")" | "(" tensor ")" | "O(xi^" INT ")"

Symbols: ``h v- v+ X- X+ sigma`` (the enveloping algebra), ``nu eta x`` (the
dual super-Borel algebra), ``xi mu`` (scalars).  Functions: ``Delta`` (primitive
or dual coproduct), ``Delta_t`` (twisted coproduct), ``S`` (twisted or dual
antipode), ``eps``, ``exp``, ``log``.  ``(x)`` always means the tensor sign, so
the dual generator ``x`` is written without parentheses.  ``+ O(xi^k)`` marks
a truncated element known through ``xi^(k-1)``.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Union

from . import dual as D
from . import hopf
from . import superalg as U
from .linear import Combination
from .scalar import MU, XI, XiScalar
from .series import exp_series, log1p_series
from .tensor import ArityError, TensorElement, tensor

DEFAULT_ORDER = hopf.DEFAULT_ORDER

U_SYMBOLS = ("h", "v-", "v+", "X-", "X+", "sigma")
DUAL_SYMBOLS = ("nu", "eta", "x")
SCALAR_SYMBOLS = ("xi", "mu")
FUNCTIONS = ("Delta_t", "Delta", "S", "eps", "exp", "log", "O")


class ExprError(ValueError):
    """Base class for expression errors; ``pos`` is a 0-based character offset."""

    def __init__(self, message: str, pos: int | None = None):
        self.pos = pos
        super().__init__(message if pos is None else f"{message} at position {pos}")


class ParseError(ExprError):
    pass


class UnknownSymbol(ExprError):
    pass


class EvalError(ExprError):
    pass


# -- tokens -----------------------------------------------------------------

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<sep>\(\s*x\s*\)|⊗)
  | (?P<int>\d+)
  | (?P<name>(?:[vX][+-])|[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*/^(),])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


def _ends_operand(toks: list[Token]) -> bool:
    if not toks:
        return False
    t = toks[-1]
    return t.kind == "int" or (t.kind == "name" and t.text not in FUNCTIONS) or t.text == ")"


def tokenize(text: str) -> list[Token]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        if kind == "sep" and m.group() != "⊗" and not _ends_operand(out):
            # "(x)" after a function name or an operator is a parenthesized x
            out.append(Token("op", "(", pos))
            out.append(Token("name", "x", m.group().index("x") + pos))
            out.append(Token("op", ")", m.end() - 1))
        elif kind != "ws":
            out.append(Token(kind, m.group(), pos))
        pos = m.end()
    out.append(Token("end", "", len(text)))
    return out


# -- syntax tree ------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: int
    pos: int = 0


@dataclass(frozen=True)
class Sym:
    name: str
    pos: int = 0


@dataclass(frozen=True)
class Call:
    func: str
    arg: "Expr"
    pos: int = 0


@dataclass(frozen=True)
class Neg:
    arg: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str  # + - * / ^ (x)
    left: "Expr"
    right: "Expr"
    pos: int = 0


@dataclass(frozen=True)
class Trunc:
    order: int  # O(xi^order)
    pos: int = 0


Expr = Union[Num, Sym, Call, Neg, BinOp, Trunc]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def take(self, text: str | None = None, kind: str | None = None) -> Token:
        t = self.tok
        if (text is not None and t.text != text) or (kind is not None and t.kind != kind):
            want = text if text is not None else kind
            got = t.text or "end of input"
            raise ParseError(f"expected {want!r}, found {got!r}", t.pos)
        self.i += 1
        return t

    def parse(self) -> Expr:
        if self.tok.kind == "end":
            raise ParseError("empty expression", 0)
        e = self.tensor()
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return e

    def tensor(self) -> Expr:
        e = self.sum()
        while self.tok.kind == "sep":
            pos = self.take().pos
            e = BinOp("(x)", e, self.sum(), pos)
        return e

    def sum(self) -> Expr:
        e = self.term()
        while self.tok.text in ("+", "-") and self.tok.kind == "op":
            t = self.take()
            e = BinOp(t.text, e, self.term(), t.pos)
        return e

    def term(self) -> Expr:
        e = self.unary()
        while self.tok.text in ("*", "/") and self.tok.kind == "op":
            t = self.take()
            e = BinOp(t.text, e, self.unary(), t.pos)
        return e

    def unary(self) -> Expr:
        if self.tok.text == "-" and self.tok.kind == "op":
            self.take()
            return Neg(self.unary())
        if self.tok.text == "+" and self.tok.kind == "op":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> Expr:
        e = self.atom()
        if self.tok.text == "^":
            t = self.take()
            e = BinOp("^", e, Num(self.exponent(), t.pos), t.pos)
        return e

    def exponent(self) -> int:
        if self.tok.kind == "int":
            return int(self.take().text)
        self.take("(")
        sign = -1 if self.tok.text == "-" else 1
        if self.tok.text in ("-", "+"):
            self.take()
        n = int(self.take(kind="int").text)
        self.take(")")
        return sign * n

    def atom(self) -> Expr:
        t = self.tok
        if t.kind == "int":
            self.take()
            return Num(int(t.text), t.pos)
        if t.kind == "name":
            self.take()
            if t.text in FUNCTIONS:
                if t.text == "O":
                    return self.trunc(t.pos)
                self.take("(")
                arg = self.tensor()
                self.take(")")
                return Call(t.text, arg, t.pos)
            if t.text in U_SYMBOLS + DUAL_SYMBOLS + SCALAR_SYMBOLS:
                return Sym(t.text, t.pos)
            raise UnknownSymbol(f"unknown symbol {t.text!r}", t.pos)
        if t.text == "(":
            self.take()
            e = self.tensor()
            self.take(")")
            return e
        raise ParseError(f"unexpected {t.text or 'end of input'!r}", t.pos)

    def trunc(self, pos: int) -> Trunc:
        self.take("(")
        name = self.take(kind="name")
        if name.text != "xi":
            raise ParseError("O(...) takes a power of xi", name.pos)
        n = 1
        if self.tok.text == "^":
            self.take()
            n = self.exponent()
        self.take(")")
        return Trunc(n, pos)


def parse_expr(text: str) -> Expr:
    return _Parser(text).parse()


# -- values -----------------------------------------------------------------

@dataclass
class LazyTensor:
    """Tensor whose scalar legs have not yet been assigned an algebra."""

    terms: list  # [(XiScalar, (leg, ...))]

    @property
    def arity(self) -> int:
        return len(self.terms[0][1])

    def resolve(self, hint: TensorElement | None = None) -> TensorElement:
        algs = []
        for pos in range(self.arity):
            alg = None
            for _, legs in self.terms:
                if not isinstance(legs[pos], XiScalar):
                    alg = legs[pos].leg_algebra if isinstance(legs[pos], D.DualElement) else _u_leg()
                    break
            if alg is None:
                alg = hint.algebras[pos] if hint is not None and hint.arity == self.arity else _u_leg()
            algs.append(alg)
        out = None
        for c, legs in self.terms:
            els = [alg.element({alg.unit: leg}) if isinstance(leg, XiScalar) else leg for alg, leg in zip(algs, legs)]
            t = tensor(*els, algebras=algs).scale(c)
            out = t if out is None else out + t
        return out


def _u_leg():
    from .tensor import UALG

    return UALG


@dataclass(frozen=True)
class TruncMark:
    order: int


Value = Union[XiScalar, Combination, LazyTensor, TruncMark]


@dataclass
class Context:
    order: int = DEFAULT_ORDER
    M: int = D.DEFAULT_M

    @classmethod
    def from_env(cls, order: int | None = None, M: int | None = None) -> Context:
        if order is None:
            env = os.environ.get("OSPXI_ORDER")
            order = int(env) if env else DEFAULT_ORDER
        if order < 1:
            raise ValueError("order must be >= 1")
        return cls(order, M if M is not None else D.DEFAULT_M)


def _is_scalar(v) -> bool:
    return isinstance(v, XiScalar)


def _as_tensor(v, hint=None) -> TensorElement:
    if isinstance(v, LazyTensor):
        return v.resolve(hint)
    return v


def _add(a: Value, b: Value, pos: int) -> Value:
    if isinstance(a, TruncMark) or isinstance(b, TruncMark):
        mark, other = (a, b) if isinstance(a, TruncMark) else (b, a)
        if isinstance(other, TruncMark):
            return TruncMark(min(a.order, b.order))
        if _is_scalar(other):
            other = U.one().scale(other)
        if isinstance(other, LazyTensor):
            other = other.resolve()
        return other.with_prec(mark.order - 1)
    if _is_scalar(a) and _is_scalar(b):
        return a + b
    if _is_scalar(a) or _is_scalar(b):
        s, e = (a, b) if _is_scalar(a) else (b, a)
        if isinstance(e, (LazyTensor, TensorElement)):
            raise EvalError("cannot add a scalar to a tensor", pos)
        return e + e.scalar(s)
    if isinstance(a, LazyTensor) and isinstance(b, LazyTensor):
        if a.arity != b.arity:
            raise EvalError("tensor arity mismatch in sum", pos)
        return LazyTensor(a.terms + b.terms)
    if isinstance(a, LazyTensor) or isinstance(b, LazyTensor):
        a, b = _as_tensor(a, b if isinstance(b, TensorElement) else None), _as_tensor(b, a if isinstance(a, TensorElement) else None)
    try:
        return a + b
    except (TypeError, ValueError, ArityError) as exc:
        raise EvalError(f"cannot add: {exc}", pos) from None


def _neg(a: Value) -> Value:
    if isinstance(a, LazyTensor):
        return LazyTensor([(-c, legs) for c, legs in a.terms])
    if isinstance(a, TruncMark):
        return a
    return -a


def _scale(s: XiScalar, e: Value) -> Value:
    if isinstance(e, XiScalar):
        return s * e
    if isinstance(e, LazyTensor):
        return LazyTensor([(s * c, legs) for c, legs in e.terms])
    if isinstance(e, TruncMark):
        return e
    return e.scale(s)


def _mul(a: Value, b: Value, ctx: Context, pos: int) -> Value:
    if isinstance(a, TruncMark) or isinstance(b, TruncMark):
        raise EvalError("O(...) can only be added", pos)
    if _is_scalar(a):
        return a * b if _is_scalar(b) else _scale(a, b)
    if _is_scalar(b):
        return _scale(b, a)
    if isinstance(a, LazyTensor) or isinstance(b, LazyTensor):
        ta = _as_tensor(a, b if isinstance(b, TensorElement) else None)
        tb = _as_tensor(b, ta if isinstance(ta, TensorElement) else None)
        a, b = ta, tb
    try:
        return a.mul(b, _order_for(a, b, ctx))
    except (TypeError, ValueError, ArityError) as exc:
        raise EvalError(f"cannot multiply: {exc}", pos) from None


def _order_for(a, b, ctx: Context) -> int | None:
    return ctx.order if (a.prec is not None or b.prec is not None) else None


def _power(a: Value, n: int, ctx: Context, pos: int) -> Value:
    if _is_scalar(a):
        if n < 0:
            if len(a.terms) != 1:
                raise EvalError("only monomial scalars can be inverted", pos)
            return a.inverse() ** (-n)
        return a ** n
    if n < 0:
        raise EvalError("negative powers of algebra elements are not supported", pos)
    if isinstance(a, LazyTensor):
        a = a.resolve()
    if isinstance(a, TruncMark):
        raise EvalError("O(...) can only be added", pos)
    out = a.scalar(1)
    for _ in range(n):
        out = out.mul(a, _order_for(out, a, ctx))
    return out


def _series(fn: str, a: Value, ctx: Context, pos: int) -> Value:
    if _is_scalar(a):
        if a.terms and set(a.terms) != {(0, 0)} or (fn == "log" and a != 1) or (fn == "exp" and a):
            raise EvalError(f"{fn} of a scalar is only defined at the identity", pos)
        return XiScalar.const(0 if fn == "log" else 1)
    if isinstance(a, D.DualElement):
        arg = a if fn == "exp" else a - a.scalar(1)
        if any(m[0] or m[1] or m[2] == 0 for m in arg.terms):
            raise EvalError(f"{fn} on the dual algebra needs an argument in nu-series without constant term", pos)
        # each power raises the nu-degree, so M + 1 terms are exact
        out, power = a.scalar(0), a.scalar(1)
        for n in range(1, arg.M + 1):
            power = power * arg
            out = out + power.scale(Fraction(1, factorial(n)) if fn == "exp" else Fraction((-1) ** (n + 1), n))
        return out + a.scalar(1) if fn == "exp" else out
    if isinstance(a, LazyTensor):
        a = a.resolve()
    arg = a if fn == "exp" else a - a.scalar(1)
    v = arg.valuation()
    if arg.terms and (v is None or v < 1):
        raise EvalError(f"{fn} needs an argument of positive xi-valuation", pos)
    arg = arg.with_prec(ctx.order)
    return exp_series(arg, ctx.order) if fn == "exp" else log1p_series(arg, ctx.order)


def _call(fn: str, a: Value, ctx: Context, pos: int) -> Value:
    if fn in ("exp", "log"):
        return _series(fn, a, ctx, pos)
    if isinstance(a, LazyTensor):
        a = a.resolve()
    if isinstance(a, TensorElement) and fn != "eps":
        raise EvalError(f"{fn} takes a single-leg element, not a tensor", pos)
    if isinstance(a, TruncMark):
        raise EvalError(f"{fn} of O(...) is undefined", pos)
    if fn == "eps":
        if isinstance(a, TensorElement):
            raise EvalError("eps takes a single-leg element, not a tensor", pos)
        if _is_scalar(a):
            return a
        return D.counit(a) if isinstance(a, D.DualElement) else U.counit_u(a)
    if _is_scalar(a):
        a = U.one().scale(a)
    if isinstance(a, D.DualElement):
        if fn == "Delta":
            return D.coproduct(a)
        if fn == "S":
            return D.antipode(a)
        raise EvalError(f"{fn} acts on the enveloping algebra only", pos)
    if fn == "Delta":
        return hopf.coproduct_primitive(a)
    if fn == "Delta_t":
        return hopf.twisted_hopf(ctx.order).coproduct(a.with_prec(ctx.order))
    if fn == "S":
        return hopf.twisted_hopf(ctx.order).antipode(a.with_prec(ctx.order))
    raise UnknownSymbol(f"unknown function {fn!r}", pos)


def _symbol(name: str, ctx: Context, pos: int) -> Value:
    if name == "xi":
        return XI
    if name == "mu":
        return MU
    if name == "sigma":
        return U.sigma_series(ctx.order)
    if name in U.GENERATORS:
        return U.GENERATORS[name]()
    if name == "nu":
        return D.nu(ctx.M)
    if name == "eta":
        return D.eta(ctx.M)
    if name == "x":
        return D.x(ctx.M)
    raise UnknownSymbol(f"unknown symbol {name!r}", pos)


def evaluate(e: Expr, ctx: Context | None = None) -> Value:
    ctx = ctx or Context()
    if isinstance(e, Num):
        return XiScalar.const(e.value)
    if isinstance(e, Sym):
        return _symbol(e.name, ctx, e.pos)
    if isinstance(e, Trunc):
        return TruncMark(e.order)
    if isinstance(e, Neg):
        return _neg(evaluate(e.arg, ctx))
    if isinstance(e, Call):
        return _call(e.func, evaluate(e.arg, ctx), ctx, e.pos)
    if isinstance(e, BinOp):
        if e.op == "^":
            return _power(evaluate(e.left, ctx), e.right.value, ctx, e.pos)
        a = evaluate(e.left, ctx)
        b = evaluate(e.right, ctx)
        if e.op == "+":
            return _add(a, b, e.pos)
        if e.op == "-":
            return _add(a, _neg(b), e.pos)
        if e.op == "*":
            return _mul(a, b, ctx, e.pos)
        if e.op == "/":
            if not _is_scalar(b) or len(b.terms) != 1:
                raise EvalError("division only by a nonzero monomial scalar", e.pos)
            return _scale(b.inverse(), a)
        if e.op == "(x)":
            return _tensor(a, b, e.pos)
    raise EvalError(f"cannot evaluate {e!r}")


def _tensor(a: Value, b: Value, pos: int) -> LazyTensor:
    def legs_of(v):
        if isinstance(v, LazyTensor):
            return v.terms
        if isinstance(v, TensorElement):
            out = []
            for key, c in v.terms.items():
                out.append((c, tuple(alg.element({m: 1}) for alg, m in zip(v.algebras, key))))
            return out
        if isinstance(v, TruncMark):
            raise EvalError("O(...) cannot be a tensor leg", pos)
        if v.prec is not None if isinstance(v, Combination) else False:
            raise EvalError("truncated elements cannot be tensor legs; form the tensor first", pos)
        return [(XiScalar.const(1), (v,))]

    out = []
    for c1, l1 in legs_of(a):
        for c2, l2 in legs_of(b):
            out.append((c1 * c2, l1 + l2))
    return LazyTensor(out)


def finalize(v: Value) -> Value:
    if isinstance(v, LazyTensor):
        return v.resolve()
    if isinstance(v, TruncMark):
        return U.one().scale(0).with_prec(v.order - 1)
    return v


def eval_expr(text: str, ctx: Context | None = None) -> Value:
    return finalize(evaluate(parse_expr(text), ctx))


# -- canonical rendering ----------------------------------------------------

def render_value(v: Value) -> str:
    """ASCII rendering that `eval_expr` reads back to the same value."""
    if isinstance(v, XiScalar):
        return v.render()
    text = v.render()
    if v.prec is not None:
        tail = f"O(xi^{v.prec + 1})" if v.prec + 1 != 1 else "O(xi)"
        text = tail if text == "0" else f"{text} + {tail}"
    return text


def coerce_like(v: Value, like: Value) -> Value:
    """Re-home a parsed value into the algebra of ``like``.

    Scalars and unit legs carry no algebra of their own in the surface
    syntax, so ``3`` or ``(1 (x) 1)`` read back into the enveloping algebra
    by default.
    """
    if isinstance(like, XiScalar):
        return v
    if isinstance(v, XiScalar):
        return like.scalar(v)
    if isinstance(like, TensorElement) and isinstance(v, TensorElement):
        if v.arity != like.arity:
            return v
        for pos, (a, b) in enumerate(zip(v.algebras, like.algebras)):
            if a is not b and any(k[pos] != a.unit for k in v.terms):
                return v
        return TensorElement(dict(v.terms), v.prec, like.algebras)
    if type(v) is not type(like) and not isinstance(v, TensorElement):
        if all(k == U.UNIT for k in v.terms):
            return like.scalar(v.coefficient(U.UNIT)).with_prec(v.prec) if v.terms else like._like({}, v.prec)
    return v


def identical(a: Value, b: Value) -> bool:
    """Same kind, same precision, same terms (stricter than ``==``)."""
    if isinstance(a, XiScalar) or isinstance(b, XiScalar):
        return isinstance(a, XiScalar) and isinstance(b, XiScalar) and a == b
    if type(a) is not type(b) or a.prec != b.prec or a.terms != b.terms:
        return False
    if isinstance(a, TensorElement):
        return tuple(x.name for x in a.algebras) == tuple(x.name for x in b.algebras)
    return getattr(a, "M", None) == getattr(b, "M", None)


def round_trip(v: Value, ctx: Context | None = None) -> bool:
    back = coerce_like(eval_expr(render_value(v), ctx), v)
    return identical(back, v)
