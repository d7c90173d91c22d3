"""Hopf superalgebra structures on U(osp(1|2)): classical and twisted.

The twist is ``F = exp(1/2 h (x) sigma)``.  The twisted coproduct is always
computed from its definition ``F Delta F^-1``; the closed formulas are only
ever compared against it, never substituted for it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

from . import superalg as U
from .report import Check, residual_check
from .scalar import XI, XiScalar
from .series import exp_series, inverse_unipotent
from .superalg import AlgebraElement, Monomial
from .tensor import (
    UALG,
    TensorElement,
    apply_on_leg,
    embed,
    graded_flip,
    multiply,
    tensor,
    unit,
)

DEFAULT_ORDER = 6


# -- classical (primitive) structure ----------------------------------------

def _primitive(g: AlgebraElement) -> TensorElement:
    return tensor(g, U.one()) + tensor(U.one(), g)


@lru_cache(maxsize=None)
def _primitive_power(gen: str, n: int) -> TensorElement:
    if n == 0:
        return unit()
    base = _primitive({"v-": U.v_minus(), "h": U.h(), "v+": U.v_plus()}[gen])
    return _primitive_power(gen, n - 1) * base


@lru_cache(maxsize=None)
def coproduct_monomial(m: Monomial) -> TensorElement:
    i, j, k = m
    return _primitive_power("v-", i) * _primitive_power("h", j) * _primitive_power("v+", k)


def coproduct_primitive(x: AlgebraElement) -> TensorElement:
    """Primitive coproduct extended as a superalgebra morphism."""
    out = TensorElement({}, x.prec)
    for m, c in x.terms.items():
        out = out + coproduct_monomial(m).scale(c)
    return out.with_prec(x.prec)


def antipode_sign(m: Monomial) -> int:
    odd = m[0] + m[2]
    return -1 if comb(odd, 2) % 2 else 1


@lru_cache(maxsize=None)
def antipode_classical_monomial(m: Monomial) -> AlgebraElement:
    i, j, k = m
    sign = antipode_sign(m) * (-1) ** (i + j + k)
    return U.monomial(0, 0, k).mul(U.monomial(0, j, 0)).mul(U.monomial(i, 0, 0)).scale(sign)


# -- the twist ------------------------------------------------------------

def twist_log(order: int) -> TensorElement:
    """``1/2 h (x) sigma`` through xi^order."""
    return tensor(U.h(), U.sigma_series(max(order, 1))).scale(Fraction(1, 2)).with_prec(order)


def twist_element(order: int) -> TensorElement:
    if order < 0:
        raise ValueError("order must be nonnegative")
    return exp_series(twist_log(order), order)


def twist_inverse(order: int) -> TensorElement:
    """``F^-1`` as ``exp(-1/2 h (x) sigma)`` (exponent negation)."""
    return exp_series(-twist_log(order), order)


def twist_inverse_geometric(order: int) -> TensorElement:
    return inverse_unipotent(twist_element(order), order)


def leg_counit(t: TensorElement, leg: int) -> AlgebraElement:
    return apply_on_leg(t, "counit", leg)


def verify_twist_axioms(order: int = DEFAULT_ORDER, F: TensorElement | None = None) -> list[Check]:
    if order < 1:
        raise ValueError("order must be >= 1")
    if F is None:
        F = twist_element(order)
    one = U.one().with_prec(order)
    left = leg_counit(F, 0) - one
    right = leg_counit(F, 1) - one
    F12 = embed(F, (0, 1), 3)
    F23 = embed(F, (1, 2), 3)
    lhs = F12.mul(apply_on_leg(F, coproduct_monomial, 0), order)
    rhs = F23.mul(apply_on_leg(F, coproduct_monomial, 1), order)
    return [
        residual_check("twist.counit_left", "(eps (x) id) F = 1", left, order),
        residual_check("twist.counit_right", "(id (x) eps) F = 1", right, order),
        residual_check("twist.cocycle", "F_12 (Delta (x) id) F = F_23 (id (x) Delta) F", lhs - rhs, order),
    ]


# -- Hopf structures --------------------------------------------------------

@dataclass
class HopfStructure:
    """Coproduct, counit and antipode on generators, extended (anti)multiplicatively."""

    flavor: str  # "classical" | "twisted"
    order: int | None = None
    coproduct_gens: dict[str, TensorElement] = field(default_factory=dict)
    antipode_gens: dict[str, AlgebraElement] = field(default_factory=dict)
    counit_gens: dict[str, XiScalar] = field(default_factory=dict)

    def __post_init__(self):
        self._dcache: dict[Monomial, TensorElement] = {}
        self._scache: dict[Monomial, AlgebraElement] = {}
        self._dpow: dict[tuple[str, int], TensorElement] = {}
        self._spow: dict[tuple[str, int], AlgebraElement] = {}

    # coproduct
    def _gen_power(self, gen: str, n: int) -> TensorElement:
        key = (gen, n)
        if key not in self._dpow:
            if n == 0:
                self._dpow[key] = unit().with_prec(self.order)
            else:
                self._dpow[key] = self._gen_power(gen, n - 1).mul(self.coproduct_gens[gen], self.order)
        return self._dpow[key]

    def coproduct_monomial(self, m: Monomial) -> TensorElement:
        d = self._dcache.get(m)
        if d is None:
            i, j, k = m
            d = self._gen_power("v-", i).mul(self._gen_power("h", j), self.order)
            d = d.mul(self._gen_power("v+", k), self.order)
            self._dcache[m] = d
        return d

    def coproduct(self, x: AlgebraElement) -> TensorElement:
        prec = x.prec if self.order is None else min(self.order, x.prec if x.prec is not None else self.order)
        out = TensorElement({}, prec)
        for m, c in x.terms.items():
            out = out + self.coproduct_monomial(m).scale(c)
        return out.with_prec(prec)

    # counit
    def counit(self, x: AlgebraElement) -> XiScalar:
        return U.counit_u(x)

    # antipode
    def _s_power(self, gen: str, n: int) -> AlgebraElement:
        key = (gen, n)
        if key not in self._spow:
            if n == 0:
                self._spow[key] = U.one().with_prec(self.order)
            else:
                self._spow[key] = self._s_power(gen, n - 1).mul(self.antipode_gens[gen], self.order)
        return self._spow[key]

    def antipode_monomial(self, m: Monomial) -> AlgebraElement:
        s = self._scache.get(m)
        if s is None:
            i, j, k = m
            # S(v-^i h^j v+^k) = sign * S(v+)^k S(h)^j S(v-)^i
            s = self._s_power("v+", k).mul(self._s_power("h", j), self.order)
            s = s.mul(self._s_power("v-", i), self.order).scale(antipode_sign(m))
            self._scache[m] = s
        return s

    def antipode(self, x: AlgebraElement) -> AlgebraElement:
        out = U.one().scale(0).with_prec(self.order)
        for m, c in x.terms.items():
            out = out + self.antipode_monomial(m).scale(c)
        return out


def classical_hopf() -> HopfStructure:
    gens = {"v-": U.v_minus(), "h": U.h(), "v+": U.v_plus()}
    return HopfStructure(
        "classical",
        None,
        {g: _primitive(e) for g, e in gens.items()},
        {g: -e for g, e in gens.items()},
        {g: XiScalar.const(0) for g in gens},
    )


class Twist:
    """Cached twist data at a fixed truncation order."""

    def __init__(self, order: int = DEFAULT_ORDER):
        if order < 0:
            raise ValueError("order must be nonnegative")
        self.order = order
        self.F = twist_element(order)
        self.Finv = twist_inverse(order)

    def conjugate(self, t: TensorElement) -> TensorElement:
        return self.F.mul(t, self.order).mul(self.Finv, self.order)

    def coproduct(self, x: AlgebraElement) -> TensorElement:
        return self.conjugate(coproduct_primitive(x))


@lru_cache(maxsize=8)
def twist(order: int = DEFAULT_ORDER) -> Twist:
    return Twist(order)


def twisted_coproduct(x: AlgebraElement, order: int = DEFAULT_ORDER) -> TensorElement:
    """``F Delta(x) F^-1`` through xi^order."""
    return twist(order).coproduct(x)


def exp_sigma(order: int, factor) -> AlgebraElement:
    return U.exp_sigma(order, factor)


def twisted_antipode_generators(order: int) -> dict[str, AlgebraElement]:
    sig_neg = exp_sigma(order, -1)
    return {
        "h": -(U.h().mul(sig_neg, order)),
        "v-": -(U.v_minus().mul(exp_sigma(order, Fraction(1, 2)), order)),
        "v+": -((U.v_plus() - U.h().mul(U.v_minus()).scale(XI)).mul(exp_sigma(order, Fraction(-1, 2)), order)),
    }


@lru_cache(maxsize=8)
def twisted_hopf(order: int = DEFAULT_ORDER) -> HopfStructure:
    tw = twist(order)
    gens = {"v-": U.v_minus(), "h": U.h(), "v+": U.v_plus()}
    return HopfStructure(
        "twisted",
        order,
        {g: tw.coproduct(e) for g, e in gens.items()},
        twisted_antipode_generators(order),
        {g: XiScalar.const(0) for g in gens},
    )


def twisted_antipode(x: AlgebraElement, order: int = DEFAULT_ORDER) -> AlgebraElement:
    return twisted_hopf(order).antipode(x)


# -- closed forms ---------------------------------------------------------

def closed_coproducts(order: int) -> dict[str, TensorElement]:
    """The displayed closed forms, expanded through xi^order."""
    one = U.one()
    h, vm, vp = U.h(), U.v_minus(), U.v_plus()
    Xm, Xp = U.X_minus(), U.X_plus()
    e = {f: exp_sigma(order, f) for f in (1, -1, Fraction(1, 2), Fraction(-1, 2))}
    return {
        "h": tensor(h, e[1]) + tensor(one, h),
        "v-": tensor(vm, e[Fraction(-1, 2)]) + tensor(one, vm),
        "v+": tensor(vp, e[Fraction(1, 2)]) + tensor(one, vp) + tensor(h, vm.mul(e[1], order)).scale(XI),
        "X-": tensor(Xm, e[-1]) + tensor(one, Xm),
        "X-.polynomial": tensor(Xm, one) + tensor(one, Xm) - tensor(Xm, Xm).scale(XI * 2),
        "X+": (
            tensor(Xp, e[1])
            + tensor(one, Xp)
            - tensor(h, e[1].mul(h, order)).scale(XI)
            + tensor(h.mul(h - 2), e[1].mul(one - e[1], order)).scale(XI / 2)
        ).with_prec(order),
    }


def verify_closed_coproducts(order: int = DEFAULT_ORDER) -> list[Check]:
    if order < 1:
        raise ValueError("order must be >= 1")
    closed = closed_coproducts(order)
    gens = {"h": U.h(), "v-": U.v_minus(), "v+": U.v_plus(), "X-": U.X_minus(), "X+": U.X_plus()}
    computed = {g: twisted_coproduct(x, order) for g, x in gens.items()}
    checks = []
    for g in ("h", "v-", "v+", "X-", "X+"):
        checks.append(
            residual_check(f"coproduct.{g}", f"Delta_t({g}) closed form", computed[g] - closed[g], order)
        )
    checks.append(
        residual_check(
            "coproduct.X-.polynomial",
            "Delta_t(X-) = X- (x) 1 + 1 (x) X- - 2 xi X- (x) X-",
            computed["X-"] - closed["X-.polynomial"],
            order,
        )
    )
    dvp = computed["v+"]
    squared = dvp.mul(dvp, order).scale(4)
    checks.append(residual_check("coproduct.X+.squaring", "Delta_t(X+) = 4 Delta_t(v+)^2", computed["X+"] - squared, order))
    dvm = computed["v-"]
    checks.append(
        residual_check("coproduct.X-.squaring", "Delta_t(X-) = -4 Delta_t(v-)^2", computed["X-"] + dvm.mul(dvm, order).scale(4), order)
    )
    prim_ok = all(
        computed[g].with_prec(0) == coproduct_primitive(x).with_prec(0) for g, x in gens.items()
    )
    checks.append(Check("coproduct.classical_limit", "xi -> 0 gives the primitive coproduct", prim_ok, 0))
    return checks


def antipode_residuals(order: int, hopf: HopfStructure | None = None) -> dict[str, tuple[AlgebraElement, AlgebraElement]]:
    hopf = hopf or twisted_hopf(order)
    out = {}
    for g, x in {"1": U.one(), "h": U.h(), "v-": U.v_minus(), "v+": U.v_plus()}.items():
        d = hopf.coproduct(x) if g != "1" else unit().with_prec(order)
        eps = U.one().scale(hopf.counit(x)).with_prec(order)
        left = multiply(apply_on_leg(d, hopf.antipode_monomial, 0), order) - eps
        right = multiply(apply_on_leg(d, hopf.antipode_monomial, 1), order) - eps
        out[g] = (left, right)
    return out


def verify_antipode(order: int = DEFAULT_ORDER) -> list[Check]:
    if order < 1:
        raise ValueError("order must be >= 1")
    checks = []
    for g, (left, right) in antipode_residuals(order).items():
        checks.append(residual_check(f"antipode.left.{g}", f"m(S (x) id) Delta_t({g}) = eps({g})", left, order))
        checks.append(residual_check(f"antipode.right.{g}", f"m(id (x) S) Delta_t({g}) = eps({g})", right, order))
    hopf = twisted_hopf(order)
    limit = all(
        hopf.antipode_gens[g].with_prec(0) == -x for g, x in {"h": U.h(), "v-": U.v_minus(), "v+": U.v_plus()}.items()
    )
    checks.append(Check("antipode.classical_limit", "S(x) = -x at xi = 0", limit, 0))
    return checks


# -- universal R ------------------------------------------------------------

def universal_R(order: int = DEFAULT_ORDER) -> TensorElement:
    """``exp(1/2 sigma (x) h) exp(-1/2 h (x) sigma)`` through xi^order."""
    sig = U.sigma_series(max(order, 1))
    a = exp_series(tensor(sig, U.h()).scale(Fraction(1, 2)).with_prec(order), order)
    b = exp_series(tensor(U.h(), sig).scale(Fraction(-1, 2)).with_prec(order), order)
    return a.mul(b, order)


def universal_R_from_twist(order: int = DEFAULT_ORDER) -> TensorElement:
    """``F_21 F^-1`` with the inverse from the geometric series."""
    F = twist_element(order)
    return graded_flip(F).mul(inverse_unipotent(F, order), order)


def verify_R_properties(order: int = DEFAULT_ORDER, R: TensorElement | None = None) -> list[Check]:
    if order < 1:
        raise ValueError("order must be >= 1")
    tw = twist(order)
    if R is None:
        R = universal_R(order)
    checks = [
        residual_check("R.twist_formula", "exp(sigma(x)h/2) exp(-h(x)sigma/2) = F_21 F^-1", R - universal_R_from_twist(order), order),
        residual_check("R.triangular", "R_21 R = 1", graded_flip(R).mul(R, order) - unit(), order),
    ]
    for g, x in {"h": U.h(), "v-": U.v_minus(), "v+": U.v_plus()}.items():
        d = tw.coproduct(x)
        res = R.mul(d, order) - graded_flip(d).mul(R, order)
        checks.append(residual_check(f"R.intertwine.{g}", f"R Delta_t({g}) = Delta_t^op({g}) R", res, order))
    F12, F23 = embed(tw.F, (0, 1), 3), embed(tw.F, (1, 2), 3)
    F12i, F23i = embed(tw.Finv, (0, 1), 3), embed(tw.Finv, (1, 2), 3)
    R12, R13, R23 = embed(R, (0, 1), 3), embed(R, (0, 2), 3), embed(R, (1, 2), 3)
    left = F12.mul(apply_on_leg(R, coproduct_monomial, 0), order).mul(F12i, order)
    right = F23.mul(apply_on_leg(R, coproduct_monomial, 1), order).mul(F23i, order)
    checks.append(residual_check("R.quasi_left", "(Delta_t (x) id) R = R_13 R_23", left - R13.mul(R23, order), order))
    checks.append(residual_check("R.quasi_right", "(id (x) Delta_t) R = R_13 R_12", right - R13.mul(R12, order), order))
    checks.append(Check("R.classical_limit", "R = 1 (x) 1 at xi = 0", R.with_prec(0) == unit(), 0))
    return checks
