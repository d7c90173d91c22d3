"""Graded tensor products with Koszul-sign multiplication.

A `TensorElement` is a combination of tuples of monomials, one per leg.  Each
leg belongs to a `LegAlgebra` that knows how to multiply and grade its own
monomials, so the same machinery serves ``U (x) U``, ``U (x) U (x) U`` and the
mixed ``U (x) U'`` tensors used for the universal T-matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Any, Callable, Hashable, Sequence

from .linear import Combination, accumulate, freeze, min_prec
from .scalar import ScalarLike, XiScalar
from .series import exp_series, inverse_unipotent, log1p_series
from . import superalg as U


@dataclass(frozen=True)
class LegAlgebra:
    """Multiplication table and grading of one tensor leg."""

    name: str
    unit: Hashable
    mul: Callable[[Any, Any], Sequence[tuple[Any, Fraction]]]
    parity: Callable[[Any], int]
    render: Callable[[Any], str]
    element: Callable[..., Combination]
    keep: Callable[[Any], bool] = lambda m: True

    def __repr__(self) -> str:
        return f"LegAlgebra({self.name})"


UALG = LegAlgebra(
    name="U",
    unit=U.UNIT,
    mul=U.mono_product,
    parity=U.monomial_parity,
    render=U.render_monomial,
    element=U.AlgebraElement,
)


class ArityError(ValueError):
    """Operands of mismatched tensor arity or an invalid leg index."""


class TensorElement(Combination):
    """Element of a graded tensor product of leg algebras."""

    __slots__ = ("algebras",)

    def __init__(self, terms=None, prec: int | None = None, algebras: Sequence[LegAlgebra] = (UALG, UALG)):
        self.algebras = tuple(algebras)
        if len(self.algebras) < 1:
            raise ArityError("a tensor needs at least one leg")
        super().__init__(terms, prec)

    @property
    def arity(self) -> int:
        return len(self.algebras)

    def _keep(self, key) -> bool:
        return all(alg.keep(m) for alg, m in zip(self.algebras, key))

    def _like(self, terms, prec):
        obj = super()._like(terms, prec)
        obj.algebras = self.algebras
        return obj

    def _check_compatible(self, other) -> None:
        if not isinstance(other, TensorElement):
            raise TypeError(f"cannot combine TensorElement with {type(other).__name__}")
        if other.algebras != self.algebras:
            raise ArityError(f"tensor arity/leg mismatch: {self.algebras} vs {other.algebras}")

    def scalar(self, c: ScalarLike) -> TensorElement:
        return TensorElement({tuple(a.unit for a in self.algebras): c}, None, self.algebras)

    def _mul_keys(self, k1, k2):
        algs = self.algebras
        n = len(algs)
        # y_b passes x_a for every a > b
        sign = 0
        odd_right = 0
        for b in range(n - 1, -1, -1):
            if b + 1 < n:
                odd_right ^= algs[b + 1].parity(k1[b + 1])
            if odd_right and algs[b].parity(k2[b]):
                sign ^= 1
        legs = [algs[a].mul(k1[a], k2[a]) for a in range(n)]
        for combo in product(*legs):
            s = Fraction(-1 if sign else 1)
            for _, c in combo:
                s *= c
            yield tuple(m for m, _ in combo), s

    def leg_parities(self, key) -> tuple[int, ...]:
        return tuple(a.parity(m) for a, m in zip(self.algebras, key))

    def render(self) -> str:
        pieces = []
        for key, c in sorted(self.terms.items(), key=lambda kv: _sort_key(kv[0])):
            body = "(" + " (x) ".join(a.render(m) for a, m in zip(self.algebras, key)) + ")"
            neg, text = U.render_term(c, body)
            pieces.append((neg, text))
        return U.render_sum(pieces)


def _sort_key(key):
    return tuple(_flatten(key))


def _flatten(key):
    for m in key:
        if isinstance(m, tuple):
            yield from (-x for x in m)
        else:
            yield m


# -- construction ---------------------------------------------------------

def tensor(*elements: Combination, algebras: Sequence[LegAlgebra] | None = None) -> TensorElement:
    """Outer product ``e1 (x) e2 (x) ...`` of single-leg elements (no signs arise)."""
    if algebras is None:
        algebras = tuple(_leg_of(e) for e in elements)
    prec = None
    vals = [e.valuation() or 0 for e in elements]
    for idx, e in enumerate(elements):
        if e.prec is not None:
            p = e.prec + sum(v for j, v in enumerate(vals) if j != idx)
            prec = min_prec(prec, p)
    acc: dict = {}
    for combo in product(*(e.terms.items() for e in elements)):
        c = XiScalar.const(1)
        for _, coeff in combo:
            c = c * coeff
        accumulate(acc, tuple(m for m, _ in combo), c, Fraction(1), prec)
    return TensorElement(freeze(acc), prec, algebras)


def _leg_of(e: Combination) -> LegAlgebra:
    if isinstance(e, U.AlgebraElement):
        return UALG
    leg = getattr(e, "leg_algebra", None)
    if leg is None:
        raise TypeError(f"no leg algebra known for {type(e).__name__}")
    return leg() if callable(leg) else leg


def unit(algebras: Sequence[LegAlgebra] = (UALG, UALG)) -> TensorElement:
    return TensorElement({tuple(a.unit for a in algebras): 1}, None, algebras)


def tensor_mul(s: TensorElement, t: TensorElement, order: int | None = None) -> TensorElement:
    if s.arity != t.arity:
        raise ArityError(f"arity mismatch: {s.arity} vs {t.arity}")
    return s.mul(t, order)


# -- leg manipulations ----------------------------------------------------

def permute_legs(t: TensorElement, perm: Sequence[int]) -> TensorElement:
    """Reorder legs so that new leg ``i`` is old leg ``perm[i]``, with Koszul signs."""
    n = t.arity
    if sorted(perm) != list(range(n)):
        raise ArityError(f"invalid permutation {perm!r}")
    algs = tuple(t.algebras[p] for p in perm)
    out = {}
    for key, c in t.terms.items():
        par = t.leg_parities(key)
        sign = 0
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j] and par[perm[i]] and par[perm[j]]:
                    sign ^= 1
        out[tuple(key[p] for p in perm)] = -c if sign else c
    return TensorElement(out, t.prec, algs)


def graded_flip(t: TensorElement) -> TensorElement:
    """``x (x) y -> (-1)^{p(x)p(y)} y (x) x``."""
    if t.arity != 2:
        raise ArityError("graded_flip needs a 2-fold tensor")
    return permute_legs(t, (1, 0))


def embed(t: TensorElement, positions: Sequence[int], arity: int) -> TensorElement:
    """Place the legs of ``t`` at ``positions`` of an ``arity``-fold tensor, units elsewhere.

    ``positions`` must be increasing, so no odd leg passes another and no sign
    arises (``R_13`` is ``embed(R, (0, 2), 3)``).
    """
    if list(positions) != sorted(positions) or len(set(positions)) != len(positions):
        raise ArityError("positions must be strictly increasing")
    if len(positions) != t.arity or max(positions) >= arity:
        raise ArityError("positions do not fit the target arity")
    algs = [UALG] * arity
    for p, a in zip(positions, t.algebras):
        algs[p] = a
    out = {}
    for key, c in t.terms.items():
        full = [a.unit for a in algs]
        for p, m in zip(positions, key):
            full[p] = m
        out[tuple(full)] = c
    return TensorElement(out, t.prec, algs)


def apply_on_leg(t: TensorElement, fn, leg: int):
    """Apply an even linear map to one leg.

    ``fn`` is one of ``"identity"``, ``"counit"``, ``"coproduct"``,
    ``"antipode"`` (primitive/classical maps from `hopf`) or a callable taking a
    monomial and returning a single-leg element, a tensor, or a scalar.  A map
    returning a tensor raises the arity; a scalar-valued map removes the leg
    (returning a single-leg element when one leg is left).
    """
    if not 0 <= leg < t.arity:
        raise ArityError(f"invalid leg {leg} for arity {t.arity}")
    fn = _resolve_map(fn)
    if fn is None:
        return t
    acc: dict = {}
    new_algs = None
    prec = t.prec
    cache: dict = {}
    for key, c in t.terms.items():
        m = key[leg]
        img = cache.get(m)
        if img is None:
            img = cache[m] = fn(m)
        if isinstance(img, (int, Fraction)):
            img = XiScalar.const(img)
        if isinstance(img, XiScalar):
            if not img:
                continue
            rest = key[:leg] + key[leg + 1:]
            new_algs = t.algebras[:leg] + t.algebras[leg + 1:]
            accumulate(acc, rest, c * img, Fraction(1), prec)
            continue
        if img.prec is not None:
            prec = min_prec(prec, img.prec + (c.valuation() or 0))
        if isinstance(img, TensorElement):
            new_algs = t.algebras[:leg] + img.algebras + t.algebras[leg + 1:]
            for k2, c2 in img.terms.items():
                accumulate(acc, key[:leg] + k2 + key[leg + 1:], c * c2, Fraction(1), None)
        else:
            leg_alg = _leg_of(img)
            new_algs = t.algebras[:leg] + (leg_alg,) + t.algebras[leg + 1:]
            for m2, c2 in img.terms.items():
                accumulate(acc, key[:leg] + (m2,) + key[leg + 1:], c * c2, Fraction(1), None)
    if new_algs is None:
        new_algs = _guess_algebras(t, leg, fn)
    terms = freeze(acc)
    if len(new_algs) == 1:
        alg = new_algs[0]
        return alg.element({k[0]: v for k, v in terms.items()}, prec=prec)
    return TensorElement(terms, prec, new_algs)


def _guess_algebras(t: TensorElement, leg: int, fn):
    # empty input: infer the output shape from the unit monomial
    img = fn(t.algebras[leg].unit)
    if isinstance(img, (int, Fraction, XiScalar)):
        return t.algebras[:leg] + t.algebras[leg + 1:]
    if isinstance(img, TensorElement):
        return t.algebras[:leg] + img.algebras + t.algebras[leg + 1:]
    return t.algebras[:leg] + (_leg_of(img),) + t.algebras[leg + 1:]


def _resolve_map(fn):
    if fn == "identity" or fn is None:
        return None
    if isinstance(fn, str):
        from . import hopf

        table = {
            "counit": lambda m: XiScalar.const(1) if m == U.UNIT else XiScalar.const(0),
            "coproduct": hopf.coproduct_monomial,
            "coproduct_primitive": hopf.coproduct_monomial,
            "antipode": hopf.antipode_classical_monomial,
        }
        if fn not in table:
            raise ValueError(f"unknown leg map {fn!r}")
        return table[fn]
    return fn


def multiply(t: TensorElement, order: int | None = None):
    """The multiplication map ``x (x) y -> x y`` (legs must share one algebra)."""
    if t.arity != 2 or t.algebras[0] != t.algebras[1]:
        raise ArityError("multiply needs a 2-fold tensor over one algebra")
    alg = t.algebras[0]
    prec = min_prec(t.prec, order)
    acc: dict = {}
    for (a, b), c in t.terms.items():
        for m, s in alg.mul(a, b):
            if alg.keep(m):
                accumulate(acc, m, c, s, prec)
    return alg.element(freeze(acc), prec=prec)


# -- truncated series -----------------------------------------------------

def exp_trunc(t: TensorElement, order: int) -> TensorElement:
    return exp_series(t, order)


def log_trunc(one_plus_t: TensorElement, order: int) -> TensorElement:
    return log1p_series(one_plus_t - one_plus_t.scalar(1), order)


def invert_unipotent(t: TensorElement, order: int) -> TensorElement:
    return inverse_unipotent(t, order)
