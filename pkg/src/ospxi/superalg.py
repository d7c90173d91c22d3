"""The enveloping superalgebra U(osp(1|2)) in PBW normal form.

A PBW monomial ``(i, j, k)`` stands for ``v-^i h^j v+^k``.  Products are
rewritten into this order with the three rules

    h v-  = v- h - v-
    v+ h  = h v+ - v+
    v+ v- = -v- v+ - h/4

and the even generators are the abbreviations ``X- = -4 v-^2``,
``X+ = 4 v+^2``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable

from .linear import Combination
from .scalar import ScalarLike, XiScalar, XI
from .series import ValuationError, power_series

Monomial = tuple[int, int, int]
UNIT: Monomial = (0, 0, 0)


class ParityError(ValueError):
    """An operation that needs homogeneous parity received a mixed element."""


def monomial_parity(m: Monomial) -> int:
    return (m[0] + m[2]) & 1


# -- polynomials in h (dict power -> Fraction) ---------------------------

@lru_cache(maxsize=None)
def _shifted_power(j: int, a: int) -> tuple[tuple[int, Fraction], ...]:
    """Coefficients of ``(h - a)^j``."""
    return tuple((p, Fraction(comb(j, p) * (-a) ** (j - p))) for p in range(j + 1) if comb(j, p) * (-a) ** (j - p))


def _poly_mul(p: dict[int, Fraction], q: Iterable[tuple[int, Fraction]]) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    for d1, c1 in p.items():
        for d2, c2 in q:
            out[d1 + d2] = out.get(d1 + d2, 0) + c1 * c2
    return {d: c for d, c in out.items() if c}


@lru_cache(maxsize=None)
def _raise_lower(k: int, a: int) -> tuple[tuple[Monomial, Fraction], ...]:
    """Normal form of ``v+^k v-^a``."""
    if k == 0 or a == 0:
        return (((a, 0, k), Fraction(1)),)
    if k == 1:
        # v+ v-^a = -v- (v+ v-^(a-1)) - 1/4 v-^(a-1) (h - (a-1))
        out: dict[Monomial, Fraction] = {}
        for (i, j, kk), c in _raise_lower(1, a - 1):
            m = (i + 1, j, kk)
            out[m] = out.get(m, 0) - c
        for p, c in _shifted_power(1, a - 1):
            m = (a - 1, p, 0)
            out[m] = out.get(m, 0) - c / 4
        return tuple(sorted((m, c) for m, c in out.items() if c))
    out = {}
    for m, c in _raise_lower(1, a):
        for m2, c2 in mono_product((0, 0, k - 1), m):
            out[m2] = out.get(m2, 0) + c * c2
    return tuple(sorted((m, c) for m, c in out.items() if c))


@lru_cache(maxsize=None)
def mono_product(m1: Monomial, m2: Monomial) -> tuple[tuple[Monomial, Fraction], ...]:
    """Normal form of the product of two PBW monomials (structure constants)."""
    i, j, k = m1
    a, b, c = m2
    if k == 0:
        # v-^i h^j v-^a h^b v+^c = v-^(i+a) (h-a)^j h^b v+^c
        return tuple(((i + a, p + b, c), s) for p, s in _shifted_power(j, a))
    out: dict[Monomial, Fraction] = {}
    for (i2, j2, k2), s in _raise_lower(k, a):
        # v-^i h^j . v-^i2 h^j2 v+^k2 . h^b v+^c
        poly = {p: s * q for p, q in _shifted_power(j, i2)}
        poly = _poly_mul(poly, ((j2, Fraction(1)),))
        poly = _poly_mul(poly, _shifted_power(b, k2))
        for p, q in poly.items():
            m = (i + i2, p, k2 + c)
            out[m] = out.get(m, 0) + q
    return tuple(sorted((m, q) for m, q in out.items() if q))


def render_monomial(m: Monomial) -> str:
    parts = []
    for name, e in zip(("v-", "h", "v+"), m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def render_term(coeff: XiScalar, body: str) -> tuple[bool, str]:
    """Render ``coeff*body``; returns (negative, text-without-leading-sign)."""
    items = list(coeff.items())
    if len(items) == 1:
        (e, c), = items
        neg = c < 0
        scal = XiScalar.monomial(abs(c), *e)
        s = scal.render()
        if body == "1":
            return neg, s
        if s == "1":
            return neg, body
        return neg, f"{s}*{body}"
    s = coeff.render()
    return False, f"({s})" if body == "1" else f"({s})*{body}"


def render_sum(pieces: list[tuple[bool, str]]) -> str:
    if not pieces:
        return "0"
    out = []
    for n, (neg, text) in enumerate(pieces):
        if n == 0:
            out.append(("-" if neg else "") + text)
        else:
            out.append((" - " if neg else " + ") + text)
    return "".join(out)


class AlgebraElement(Combination):
    """Element of U(osp(1|2)) (or its xi-completion, when ``prec`` is set)."""

    __slots__ = ()

    def _mul_keys(self, k1, k2):
        return mono_product(k1, k2)

    def scalar(self, c: ScalarLike) -> AlgebraElement:
        return AlgebraElement({UNIT: c})

    def parity(self) -> int | None:
        """0 or 1 for homogeneous elements, None for mixed support."""
        ps = {monomial_parity(m) for m in self.terms}
        if len(ps) > 1:
            return None
        return ps.pop() if ps else 0

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: tuple(-e for e in kv[0]))

    def render(self) -> str:
        return render_sum([render_term(c, render_monomial(m)) for m, c in self.sorted_terms()])

    def max_v_plus(self) -> int:
        return max((m[2] for m in self.terms), default=0)


# -- constructors ---------------------------------------------------------

def one() -> AlgebraElement:
    return AlgebraElement({UNIT: 1})


def monomial(i: int = 0, j: int = 0, k: int = 0, coeff: ScalarLike = 1) -> AlgebraElement:
    return AlgebraElement({(i, j, k): coeff})


def h() -> AlgebraElement:
    return monomial(0, 1, 0)


def v_minus() -> AlgebraElement:
    return monomial(1, 0, 0)


def v_plus() -> AlgebraElement:
    return monomial(0, 0, 1)


def X_minus() -> AlgebraElement:
    return monomial(2, 0, 0, -4)


def X_plus() -> AlgebraElement:
    return monomial(0, 0, 2, 4)


GENERATORS = {"h": h, "v-": v_minus, "v+": v_plus, "X-": X_minus, "X+": X_plus}


# -- operations -----------------------------------------------------------

def normal_product(a: AlgebraElement, b: AlgebraElement, order: int | None = None) -> AlgebraElement:
    return a.mul(b, order)


def super_bracket(a: AlgebraElement, b: AlgebraElement, order: int | None = None) -> AlgebraElement:
    """Graded bracket ``ab - (-1)^{p(a)p(b)} ba`` of homogeneous elements."""
    pa, pb = a.parity(), b.parity()
    if pa is None or pb is None:
        raise ParityError("super_bracket needs elements of pure parity")
    ab = a.mul(b, order)
    ba = b.mul(a, order)
    return ab + ba if pa and pb else ab - ba


def counit_u(a: AlgebraElement) -> XiScalar:
    return a.coefficient(UNIT)


def sigma_series(order: int, via: str = "v") -> AlgebraElement:
    """``sigma = -ln(1 - 2 xi X-) = -ln(1 + 8 xi v-^2)`` through xi^order.

    ``via="v"`` sums the closed coefficients in ``v-^2``; ``via="X"`` runs the
    logarithm series on the element ``2 xi X-`` with the algebra's product.
    """
    if order < 1:
        raise ValueError("sigma_series needs order >= 1")
    if via == "v":
        terms = {(2 * n, 0, 0): XiScalar.monomial(Fraction((-8) ** n, n), xi=n) for n in range(1, order + 1)}
        return AlgebraElement(terms, prec=order)
    if via == "X":
        u = X_minus().scale(XI * 2)
        acc = u.scalar(0).with_prec(order)
        power = u.scalar(1).with_prec(order)
        for n in range(1, order + 1):
            power = power.mul(u, order)
            acc = acc + power / n
        return acc
    raise ValueError(f"unknown construction {via!r}")


def series_power(base_offset: AlgebraElement, exponent, order: int) -> AlgebraElement:
    """``(1 + base_offset)^exponent`` through xi^order (binomial series)."""
    v = base_offset.valuation()
    if base_offset.terms and (v is None or v < 1):
        raise ValuationError("base_offset must have xi-adic valuation >= 1")
    return power_series(base_offset, Fraction(exponent), order)


def exp_sigma(order: int, factor=1) -> AlgebraElement:
    """``e^{factor*sigma} = (1 + 8 xi v-^2)^{-factor}`` through xi^order."""
    return series_power(monomial(2, 0, 0, XI * 8), -Fraction(factor), order)
