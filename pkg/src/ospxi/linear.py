"""Finite linear combinations of monomial keys with `XiScalar` coefficients.

Every algebra element in the package (PBW elements, tensors, dual elements) is
a `Combination`: a mapping from hashable monomial keys to coefficients, plus a
xi-adic precision.  ``prec=None`` means the element is exact; an integer
``prec`` means the element is only known modulo ``xi^(prec+1)`` and no term
beyond that order is stored.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Callable, Hashable, Iterable, Iterator, Mapping

from .scalar import ONE, ZERO, ScalarLike, XiScalar

Key = Hashable
Accumulator = dict[Any, dict[tuple[int, int], Fraction]]


def min_prec(*precs: int | None) -> int | None:
    vals = [p for p in precs if p is not None]
    return min(vals) if vals else None


def accumulate(acc: Accumulator, key: Key, coeff: XiScalar, factor: Fraction, prec: int | None) -> None:
    slot = acc.get(key)
    if slot is None:
        slot = acc[key] = {}
    for e, c in coeff.terms.items():
        if prec is not None and e[0] > prec:
            continue
        slot[e] = slot.get(e, 0) + c * factor


def freeze(acc: Accumulator) -> dict[Any, XiScalar]:
    out = {}
    for key, slot in acc.items():
        terms = {e: c for e, c in slot.items() if c}
        if terms:
            out[key] = XiScalar._raw(terms)
    return out


class Combination:
    """Base class: subclasses supply `_mul_keys` and optionally `_keep`."""

    __slots__ = ("terms", "prec")

    def __init__(self, terms: Mapping[Key, ScalarLike] | None = None, prec: int | None = None):
        clean: dict[Key, XiScalar] = {}
        if terms:
            for k, c in terms.items():
                c = XiScalar.coerce(c)
                if prec is not None:
                    c = c.drop_above(prec)
                if c and self._keep(k):
                    clean[k] = c
        self.terms = clean
        self.prec = prec

    # -- hooks ------------------------------------------------------------
    def _keep(self, key: Key) -> bool:
        return True

    def _like(self, terms: dict[Key, XiScalar], prec: int | None):
        """New element of the same kind (subclasses copy extra metadata)."""
        obj = object.__new__(type(self))
        obj.terms = terms
        obj.prec = prec
        return obj

    def _mul_keys(self, k1: Key, k2: Key) -> Iterable[tuple[Key, Fraction]]:
        raise NotImplementedError

    def _check_compatible(self, other: Combination) -> None:
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")

    # -- basics -----------------------------------------------------------
    def __iter__(self) -> Iterator[tuple[Key, XiScalar]]:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, key: Key) -> XiScalar:
        return self.terms.get(key, ZERO)

    def valuation(self) -> int | None:
        vals = [c.valuation() for c in self.terms.values()]
        if vals:
            return min(vals)
        return None if self.prec is None else self.prec + 1

    def with_prec(self, prec: int | None) -> Combination:
        """Same element viewed at precision ``prec`` (never raises precision)."""
        new = min_prec(prec, self.prec)
        if new == self.prec:
            return self
        return self._like(self._clip(self.terms, new), new)

    def truncate(self, order: int) -> Combination:
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        return self.with_prec(order)

    @staticmethod
    def _clip(terms: Mapping[Key, XiScalar], prec: int | None) -> dict[Key, XiScalar]:
        if prec is None:
            return dict(terms)
        out = {}
        for k, c in terms.items():
            if c.degree() is not None and c.degree() > prec:
                c = c.drop_above(prec)
            if c:
                out[k] = c
        return out

    def map_coefficients(self, fn: Callable[[XiScalar], XiScalar]) -> Combination:
        out = {}
        for k, c in self.terms.items():
            c = fn(c)
            if c:
                out[k] = c
        return self._like(self._clip(out, self.prec), self.prec)

    # -- linear structure -------------------------------------------------
    def __add__(self, other):
        if isinstance(other, (int, Fraction, XiScalar)):
            other = self.scalar(other)
        elif not isinstance(other, Combination):
            return NotImplemented
        self._check_compatible(other)
        prec = min_prec(self.prec, other.prec)
        out = self._clip(self.terms, prec)
        for k, c in other.terms.items():
            if prec is not None:
                c = c.drop_above(prec)
            s = out.get(k)
            s = c if s is None else s + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return self._like(out, prec)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return self._like({k: -c for k, c in self.terms.items()}, self.prec)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, XiScalar)):
            other = self.scalar(other)
        elif not isinstance(other, Combination):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: ScalarLike):
        c = XiScalar.coerce(c)
        if not c:
            return self._like({}, self.prec)
        prec = self.prec
        if prec is not None and len(c.terms) and not c.is_constant():
            # multiplying by xi^v shifts the precision
            prec = prec + c.valuation()
        out = {}
        for k, v in self.terms.items():
            p = v * c
            if prec is not None:
                p = p.drop_above(prec)
            if p:
                out[k] = p
        return self._like(out, prec)

    def scalar(self, c: ScalarLike):
        """The scalar ``c`` times the unit of this element's algebra."""
        raise NotImplementedError

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, XiScalar)):
            return self.scale(other)
        if not isinstance(other, Combination):
            return NotImplemented
        return self.mul(other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, XiScalar)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / Fraction(other))
        if isinstance(other, XiScalar):
            return self.scale(other.inverse())
        return NotImplemented

    def product_prec(self, other: Combination) -> int | None:
        a, b = self.prec, other.prec
        if a is None and b is None:
            return None
        va = self.valuation()
        vb = other.valuation()
        cands = []
        if a is not None:
            cands.append(a + (vb if vb is not None else 0))
        if b is not None:
            cands.append(b + (va if va is not None else 0))
        return min(cands)

    def mul(self, other: Combination, order: int | None = None):
        """Product, optionally truncated at xi-order ``order``."""
        self._check_compatible(other)
        prec = min_prec(self.product_prec(other), order)
        acc: Accumulator = {}
        for k1, c1 in self.terms.items():
            v1 = c1.valuation()
            for k2, c2 in other.terms.items():
                if prec is not None and v1 + c2.valuation() > prec:
                    continue
                c = c1 * c2
                for k, s in self._mul_keys(k1, k2):
                    if self._keep(k):
                        accumulate(acc, k, c, s, prec)
        return self._like(freeze(acc), prec)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not supported; use an explicit inverse")
        result = self.scalar(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- comparison -------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, XiScalar)):
            other = self.scalar(other)
        if not isinstance(other, Combination) or type(other) is not type(self):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None  # equality is only up to precision

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.render()!r})"

    def __str__(self) -> str:
        return self.render()

    def render(self) -> str:
        raise NotImplementedError


__all__ = ["Combination", "accumulate", "freeze", "min_prec", "ONE", "ZERO"]
