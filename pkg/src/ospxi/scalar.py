"""Exact coefficient arithmetic.

`XiScalar` is a sparse Laurent polynomial in the deformation parameter ``xi``
and the scale parameter ``mu`` (``mu = e^u``) with `fractions.Fraction`
coefficients.  It is the single coefficient domain used by every other module.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Mapping, Union

ScalarLike = Union["XiScalar", int, Fraction]

Exponent = tuple[int, int]


class XiScalar:
    """Immutable Laurent polynomial ``sum c[a, b] xi^a mu^b`` over the rationals."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, Rational] | None = None):
        clean: dict[Exponent, Fraction] = {}
        if terms:
            for (a, b), c in terms.items():
                if c:
                    clean[(int(a), int(b))] = Fraction(c)
        self._terms = clean
        self._hash: int | None = None

    @classmethod
    def _raw(cls, terms: dict[Exponent, Fraction]) -> XiScalar:
        # trusted constructor: terms already canonical and nonzero
        obj = object.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    # -- constructors ---------------------------------------------------
    @classmethod
    def const(cls, c: Rational) -> XiScalar:
        c = Fraction(c)
        return cls._raw({(0, 0): c} if c else {})

    @classmethod
    def monomial(cls, c: Rational = 1, xi: int = 0, mu: int = 0) -> XiScalar:
        c = Fraction(c)
        return cls._raw({(xi, mu): c} if c else {})

    @classmethod
    def coerce(cls, value: ScalarLike) -> XiScalar:
        if isinstance(value, XiScalar):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.const(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to XiScalar")

    # -- inspection -----------------------------------------------------
    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        return self._terms

    def items(self) -> Iterator[tuple[Exponent, Fraction]]:
        return iter(sorted(self._terms.items()))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {(0, 0)}

    def constant_term(self) -> Fraction:
        return self._terms.get((0, 0), Fraction(0))

    def coeff(self, xi: int = 0, mu: int = 0) -> Fraction:
        return self._terms.get((xi, mu), Fraction(0))

    def valuation(self) -> int | None:
        """Smallest xi-exponent present, or None for zero."""
        if not self._terms:
            return None
        return min(a for a, _ in self._terms)

    def degree(self) -> int | None:
        """Largest xi-exponent present, or None for zero."""
        if not self._terms:
            return None
        return max(a for a, _ in self._terms)

    def mu_free(self) -> bool:
        return all(b == 0 for _, b in self._terms)

    # -- ring operations ------------------------------------------------
    def __add__(self, other: ScalarLike) -> XiScalar:
        if not isinstance(other, XiScalar):
            if isinstance(other, (int, Fraction)):
                other = XiScalar.const(other)
            else:
                return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k)
            if s is None:
                out[k] = c
            else:
                s += c
                if s:
                    out[k] = s
                else:
                    del out[k]
        return XiScalar._raw(out)

    __radd__ = __add__

    def __neg__(self) -> XiScalar:
        return XiScalar._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: ScalarLike) -> XiScalar:
        if not isinstance(other, XiScalar):
            if isinstance(other, (int, Fraction)):
                other = XiScalar.const(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other: ScalarLike) -> XiScalar:
        return XiScalar.coerce(other) - self

    def __mul__(self, other: ScalarLike) -> XiScalar:
        if not isinstance(other, XiScalar):
            if isinstance(other, (int, Fraction)):
                if not other:
                    return ZERO
                return XiScalar._raw({k: c * other for k, c in self._terms.items()})
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return ZERO
        if len(a) == 1 and (0, 0) in a:
            c0 = a[(0, 0)]
            return XiScalar._raw({k: c * c0 for k, c in b.items()})
        if len(b) == 1 and (0, 0) in b:
            c0 = b[(0, 0)]
            return XiScalar._raw({k: c * c0 for k, c in a.items()})
        out: dict[Exponent, Fraction] = {}
        for (a1, b1), c1 in a.items():
            for (a2, b2), c2 in b.items():
                k = (a1 + a2, b1 + b2)
                out[k] = out.get(k, 0) + c1 * c2
        return XiScalar._raw({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def inverse(self) -> XiScalar:
        """Inverse of a single-term scalar; anything else is not a unit."""
        if len(self._terms) != 1:
            raise ZeroDivisionError(f"{self} is not invertible in Q[xi^+-1, mu^+-1]")
        ((a, b), c), = self._terms.items()
        return XiScalar._raw({(-a, -b): 1 / c})

    def __truediv__(self, other: ScalarLike) -> XiScalar:
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero")
            return XiScalar._raw({k: c / other for k, c in self._terms.items()})
        if isinstance(other, XiScalar):
            return self * other.inverse()
        return NotImplemented

    def __pow__(self, n: int) -> XiScalar:
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparisons ----------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if isinstance(other, XiScalar):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == XiScalar.const(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- truncation and substitutions ------------------------------------
    def truncate(self, order: int) -> XiScalar:
        """Drop every term whose xi-exponent exceeds ``order``."""
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        return XiScalar._raw({k: c for k, c in self._terms.items() if k[0] <= order})

    def drop_above(self, order: int) -> XiScalar:
        """Like `truncate` but accepting any integer bound (Laurent precision)."""
        return XiScalar._raw({k: c for k, c in self._terms.items() if k[0] <= order})

    def substitute_scale(self) -> XiScalar:
        """Apply ``xi -> mu^2 xi`` termwise."""
        return XiScalar._raw({(a, b + 2 * a): c for (a, b), c in self._terms.items()})

    def evaluate(self, xi: Rational, mu: Rational = 1) -> Fraction:
        """Value at rational ``xi`` (and ``mu``); negative exponents need nonzero input."""
        xi, mu = Fraction(xi), Fraction(mu)
        total = Fraction(0)
        for (a, b), c in self._terms.items():
            total += c * xi**a * mu**b
        return total

    def specialize(self, xi: Rational) -> XiScalar:
        """Substitute a rational value for xi, keeping mu symbolic."""
        xi = Fraction(xi)
        out: dict[Exponent, Fraction] = {}
        for (a, b), c in self._terms.items():
            out[(0, b)] = out.get((0, b), 0) + c * xi**a
        return XiScalar(out)

    # -- rendering ------------------------------------------------------
    def render(self) -> str:
        return render_terms(self.items())

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"XiScalar({self.render()!r})"


def _render_monomial(c: Fraction, a: int, b: int) -> str:
    factors = []
    if a:
        factors.append("xi" if a == 1 else f"xi^{a}" if a > 0 else f"xi^({a})")
    if b:
        factors.append("mu" if b == 1 else f"mu^{b}" if b > 0 else f"mu^({b})")
    mag = abs(c)
    if not factors:
        return str(mag)
    if mag == 1:
        return "*".join(factors)
    return str(mag) + "*" + "*".join(factors)


def render_terms(items: Iterable[tuple[Exponent, Fraction]]) -> str:
    out = []
    for (a, b), c in items:
        body = _render_monomial(c, a, b)
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out) if out else "0"


ZERO = XiScalar._raw({})
ONE = XiScalar._raw({(0, 0): Fraction(1)})
XI = XiScalar._raw({(1, 0): Fraction(1)})
MU = XiScalar._raw({(0, 1): Fraction(1)})


def arith(a: ScalarLike, b: ScalarLike, op: str) -> XiScalar:
    """Dispatch ``add``/``sub``/``mul``/``neg`` on coerced operands (``neg`` ignores ``b``)."""
    a = XiScalar.coerce(a)
    if op == "neg":
        return -a
    b = XiScalar.coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def truncate(a: ScalarLike, order: int) -> XiScalar:
    return XiScalar.coerce(a).truncate(order)


def substitute_scale(a: ScalarLike) -> XiScalar:
    return XiScalar.coerce(a).substitute_scale()
