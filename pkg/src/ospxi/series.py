"""Truncated power series in an element of xi-adic valuation >= 1.

These helpers work for any `Combination` (PBW elements, tensors, dual
elements) because they only use ring operations.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .linear import Combination


class ValuationError(ValueError):
    """The series argument does not vanish modulo xi."""


def _require_topologically_nilpotent(t: Combination) -> None:
    v = t.valuation()
    if t.terms and (v is None or v < 1):
        raise ValuationError("series argument must have xi-adic valuation >= 1")


def binomial(exponent: Fraction, n: int) -> Fraction:
    out = Fraction(1)
    for m in range(n):
        out = out * (exponent - m) / (m + 1)
    return out


def _power_sum(t: Combination, coeffs, order: int) -> Combination:
    """``sum_n coeffs(n) t^n`` for n = 0..order, truncated at xi^order."""
    t = t.with_prec(order)
    result = t.scalar(coeffs(0)).with_prec(order)
    power = t.scalar(1).with_prec(order)
    for n in range(1, order + 1):
        power = power.mul(t, order)
        if power.is_zero():
            break
        c = coeffs(n)
        if c:
            result = result + power.scale(c)
    return result


def exp_series(t: Combination, order: int) -> Combination:
    _require_topologically_nilpotent(t)
    return _power_sum(t, lambda n: Fraction(1, factorial(n)), order)


def log1p_series(t: Combination, order: int) -> Combination:
    """``log(1 + t)`` truncated at xi^order."""
    _require_topologically_nilpotent(t)
    return _power_sum(t, lambda n: Fraction((-1) ** (n + 1), n) if n else Fraction(0), order)


def power_series(t: Combination, exponent, order: int) -> Combination:
    """Binomial series ``(1 + t)^exponent`` truncated at xi^order."""
    _require_topologically_nilpotent(t)
    e = Fraction(exponent)
    return _power_sum(t, lambda n: binomial(e, n), order)


def inverse_unipotent(u: Combination, order: int) -> Combination:
    """Inverse of ``1 + n`` (n of valuation >= 1) by the geometric series."""
    n = u - u.scalar(1)
    _require_topologically_nilpotent(n)
    return _power_sum(n, lambda k: Fraction((-1) ** k), order)
