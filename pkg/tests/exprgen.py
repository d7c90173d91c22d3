"""Random canonical values for expression round-trip tests."""

from __future__ import annotations

import random
from fractions import Fraction

from ospxi import dual as D
from ospxi import superalg as U
from ospxi.scalar import XiScalar
from ospxi.tensor import tensor


def random_scalar(rng: random.Random) -> XiScalar:
    out = XiScalar.const(0)
    for _ in range(rng.randint(1, 3)):
        c = Fraction(rng.randint(-9, 9), rng.choice([1, 1, 2, 3, 8]))
        out = out + XiScalar.monomial(c, xi=rng.randint(-1, 3), mu=rng.randint(-1, 2))
    return out


def random_u(rng: random.Random, prec: bool = True):
    out = U.one().scale(0)
    for _ in range(rng.randint(1, 3)):
        out = out + U.monomial(rng.randint(0, 2), rng.randint(0, 2), rng.randint(0, 2)).scale(random_scalar(rng))
    if prec and rng.random() < 0.3:
        out = out.with_prec(rng.randint(2, 6))
    return out


def random_dual(rng: random.Random, M: int = D.DEFAULT_M):
    out = D.zero(M)
    for _ in range(rng.randint(1, 3)):
        out = out + D.dual_monomial(rng.randint(0, 2), rng.randint(0, 1), rng.randint(0, 3), M).scale(random_scalar(rng))
    return out


def random_value(rng: random.Random):
    kind = rng.randrange(5)
    if kind == 0:
        return random_scalar(rng)
    if kind == 1:
        return random_u(rng)
    if kind == 2:
        return random_dual(rng)
    if kind == 3:
        return tensor(random_u(rng, False), random_u(rng, False)) + tensor(random_u(rng, False), random_u(rng, False))
    return tensor(random_u(rng, False), random_dual(rng))
