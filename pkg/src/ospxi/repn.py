"""Finite-dimensional irreps of osp(1|2) and the matrix R-matrix.

Matrices are dense tuples of `XiScalar` entries together with a parity
vector on the basis.  The irreps are built from a weight ladder and then
validated against every defining relation, so they certify themselves.

Ladder normalization: ``v- e_n = (-1)^n/2 e_{n+1}``, which makes
``X- = -4 v-^2`` act as the unit lowering operator ``e_n -> e_{n+2}`` on both
sl(2) components.  With it the fundamental R-matrix contains the Jordanian
4x4 block with entries exactly ``+-xi, xi^2``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import hopf
from . import superalg as U
from .report import Check
from .scalar import ONE, XI, ZERO, XiScalar
from .superalg import AlgebraElement
from .tensor import TensorElement

SAMPLE_XI = (0, 1, 2, -3)


class GradedMatrix:
    """Square matrix over `XiScalar` with a Z2 grading on basis indices."""

    __slots__ = ("rows", "parity")

    def __init__(self, rows: Sequence[Sequence], parity: Sequence[int]):
        n = len(parity)
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError("matrix must be square and match the parity vector")
        self.rows = tuple(tuple(XiScalar.coerce(x) for x in r) for r in rows)
        self.parity = tuple(int(p) & 1 for p in parity)

    @classmethod
    def zeros(cls, parity: Sequence[int]) -> GradedMatrix:
        n = len(parity)
        return cls([[ZERO] * n for _ in range(n)], parity)

    @classmethod
    def identity(cls, parity: Sequence[int]) -> GradedMatrix:
        n = len(parity)
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)], parity)

    @classmethod
    def diagonal(cls, diag: Sequence, parity: Sequence[int]) -> GradedMatrix:
        n = len(parity)
        return cls([[diag[i] if i == j else ZERO for j in range(n)] for i in range(n)], parity)

    @property
    def dim(self) -> int:
        return len(self.parity)

    def __getitem__(self, rc: tuple[int, int]) -> XiScalar:
        r, c = rc
        return self.rows[r][c]

    def _compat(self, other: GradedMatrix) -> None:
        if self.parity != other.parity:
            raise ValueError("graded matrices live on different graded spaces")

    def __add__(self, other: GradedMatrix) -> GradedMatrix:
        self._compat(other)
        return GradedMatrix([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)], self.parity)

    def __sub__(self, other: GradedMatrix) -> GradedMatrix:
        self._compat(other)
        return GradedMatrix([[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)], self.parity)

    def __neg__(self) -> GradedMatrix:
        return GradedMatrix([[-a for a in r] for r in self.rows], self.parity)

    def scale(self, c) -> GradedMatrix:
        c = XiScalar.coerce(c)
        return GradedMatrix([[a * c for a in r] for r in self.rows], self.parity)

    def __matmul__(self, other: GradedMatrix) -> GradedMatrix:
        self._compat(other)
        n = self.dim
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            nz = [(k, a) for k, a in enumerate(r) if a]
            row = []
            for j in range(n):
                col = cols[j]
                acc = ZERO
                for k, a in nz:
                    b = col[k]
                    if b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return GradedMatrix(out, self.parity)

    __mul__ = __matmul__

    def __pow__(self, n: int) -> GradedMatrix:
        out = GradedMatrix.identity(self.parity)
        for _ in range(n):
            out = out @ self
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        return self.parity == other.parity and self.rows == other.rows

    __hash__ = None

    def is_zero(self) -> bool:
        return not any(a for r in self.rows for a in r)

    def nonzero_entries(self) -> Iterable[tuple[int, int, XiScalar]]:
        for i, r in enumerate(self.rows):
            for j, a in enumerate(r):
                if a:
                    yield i, j, a

    def matrix_parity(self) -> int | None:
        """Parity of a homogeneous matrix (0 for zero), None when mixed."""
        ps = {(self.parity[i] + self.parity[j]) & 1 for i, j, _ in self.nonzero_entries()}
        if len(ps) > 1:
            return None
        return ps.pop() if ps else 0

    def map(self, fn) -> GradedMatrix:
        return GradedMatrix([[fn(a) for a in r] for r in self.rows], self.parity)

    def substitute_scale(self) -> GradedMatrix:
        return self.map(lambda a: a.substitute_scale())

    def specialize(self, xi) -> GradedMatrix:
        return self.map(lambda a: a.specialize(xi))

    def evaluate(self, xi) -> list[list[Fraction]]:
        return [[a.evaluate(xi) for a in r] for r in self.rows]

    def permuted(self, perm: Sequence[int]) -> GradedMatrix:
        """Matrix in the reordered basis ``new_i = old_perm[i]``."""
        return GradedMatrix(
            [[self.rows[perm[i]][perm[j]] for j in range(self.dim)] for i in range(self.dim)],
            [self.parity[p] for p in perm],
        )

    def block(self, idx: Sequence[int]) -> GradedMatrix:
        return GradedMatrix([[self.rows[i][j] for j in idx] for i in idx], [self.parity[i] for i in idx])

    def max_xi_degree(self) -> int:
        return max((a.degree() for _, _, a in self.nonzero_entries()), default=0)

    def render(self) -> str:
        cells = [[a.render() for a in r] for r in self.rows]
        width = max(len(c) for r in cells for c in r)
        return "\n".join("  ".join(c.rjust(width) for c in r) for r in cells)

    def to_json(self) -> list[list[str]]:
        return [[a.render() for a in r] for r in self.rows]

    def __repr__(self) -> str:
        return f"GradedMatrix(dim={self.dim}, parity={self.parity})"


def is_nilpotent_power(m: GradedMatrix, limit: int | None = None) -> int | None:
    """Smallest k with m^k = 0, or None if none up to ``limit`` (default: dim + 1)."""
    limit = limit or m.dim + 1
    p = m
    for k in range(1, limit + 1):
        if p.is_zero():
            return k
        p = p @ m
    return None


def nilpotent_series(m: GradedMatrix, coeff) -> GradedMatrix:
    """``sum_n coeff(n) m^n`` for nilpotent ``m``, summed exactly."""
    if is_nilpotent_power(m) is None:
        raise ValueError("matrix is not nilpotent; the series does not terminate")
    out = GradedMatrix.identity(m.parity).scale(coeff(0))
    p = m
    n = 1
    while not p.is_zero():
        c = coeff(n)
        if c:
            out = out + p.scale(c)
        p = p @ m
        n += 1
    return out


def nilpotent_exp(m: GradedMatrix) -> GradedMatrix:
    from math import factorial

    return nilpotent_series(m, lambda n: Fraction(1, factorial(n)))


def nilpotent_log1p(m: GradedMatrix) -> GradedMatrix:
    return nilpotent_series(m, lambda n: Fraction((-1) ** (n + 1), n) if n else 0)


def nilpotent_power(m: GradedMatrix, exponent) -> GradedMatrix:
    from .series import binomial

    e = Fraction(exponent)
    return nilpotent_series(m, lambda n: binomial(e, n))


def graded_kron(A: GradedMatrix, B: GradedMatrix) -> GradedMatrix:
    """Matrix of ``A (x) B`` on ``V (x) W``: ``(A (x) B)(e_i (x) e_j) = (-1)^{p(B)p(e_i)} A e_i (x) B e_j``.

    The sign is taken per entry of ``B``, which is the same as splitting ``B``
    into its even and odd parts.
    """
    pa, pb = A.parity, B.parity
    na, nb = len(pa), len(pb)
    n = na * nb
    rows = [[ZERO] * n for _ in range(n)]
    for r1, c1, a in A.nonzero_entries():
        for r2, c2, b in B.nonzero_entries():
            v = a * b
            if (pb[r2] + pb[c2]) & pa[c1] & 1:
                v = -v
            rows[r1 * nb + r2][c1 * nb + c2] = v
    return GradedMatrix(rows, [(p + q) & 1 for p in pa for q in pb])


def graded_permutation(pa: Sequence[int], pb: Sequence[int] | None = None) -> GradedMatrix:
    """``e_i (x) e_j -> (-1)^{p_i p_j} e_j (x) e_i`` from ``V (x) W`` to ``W (x) V``."""
    pb = pa if pb is None else pb
    na, nb = len(pa), len(pb)
    if list(pa) != list(pb):
        raise ValueError("graded_permutation as a square matrix needs V = W")
    n = na * nb
    rows = [[ZERO] * n for _ in range(n)]
    for i in range(na):
        for j in range(nb):
            rows[j * na + i][i * nb + j] = XiScalar.const(-1 if pa[i] & pb[j] else 1)
    return GradedMatrix(rows, [(p + q) & 1 for p in pa for q in pb])


# -- irreps ---------------------------------------------------------------

@dataclass
class Irrep:
    spin: Fraction
    h: GradedMatrix
    v_minus: GradedMatrix
    v_plus: GradedMatrix
    weights: tuple[int, ...]
    parity: tuple[int, ...]
    convention: str

    @property
    def dim(self) -> int:
        return len(self.weights)

    def generator(self, name: str) -> GradedMatrix:
        if name == "h":
            return self.h
        if name == "v-":
            return self.v_minus
        if name == "v+":
            return self.v_plus
        if name == "X-":
            return (self.v_minus @ self.v_minus).scale(-4)
        if name == "X+":
            return (self.v_plus @ self.v_plus).scale(4)
        raise KeyError(name)


class RelationError(AssertionError):
    """A constructed representation violates a defining relation."""


def _ladder(s: Fraction):
    n = int(4 * s) + 1
    weights = [int(2 * s) - k for k in range(n)]
    b = [Fraction((-1) ** k, 2) for k in range(n - 1)]
    # P_k = b_{k-1} c_k solves P_{k+1} + P_k = -weight_k / 4 with P_0 = 0
    P = [Fraction(0)]
    for k in range(n):
        P.append(-Fraction(weights[k], 4) - P[k])
    if P[n] != 0:
        raise RelationError(f"weight ladder does not close for s = {s}")
    c = [Fraction(0)] + [P[k] / b[k - 1] for k in range(1, n)]
    return weights, b, c


def build_irrep(s, convention: str = "grading_001") -> Irrep:
    """The (4s+1)-dimensional irrep in an h-weight basis.

    ``grading_010`` orders the basis by descending weight (parities alternate
    0,1,0,...); ``grading_001`` lists the even vectors first, then the odd
    ones, each by descending weight.
    """
    s = Fraction(s)
    if s < 0 or (2 * s).denominator != 1:
        raise ValueError("spin must be a nonnegative half-integer")
    weights, b, c = _ladder(s)
    n = len(weights)
    ladder_par = [k & 1 for k in range(n)]
    if convention == "grading_010":
        order = list(range(n))
    elif convention == "grading_001":
        order = [k for k in range(n) if k % 2 == 0] + [k for k in range(n) if k % 2 == 1]
    else:
        raise ValueError(f"unknown convention {convention!r}")
    pos = {k: i for i, k in enumerate(order)}
    par = [ladder_par[k] for k in order]
    H = [[ZERO] * n for _ in range(n)]
    VM = [[ZERO] * n for _ in range(n)]
    VP = [[ZERO] * n for _ in range(n)]
    for k in range(n):
        H[pos[k]][pos[k]] = XiScalar.const(weights[k])
        if k + 1 < n:
            VM[pos[k + 1]][pos[k]] = XiScalar.const(b[k])
        if k >= 1:
            VP[pos[k - 1]][pos[k]] = XiScalar.const(c[k])
    rep = Irrep(
        s,
        GradedMatrix(H, par),
        GradedMatrix(VM, par),
        GradedMatrix(VP, par),
        tuple(weights[k] for k in order),
        tuple(par),
        convention,
    )
    failures = [name for name, res in relation_residuals(rep).items() if not res.is_zero()]
    if failures:
        raise RelationError(f"irrep s={s} violates {failures}")
    return rep


def super_commutator(A: GradedMatrix, B: GradedMatrix) -> GradedMatrix:
    pa, pb = A.matrix_parity(), B.matrix_parity()
    if pa is None or pb is None:
        raise ValueError("super_commutator needs homogeneous matrices")
    return A @ B + B @ A if pa and pb else A @ B - B @ A


def relation_residuals(rep: Irrep) -> dict[str, GradedMatrix]:
    """Every relation of osp(1|2) as a matrix residual (zero when it holds)."""
    g = rep.generator
    h, vm, vp, Xm, Xp = g("h"), g("v-"), g("v+"), g("X-"), g("X+")
    sc = super_commutator
    return {
        "[h,X+]=2X+": sc(h, Xp) - Xp.scale(2),
        "[h,X-]=-2X-": sc(h, Xm) + Xm.scale(2),
        "[X+,X-]=h": sc(Xp, Xm) - h,
        "[h,v+]=v+": sc(h, vp) - vp,
        "[h,v-]=-v-": sc(h, vm) + vm,
        "[v+,v-]=-h/4": sc(vp, vm) + h.scale(Fraction(1, 4)),
        "[X+,v+]=0": sc(Xp, vp),
        "[X-,v-]=0": sc(Xm, vm),
        "[X+,v-]=v+": sc(Xp, vm) - vp,
        "[X-,v+]=v-": sc(Xm, vp) - vm,
        "[v+,v+]=X+/2": sc(vp, vp) - Xp.scale(Fraction(1, 2)),
        "[v-,v-]=-X-/2": sc(vm, vm) + Xm.scale(Fraction(1, 2)),
    }


def sl2_content(rep: Irrep) -> dict[int, list[int]]:
    """h-spectrum on each parity block (h is diagonal in the weight basis)."""
    out: dict[int, list[int]] = {0: [], 1: []}
    for i, p in enumerate(rep.parity):
        out[p].append(int(rep.h[i, i].constant_term()))
    return {p: sorted(w, reverse=True) for p, w in out.items()}


def expected_sl2_content(s) -> dict[int, list[int]]:
    s = Fraction(s)
    even = [int(2 * s) - 2 * k for k in range(int(2 * s) + 1)]
    odd = [int(2 * s) - 1 - 2 * k for k in range(int(2 * s))] if s >= Fraction(1, 2) else []
    return {0: even, 1: odd}


def sl2_strings_unbroken(rep: Irrep) -> bool:
    """X- links consecutive weights inside each parity block (each block is one sl(2) irrep)."""
    Xm = rep.generator("X-")
    for p in (0, 1):
        idx = sorted((i for i, q in enumerate(rep.parity) if q == p), key=lambda i: -rep.weights[i])
        for a, b in zip(idx, idx[1:]):
            if not Xm[b, a]:
                return False
    return True


# -- evaluation -----------------------------------------------------------

def evaluate(x: AlgebraElement, rep: Irrep) -> GradedMatrix:
    """``rho(x)`` term by term (an algebra morphism on polynomial elements)."""
    vm, h, vp = rep.v_minus, rep.h, rep.v_plus
    cache: dict = {}

    def power(m, name, k):
        key = (name, k)
        if key not in cache:
            cache[key] = m**k
        return cache[key]

    out = GradedMatrix.zeros(rep.parity)
    for (i, j, k), c in x.terms.items():
        term = power(vm, "v-", i) @ power(h, "h", j) @ power(vp, "v+", k)
        out = out + term.scale(c)
    return out


def rho_sigma(rep: Irrep) -> GradedMatrix:
    """``rho(sigma) = -log(1 + 8 xi rho(v-)^2)``, summed exactly (nilpotent argument)."""
    arg = (rep.v_minus @ rep.v_minus).scale(XI * 8)
    return -nilpotent_log1p(arg)


def rho_exp_sigma(rep: Irrep, factor) -> GradedMatrix:
    """``rho(e^{factor sigma}) = (1 + 8 xi rho(v-)^2)^{-factor}``, exactly."""
    arg = (rep.v_minus @ rep.v_minus).scale(XI * 8)
    return nilpotent_power(arg, -Fraction(factor))


def nilpotency_index(rep: Irrep) -> int:
    return is_nilpotent_power(rep.v_minus) or 0


def evaluate_tensor(t: TensorElement, rep: Irrep, rep2: Irrep | None = None) -> GradedMatrix:
    rep2 = rep2 or rep
    cache1: dict = {}
    cache2: dict = {}
    n = rep.dim * rep2.dim
    par = [(p + q) & 1 for p in rep.parity for q in rep2.parity]
    out = GradedMatrix.zeros(par)
    for (m1, m2), c in t.terms.items():
        if m1 not in cache1:
            cache1[m1] = evaluate(U.AlgebraElement({m1: 1}), rep)
        if m2 not in cache2:
            cache2[m2] = evaluate(U.AlgebraElement({m2: 1}), rep2)
        A, B = cache1[m1], cache2[m2]
        if A.is_zero() or B.is_zero():
            continue
        out = out + graded_kron(A, B).scale(c)
    assert out.dim == n
    return out


# -- R matrices -------------------------------------------------------------

def fundamental_rep(convention: str = "grading_001") -> Irrep:
    return build_irrep(Fraction(1, 2), convention)


def universal_R_matrix(rep: Irrep) -> GradedMatrix:
    """``(rho (x) rho)(exp(sigma (x) h / 2) exp(-h (x) sigma / 2))`` summed exactly."""
    S = rho_sigma(rep)
    A = graded_kron(S, rep.h).scale(Fraction(1, 2))
    B = graded_kron(rep.h, S).scale(Fraction(-1, 2))
    return nilpotent_exp(A) @ nilpotent_exp(B)


def fundamental_R(convention: str = "grading_001") -> GradedMatrix:
    return universal_R_matrix(fundamental_rep(convention))


def jordanian_R() -> GradedMatrix:
    x = XI
    z = ZERO
    rows = [
        [ONE, z, z, z],
        [-x, ONE, z, z],
        [x, z, ONE, z],
        [x * x, -x, x, ONE],
    ]
    return GradedMatrix(rows, (0, 0, 0, 0))


def block_diagonal(blocks: Sequence[GradedMatrix]) -> GradedMatrix:
    par = [p for b in blocks for p in b.parity]
    n = len(par)
    rows = [[ZERO] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, j, a in b.nonzero_entries():
            rows[off + i][off + j] = a
        off += b.dim
    return GradedMatrix(rows, par)


def jordanian_block_target() -> GradedMatrix:
    I2 = GradedMatrix.identity((0, 1))
    return block_diagonal([jordanian_R(), I2, I2, GradedMatrix.identity((0,))])


def find_block_permutation(R: GradedMatrix, target: GradedMatrix) -> tuple[int, ...] | None:
    """A basis reordering ``perm`` with ``R.permuted(perm) == target`` (entrywise)."""
    n = R.dim
    if target.dim != n:
        return None
    perm: list[int] = []
    used = [False] * n

    def consistent(a: int, i: int) -> bool:
        if R[i, i] != target[a, a]:
            return False
        for b, j in enumerate(perm):
            if R[i, j] != target[a, b] or R[j, i] != target[b, a]:
                return False
        return True

    def search(a: int) -> bool:
        if a == n:
            return True
        for i in range(n):
            if not used[i] and consistent(a, i):
                used[i] = True
                perm.append(i)
                if search(a + 1):
                    return True
                perm.pop()
                used[i] = False
        return False

    return tuple(perm) if search(0) else None


# -- matrix checks --------------------------------------------------------

def leg_embeddings(R: GradedMatrix, parity: Sequence[int]):
    """``R_12, R_13, R_23`` on ``V (x) V (x) V``; ``R_13`` via the graded flip of legs 2 and 3."""
    I = GradedMatrix.identity(parity)
    R12 = graded_kron(R, I)
    R23 = graded_kron(I, R)
    P23 = graded_kron(I, graded_permutation(parity))
    R13 = P23 @ R12 @ P23
    return R12, R13, R23


def parity_preserving(R: GradedMatrix) -> bool:
    return R.matrix_parity() == 0


def naive_R13(R: GradedMatrix, parity: Sequence[int]) -> GradedMatrix:
    """``R_13`` by index placement alone (valid without signs for even R)."""
    d = len(parity)
    n = d**3
    rows = [[ZERO] * n for _ in range(n)]
    for r, c, a in R.nonzero_entries():
        i1, i3 = divmod(r, d)
        j1, j3 = divmod(c, d)
        for k in range(d):
            rows[(i1 * d + k) * d + i3][(j1 * d + k) * d + j3] = a
    return GradedMatrix(rows, [(p + q + s) & 1 for p in parity for q in parity for s in parity])


def rank(mat: list[list[Fraction]]) -> int:
    m = [list(r) for r in mat]
    rk = 0
    rows, cols = len(m), len(m[0]) if m else 0
    for c in range(cols):
        piv = next((r for r in range(rk, rows) if m[r][c]), None)
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        p = m[rk][c]
        for r in range(rows):
            if r != rk and m[r][c]:
                f = m[r][c] / p
                m[r] = [x - f * y for x, y in zip(m[r], m[rk])]
        rk += 1
    return rk


def check_Rhat(R: GradedMatrix, parity: Sequence[int]):
    P = graded_permutation(parity)
    return P @ R


def projector_ranks(R: GradedMatrix, parity: Sequence[int], samples: Iterable = SAMPLE_XI):
    Rhat = check_Rhat(R, parity)
    I = GradedMatrix.identity(Rhat.parity)
    out = {}
    for x in samples:
        plus = (I + Rhat).scale(Fraction(1, 2)).evaluate(x)
        minus = (I - Rhat).scale(Fraction(1, 2)).evaluate(x)
        out[x] = (rank(plus), rank(minus))
    return out


def sector_ranks(R: GradedMatrix, parity: Sequence[int], xi=1) -> dict[str, tuple[int, int]]:
    """Eigenvalue multiplicities (+1, -1) of R-hat on its invariant parity sectors."""
    d = len(parity)
    sectors = {"even(x)even": [], "mixed": [], "odd(x)odd": []}
    for i in range(d):
        for j in range(d):
            key = "even(x)even" if not parity[i] and not parity[j] else "odd(x)odd" if parity[i] and parity[j] else "mixed"
            sectors[key].append(i * d + j)
    Rhat = check_Rhat(R, parity)
    out = {}
    for name, idx in sectors.items():
        B = Rhat.block(idx)
        I = GradedMatrix.identity(B.parity)
        out[name] = (rank((I + B).evaluate(xi)), rank((I - B).evaluate(xi)))
    return out


def verify_matrix_properties(R: GradedMatrix, parity: Sequence[int], label: str = "R") -> list[Check]:
    if R.dim != len(parity) ** 2:
        raise ValueError("R must act on V (x) V for the given parity vector")
    checks = []
    even = parity_preserving(R)
    checks.append(Check(f"{label}.even", "R preserves parity (sign-free leg embeddings)", even))
    R12, R13, R23 = leg_embeddings(R, parity)
    if even:
        checks.append(Check(f"{label}.R13_sign_free", "graded R_13 equals index placement", R13 == naive_R13(R, parity)))
    ybe = R12 @ R13 @ R23 - R23 @ R13 @ R12
    nz = sum(1 for _ in ybe.nonzero_entries())
    checks.append(Check(f"{label}.ybe", "R_12 R_13 R_23 = R_23 R_13 R_12", nz == 0, None,
                        "0" if nz == 0 else f"{nz} nonzero entries", detail={"entries": ybe.dim**2}))
    Rhat = check_Rhat(R, parity)
    I = GradedMatrix.identity(Rhat.parity)
    checks.append(Check(f"{label}.rhat_involutive", "R-hat^2 = I", (Rhat @ Rhat) == I))
    P = graded_permutation(parity)
    checks.append(Check(f"{label}.triangular", "P R P R = I", (P @ R @ P @ R) == I))
    ranks = projector_ranks(R, parity)
    vals = set(ranks.values())
    ok = len(vals) == 1 and all(a + b == R.dim for a, b in vals)
    checks.append(Check(f"{label}.projector_ranks", "rank (I +- R-hat)/2 constant over sample xi", ok, None,
                        detail={"ranks": {str(k): list(v) for k, v in ranks.items()},
                                "sectors": {k: list(v) for k, v in sector_ranks(R, parity).items()}}))
    return checks


def verify_representations(spins=(0, Fraction(1, 2), 1, Fraction(3, 2))) -> list[Check]:
    checks = []
    for s in spins:
        s = Fraction(s)
        tag = f"irrep.s={s}"
        for conv in ("grading_010", "grading_001"):
            try:
                rep = build_irrep(s, conv)
            except RelationError as exc:
                checks.append(Check(f"{tag}.{conv}.relations", "osp(1|2) relations", False, residual=str(exc)))
                continue
            bad = [k for k, v in relation_residuals(rep).items() if not v.is_zero()]
            checks.append(Check(f"{tag}.{conv}.relations", "all osp(1|2) relations hold as matrices", not bad,
                                residual=", ".join(bad) or "0"))
        rep = build_irrep(s, "grading_010")
        checks.append(Check(f"{tag}.dimension", "dim = 4s + 1", rep.dim == 4 * s + 1, detail={"dim": rep.dim}))
        content = sl2_content(rep)
        checks.append(Check(f"{tag}.sl2_content", "W_s = V_s + V_(s-1/2)",
                            content == expected_sl2_content(s) and sl2_strings_unbroken(rep),
                            detail={"even": content[0], "odd": content[1]}))
    return checks


def verify_fundamental_R(order: int = hopf.DEFAULT_ORDER) -> list[Check]:
    rep = fundamental_rep()
    R = universal_R_matrix(rep)
    checks = []
    perm = find_block_permutation(R, jordanian_block_target())
    checks.append(Check("Rmat.block_form", "R = R(xi) + I_2 + I_2 + 1", perm is not None,
                        residual="0" if perm else "no permutation", detail={"permutation": list(perm or [])}))
    Rmat_trunc = evaluate_tensor(hopf.universal_R(order), rep)
    checks.append(Check("Rmat.truncation_stable", "(rho (x) rho)(R truncated) = exact R", Rmat_trunc == R, order))
    checks.append(Check("Rmat.classical_limit", "R = I at xi = 0", R.specialize(0) == GradedMatrix.identity(R.parity)))
    checks.extend(verify_matrix_properties(R, rep.parity, "Rmat"))
    checks.extend(verify_matrix_properties(jordanian_R(), (0, 0), "Rjordan"))
    tw = hopf.twist(order)
    for g, x in {"h": U.h(), "v-": U.v_minus(), "v+": U.v_plus()}.items():
        from .tensor import graded_flip

        d = tw.coproduct(x)
        lhs = R @ evaluate_tensor(d, rep)
        rhs = evaluate_tensor(graded_flip(d), rep) @ R
        checks.append(Check(f"Rmat.intertwine.{g}", f"R rho(Delta_t {g}) = rho(Delta_t^op {g}) R", lhs == rhs, order))
    return checks


def scaling_matrix(rep: Irrep, inverse: bool = False) -> GradedMatrix:
    """``rho(e^{-u h})`` as ``diag(mu^-weight)`` (or its inverse)."""
    sign = 1 if inverse else -1
    return GradedMatrix.diagonal([XiScalar.monomial(1, mu=sign * w) for w in rep.weights], rep.parity)


def verify_scaling() -> list[Check]:
    rep = fundamental_rep()
    R = universal_R_matrix(rep)
    D, Dinv = scaling_matrix(rep), scaling_matrix(rep, inverse=True)
    DD, DDinv = graded_kron(D, D), graded_kron(Dinv, Dinv)
    conj = DD @ R @ DDinv
    checks = [Check("scaling.fundamental", "(D (x) D) R(xi) (D (x) D)^-1 = R(mu^2 xi)", conj == R.substitute_scale())]
    J = jordanian_R()
    D2 = GradedMatrix.diagonal([XiScalar.monomial(1, mu=-1), XiScalar.monomial(1, mu=1)], (0, 0))
    D2i = GradedMatrix.diagonal([XiScalar.monomial(1, mu=1), XiScalar.monomial(1, mu=-1)], (0, 0))
    conjJ = graded_kron(D2, D2) @ J @ graded_kron(D2i, D2i)
    checks.append(Check("scaling.jordanian", "Jordanian block: xi -> mu^2 xi", conjJ == J.substitute_scale()))
    one_mu = conj.map(_set_mu_one)
    checks.append(Check("scaling.mu_one", "mu = 1 gives back R", one_mu == R))
    return checks


def _set_mu_one(a: XiScalar) -> XiScalar:
    out: dict = {}
    for (e, _), c in a.items():
        out[(e, 0)] = out.get((e, 0), 0) + c
    return XiScalar(out)
