"""The quantum supergroup OSp_xi(1|2) from the RTT relations.

The nine generators are the entries of the 3x3 matrix ``T`` in the basis
``(e+, e-, e0)``::

    T = ( a      b     alpha )
        ( c      d     delta )
        ( gamma  beta  g     )

with parity ``p(T_ij) = p_i + p_j``.  Relations come from the coefficients of
``R T_1 T_2 - T_2 T_1 R`` in ``End(V) (x) End(V) (x) A`` computed with Koszul
signs.

Ideal membership is exact linear algebra over the rationals.  The relations
are homogeneous for the grading ``deg T_ij = wt(e_j) - wt(e_i)``,
``deg xi = 2`` (the scaling symmetry), so a homogeneous element lies in the
ideal over Q(xi) iff its value at ``xi = 1`` lies in the specialized ideal.
Every element is split into homogeneous pieces before it is tested.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from . import repn
from .linear import Combination
from .report import Check
from .scalar import ONE, XI, ZERO, XiScalar
from .superalg import render_sum, render_term

LETTERS = ("a", "b", "c", "d", "g", "alpha", "beta", "gamma", "delta")
EVEN_LETTERS = ("a", "b", "c", "d", "g")
# (row vector, column vector) by weight label
LETTER_SLOTS = {
    "a": ("+", "+"), "b": ("+", "-"), "alpha": ("+", "0"),
    "c": ("-", "+"), "d": ("-", "-"), "delta": ("-", "0"),
    "gamma": ("0", "+"), "beta": ("0", "-"), "g": ("0", "0"),
}
LABEL_WEIGHT = {"+": 1, "-": -1, "0": 0}
LABEL_PARITY = {"+": 0, "-": 0, "0": 1}
# symbols used only by the block-inverse certificate
EXTRA_LETTERS = ("Ti11", "Ti12", "Ti21", "Ti22", "w")
ALPHABET = LETTERS + EXTRA_LETTERS
INDEX = {name: i for i, name in enumerate(ALPHABET)}

Word = tuple[int, ...]


def letter_parity(i: int) -> int:
    name = ALPHABET[i]
    if name in LETTER_SLOTS:
        r, c = LETTER_SLOTS[name]
        return (LABEL_PARITY[r] + LABEL_PARITY[c]) & 1
    return 0


def letter_degree(i: int) -> int:
    """Scaling degree ``wt(col) - wt(row)``."""
    name = ALPHABET[i]
    r, c = LETTER_SLOTS[name]
    return LABEL_WEIGHT[c] - LABEL_WEIGHT[r]


def letter_row_odd(i: int) -> int:
    return LABEL_PARITY[LETTER_SLOTS[ALPHABET[i]][0]]


def word_parity(w: Word) -> int:
    return sum(letter_parity(i) for i in w) & 1


def word_degree(w: Word) -> int:
    return sum(letter_degree(i) for i in w)


def render_word(w: Word) -> str:
    return "*".join(ALPHABET[i] for i in w) if w else "1"


class FreePoly(Combination):
    """Noncommutative polynomial in the generators with `XiScalar` coefficients."""

    __slots__ = ()

    def _mul_keys(self, k1, k2):
        return ((k1 + k2, 1),)

    def scalar(self, c) -> FreePoly:
        return FreePoly({(): c})

    def parity(self) -> int | None:
        ps = {word_parity(w) for w in self.terms}
        if len(ps) > 1:
            return None
        return ps.pop() if ps else 0

    def degrees(self) -> set[int]:
        return {len(w) for w in self.terms}

    def render(self) -> str:
        items = sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))
        return render_sum([render_term(c, render_word(w)) for w, c in items])

    def specialize(self, xi) -> FreePoly:
        return self.map_coefficients(lambda c: c.specialize(xi))


def gen(name: str) -> FreePoly:
    return FreePoly({(INDEX[name],): 1})


def commutator(x: FreePoly, y: FreePoly) -> FreePoly:
    """Graded commutator for homogeneous arguments."""
    px, py = x.parity(), y.parity()
    if px is None or py is None:
        raise ValueError("commutator needs homogeneous parity")
    return x * y + y * x if px and py else x * y - y * x


def super_commutator_words(x: FreePoly, y: FreePoly) -> FreePoly:
    return commutator(x, y)


# -- T matrix and R coefficients -----------------------------------------

def basis_labels(convention: str = "grading_001") -> tuple[str, ...]:
    rep = repn.fundamental_rep(convention)
    lab = {1: "+", -1: "-", 0: "0"}
    return tuple(lab[w] for w in rep.weights)


def t_matrix(convention: str = "grading_001") -> list[list[FreePoly]]:
    labels = basis_labels(convention)
    by_slot = {slot: name for name, slot in LETTER_SLOTS.items()}
    return [[gen(by_slot[(r, c)]) for c in labels] for r in labels]


def t_letter(convention: str = "grading_001") -> list[list[int]]:
    labels = basis_labels(convention)
    by_slot = {slot: name for name, slot in LETTER_SLOTS.items()}
    return [[INDEX[by_slot[(r, c)]] for c in labels] for r in labels]


def r_coefficients(R: repn.GradedMatrix) -> dict[tuple[int, int, int, int], XiScalar]:
    """``r[i, j, k, l]`` with ``R = sum r E_ij (x) E_kl`` (undoing the Koszul sign of the matrix)."""
    p = R.parity
    d = int(round(len(p) ** 0.5))
    basis_par = None
    for cand in itertools.product((0, 1), repeat=d):
        if [(a + b) & 1 for a in cand for b in cand] == list(p):
            basis_par = cand
            break
    if basis_par is None:
        raise ValueError("cannot recover the basis grading of R")
    out = {}
    for row, col, v in R.nonzero_entries():
        i, k = divmod(row, d)
        j, l = divmod(col, d)
        sign = (basis_par[k] + basis_par[l]) & basis_par[j] & 1
        out[(i, j, k, l)] = -v if sign else v
    return out


def derive_rtt_relations(
    R: repn.GradedMatrix | None = None,
    convention: str = "grading_001",
    entry_order: Sequence[tuple[int, int, int, int]] | None = None,
) -> list[FreePoly]:
    """All nonzero coefficients of ``R T_1 T_2 - T_2 T_1 R`` (unreduced)."""
    rep = repn.fundamental_rep(convention)
    if R is None:
        R = repn.universal_R_matrix(rep)
    p = rep.parity
    n = len(p)
    T = t_letter(convention)
    r = r_coefficients(R)
    by_left: dict[tuple[int, int], list] = {}
    by_right: dict[tuple[int, int], list] = {}
    for (i, j, k, l), v in r.items():
        by_left.setdefault((i, k), []).append((j, l, v))
        by_right.setdefault((j, l), []).append((i, k, v))

    def pe(a, b):
        return (p[a] + p[b]) & 1

    entries = list(entry_order) if entry_order is not None else list(itertools.product(range(n), repeat=4))
    out = []
    for I, J, K, L in entries:
        acc: dict[Word, XiScalar] = {}
        # R T1 T2:  sum r[I,m,K,n] (-1)^{p(E_Kn)p(E_mJ) + p(T_mJ)p(E_nL)} T_mJ T_nL
        for m, nn, v in by_left.get((I, K), []):
            s = (pe(K, nn) & pe(m, J)) ^ (pe(m, J) & pe(nn, L))
            w = (T[m][J], T[nn][L])
            acc[w] = acc.get(w, ZERO) + (-v if s else v)
        # T2 T1 R:  sum r[j,J,l,L] (-1)^{p(E_Kl)p(E_jJ)} T_Kl T_Ij
        for j, l, v in by_right.get((J, L), []):
            s = pe(K, l) & pe(j, J)
            w = (T[K][l], T[I][j])
            acc[w] = acc.get(w, ZERO) - (-v if s else v)
        poly = FreePoly(acc)
        if poly:
            out.append(poly)
    return out


# -- homogeneous decomposition --------------------------------------------

def component_key(w: Word) -> tuple[int, int, int, int]:
    """Grading that survives ``xi = 1``: length, parity, odd-row count, degree mod 2."""
    return (len(w), word_parity(w), sum(letter_row_odd(i) for i in w) & 1, word_degree(w) & 1)


def homogeneous_pieces(x: FreePoly) -> dict[tuple, dict[Word, Fraction]]:
    """Split ``x`` by (component, total grade) and specialize each piece at ``xi = 1``."""
    pieces: dict[tuple, dict[Word, Fraction]] = {}
    for w, c in x.terms.items():
        if not c.mu_free():
            raise ValueError("ideal membership is defined for mu-free coefficients only")
        for (e, _), q in c.items():
            key = (component_key(w), word_degree(w) + 2 * e)
            slot = pieces.setdefault(key, {})
            slot[w] = slot.get(w, 0) + q
    return {k: {w: q for w, q in v.items() if q} for k, v in pieces.items()}


def homogenize(vec: dict[Word, Fraction], grade: int) -> FreePoly:
    terms = {}
    for w, q in vec.items():
        e2 = grade - word_degree(w)
        if e2 & 1:
            raise ValueError("inhomogeneous vector")
        terms[w] = XiScalar.monomial(q, xi=e2 // 2)
    return FreePoly(terms)


def is_homogeneous(x: FreePoly) -> bool:
    return len(homogeneous_pieces(x)) <= 1


# -- sparse echelon form over Q -------------------------------------------

class Echelon:
    """Sparse row echelon basis of a subspace of the span of words."""

    def __init__(self, order_key: Callable[[Word], tuple]):
        self.key = order_key
        self.rows: dict[Word, dict[Word, Fraction]] = {}

    def _lead(self, v: dict[Word, Fraction]) -> Word:
        return max(v, key=self.key)

    def reduce(self, v: dict[Word, Fraction]) -> dict[Word, Fraction]:
        v = dict(v)
        while True:
            hits = [w for w in v if w in self.rows]
            if not hits:
                return v
            w = max(hits, key=self.key)
            c = v[w]
            for u, q in self.rows[w].items():
                t = v.get(u, 0) - c * q
                if t:
                    v[u] = t
                else:
                    v.pop(u, None)

    def add(self, v: dict[Word, Fraction]) -> bool:
        v = self.reduce(v)
        if not v:
            return False
        lead = self._lead(v)
        c = v[lead]
        self.rows[lead] = {w: q / c for w, q in v.items()}
        return True

    def __len__(self) -> int:
        return len(self.rows)


def deglex(rank: Sequence[int] | None = None) -> Callable[[Word], tuple]:
    if rank is None:
        return lambda w: w
    table = dict(enumerate(rank))
    return lambda w: tuple(table[i] for i in w)


# -- the relation set and the ideal ---------------------------------------

class RelationSet:
    """Row-reduced quadratic relations and degree-bounded ideal membership."""

    def __init__(self, relations: Iterable[FreePoly], max_degree: int = 4, rank: Sequence[int] | None = None):
        self.raw = list(relations)
        self.max_degree = max_degree
        self.order_key = deglex(rank)
        self._components: dict[tuple, Echelon] = {}
        self.inhomogeneous = [r for r in self.raw if not is_homogeneous(r)]
        if self.inhomogeneous:
            raise ValueError(f"{len(self.inhomogeneous)} relations are not scaling-homogeneous")
        # xi is invertible, so r and xi*r are the same relation: pieces are
        # collected per component and re-homogenized at the lowest grade
        # without negative xi powers
        self.basis: list[tuple[tuple, int, dict[Word, Fraction]]] = []
        by_comp: dict[tuple, Echelon] = {}
        for r in self.raw:
            for (comp, _), vec in homogeneous_pieces(r).items():
                by_comp.setdefault(comp, Echelon(self.order_key)).add(vec)
        for comp, ech in sorted(by_comp.items()):
            for lead in sorted(ech.rows, key=self.order_key):
                vec = ech.rows[lead]
                self.basis.append((comp, max(word_degree(w) for w in vec), vec))

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def polynomials(self) -> list[FreePoly]:
        return [homogenize(vec, grade) for _, grade, vec in self.basis]

    def component(self, key: tuple) -> Echelon:
        """Echelon basis of the ideal in one ``xi = 1`` component of degree ``key[0]``."""
        ech = self._components.get(key)
        if ech is not None:
            return ech
        deg = key[0]
        if deg > self.max_degree:
            raise ValueError(f"degree {deg} exceeds the configured bound {self.max_degree}")
        ech = Echelon(self.order_key)
        for comp_r, _, vec in self.basis:
            for left in range(deg - 1):
                right = deg - 2 - left
                for w1 in itertools.product(range(len(LETTERS)), repeat=left):
                    for w2 in itertools.product(range(len(LETTERS)), repeat=right):
                        if component_key(w1 + next(iter(vec)) + w2) != key:
                            continue
                        ech.add({w1 + w + w2: q for w, q in vec.items()})
        self._components[key] = ech
        return ech

    def normal_form(self, x: FreePoly) -> FreePoly:
        out = FreePoly({})
        for (comp, grade), vec in homogeneous_pieces(x).items():
            if comp[0] < 2:
                nf = vec
            else:
                nf = self.component(comp).reduce(vec)
            if nf:
                out = out + homogenize(nf, grade)
        return out

    def reduces_to_zero(self, x: FreePoly) -> bool:
        return self.normal_form(x).is_zero()

    def ideal_dimension(self, degree: int) -> int:
        keys = {component_key(w) for w in itertools.product(range(len(LETTERS)), repeat=degree)}
        return sum(len(self.component(k)) for k in keys)

    def to_json(self) -> list[str]:
        return [p.render() for p in self.polynomials()]


def reduce_mod_ideal(x: FreePoly, relations: RelationSet) -> FreePoly:
    for w in x.terms:
        if len(w) > relations.max_degree:
            raise ValueError(f"word of length {len(w)} exceeds the degree bound {relations.max_degree}")
    return relations.normal_form(x)


@lru_cache(maxsize=4)
def relation_set(convention: str = "grading_001", max_degree: int = 4, rank: tuple[int, ...] | None = None) -> RelationSet:
    return RelationSet(derive_rtt_relations(convention=convention), max_degree, rank)


# -- supercommutative limit -----------------------------------------------

def supercommutativity_relations() -> list[FreePoly]:
    out = []
    n = len(LETTERS)
    for i in range(n):
        for j in range(i, n):
            x, y = gen(LETTERS[i]), gen(LETTERS[j])
            if i == j and not letter_parity(i):
                continue
            out.append(commutator(x, y) if i != j else x * x)
    return out


def span_dimension(polys: Iterable[FreePoly], xi=None) -> int:
    ech = Echelon(deglex())
    for p in polys:
        vec: dict[Word, Fraction] = {}
        for w, c in p.terms.items():
            v = c.constant_term() if xi is None else c.evaluate(xi)
            if v:
                vec[w] = vec.get(w, 0) + v
        ech.add(vec)
    return len(ech)


def same_span(a: Sequence[FreePoly], b: Sequence[FreePoly], xi) -> bool:
    da, db = span_dimension(a, xi), span_dimension(b, xi)
    return da == db == span_dimension(list(a) + list(b), xi)


# -- Jordanian block ------------------------------------------------------

BLOCK = (("a", "b"), ("c", "d"))
PSI = ("alpha", "delta")
OMEGA = ("gamma", "beta")


def _rj(R=None):
    J = R or repn.jordanian_R()
    return {(i, k, j, l): J[2 * i + k, 2 * j + l] for i, j, k, l in itertools.product(range(2), repeat=4)}


def jordanian_relations(R: repn.GradedMatrix | None = None) -> list[FreePoly]:
    """``R(xi) T_1 T_2 - T_2 T_1 R(xi)`` for the even 2x2 block (no signs)."""
    Rj = _rj(R)
    T = [[gen(x) for x in row] for row in BLOCK]
    out = []
    for I, J, K, L in itertools.product(range(2), repeat=4):
        e = FreePoly({})
        for m, n in itertools.product(range(2), repeat=2):
            e = e + (T[m][J] * T[n][L]).scale(Rj[(I, K, m, n)])
            e = e - (T[K][n] * T[I][m]).scale(Rj[(m, n, J, L)])
        if e:
            out.append(e)
    return out


def block_relations(R: repn.GradedMatrix | None = None) -> dict[str, list[FreePoly]]:
    """Every component equation of the block form of the RTT relations."""
    Rj = _rj(R)
    T = [[gen(x) for x in row] for row in BLOCK]
    psi = [gen(x) for x in PSI]
    omega = [gen(x) for x in OMEGA]
    g = gen("g")
    rng = range(2)
    out: dict[str, list[FreePoly]] = {"R T1 T2 = T2 T1 R": jordanian_relations(R)}
    eqs = []
    for I, J, K in itertools.product(rng, repeat=3):
        e = -(psi[K] * T[I][J])
        for m, n in itertools.product(rng, repeat=2):
            e = e + (T[m][J] * psi[n]).scale(Rj[(I, K, m, n)])
        eqs.append(e)
    out["R T1 psi2 = psi2 T1"] = eqs
    out["g T = T g"] = [g * T[i][j] - T[i][j] * g for i, j in itertools.product(rng, repeat=2)]
    eqs = []
    for J, K, L in itertools.product(rng, repeat=3):
        e = omega[J] * T[K][L]
        for m, n in itertools.product(rng, repeat=2):
            e = e - (T[K][n] * omega[m]).scale(Rj[(m, n, J, L)])
        eqs.append(e)
    out["omega1 T2 = T2 omega1 R"] = eqs
    out["omega1 psi2 = -psi2 omega1"] = [omega[j] * psi[k] + psi[k] * omega[j] for j, k in itertools.product(rng, repeat=2)]
    eqs = []
    for J, L in itertools.product(rng, repeat=2):
        e = omega[J] * omega[L]
        for m, n in itertools.product(rng, repeat=2):
            e = e + (omega[n] * omega[m]).scale(Rj[(m, n, J, L)])
        eqs.append(e)
    out["omega1 omega2 = -omega2 omega1 R"] = eqs
    eqs = []
    for I, K in itertools.product(rng, repeat=2):
        e = psi[K] * psi[I]
        for m, n in itertools.product(rng, repeat=2):
            e = e + (psi[m] * psi[n]).scale(Rj[(I, K, m, n)])
        eqs.append(e)
    out["R psi1 psi2 = -psi2 psi1"] = eqs
    return out


def intersect_with_letters(rs: RelationSet, letters: Sequence[str]) -> list[FreePoly]:
    """Basis of the degree-2 relation span inside words over ``letters``."""
    inside = {INDEX[x] for x in letters}
    # any word using an outside letter is larger than every inside word
    rank = [0] * len(LETTERS)
    for i in range(len(LETTERS)):
        rank[i] = i + (100 if i not in inside else 0)
    sub = RelationSet(rs.raw, 2, tuple(rank))
    return [homogenize(vec, grade) for _, grade, vec in sub.basis if all(set(w) <= inside for w in vec)]


# -- quantum determinant and adjugate -------------------------------------

def det_xi() -> FreePoly:
    a, b, c, d = (gen(x) for x in "abcd")
    return a * (d - b.scale(XI)) - c * b


def _solve(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """One solution of a linear system over Q (free variables set to 0), or None."""
    n = len(rows[0]) if rows else 0
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    piv_cols = []
    rk = 0
    for c in range(n):
        piv = next((r for r in range(rk, len(m)) if m[r][c]), None)
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        p = m[rk][c]
        m[rk] = [x / p for x in m[rk]]
        for r in range(len(m)):
            if r != rk and m[r][c]:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[rk])]
        piv_cols.append(c)
        rk += 1
    if any(all(x == 0 for x in row[:-1]) and row[-1] for row in m):
        return None
    sol = [Fraction(0)] * n
    for r, c in enumerate(piv_cols):
        sol[c] = m[r][-1]
    return sol


def quantum_adjugate(rs: RelationSet | None = None) -> list[list[FreePoly]] | None:
    """``T~`` linear in a, b, c, d with ``T T~ = T~ T = det_xi T * I_2`` modulo the ideal."""
    rs = rs or relation_set()
    letters = [INDEX[x] for x in "abcd"]
    T = [[INDEX[x] for x in row] for row in BLOCK]
    unknowns = [(j, k, x) for j in range(2) for k in range(2) for x in letters]
    det1 = {w: c.evaluate(1) for w, c in det_xi().terms.items()}
    equations: dict[tuple, dict[int, Fraction]] = {}
    constants: dict[tuple, Fraction] = {}

    def nf1(vec: dict[Word, Fraction]) -> dict[Word, Fraction]:
        out: dict[Word, Fraction] = {}
        groups: dict[tuple, dict[Word, Fraction]] = {}
        for w, q in vec.items():
            groups.setdefault(component_key(w), {})[w] = q
        for key, v in groups.items():
            for w, q in rs.component(key).reduce(v).items():
                out[w] = out.get(w, 0) + q
        return out

    for side in ("right", "left"):
        for i, k in itertools.product(range(2), repeat=2):
            tag = (side, i, k)
            for u_idx, (j, kk, x) in enumerate(unknowns):
                for jj in range(2):
                    # right: (T T~)_ik = sum_j T_ij T~_jk ; left: (T~ T)_ik = sum_j T~_ij T_jk
                    if side == "right" and kk == k and j == jj:
                        word = (T[i][jj], x)
                    elif side == "left" and j == i and kk == jj:
                        word = (x, T[jj][k])
                    else:
                        continue
                    for w, q in nf1({word: Fraction(1)}).items():
                        slot = equations.setdefault(tag + (w,), {})
                        slot[u_idx] = slot.get(u_idx, 0) + q
            if i == k:
                for w, q in nf1(det1).items():
                    constants[tag + (w,)] = constants.get(tag + (w,), 0) + q
    keys = sorted(set(equations) | set(constants), key=repr)
    rows = [[equations.get(key, {}).get(u, Fraction(0)) for u in range(len(unknowns))] for key in keys]
    rhs = [constants.get(key, Fraction(0)) for key in keys]
    sol = _solve(rows, rhs)
    if sol is None:
        return None
    adj = [[FreePoly({}) for _ in range(2)] for _ in range(2)]
    for (j, k, x), q in zip(unknowns, sol):
        if q:
            grade = -letter_degree(T[k][j])
            e2 = grade - letter_degree(x)
            if e2 & 1:
                return None
            adj[j][k] = adj[j][k] + FreePoly({(x,): XiScalar.monomial(q, xi=e2 // 2)})
    return adj


def mat_mul(A, B):
    n, m, p = len(A), len(B), len(B[0])
    return [[sum((A[i][k] * B[k][j] for k in range(m)), FreePoly({})) for j in range(p)] for i in range(n)]


def theta_surrogate(adj) -> FreePoly:
    psi = [gen(x) for x in PSI]
    omega = [gen(x) for x in OMEGA]
    out = FreePoly({})
    for j, k in itertools.product(range(2), repeat=2):
        out = out + omega[j] * adj[j][k] * psi[k]
    return out


# -- checks ---------------------------------------------------------------

def verify_relation_set(rs: RelationSet | None = None) -> list[Check]:
    rs = rs or relation_set()
    checks = []
    raw = rs.raw
    checks.append(Check("frt.relations.homogeneous", "relations are scaling-homogeneous", not rs.inhomogeneous,
                        detail={"raw": len(raw), "dimension": rs.dimension}))
    dim0 = span_dimension(raw, 0)
    sc = supercommutativity_relations()
    checks.append(Check("frt.relations.xi0_supercommutative", "R = I limit gives supercommutativity",
                        same_span(raw, sc, 0), detail={"dimension": dim0, "supercommutative": span_dimension(sc, 0)}))
    checks.append(Check("frt.relations.generic_dimension", "span dimension equals the xi = 0 dimension",
                        rs.dimension == dim0, detail={"dimension": rs.dimension}))
    # determinism under a shuffled derivation
    entries = list(itertools.product(range(3), repeat=4))
    random.Random(1729).shuffle(entries)
    other = RelationSet(derive_rtt_relations(entry_order=entries), rs.max_degree)
    same = other.dimension == rs.dimension and all(rs.reduces_to_zero(p) for p in other.polynomials())
    checks.append(Check("frt.relations.deterministic", "re-derivation in shuffled order spans the same space", same))
    alpha = INDEX["alpha"]
    checks.append(Check("frt.relations.odd_square", "alpha^2 occurs in some relation",
                        any((alpha, alpha) in p.terms for p in raw)))
    sl_derived = intersect_with_letters(rs, "abcd")
    sl_expected = jordanian_relations()
    ok = all(rs.reduces_to_zero(p) for p in sl_expected) and same_span(sl_derived, sl_expected, 1)
    checks.append(Check("frt.sl2_block", "relations among a, b, c, d = Jordanian SL_xi(2) relations", ok,
                        detail={"dimension": len(sl_derived)}))
    # flatness: quotient dimensions match the supercommutative algebra
    for deg, expected in ((3, 129),):
        got = 9**deg - rs.ideal_dimension(deg)
        checks.append(Check(f"frt.hilbert.degree{deg}", "quotient dimension equals the xi = 0 value",
                            got == expected, detail={"quotient_dimension": got, "expected": expected}))
    return checks


def verify_block_relations(rs: RelationSet | None = None) -> list[Check]:
    rs = rs or relation_set()
    checks = []
    for name, eqs in block_relations().items():
        bad = [e for e in eqs if not rs.reduces_to_zero(e)]
        checks.append(Check("frt.block." + _slug(name), name, not bad,
                            residual="0" if not bad else rs.normal_form(bad[0]).render(),
                            detail={"equations": len(eqs)}))
        limit_ok = all(span_dimension([e], 0) == 0 or _supercomm_member(e) for e in eqs)
        checks.append(Check("frt.block." + _slug(name) + ".xi0", name + " at xi = 0 is supercommutativity", limit_ok))
    return checks


def _supercomm_member(e: FreePoly) -> bool:
    sc = supercommutativity_relations()
    return span_dimension(sc + [e], 0) == span_dimension(sc, 0)


def _slug(name: str) -> str:
    out = name.replace(" = ", "_eq_").replace(" ", "_").replace("-", "neg")
    return out


def verify_adjugate(rs: RelationSet | None = None) -> tuple[list[Check], list[list[FreePoly]] | None]:
    rs = rs or relation_set()
    adj = quantum_adjugate(rs)
    if adj is None:
        return [Check("frt.adjugate", "quantum adjugate", False, residual="no adjugate found")], None
    T = [[gen(x) for x in row] for row in BLOCK]
    det = det_xi()
    ok = True
    for P in (mat_mul(T, adj), mat_mul(adj, T)):
        for i, k in itertools.product(range(2), repeat=2):
            target = det if i == k else FreePoly({})
            ok &= rs.reduces_to_zero(P[i][k] - target)
    classical = [[gen("d"), -gen("b")], [-gen("c"), gen("a")]]
    limit = all((adj[i][k].specialize(0) - classical[i][k]).is_zero() for i in range(2) for k in range(2))
    rendered = [[x.render() for x in row] for row in adj]
    return [
        Check("frt.adjugate", "T T~ = T~ T = det_xi T I_2 modulo the ideal", ok, detail={"adjugate": rendered}),
        Check("frt.adjugate.classical_limit", "T~ = (d, -b; -c, a) at xi = 0", limit),
        Check("frt.det.classical_limit", "det_xi T = ad - cb at xi = 0",
              (det_xi().specialize(0) - (gen("a") * gen("d") - gen("c") * gen("b"))).is_zero()),
    ], adj


def verify_central(rs: RelationSet | None = None, adj=None, rank: Sequence[int] | None = None) -> list[Check]:
    rs = rs or relation_set()
    if adj is None:
        adj = quantum_adjugate(rs)
    checks = []
    det = det_xi()
    g = gen("g")
    bad_det = [x for x in LETTERS if not rs.reduces_to_zero(commutator(det, gen(x)))]
    checks.append(Check("frt.central.det", "[det_xi T, x] = 0 for all nine generators", not bad_det,
                        residual=", ".join(bad_det) or "0"))
    bad_g = [x for x in LETTERS if not rs.reduces_to_zero(commutator(g, gen(x)))]
    checks.append(Check("frt.central.g", "[g, x] = 0 for all nine generators", not bad_g, residual=", ".join(bad_g) or "0"))
    if adj is None:
        checks.append(Check("frt.central.theta", "theta surrogate", False, residual="no adjugate found"))
        return checks
    th = theta_surrogate(adj)
    bad_th = [x for x in LETTERS if not rs.reduces_to_zero(commutator(th, gen(x)))]
    statement = ("[omega T~ psi, x] lies in the ideal for all nine generators; with det_xi T central "
                 "this makes theta = det_xi T^-1 omega T~ psi central")
    checks.append(Check("frt.central.theta", "theta~ = omega T~ psi central (directly, degree 4)", not bad_th,
                        residual=", ".join(bad_th) or "0",
                        detail={"statement": statement, "theta_surrogate": th.render(), "reduction": "direct"}))
    return checks


def verify_ordering_independence(rs: RelationSet | None = None) -> list[Check]:
    """Repeat the degree-3 centrality reductions under a reversed letter order."""
    rs = rs or relation_set()
    rev = tuple(range(len(LETTERS) - 1, -1, -1))
    other = RelationSet(rs.raw, 3, rev)
    det = det_xi()
    ok = all(other.reduces_to_zero(commutator(det, gen(x))) for x in LETTERS)
    ok &= all(other.reduces_to_zero(commutator(gen("g"), gen(x))) for x in LETTERS)
    return [Check("frt.central.order_independent", "centrality reductions agree under a reversed monomial order", ok)]


# -- coproduct ------------------------------------------------------------

def coproduct_word(w: Word, convention: str = "grading_001") -> dict[tuple[Word, Word], int]:
    """``Delta(T_ij) = sum_k T_ik (x) T_kj`` extended with Koszul signs."""
    labels = basis_labels(convention)
    slot_of = {INDEX[name]: (labels.index(r), labels.index(c)) for name, (r, c) in LETTER_SLOTS.items()}
    T = t_letter(convention)
    terms: dict[tuple[Word, Word], int] = {((), ()): 1}
    for letter in w:
        i, j = slot_of[letter]
        new: dict[tuple[Word, Word], int] = {}
        for (l, r), s in terms.items():
            for k in range(3):
                x, y = T[i][k], T[k][j]
                sign = -1 if (word_parity(r) & letter_parity(x)) else 1
                key = (l + (x,), r + (y,))
                new[key] = new.get(key, 0) + s * sign
        terms = {k: v for k, v in new.items() if v}
    return terms


def verify_coproduct_compatibility(rs: RelationSet | None = None) -> list[Check]:
    rs = rs or relation_set()
    nf_cache: dict[Word, FreePoly] = {}

    def nf(w):
        if w not in nf_cache:
            nf_cache[w] = rs.normal_form(FreePoly({w: 1}))
        return nf_cache[w]

    bad = 0
    for p in rs.polynomials():
        acc: dict[tuple[Word, Word], XiScalar] = {}
        for w, c in p.terms.items():
            for (l, r), s in coproduct_word(w).items():
                for wl, cl in nf(l).terms.items():
                    for wr, cr in nf(r).terms.items():
                        key = (wl, wr)
                        acc[key] = acc.get(key, ZERO) + c * cl * cr * s
        if any(v for v in acc.values()):
            bad += 1
    return [Check("frt.coproduct.compatible", "Delta(T) = T (x) T maps relations into the ideal", bad == 0,
                  residual=str(bad) if bad else "0", detail={"relations": rs.dimension})]


# -- block inverse --------------------------------------------------------

def _rewrite_rules():
    T = [[INDEX[x] for x in row] for row in BLOCK]
    X = [[INDEX["Ti11"], INDEX["Ti12"]], [INDEX["Ti21"], INDEX["Ti22"]]]
    w, g = INDEX["w"], INDEX["g"]
    psi = [INDEX[x] for x in PSI]
    omega = [INDEX[x] for x in OMEGA]
    rules: dict[tuple[int, int], dict[Word, int]] = {}
    for i, k in itertools.product(range(2), repeat=2):
        # X T = I and T X = I, solved for the j = 2 term
        rules[(X[i][1], T[1][k])] = {(): 1 if i == k else 0, (X[i][0], T[0][k]): -1}
        rules[(T[i][1], X[1][k])] = {(): 1 if i == k else 0, (T[i][0], X[0][k]): -1}
    theta = {(omega[j], X[j][k], psi[k]): 1 for j in range(2) for k in range(2)}
    # w (g - theta') = 1 and (g - theta') w = 1
    rules[(w, g)] = {(): 1, **{(w,) + t: 1 for t in theta}}
    rules[(g, w)] = {(): 1, **{t + (w,): 1 for t in theta}}
    return {k: {ww: c for ww, c in v.items() if c} for k, v in rules.items()}


def rewrite(x: FreePoly, rules=None) -> FreePoly:
    rules = rules or _rewrite_rules()
    todo = dict(x.terms)
    done: dict[Word, XiScalar] = {}
    while todo:
        w, c = todo.popitem()
        hit = next((i for i in range(len(w) - 1) if (w[i], w[i + 1]) in rules), None)
        if hit is None:
            done[w] = done.get(w, ZERO) + c
            continue
        for rep, s in rules[(w[hit], w[hit + 1])].items():
            nw = w[:hit] + rep + w[hit + 2:]
            todo[nw] = todo.get(nw, ZERO) + c * s
            if not todo[nw]:
                del todo[nw]
    return FreePoly(done)


def block_inverse_product(odd: bool = True):
    """The three-factor block inverse times T, as a 3x3 matrix of free polynomials."""
    zero, one = FreePoly({}), FreePoly({(): 1})
    X = [[gen("Ti11"), gen("Ti12")], [gen("Ti21"), gen("Ti22")]]
    psi = [gen(x) if odd else zero for x in PSI]
    omega = [gen(x) if odd else zero for x in OMEGA]
    w, g = gen("w"), gen("g")
    T = [[gen(x) for x in row] for row in BLOCK]
    Xpsi = [sum((X[i][j] * psi[j] for j in range(2)), zero) for i in range(2)]
    omX = [sum((omega[j] * X[j][k] for j in range(2)), zero) for k in range(2)]
    U1 = [[one, zero, -Xpsi[0]], [zero, one, -Xpsi[1]], [zero, zero, one]]
    U2 = [[X[0][0], X[0][1], zero], [X[1][0], X[1][1], zero], [zero, zero, w]]
    U3 = [[one, zero, zero], [zero, one, zero], [-omX[0], -omX[1], one]]
    Tb = [[T[0][0], T[0][1], psi[0]], [T[1][0], T[1][1], psi[1]], [omega[0], omega[1], g]]
    return mat_mul(mat_mul(mat_mul(U1, U2), U3), Tb), mat_mul(mat_mul(U1, U2), U3)


def verify_schur_inverse() -> list[Check]:
    prod, inv = block_inverse_product()
    red = [[rewrite(x) for x in row] for row in prod]
    eye = [[FreePoly({(): 1}) if i == j else FreePoly({}) for j in range(3)] for i in range(3)]
    top = all((red[i][j] - eye[i][j]).is_zero() for i in range(2) for j in range(2))
    full = all((red[i][j] - eye[i][j]).is_zero() for i in range(3) for j in range(3))
    corner = (red[2][2] - eye[2][2]).is_zero()
    _, inv0 = block_inverse_product(odd=False)
    X = [[gen("Ti11"), gen("Ti12")], [gen("Ti21"), gen("Ti22")]]
    diag = all((inv0[i][j] - X[i][j]).is_zero() for i in range(2) for j in range(2))
    diag &= all(inv0[i][2].is_zero() and inv0[2][i].is_zero() for i in range(2)) and (inv0[2][2] - gen("w")).is_zero()
    return [
        Check("frt.inverse.product", "block inverse times T = I_3 from T Tinv = I and w (g - theta') = 1", full,
              residual="0" if full else "; ".join(red[i][j].render() for i in range(3) for j in range(3))),
        Check("frt.inverse.top_left", "top-left block = I_2", top),
        Check("frt.inverse.corner", "(3,3) entry = w (g - theta') = 1", corner),
        Check("frt.inverse.decoupled", "psi = omega = 0 gives diag(Tinv, w)", diag),
    ]


# -- reduction to the dual Borel ------------------------------------------

def reduction_images(M: int = 8) -> dict[str, "object"]:
    from . import dual

    a = dual.exp_nu(1, M)
    return {
        "a": a,
        "b": dual.zero(M),
        "c": (dual.x(M) * a).scale(XI * 2),
        "d": dual.exp_nu(-1, M),
        "g": dual.one(M),
        "alpha": dual.zero(M),
        "beta": dual.zero(M),
        "gamma": (dual.eta(M) * a).scale(Fraction(1, 2)),
        "delta": dual.eta(M).scale(Fraction(1, 2)),
    }


def apply_reduction(p: FreePoly, images) -> "object":
    from . import dual

    M = next(iter(images.values())).M
    out = dual.zero(M)
    for w, c in p.terms.items():
        term = dual.one(M)
        for i in w:
            term = term * images[ALPHABET[i]]
        out = out + term.scale(c)
    return out


def verify_reduction(rs: RelationSet | None = None, M: int = 8) -> list[Check]:
    from . import dual
    from .tensor import TensorElement

    rs = rs or relation_set()
    images = reduction_images(M)
    bad = [p for p in rs.raw if not apply_reduction(p, images).is_zero()]
    checks = [Check("frt.reduction.relations", "every RTT relation maps to 0 in the dual Borel algebra", not bad,
                    residual="0" if not bad else apply_reduction(bad[0], images).render(),
                    detail={"relations": len(rs.raw), "nu_truncation": M})]
    # coalgebra map: Delta(image T_ij) = sum_k image(T_ik) (x) image(T_kj)
    T = t_letter()
    bad_co = []
    for i, j in itertools.product(range(3), repeat=2):
        lhs = dual.coproduct(images[ALPHABET[T[i][j]]])
        rhs = None
        for k in range(3):
            t = dual.tensor2(images[ALPHABET[T[i][k]]], images[ALPHABET[T[k][j]]])
            rhs = t if rhs is None else rhs + t
        # compare below the nu-truncation edge
        if not dual.nu_degree_filter(lhs - rhs, M - 2).is_zero():
            bad_co.append(ALPHABET[T[i][j]])
    checks.append(Check("frt.reduction.coproduct", "reduction intertwines Delta(T) = T (x) T with the dual coproduct",
                        not bad_co, residual=", ".join(bad_co) or "0"))
    eps_ok = all(dual.counit(images[ALPHABET[T[i][j]]]) == (1 if i == j else 0) for i in range(3) for j in range(3))
    checks.append(Check("frt.reduction.counit", "reduction intertwines eps(T) = I_3", eps_ok))
    return checks


def verify_frt(max_degree: int = 4, M: int = 8) -> list[Check]:
    rs = relation_set(max_degree=max_degree)
    checks = verify_relation_set(rs)
    checks += verify_block_relations(rs)
    adj_checks, adj = verify_adjugate(rs)
    checks += adj_checks
    checks += verify_central(rs, adj)
    checks += verify_ordering_independence(rs)
    checks += verify_coproduct_compatibility(rs)
    checks += verify_schur_inverse()
    checks += verify_reduction(rs, M)
    return checks
