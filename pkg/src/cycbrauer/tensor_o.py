"""The tensor module M^p(λ_{I,c}) ⊗ V^{⊗r}, exactly and weight by weight.

Vectors are sparse maps ``{(mono, k): coefficient}`` where ``mono`` is a
PBW monomial in the root vectors of 𝔲⁻ (a tuple of basis pairs sorted in
decreasing order) applied to the highest weight vector m, and ``k`` is an
index sequence for v_{k_1} ⊗ ... ⊗ v_{k_s}.

Each weight space of the module is finite dimensional and the Brauer
generators preserve weights, so every operator is computed exactly on a
finite basis.  The degree bound ``D`` is a guard: any monomial whose degree
would exceed it raises :class:`TruncationError`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

from . import combinat as cb
from . import weights as wt
from .brauer import BrauerAlgebra, admissible_omega, brauer_relations
from .combinat import Multipartition, Permutation
from .hecke import n_element, perm_element
from .linalg import Echelon, QQ, as_fraction, rank
from .rewriting import Element
from .weights import RootDatum, Weight

Pair = tuple  # (i, j) naming f_{i,j}
Mono = tuple  # decreasing tuple of pairs
Key = tuple   # (mono, k)


class TruncationError(ArithmeticError):
    """A monomial degree would exceed the truncation bound."""


def _sgn(i: int) -> int:
    return (i > 0) - (i < 0)


def _add_into(out: dict, key, c) -> None:
    v = out.get(key, 0) + c
    if v:
        out[key] = v
    else:
        out.pop(key, None)


# ---------------------------------------------------------------- Lie algebra

class LieBasis:
    """f_{i,j} = e_{i,j} − θ_{i,j} e_{−j,−i} on the index set −n..n.

    f_{i,j} and f_{−j,−i} are proportional; the representative kept is the
    one whose first index has smaller absolute value (positive on ties).
    """

    def __init__(self, datum: RootDatum):
        self.datum = datum
        n = datum.n
        self.n = n
        self.symplectic = datum.phi == "C"
        self.indices = tuple(list(range(-n, 0)) + ([0] if datum.phi == "B" else []) + list(range(1, n + 1)))
        self.pairs: list[Pair] = []
        for i in self.indices:
            for j in self.indices:
                q = self.canonical(i, j)
                if q is not None and q[0] == (i, j):
                    self.pairs.append((i, j))
        self.pairs.sort()
        self._weights = {q: self._pair_weight(q) for q in self.pairs}
        self.u_minus = sorted(q for q in self.pairs if self._is_u_minus(q))
        self.u_minus_set = frozenset(self.u_minus)
        self.positive = [q for q in self.pairs if self._is_positive(self._weights[q])]
        self.cartan = [(i, i) for i in range(1, n + 1)]
        self._brackets: dict = {}

    def theta(self, i: int, j: int) -> int:
        return _sgn(i) * _sgn(j) if self.symplectic else 1

    def canonical(self, i: int, j: int):
        """(q, s) with f_{i,j} = s f_q, or None when f_{i,j} = 0."""
        if i == -j and not self.symplectic:
            return None
        partner = (-j, -i)
        key = lambda p: (abs(p[0]), p[0] < 0)
        if (i, j) == partner or key((i, j)) <= key(partner):
            return (i, j), 1
        return partner, -self.theta(i, j)

    def matrix(self, i: int, j: int) -> dict:
        out: dict = {}
        _add_into(out, (i, j), 1)
        _add_into(out, (-j, -i), -self.theta(i, j))
        return out

    def decompose(self, mat: dict) -> dict:
        out = {}
        for (i, j), c in mat.items():
            got = self.canonical(i, j)
            if got is None or got[0] != (i, j):
                continue
            scale = 2 if (i == -j) else 1
            out[(i, j)] = Fraction(c) / scale
        return {q: c for q, c in out.items() if c}

    def bracket(self, p: Pair, q: Pair) -> dict:
        key = (p, q)
        if key not in self._brackets:
            A, B = self.matrix(*p), self.matrix(*q)
            comm: dict = {}
            for (a, b), x in A.items():
                for (c, d), y in B.items():
                    if b == c:
                        _add_into(comm, (a, d), x * y)
                    if d == a:
                        _add_into(comm, (c, b), -x * y)
            self._brackets[key] = self.decompose(comm)
        return self._brackets[key]

    def _pair_weight(self, q: Pair) -> Weight:
        v = [Fraction(0)] * self.n
        for idx, s in ((q[0], 1), (q[1], -1)):
            if idx:
                v[abs(idx) - 1] += s * _sgn(idx)
        return tuple(v)

    def weight(self, q: Pair) -> Weight:
        return self._weights[q]

    @staticmethod
    def _is_positive(w: Weight) -> bool:
        for x in w:
            if x:
                return x > 0
        return False

    def _is_u_minus(self, q: Pair) -> bool:
        w = self._weights[q]
        if not any(w) or self._is_positive(w):
            return False
        return not self.datum.in_levi(wt.scale(-1, w))

    def act_on_index(self, i: int, j: int, c: int) -> list[tuple[int, int]]:
        """f_{i,j} v_c as [(index, coefficient)]."""
        out = []
        if c == j:
            out.append((i, 1))
        if c == -i:
            out.append((-j, -self.theta(i, j)))
        if len(out) == 2 and out[0][0] == out[1][0]:
            s = out[0][1] + out[1][1]
            return [(out[0][0], s)] if s else []
        return out


def bracket_is_lie(L: LieBasis) -> bool:
    """Antisymmetry and the Jacobi identity on all basis triples."""
    P = L.pairs

    def br(x: dict, y: dict) -> dict:
        out: dict = {}
        for p, a in x.items():
            for q, b in y.items():
                for r_, c in L.bracket(p, q).items():
                    _add_into(out, r_, a * b * c)
        return out

    for p in P:
        for q in P:
            s = dict(L.bracket(p, q))
            for r_, c in L.bracket(q, p).items():
                _add_into(s, r_, c)
            if s:
                return False
    for p in P:
        for q in P:
            for r_ in P:
                tot: dict = {}
                for x, y, z in ((p, q, r_), (q, r_, p), (r_, p, q)):
                    for key, c in br({x: 1}, br({y: 1}, {z: 1})).items():
                        _add_into(tot, key, c)
                if tot:
                    return False
    return True


# ---------------------------------------------------------------- the module

def _order_key(q: Pair) -> tuple:
    return q


class TensorModule:
    """M^p(λ_{I,c}) ⊗ V^{⊗r} for a datum with cut points and level."""

    def __init__(self, datum: RootDatum, c: Sequence, r: int, degree_bound: int | None = None,
                 omega: Sequence | None = None):
        if datum.i is None:
            raise ValueError("the tensor module needs a datum built from cut points")
        self.datum = datum
        self.c = tuple(as_fraction(x) for x in c)
        self.r = r
        self.lie = LieBasis(datum)
        self.lam = wt.lambda_Ic(datum, self.c)
        self.u = wt.compute_u_params(datum, self.c)
        a = datum.a
        self.omega = tuple(omega) if omega is not None else tuple(admissible_omega(self.u, a + 2))
        self.D = r * (a - 1) + r if degree_bound is None else degree_bound
        self.eps = datum.epsilon
        self.N = datum.N
        self._lmul_cache: dict = {}
        self._m_cache: dict = {}
        self._letter_cache: dict = {}
        self._algebra: BrauerAlgebra | None = None
        self._coords = _root_coordinate_map(datum)
        self._gen_coords = {q: self._coords(wt.scale(-1, self.lie.weight(q))) for q in self.lie.u_minus}

    # -- bookkeeping

    @property
    def algebra(self) -> BrauerAlgebra:
        if self._algebra is None:
            self._algebra = BrauerAlgebra(self.datum.a, self.r, self.u, self.omega)
        return self._algebra

    def index_weight(self, k: Sequence[int]) -> Weight:
        v = [Fraction(0)] * self.datum.n
        for idx in k:
            if idx:
                v[abs(idx) - 1] += _sgn(idx)
        return tuple(v)

    def mono_weight(self, mono: Mono) -> Weight:
        out = wt.zero(self.datum.n)
        for q in mono:
            out = wt.add(out, self.lie.weight(q))
        return out

    def key_weight(self, key: Key) -> Weight:
        mono, k = key
        return wt.add(wt.add(self.lam, self.mono_weight(mono)), self.index_weight(k))

    def index_degree(self, idx: int) -> Fraction:
        """deg v_j = t − 1 and deg v_{−j} = a − t for j in block t; deg v_0 = (a − 1)/2."""
        a = self.datum.a
        if idx == 0:
            return Fraction(a - 1, 2)
        p = (0,) + self.datum.p
        t = next(s for s in range(1, len(p)) if p[s - 1] < abs(idx) <= p[s])
        return Fraction(t - 1) if idx > 0 else Fraction(a - t)

    def filtration_degree(self, key: Key) -> Fraction:
        mono, k = key
        return len(mono) + sum((self.index_degree(x) for x in k), Fraction(0))

    def _check(self, mono: Mono) -> Mono:
        if len(mono) > self.D:
            raise TruncationError(f"degree {len(mono)} exceeds the bound {self.D}")
        return mono

    # -- U(𝔤) on M

    def _lmul(self, b: Pair, mono: Mono) -> dict:
        """b · mono in U(𝔲⁻), straightened."""
        key = (b, mono)
        got = self._lmul_cache.get(key)
        if got is not None:
            return got
        if not mono or _order_key(b) >= _order_key(mono[0]):
            out = {self._check((b,) + mono): Fraction(1)}
        else:
            b1, rest = mono[0], mono[1:]
            out = {}
            for m2, c in self._lmul(b, rest).items():
                for m3, c2 in self._lmul(b1, m2).items():
                    _add_into(out, m3, c * c2)
            for q, c in self.lie.bracket(b, b1).items():
                if q not in self.lie.u_minus_set:
                    raise ArithmeticError(f"𝔲⁻ is not closed: [{b}, {b1}] has {q}")
                for m2, c2 in self._lmul(q, rest).items():
                    _add_into(out, m2, c * c2)
        self._lmul_cache[key] = out
        return out

    def apply_m(self, q: Pair, mono: Mono) -> dict:
        """f_q · (mono · m) as {mono: coefficient}."""
        key = (q, mono)
        got = self._m_cache.get(key)
        if got is not None:
            return got
        if q in self.lie.u_minus_set:
            out = self._lmul(q, mono)
        elif q[0] == q[1]:
            h = wt.add(self.lam, self.mono_weight(mono))[q[0] - 1]
            out = {mono: h} if h else {}
        elif not mono:
            out = {}
        else:
            b1, rest = mono[0], mono[1:]
            out = {}
            for m2, c in self.apply_m(q, rest).items():
                for m3, c2 in self._lmul(b1, m2).items():
                    _add_into(out, m3, c * c2)
            for q2, c in self.lie.bracket(q, b1).items():
                for m2, c2 in self.apply_m(q2, rest).items():
                    _add_into(out, m2, c * c2)
        self._m_cache[key] = out
        return out

    def _act_raw(self, i: int, j: int, key: Key, upto: int) -> dict:
        """f_{i,j} on m and the first ``upto`` tensor factors."""
        mono, k = key
        out: dict = {}
        got = self.lie.canonical(i, j)
        if got is not None:
            q, s = got
            for m2, c in self.apply_m(q, mono).items():
                _add_into(out, (m2, k), s * c)
        for pos in range(upto):
            for idx, c in self.lie.act_on_index(i, j, k[pos]):
                _add_into(out, (mono, k[:pos] + (idx,) + k[pos + 1:]), c)
        return out

    def act_lie(self, q: Pair, vec: dict) -> dict:
        out: dict = {}
        for key, c in vec.items():
            for key2, c2 in self._act_raw(q[0], q[1], key, len(key[1])).items():
                _add_into(out, key2, c * c2)
        return out

    # -- Brauer generators on basis vectors

    def _x_basis(self, j: int, key: Key) -> dict:
        mono, k = key
        cj = k[j - 1]
        half = Fraction(1, 2)
        omega: dict = {}
        L = self.lie
        for b in L.indices:
            # f_{c,b} ⊗ f_{b,c}: f_{b,c} v_c ∋ v_b
            for idx, s2 in L.act_on_index(b, cj, cj):
                for key2, c2 in self._act_raw(cj, b, key, j - 1).items():
                    m2, k2 = key2
                    _add_into(omega, (m2, k2[:j - 1] + (idx,) + k2[j:]), s2 * c2)
        for a_ in L.indices:
            b = -cj
            if a_ == cj:
                continue  # already counted in the loop above
            for idx, s2 in L.act_on_index(b, a_, cj):
                for key2, c2 in self._act_raw(a_, b, key, j - 1).items():
                    m2, k2 = key2
                    _add_into(omega, (m2, k2[:j - 1] + (idx,) + k2[j:]), s2 * c2)
        out: dict = {}
        for key2, c in omega.items():
            _add_into(out, key2, self.eps * half * c)
        _add_into(out, key, self.eps * half * (self.N - self.eps))
        return out

    def _s_basis(self, i: int, key: Key) -> dict:
        mono, k = key
        k2 = k[:i - 1] + (k[i], k[i - 1]) + k[i + 1:]
        return {(mono, k2): Fraction(self.eps)}

    def form(self, x: int, y: int) -> int:
        """(v_x, v_y)."""
        if x != -y:
            return 0
        return 1 if x >= 0 else self.eps

    def dual_index(self, t: int) -> tuple[int, int]:
        """v_t* = s v_{t'} as (t', s)."""
        return -t, (_sgn(t) if self.datum.phi == "C" else 1)

    def _e_basis(self, i: int, key: Key) -> dict:
        mono, k = key
        g = self.form(k[i - 1], k[i])
        if not g:
            return {}
        out = {}
        for t in self.lie.indices:
            td, s = self.dual_index(t)
            _add_into(out, (mono, k[:i - 1] + (t, td) + k[i + 1:]), self.eps * g * s)
        return out

    def letter_basis(self, letter: str, key: Key) -> dict:
        ck = (letter, key)
        got = self._letter_cache.get(ck)
        if got is None:
            kind, pos = letter[0], int(letter[1:])
            s = len(key[1])
            if kind == "X":
                if not 1 <= pos <= s:
                    raise IndexError(f"X{pos} needs 1 <= j <= {s}")
                got = self._x_basis(pos, key)
            else:
                if not 1 <= pos < s:
                    raise IndexError(f"{kind}{pos} needs 1 <= i < {s}")
                got = self._s_basis(pos, key) if kind == "S" else self._e_basis(pos, key)
            self._letter_cache[ck] = got
        return got

    def act_letter(self, letter: str, vec: dict) -> dict:
        out: dict = {}
        for key, c in vec.items():
            for key2, c2 in self.letter_basis(letter, key).items():
                _add_into(out, key2, c * c2)
        return out

    def act_X(self, j: int, vec: dict) -> dict:
        return self.act_letter(f"X{j}", vec)

    def act_S(self, i: int, vec: dict) -> dict:
        return self.act_letter(f"S{i}", vec)

    def act_E(self, i: int, vec: dict) -> dict:
        return self.act_letter(f"E{i}", vec)

    def act_element(self, vec: dict, h: Element) -> dict:
        """The right action v · h, letters applied left to right."""
        names = h.algebra.letters
        out: dict = {}
        for w, c in h.terms.items():
            cur = vec
            for g in w:
                cur = self.act_letter(names[g], cur)
                if not cur:
                    break
            for key, x in cur.items():
                _add_into(out, key, c * x)
        return out

    # -- weight spaces

    def monomials_of_weight(self, target: Weight) -> list[Mono]:
        """All PBW monomials whose weight is ``target`` (a sum of 𝔲⁻ weights)."""
        need = self._coords(wt.scale(-1, target))
        if need is None or any(x < 0 or x.denominator != 1 for x in need):
            return []
        gens = sorted(self.lie.u_minus, key=_order_key, reverse=True)
        out = []

        def rec(idx: int, rem: list, acc: list):
            if not any(rem):
                out.append(tuple(acc))
                return
            if idx == len(gens):
                return
            g = gens[idx]
            gc = self._gen_coords[g]
            e = 0
            cur = rem
            while True:
                rec(idx + 1, cur, acc + [g] * e)
                nxt = [x - y for x, y in zip(cur, gc)]
                if any(x < 0 for x in nxt):
                    break
                cur, e = nxt, e + 1

        rec(0, list(need), [])
        return out

    def weight_space(self, mu: Weight, s: int | None = None) -> list[Key]:
        s = self.r if s is None else s
        base = wt.sub(mu, self.lam)
        out = []
        for k in product(self.lie.indices, repeat=s):
            for mono in self.monomials_of_weight(wt.sub(base, self.index_weight(k))):
                out.append((self._check(mono), k))
        out.sort()
        return out

    def hat_weights(self) -> list[tuple]:
        return [((f, lam), wt.hat_lambda(self.datum, self.c, f, lam))
                for f, lam in cb.cell_labels(self.datum.a, self.r)]

    # -- matrices

    def letter_matrix(self, letter: str, basis: list[Key]) -> list[list[Fraction]]:
        pos = {key: i for i, key in enumerate(basis)}
        M = []
        for key in basis:
            row = [Fraction(0)] * len(basis)
            for key2, c in self.letter_basis(letter, key).items():
                if key2 not in pos:
                    raise ArithmeticError("operator left the weight space")
                row[pos[key2]] += c
            M.append(row)
        return M

    def word_matrices(self, basis: list[Key]) -> dict:
        names = self.algebra.letters if self.r >= 1 else []
        return {g: self.letter_matrix(name, basis) for g, name in enumerate(names)}

    def relation_audit(self, weights: Iterable[Weight] | None = None,
                       literal_15_16: bool = False) -> list[tuple[str, bool]]:
        """Each defining relation, checked as an operator on the given weight spaces."""
        if weights is None:
            weights = [mu for _, mu in self.hat_weights()]
        rels = brauer_relations(self.datum.a, self.r, self.u, self.omega, literal_15_16)
        spaces = [self.weight_space(mu) for mu in weights]
        mats = [self.word_matrices(b) for b in spaces]
        out = []
        for name, poly in rels:
            ok = True
            for basis, M in zip(spaces, mats):
                if basis and any(any(x for x in row) for row in _poly_matrix(poly, M, len(basis))):
                    ok = False
                    break
            out.append((name, ok))
        return out

    def endomorphism_rank(self, weights: Iterable[Weight] | None = None) -> int:
        """Rank of the images of the normal-word basis on the given weight spaces."""
        if weights is None:
            weights = [mu for _, mu in self.hat_weights()]
        B = self.algebra
        spaces = [self.weight_space(mu) for mu in weights]
        mats = [self.word_matrices(b) for b in spaces]
        rows = []
        for w in B.basis:
            flat = []
            for basis, M in zip(spaces, mats):
                P = _poly_matrix({w: Fraction(1)}, M, len(basis))
                flat.extend(x for row in P for x in row)
            rows.append(flat)
        return rank(rows)


def _poly_matrix(poly: dict, mats: dict, dim: int) -> list[list[Fraction]]:
    out = [[Fraction(0)] * dim for _ in range(dim)]
    for w, c in poly.items():
        M = [[Fraction(int(i == j)) for j in range(dim)] for i in range(dim)]
        for g in w:
            M = _mul(M, mats[g])
        for i in range(dim):
            for j in range(dim):
                if M[i][j]:
                    out[i][j] += c * M[i][j]
    return out


def _mul(A, B):
    n, m = len(A), len(B[0]) if B else 0
    out = [[Fraction(0)] * m for _ in range(n)]
    for i, row in enumerate(A):
        o = out[i]
        for k, a in enumerate(row):
            if a:
                for j, b in enumerate(B[k]):
                    if b:
                        o[j] += a * b
    return out


def _root_coordinate_map(datum: RootDatum):
    """x ↦ coordinates of x in the simple roots (None if x is not in the root lattice span)."""
    n = datum.n
    S = datum.simple_roots()
    cols = [[S[j][i] for j in range(n)] for i in range(n)]
    from .linalg import solve
    inv = []
    for e in range(n):
        inv.append(solve(cols, [Fraction(int(i == e)) for i in range(n)]))
    # inv[e] = coordinates of ε_e
    cache: dict = {}

    def coords(x: Weight):
        got = cache.get(x)
        if got is None:
            got = [sum((x[e] * inv[e][j] for e in range(n)), Fraction(0)) for j in range(n)]
            cache[x] = got
        return got

    return coords


def cyclotomic_annihilates(M: TensorModule, weights: Iterable[Weight]) -> bool:
    """(X_1 − u_1)...(X_1 − u_a) kills the given weight spaces of M ⊗ V."""
    for mu in weights:
        basis = M.weight_space(mu, 1)
        for key in basis:
            vec = {key: Fraction(1)}
            for uj in M.u:
                x = M.act_X(1, vec)
                for k2, c in vec.items():
                    _add_into(x, k2, -uj * c)
                vec = x
            if vec:
                return False
    return True


# ---------------------------------------------------------------- vector data

@dataclass(frozen=True)
class VectorData:
    i_lambda: tuple
    l: tuple
    a: tuple
    j: tuple


def _apply_perm(seq: Sequence, w: Permutation) -> tuple:
    """(i w)_{w(c)} = i_c."""
    out = [None] * len(seq)
    for c, x in enumerate(seq, start=1):
        out[w(c) - 1] = x
    return tuple(out)


def build_vector_data(f: int, lam: Multipartition, datum: RootDatum) -> VectorData:
    wt._require_thm_datum(datum)
    k = datum.k
    delta = int(datum.i == 1)
    p = (0,) + datum.p
    i_lam = tuple(wt.tensor_indices(datum, lam))
    m = cb.size(lam)
    l = _apply_perm(i_lam, cb.w_lambda(lam)) if m else ()
    bc = cb.profile(cb.conjugate(lam))
    a_vec = tuple(sum(1 for i in range(1, datum.a) if bc[i] >= c) for c in range(1, m + 1))
    b = cb.profile(lam)
    j = []
    for lc, ac in zip(l, a_vec):
        if ac < k:
            j.append(lc - p[ac] + b[ac])
        else:
            j.append(1 + lc + p[2 * k - ac - 1 + delta] + b[ac])
    return VectorData(i_lam, l, a_vec, tuple(j))


def _xi_rs(xi: Sequence[int], r: int, f: int, s: int) -> int:
    return xi[r - 2 * f + 2 * s - 2]


def j_xi(f: int, xi: Sequence[int], r: int, datum: RootDatum) -> tuple:
    k = datum.k
    d2 = int(datum.i == 2)
    p = (0,) + datum.p
    out = []
    for s in range(1, f + 1):
        x = _xi_rs(xi, r, f, s)
        if x <= k - 1:
            out.append(-p[x] - r + 2 * f - s)
        else:
            out.append(r - f + s + p[2 * k - 1 - d2 - x])
        out.append(r - 2 * f + s)
    return tuple(out)


def _q(datum: RootDatum, t: int) -> int:
    p = (0,) + datum.p
    return p[t] - p[t - 1]


def y_lc(datum: RootDatum, lc: int, ac: int, jc: int) -> list[Pair]:
    """The word y_{l_c, a_c, c} as a list of pairs, left to right."""
    k = datum.k
    delta = int(datum.i == 1)
    p = (0,) + datum.p
    q = lambda t: _q(datum, t)
    if ac == 0:
        return []
    if ac < k:
        partial = lambda s: lc - sum(q(ac - t + 1) for t in range(1, s + 1))
        word = [(partial(ac - 1), jc)]
        for s in range(ac - 1, 0, -1):
            word.append((partial(s - 1), partial(s)))
        return word
    z = 1 + lc + p[2 * k - (ac + 1) + delta]
    base = 2 * k - ac + delta
    S = lambda t: -lc + sum(q(base + s) for s in range(0, t + 1))
    # rows −j_c, −(z+p_1), ..., −(z+p_{k−1}) form a chain ending in A_c's column
    rows = [-jc] + [-(z + p[s]) for s in range(1, k)]
    cols = rows[1:] + [S(ac - k - 1)]
    word = list(zip(rows, cols))
    for t in range(ac - k - 1, -1, -1):
        word.append((S(t), S(t - 1)))
    return word


def y_xi(datum: RootDatum, f: int, xi: Sequence[int], r: int, s: int) -> list[Pair]:
    k = datum.k
    d2 = int(datum.i == 2)
    p = (0,) + datum.p
    x = _xi_rs(xi, r, f, s)
    z = r - f + s
    if x == 0:
        return []
    if x <= k - 1:
        return [(p[t] + z - f, p[t - 1] + z - f) for t in range(x, 0, -1)]
    A = [(p[k - t - d2] + z, p[k - t - 1 - d2] + z) for t in range(x - k, 0, -1)]
    mid = [(-p[k - 1] - z + f, p[k - 1 - d2] + z)]
    B = [(p[t] + z - f, p[t - 1] + z - f) for t in range(k - 1, 0, -1)]
    return A + mid + B


@dataclass
class YOperators:
    per_c: list
    per_s: list

    @property
    def word(self) -> list[Pair]:
        out = []
        for w in self.per_c + self.per_s:
            out.extend(w)
        return out


def build_y_operators(f: int, lam: Multipartition, xi: Sequence[int], datum: RootDatum) -> YOperators:
    r = cb.size(lam) + 2 * f
    if len(xi) != r:
        raise ValueError(f"ξ must have length {r}")
    data = build_vector_data(f, lam, datum)
    per_c = [y_lc(datum, lc, ac, jc) for lc, ac, jc in zip(data.l, data.a, data.j)]
    per_s = [y_xi(datum, f, xi, r, s) for s in range(1, f + 1)]
    return YOperators(per_c, per_s)


def straighten_word(word: Sequence[Pair], L: LieBasis) -> tuple[Mono, int]:
    """ỹ: the factors rewritten in ℬ and sorted, with the accumulated sign."""
    sign = 1
    factors = []
    for i, j in word:
        got = L.canonical(i, j)
        if got is None or got[0] not in L.u_minus_set:
            raise ValueError(f"f_{{{i},{j}}} is not a 𝔲⁻ root vector")
        factors.append(got[0])
        sign *= got[1]
    return tuple(sorted(factors, key=_order_key, reverse=True)), sign


# ---------------------------------------------------------------- singular vectors

def v_lambda(datum: RootDatum, f: int, lam: Multipartition) -> dict:
    k = tuple(wt.tensor_indices(datum, lam)) + (1, -1) * f
    return {((), k): Fraction(1)}


def singular_vector(M: TensorModule, f: int, lam: Multipartition, t, xi, d) -> dict:
    """v_λ E^f w_λ n_{λ'} d(t) X^ξ d."""
    B = M.algebra
    r = M.r
    m = r - 2 * f
    conj = cb.conjugate(lam)
    vec = v_lambda(M.datum, f, lam)
    steps = [B.E_power(f), perm_element(B, cb.w_lambda(lam).extend(r) if m else Permutation.identity(r)),
             n_element(B, conj, M.u), perm_element(B, cb.d_of(t).extend(r) if m else Permutation.identity(r)),
             B.X_power(xi), perm_element(B, d)]
    for h in steps:
        vec = M.act_element(vec, h)
    return vec


def leading_key(M: TensorModule, f: int, lam: Multipartition, t, xi, d) -> tuple[Key, int]:
    """ỹ_{λ,ξ} m ⊗ v_{j^{λ,ξ} d(t) d} and the sign picked up by ỹ."""
    data = build_vector_data(f, lam, M.datum)
    ys = build_y_operators(f, lam, xi, M.datum)
    mono, sign = straighten_word(ys.word, M.lie)
    jj = data.j + j_xi(f, xi, M.r, M.datum)
    r = M.r
    dt = cb.d_of(t).extend(r) if r - 2 * f else Permutation.identity(r)
    idx = _apply_perm(_apply_perm(jj, dt), d)
    return (mono, idx), sign


@dataclass
class SingularReport:
    f: int
    lam: Multipartition
    weight: Weight
    expected: int
    independent: int
    annihilated: bool
    singular_dimension: int
    witnesses: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (self.annihilated and self.independent == self.expected
                and self.singular_dimension == self.expected)


def _ideal_image(M: TensorModule, mu: Weight, f1: int, cache: dict) -> tuple[list[Key], Echelon]:
    if mu in cache:
        return cache[mu]
    basis = M.weight_space(mu)
    pos = {key: i for i, key in enumerate(basis)}
    ech = Echelon()
    B = M.algebra
    if 2 * f1 <= M.r:
        gens = [B.from_vector(v) for v in B.ideal(f1).basis()]
        for key in basis:
            for h in gens:
                img = M.act_element({key: Fraction(1)}, h)
                ech.add({pos[k2]: c for k2, c in img.items()})
    cache[mu] = (basis, ech)
    return cache[mu]


def verify_singular(M: TensorModule, f: int, lam: Multipartition) -> SingularReport:
    """Check the vectors v_{t,ξ,d} of weight λ̂ against M / M⟨E^{f+1}⟩."""
    datum = M.datum
    mu = wt.hat_lambda(datum, M.c, f, lam)
    conj = cb.conjugate(lam)
    deltas = cb.enumerate_delta(f, conj, M.r, datum.a)
    cache: dict = {}
    basis, J = _ideal_image(M, mu, f + 1, cache)
    pos = {key: i for i, key in enumerate(basis)}
    vecs = [singular_vector(M, f, lam, D.t, D.xi, D.d) for D in deltas]
    witnesses = []
    annihilated = True
    for D, v in zip(deltas, vecs):
        if any(key not in pos for key in v):
            annihilated = False
            witnesses.append(("weight", D))
            continue
        for q in M.lie.positive:
            img = M.act_lie(q, v)
            if not img:
                continue
            target = wt.add(mu, M.lie.weight(q))
            tb, TJ = _ideal_image(M, target, f + 1, cache)
            tpos = {key: i for i, key in enumerate(tb)}
            if not TJ.contains({tpos[k2]: c for k2, c in img.items()}):
                annihilated = False
                witnesses.append(("raising", D, q))
                break
    quot = Echelon(J.basis())
    independent = 0
    for v in vecs:
        if quot.add({pos[k2]: c for k2, c in v.items() if k2 in pos}):
            independent += 1
    return SingularReport(f, lam, mu, len(deltas), independent, annihilated,
                          singular_dimension(M, mu, f + 1, cache), witnesses)


def singular_dimension(M: TensorModule, mu: Weight, f1: int, cache: dict | None = None) -> int:
    """dim of the singular vectors of weight μ in M / M⟨E^{f1}⟩ (simple raising operators)."""
    cache = {} if cache is None else cache
    basis, J = _ideal_image(M, mu, f1, cache)
    n = len(basis)
    simple = [q for q in M.lie.positive if M.lie.weight(q) in set(M.datum.simple_roots())]
    # columns of the stacked map M_μ → ⊕ M_{μ+α}/J
    rows = []
    for key in basis:
        row: dict = {}
        offset = 0
        for q in simple:
            target = wt.add(mu, M.lie.weight(q))
            tb, TJ = _ideal_image(M, target, f1, cache)
            tpos = {k2: i for i, k2 in enumerate(tb)}
            img = M.act_lie(q, {key: Fraction(1)})
            red = TJ.reduce({tpos[k2]: c for k2, c in img.items()})
            for i, c in red.items():
                row[offset + i] = c
            offset += len(tb)
        rows.append(row)
    # kernel of v ↦ Σ v_i row_i, via echelon on rows augmented with identity
    ech = Echelon()
    width = 10 ** 9
    kernel = []
    for i, row in enumerate(rows):
        aug = dict(row)
        aug[width + i] = Fraction(1)
        red = ech.reduce(aug)
        if red and min(red) >= width:
            kernel.append({k - width: c for k, c in red.items()})
        ech.add(aug)
    K = Echelon(kernel)
    for v in J.basis():
        K.add(v)
    return len(K) - len(J)
