"""Degenerate cyclotomic Hecke algebras H_{a,r}(u).

The algebra is presented on letters ``X1..Xr`` and ``S1..S{r-1}`` with X
letters smaller than S letters.  Under that order the normal words are
``X1^α1 ... Xr^αr`` followed by a reduced word of a permutation.  Only
``α_1 < a`` is forced; the other exponents are bounded by the degree order,
not by ``a``.  :meth:`HeckeAlgebra.monomials` decodes an element into those
``(α, w)`` pairs.

The helpers ``perm_element``, ``m_element``, ``n_element`` and
``cellular_entries`` only look up letters by name, so they work unchanged
inside the cyclotomic Brauer algebra.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from . import combinat as cb
from .cellular import CellularBasis, SubmoduleSpan
from .combinat import Multipartition, Permutation
from .linalg import as_fraction, find_isomorphism, rank
from .rewriting import Element, PresentedAlgebra, Poly


def _poly(*terms) -> Poly:
    out: Poly = {}
    for c, w in terms:
        w = tuple(w)
        out[w] = out.get(w, 0) + Fraction(c)
    return {w: c for w, c in out.items() if c}


def cyclotomic_relation(x1: int, u: Sequence) -> Poly:
    """(x1 - u_1)...(x1 - u_a) as a polynomial in the single letter x1."""
    poly: Poly = {(): Fraction(1)}
    for uj in u:
        new: Poly = {}
        for w, c in poly.items():
            new[w + (x1,)] = new.get(w + (x1,), 0) + c
            new[w] = new.get(w, 0) - Fraction(uj) * c
        poly = {w: c for w, c in new.items() if c}
    return poly


def hecke_relations(a: int, r: int, u: Sequence) -> list[Poly]:
    X = lambda j: j - 1
    S = lambda i: r + i - 1
    rels = []
    for i in range(1, r):
        rels.append(_poly((1, [S(i), S(i)]), (-1, [])))
        rels.append(_poly((1, [S(i), X(i)]), (-1, [X(i + 1), S(i)]), (1, [])))
        rels.append(_poly((1, [X(i), S(i)]), (-1, [S(i), X(i + 1)]), (1, [])))
        for j in range(1, r + 1):
            if j not in (i, i + 1):
                rels.append(_poly((1, [S(i), X(j)]), (-1, [X(j), S(i)])))
        for j in range(i + 2, r):
            rels.append(_poly((1, [S(i), S(j)]), (-1, [S(j), S(i)])))
        if i < r - 1:
            rels.append(_poly((1, [S(i), S(i + 1), S(i)]), (-1, [S(i + 1), S(i), S(i + 1)])))
    for i in range(1, r + 1):
        for j in range(i + 1, r + 1):
            rels.append(_poly((1, [X(i), X(j)]), (-1, [X(j), X(i)])))
    rels.append(cyclotomic_relation(X(1), u))
    return rels


def letters(r: int) -> list[str]:
    return [f"X{j}" for j in range(1, r + 1)] + [f"S{i}" for i in range(1, r)]


# ------------------------------------------------- elements in any X/S algebra

def perm_element(alg: PresentedAlgebra, w: Permutation) -> Element:
    return alg.word([f"S{i}" for i in w.reduced_word()])


def pi_c(alg: PresentedAlgebra, c: int, u) -> Element:
    """(X_1 - u)(X_2 - u)...(X_c - u)."""
    out = alg.one()
    for j in range(1, c + 1):
        out = out * (alg.gen(f"X{j}") - Fraction(u))
    return out


def pi_bracket(alg: PresentedAlgebra, lam: Multipartition, u: Sequence, tilde: bool = False) -> Element:
    """π_[λ] = Π π_{b_i}(u_{i+1}); the tilde version uses u_{a-i} instead."""
    a = len(lam)
    b = cb.profile(lam)
    out = alg.one()
    for i in range(1, a):
        ui = u[a - i - 1] if tilde else u[i]
        out = out * pi_c(alg, b[i], ui)
    return out


def young_sum(alg: PresentedAlgebra, lam: Multipartition, signed: bool = False) -> Element:
    out = alg.zero()
    for w in cb.row_stabilizer(lam):
        term = perm_element(alg, w)
        out = out - term if signed and w.sign() < 0 else out + term
    return out


def m_element(alg: PresentedAlgebra, lam: Multipartition, u: Sequence) -> Element:
    return pi_bracket(alg, lam, u) * young_sum(alg, lam)


def n_element(alg: PresentedAlgebra, lam: Multipartition, u: Sequence) -> Element:
    return pi_bracket(alg, lam, u, tilde=True) * young_sum(alg, lam, signed=True)


def cellular_entries(alg: PresentedAlgebra, a: int, m: int, u: Sequence, flavor: str = "m") -> list:
    """(λ, s, t, d(s)^{-1} z_λ d(t)) over all λ ∈ Λ_a^+(m), z = m or n."""
    make = m_element if flavor == "m" else n_element
    out = []
    for lam in cb.multipartitions(a, m):
        z = make(alg, lam, u)
        tabs = cb.standard_tableaux(lam)
        left = {s: perm_element(alg, cb.d_of(s).inverse()) for s in tabs}
        right = {t: perm_element(alg, cb.d_of(t)) for t in tabs}
        for s in tabs:
            zs = left[s] * z
            for t in tabs:
                out.append((lam, s, t, zs * right[t]))
    return out


def cell_order(flavor: str):
    """λ lies above μ when λ ⊵ μ; this holds for both flavors."""
    return lambda lam, mu: cb.dominance_ge(lam, mu)


# ------------------------------------------------------------------ the algebra

class HeckeAlgebra(PresentedAlgebra):
    def __init__(self, a: int, r: int, u: Sequence):
        if a < 1 or r < 1:
            raise ValueError("need a >= 1 and r >= 1")
        if len(u) != a:
            raise ValueError(f"expected {a} parameters, got {len(u)}")
        self.a, self.r = a, r
        self.u = tuple(as_fraction(x) for x in u)
        super().__init__(letters(r), hecke_relations(a, r, self.u))
        self._bases: dict = {}

    def x(self, j: int) -> Element:
        return self.gen(f"X{j}")

    def s(self, i: int) -> Element:
        return self.gen(f"S{i}")

    def generators(self) -> list[Element]:
        return [self.x(j) for j in range(1, self.r + 1)] + [self.s(i) for i in range(1, self.r)]

    def perm(self, w: Permutation) -> Element:
        return perm_element(self, w)

    def monomial(self, alpha: Sequence[int], w: Permutation) -> Element:
        word = []
        for j, e in enumerate(alpha, start=1):
            word.extend([f"X{j}"] * e)
        word.extend(f"S{i}" for i in w.reduced_word())
        return self.word(word)

    def decode(self, word: tuple) -> tuple:
        """A normal word as (α, w)."""
        r = self.r
        alpha = [0] * r
        sword = []
        for x in word:
            if x < r:
                if sword:
                    raise ValueError("X letter after S letter: not a normal word")
                alpha[x] += 1
            else:
                sword.append(x - r + 1)
        return tuple(alpha), Permutation.from_word(sword, r)

    def monomials(self, x: Element) -> dict:
        """{(α, w): coefficient} for an element in normal form."""
        return {self.decode(w): c for w, c in x.terms.items()}

    def tau(self, x: Element) -> Element:
        return self.anti_involution(x)

    def m(self, lam: Multipartition) -> Element:
        return m_element(self, lam, self.u)

    def n(self, lam: Multipartition) -> Element:
        return n_element(self, lam, self.u)

    def cellular_basis(self, flavor: str = "m") -> CellularBasis:
        if flavor not in ("m", "n"):
            raise ValueError("flavor is 'm' or 'n'")
        if flavor not in self._bases:
            entries = cellular_entries(self, self.a, self.r, self.u, flavor)
            self._bases[flavor] = CellularBasis(self, entries, cell_order(flavor))
        return self._bases[flavor]

    def cell_gram(self, lam: Multipartition, flavor: str = "m") -> list[list[Fraction]]:
        return self.cellular_basis(flavor).gram(lam)

    def simple_dimension(self, lam: Multipartition, flavor: str = "m") -> int:
        return rank(self.cell_gram(lam, flavor))

    def cell_action(self, lam: Multipartition, h: Element, flavor: str = "m") -> list[list[Fraction]]:
        return self.cellular_basis(flavor).action_matrix(lam, h)

    def specht_module(self, lam: Multipartition) -> "SubmoduleSpan":
        """S^λ = m_λ w_λ n_{λ'} H with spanning vectors z d(t), t ∈ T^std(λ')."""
        conj = cb.conjugate(lam)
        z = self.m(lam) * self.perm(cb.w_lambda(lam)) * self.n(conj)
        vecs = [z * self.perm(cb.d_of(t)) for t in cb.standard_tableaux(conj)]
        return SubmoduleSpan(self, vecs)

    def specht_matches_cell(self, lam: Multipartition) -> bool:
        """S^λ ≅ C̃(λ') as right modules, by an explicit intertwiner."""
        sp = self.specht_module(lam)
        conj = cb.conjugate(lam)
        gens = self.generators()
        if sp.dimension != self.cellular_basis("n").cell_dimension(conj):
            return False
        A = [sp.action_matrix(g) for g in gens]
        B = [self.cell_action(conj, g, "n") for g in gens]
        return find_isomorphism(A, B) is not None

