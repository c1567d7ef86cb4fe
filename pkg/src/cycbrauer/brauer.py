"""Cyclotomic Brauer algebras B_{a,r}(u).

Generators are ``X1..Xr``, ``S1..S{r-1}`` and ``E1..E{r-1}``, ordered
X < S < E for the rewriting system.  The scalars ω_k of the relation
E_1 X_1^k E_1 = ω_k E_1 default to the u-admissible values.
"""
from __future__ import annotations

from fractions import Fraction
from math import prod
from typing import Sequence

from . import combinat as cb
from .cellular import CellularBasis, SubmoduleSpan, two_sided_ideal
from .combinat import DeltaIndex, Multipartition
from .hecke import HeckeAlgebra, cyclotomic_relation, m_element, n_element, perm_element
from .linalg import Echelon, as_fraction, find_isomorphism, rank
from .rewriting import Element, Poly, PresentedAlgebra


class OmegaOrderError(ValueError):
    """Too few ω values were supplied to pin down the algebra."""


def admissible_omega(u: Sequence, K: int) -> list[Fraction]:
    """ω_0..ω_K from the admissibility identity.

    With P(t) = Π (1 + u_i t)/(1 - u_i t) = Σ c_m t^m, matching powers of
    1/u gives ω_k = c_{k+1} - (-1)^a c_k / 2, plus 1/2 when k = 0.
    """
    u = [as_fraction(x) for x in u]
    a = len(u)
    n = K + 2
    c = [Fraction(0)] * n
    c[0] = Fraction(1)
    for ui in u:
        num = [c[i] + (ui * c[i - 1] if i else 0) for i in range(n)]
        c = [sum((num[j] * ui ** (i - j) for j in range(i + 1)), Fraction(0)) for i in range(n)]
    half = Fraction((-1) ** a, 2)
    return [c[k + 1] - half * c[k] + (Fraction(1, 2) if k == 0 else 0) for k in range(K + 1)]


def default_order(a: int, r: int) -> int:
    return a + 2 * r + 2


def _poly(*terms) -> Poly:
    out: Poly = {}
    for c, w in terms:
        w = tuple(w)
        out[w] = out.get(w, 0) + Fraction(c)
    return {w: c for w, c in out.items() if c}


def letters(r: int) -> list[str]:
    return ([f"X{j}" for j in range(1, r + 1)] + [f"S{i}" for i in range(1, r)]
            + [f"E{i}" for i in range(1, r)])


def brauer_relations(a: int, r: int, u: Sequence, omega: Sequence,
                     literal_15_16: bool = False) -> list[tuple[str, Poly]]:
    """Named defining relations, as polynomials over letter indices.

    ``literal_15_16`` swaps the right-hand sides of the two E-braid
    relations (E_iE_{i+1}E_i = E_{i+1}, E_{i+1}E_iE_{i+1} = E_i); that
    variant collapses the algebra and is kept only for comparison.
    """
    X = lambda j: j - 1
    S = lambda i: r + i - 1
    E = lambda i: 2 * r - 2 + i
    rels: list[tuple[str, Poly]] = []

    def add(name, *terms):
        rels.append((name, _poly(*terms)))

    for i in range(1, r):
        add(f"S{i}^2 = 1", (1, [S(i), S(i)]), (-1, []))
        add(f"E{i}S{i} = E{i}", (1, [E(i), S(i)]), (-1, [E(i)]))
        add(f"S{i}E{i} = E{i}", (1, [S(i), E(i)]), (-1, [E(i)]))
        add(f"S{i}X{i} - X{i+1}S{i} = E{i} - 1",
            (1, [S(i), X(i)]), (-1, [X(i + 1), S(i)]), (-1, [E(i)]), (1, []))
        add(f"X{i}S{i} - S{i}X{i+1} = E{i} - 1",
            (1, [X(i), S(i)]), (-1, [S(i), X(i + 1)]), (-1, [E(i)]), (1, []))
        add(f"E{i}(X{i} + X{i+1}) = 0", (1, [E(i), X(i)]), (1, [E(i), X(i + 1)]))
        add(f"(X{i} + X{i+1})E{i} = 0", (1, [X(i), E(i)]), (1, [X(i + 1), E(i)]))
        for j in range(1, r + 1):
            if j not in (i, i + 1):
                add(f"S{i}X{j} = X{j}S{i}", (1, [S(i), X(j)]), (-1, [X(j), S(i)]))
                add(f"E{i}X{j} = X{j}E{i}", (1, [E(i), X(j)]), (-1, [X(j), E(i)]))
        for j in range(1, r):
            if abs(i - j) > 1:
                if i < j:
                    add(f"S{i}S{j} = S{j}S{i}", (1, [S(i), S(j)]), (-1, [S(j), S(i)]))
                    add(f"E{i}E{j} = E{j}E{i}", (1, [E(i), E(j)]), (-1, [E(j), E(i)]))
                add(f"S{i}E{j} = E{j}S{i}", (1, [S(i), E(j)]), (-1, [E(j), S(i)]))
        if i < r - 1:
            add(f"S{i}S{i+1}S{i} = S{i+1}S{i}S{i+1}",
                (1, [S(i), S(i + 1), S(i)]), (-1, [S(i + 1), S(i), S(i + 1)]))
            add(f"S{i}E{i+1}E{i} = S{i+1}E{i}",
                (1, [S(i), E(i + 1), E(i)]), (-1, [S(i + 1), E(i)]))
            add(f"E{i}E{i+1}S{i} = E{i}S{i+1}",
                (1, [E(i), E(i + 1), S(i)]), (-1, [E(i), S(i + 1)]))
            lo, hi = (i + 1, i) if literal_15_16 else (i, i + 1)
            add(f"E{i}E{i+1}E{i} = E{lo}",
                (1, [E(i), E(i + 1), E(i)]), (-1, [E(lo)]))
            add(f"E{i+1}E{i}E{i+1} = E{hi}",
                (1, [E(i + 1), E(i), E(i + 1)]), (-1, [E(hi)]))
    for i in range(1, r + 1):
        for j in range(i + 1, r + 1):
            add(f"X{i}X{j} = X{j}X{i}", (1, [X(i), X(j)]), (-1, [X(j), X(i)]))
    rels.append(("(X1 - u_1)...(X1 - u_a) = 0", cyclotomic_relation(X(1), u)))
    if r >= 2:
        for k, w in enumerate(omega):
            add(f"E1X1^{k}E1 = w_{k}E1", (1, [E(1)] + [X(1)] * k + [E(1)]), (-w, [E(1)]))
    return rels


def expected_dimension(a: int, r: int) -> int:
    return a ** r * prod(range(1, 2 * r, 2))


class BrauerAlgebra(PresentedAlgebra):
    def __init__(self, a: int, r: int, u: Sequence, omega: Sequence | None = None,
                 literal_15_16: bool = False):
        if a < 1 or r < 1:
            raise ValueError("need a >= 1 and r >= 1")
        if len(u) != a:
            raise ValueError(f"expected {a} parameters, got {len(u)}")
        self.a, self.r = a, r
        self.u = tuple(as_fraction(x) for x in u)
        if omega is None:
            omega = admissible_omega(self.u, default_order(a, r))
        self.omega = tuple(as_fraction(w) for w in omega)
        if r >= 2 and len(self.omega) < a:
            # E1 X1^k E1 for k >= a reduces through the cyclotomic relation,
            # so ω_0..ω_{a-1} determine everything; fewer is underspecified
            raise OmegaOrderError(f"need at least {a} omega values, got {len(self.omega)}")
        self.relations = brauer_relations(a, r, self.u, self.omega, literal_15_16)
        super().__init__(letters(r), [p for _, p in self.relations])
        self._basis_cache = None
        self._ideals: dict = {}

    # -- generators

    def x(self, j: int) -> Element:
        return self.gen(f"X{j}")

    def s(self, i: int) -> Element:
        return self.gen(f"S{i}")

    def e(self, i: int) -> Element:
        return self.gen(f"E{i}")

    def generators(self) -> list[Element]:
        r = self.r
        return ([self.x(j) for j in range(1, r + 1)] + [self.s(i) for i in range(1, r)]
                + [self.e(i) for i in range(1, r)])

    @property
    def is_full_dimension(self) -> bool:
        return self.dimension == expected_dimension(self.a, self.r)

    @property
    def classification_supported(self) -> bool:
        """Simple modules are labelled by nonzero D(f, λ) only when ω_0 ≠ 0."""
        return self.r < 2 or self.omega[0] != 0

    def tau(self, x: Element) -> Element:
        return self.anti_involution(x)

    def relation_audit(self) -> list[tuple[str, bool]]:
        return [(name, self.relation_holds(p)) for name, p in self.relations]

    # -- cellular structure

    def E_power(self, f: int) -> Element:
        """E^f = E_{r-1} E_{r-3} ... E_{r-2f+1}."""
        out = self.one()
        for i in range(1, f + 1):
            out = out * self.e(self.r - 2 * i + 1)
        return out

    def X_power(self, xi: Sequence[int]) -> Element:
        out = self.one()
        for j, k in enumerate(xi, start=1):
            for _ in range(k):
                out = out * self.x(j)
        return out

    def perm(self, w) -> Element:
        return perm_element(self, w)

    def cell_entries(self) -> list:
        a, r, u = self.a, self.r, self.u
        out = []
        for f, lam in cb.cell_labels(a, r):
            Ef = self.E_power(f)
            deltas = cb.enumerate_delta(f, lam, r, a)
            nlam = n_element(self, lam, u)
            left, right = {}, {}
            for s in cb.standard_tableaux(lam):
                left[s] = self.perm(cb.d_of(s).inverse())
                right[s] = self.perm(cb.d_of(s))
            for S in deltas:
                hfac = [self.perm(S.d.inverse()), self.X_power(S.xi), Ef, left[S.t], nlam]
                head = hfac[0] * hfac[1] * hfac[2] * hfac[3] * hfac[4]
                for T in deltas:
                    tfac = [right[T.t], self.X_power(T.xi), self.perm(T.d)]
                    tail = tfac[0] * tfac[1] * tfac[2]
                    out.append(((f, lam), S, T, head * tail, hfac + tfac))
        return out

    def weakly_cellular_basis(self) -> CellularBasis:
        if self._basis_cache is None:
            self._basis_cache = CellularBasis(self, self.cell_entries(), cb.cell_ge)
        return self._basis_cache

    def cell_module(self, f: int, lam: Multipartition) -> "BrauerCellDatum":
        B = self.weakly_cellular_basis()
        lab = (f, lam)
        return BrauerCellDatum(f, lam, list(B.tableaux[lab]), B.gram(lab))

    def tau_report(self) -> dict:
        """How τ treats the weakly cellular basis.

        ``stable`` counts elements whose image stays in their cell modulo
        higher cells; ``strict`` counts those with τ(C_{S,T}) ≡ C_{T,S}.
        """
        W = self.weakly_cellular_basis()
        stable = strict = 0
        for lab, S, T, el, *_ in W.entries:
            same = {}
            ok = True
            for pos, c in W.coordinates(self.tau(el)).items():
                mlab, ms, mt = W.entries[pos][:3]
                if mlab == lab:
                    same[(ms, mt)] = c
                elif not cb.cell_ge(mlab, lab):
                    ok = False
            stable += ok
            strict += ok and same == {(T, S): 1}
        return {"elements": len(W.entries), "stable": stable, "strict": strict}

    def simple_dimension(self, f: int, lam: Multipartition) -> int:
        return rank(self.weakly_cellular_basis().gram((f, lam)))

    def cell_action(self, f: int, lam: Multipartition, h: Element):
        return self.weakly_cellular_basis().action_matrix((f, lam), h)

    # -- ideals and quotients

    def ideal(self, f: int) -> Echelon:
        """The two-sided ideal generated by E^f (zero when 2f > r)."""
        if f not in self._ideals:
            gens = [self.E_power(f)] if 2 * f <= self.r else []
            self._ideals[f] = two_sided_ideal(self, gens, self.generators())
        return self._ideals[f]

    def ideal_E1(self) -> Echelon:
        key = "E1"
        if key not in self._ideals:
            gens = [self.e(1)] if self.r >= 2 else []
            self._ideals[key] = two_sided_ideal(self, gens, self.generators())
        return self._ideals[key]

    def prop_bas_module(self, f: int, lam: Multipartition) -> SubmoduleSpan:
        """Span of E^f m_λ w_λ n_λ' d(t) X^ξ d modulo the ideal of E^{f+1}.

        Indexed by δ(f, λ'); m, w, n live on the first r - 2f strands.
        """
        conj = cb.conjugate(lam)
        z = (self.E_power(f) * m_element(self, lam, self.u)
             * self.perm(cb.w_lambda(lam)) * n_element(self, conj, self.u))
        vecs = [z * self.perm(cb.d_of(D.t)) * self.X_power(D.xi) * self.perm(D.d)
                for D in cb.enumerate_delta(f, conj, self.r, self.a)]
        return SubmoduleSpan(self, vecs, self.ideal(f + 1))

    def prop_bas_matches_cell(self, f: int, lam: Multipartition) -> bool:
        """S^{f,λ} ≅ C(f, λ') by an explicit intertwiner."""
        mod = self.prop_bas_module(f, lam)
        conj = cb.conjugate(lam)
        B = self.weakly_cellular_basis()
        if mod.dimension != B.cell_dimension((f, conj)):
            return False
        gens = self.generators()
        A = [mod.action_matrix(g) for g in gens]
        C = [B.action_matrix((f, conj), g) for g in gens]
        return find_isomorphism(A, C) is not None

    def hecke_quotient(self) -> "HeckeBridge":
        return HeckeBridge(self)


class BrauerCellDatum:
    def __init__(self, f: int, lam: Multipartition, basis: list, gram: list):
        self.f, self.lam = f, lam
        self.basis: list[DeltaIndex] = basis
        self.gram = gram

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def simple_dimension(self) -> int:
        return rank(self.gram)


class HeckeBridge:
    """The map H_{a,r}(u) -> B_{a,r}(u)/<E_1> sending x_j, s_i to X_j, S_i."""

    def __init__(self, B: BrauerAlgebra):
        self.B = B
        self.H = HeckeAlgebra(B.a, B.r, B.u)
        self.ideal = B.ideal_E1()

    def lift(self, h: Element) -> Element:
        B = self.B
        out = B.zero()
        for w, c in h.terms.items():
            out = out + c * B.word([self.H.letters[x] for x in w])
        return out

    def quotient_dimension(self) -> int:
        return self.B.dimension - len(self.ideal)

    def images_independent(self) -> bool:
        span = Echelon()
        for i in range(self.H.dimension):
            rem = self.ideal.reduce(self.lift(self.H.basis_element(i)).vector())
            if not span.add(rem):
                return False
        return True

    def structure_constants_match(self) -> bool:
        """lift(h_i) lift(h_j) - lift(h_i h_j) lies in <E_1> for all basis pairs."""
        H, B = self.H, self.B
        lifts = [self.lift(H.basis_element(i)) for i in range(H.dimension)]
        for i in range(H.dimension):
            hi = H.basis_element(i)
            for j in range(H.dimension):
                diff = lifts[i] * lifts[j] - self.lift(hi * H.basis_element(j))
                if not self.ideal.contains(diff.vector()):
                    return False
        return True
