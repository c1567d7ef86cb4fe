"""Cell modules and Gram forms attached to a (weakly) cellular basis.

A cellular basis is given as a list of entries ``(label, s, t, element)``,
optionally followed by a list of factors whose product is the element;
products with such an entry on the right are then taken factor by factor.
Right cell modules use the fixed reference index ``s0`` of each label:
``C_{s0,t} * h = sum_v r_{t,v}(h) C_{s0,v}`` modulo strictly higher cells.
The Gram form is ``phi(t, u)`` = coefficient of ``C_{s0,s0}`` in
``C_{s0,t} * C_{u,s0}``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Sequence

from .linalg import Echelon, rank
from .rewriting import Element, PresentedAlgebra


class CellularityError(RuntimeError):
    """A product left the span allowed by the cell filtration."""


class CellularBasis:
    def __init__(self, algebra: PresentedAlgebra, entries: Sequence[tuple],
                 ge: Callable[[Hashable, Hashable], bool]):
        self.algebra = algebra
        self.entries = list(entries)
        self.ge = ge
        self.labels: list = []
        self.indices: dict = {}
        self.tableaux: dict = {}
        for pos, (lab, s, t, *_) in enumerate(self.entries):
            if lab not in self.tableaux:
                self.labels.append(lab)
                self.tableaux[lab] = []
            if t not in self.tableaux[lab]:
                self.tableaux[lab].append(t)
            self.indices[(lab, s, t)] = pos
        n = algebra.dimension
        self._n = n
        # echelon of basis vectors tagged with their position; the residual
        # of (v, 0) against it holds minus the coordinates of v
        self._echelon = Echelon()
        self.rank = 0
        for pos, entry in enumerate(self.entries):
            v = entry[3].vector()
            v[n + pos] = Fraction(1)
            self._echelon.add(v)
        self.rank = sum(1 for p in self._echelon.rows if p < n)
        self._cache: dict = {}

    @property
    def is_basis(self) -> bool:
        return self.rank == self._n == len(self.entries)

    def coordinates(self, x: Element) -> dict:
        """{entry position: coefficient} with x = sum c_i entry_i."""
        if not self.is_basis:
            raise CellularityError("entries do not form a basis")
        res = self._echelon.reduce(x.vector())
        n = self._n
        if any(k < n for k in res):
            raise CellularityError("element outside the span")
        return {k - n: -c for k, c in res.items()}

    def reference(self, lab) -> Hashable:
        return self.tableaux[lab][0]

    def cell_dimension(self, lab) -> int:
        return len(self.tableaux[lab])

    def element(self, lab, s, t) -> Element:
        return self.entries[self.indices[(lab, s, t)]][3]

    def times_entry(self, x: Element, lab, s, t) -> Element:
        """x * C_{s,t}, multiplying through the stored factors if any."""
        entry = self.entries[self.indices[(lab, s, t)]]
        if len(entry) < 5:
            return x * entry[3]
        for fct in entry[4]:
            x = x * fct
        return x

    def _split(self, lab, x: Element, left) -> dict:
        """Coefficients of x on C_{left, v}; checks the filtration."""
        out = {}
        for pos, c in self.coordinates(x).items():
            mlab, ms, mt = self.entries[pos][:3]
            if mlab == lab:
                if ms != left:
                    raise CellularityError(f"left index changed in cell {lab}")
                out[mt] = c
            elif not self.ge(mlab, lab):
                raise CellularityError(f"{mlab} is not above {lab}")
        return out

    def action_matrix(self, lab, h: Element) -> list[list[Fraction]]:
        """Row-convention matrix of right multiplication by h on C(lab)."""
        s0 = self.reference(lab)
        ts = self.tableaux[lab]
        rows = []
        for t in ts:
            coeffs = self._split(lab, self.element(lab, s0, t) * h, s0)
            rows.append([coeffs.get(v, Fraction(0)) for v in ts])
        return rows

    def gram(self, lab) -> list[list[Fraction]]:
        key = ("gram", lab)
        if key in self._cache:
            return self._cache[key]
        s0 = self.reference(lab)
        ts = self.tableaux[lab]
        G = []
        for t in ts:
            row = []
            left = self.element(lab, s0, t)
            for u in ts:
                prod = self.times_entry(left, lab, u, s0)
                coeffs = self._split(lab, prod, s0)
                row.append(coeffs.get(s0, Fraction(0)))
            G.append(row)
        self._cache[key] = G
        return G

    def simple_dimension(self, lab) -> int:
        return rank(self.gram(lab))

    def check_cell_chain(self, lab, generators: Sequence[Element]) -> None:
        """Right multiplication by generators respects the cell filtration."""
        s0 = self.reference(lab)
        for t in self.tableaux[lab]:
            for g in generators:
                self._split(lab, self.element(lab, s0, t) * g, s0)


class SubmoduleSpan:
    """A right submodule of the regular module, optionally modulo an ideal.

    ``ideal`` is an :class:`Echelon` holding a two-sided ideal; vectors are
    replaced by their canonical remainders before anything else happens.
    """

    def __init__(self, algebra: PresentedAlgebra, vectors: Sequence[Element],
                 ideal: Echelon | None = None):
        self.algebra = algebra
        self.ideal = ideal if ideal is not None else Echelon()
        n = algebra.dimension
        self._n = n
        span = Echelon()
        self.basis: list[Element] = []
        self._tagged = Echelon()
        for v in vectors:
            rem = self.ideal.reduce(v.vector())
            if span.add(rem):
                rem[n + len(self.basis)] = Fraction(1)
                self._tagged.add(rem)
                self.basis.append(v)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def coordinates(self, x: Element) -> list[Fraction]:
        res = self._tagged.reduce(self.ideal.reduce(x.vector()))
        if any(k < self._n for k in res):
            raise ValueError("element is not in the span")
        out = [Fraction(0)] * self.dimension
        for k, c in res.items():
            out[k - self._n] = -c
        return out

    def action_matrix(self, h: Element) -> list[list[Fraction]]:
        return [self.coordinates(v * h) for v in self.basis]


def two_sided_ideal(algebra: PresentedAlgebra, generators: Sequence[Element],
                    multipliers: Sequence[Element]) -> Echelon:
    """Span of the two-sided ideal generated by ``generators``.

    Saturates under left and right multiplication by ``multipliers``,
    which must generate the algebra.
    """
    ech = Echelon()
    todo = []
    for g in generators:
        if ech.add(g.vector()):
            todo.append(g)
    while todo:
        v = todo.pop()
        for m in multipliers:
            for w in (m * v, v * m):
                if ech.add(w.vector()):
                    todo.append(w)
    return ech
