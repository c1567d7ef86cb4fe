"""Radicals, composition factors and decomposition matrices over Q.

Everything here works from traces: in characteristic zero the characters
of pairwise non-isomorphic simple modules of a split algebra are linearly
independent, so composition multiplicities solve a linear system.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Sequence

from .cellular import CellularBasis
from .linalg import QQ, Echelon, as_fraction, identity, matmul, nullspace, rank, rref, solve
from .rewriting import Element, PresentedAlgebra

Matrix = list


class SplittingError(RuntimeError):
    """Multiplicities were not unique nonnegative integers."""


class StructureConstants:
    """e_i e_j = Σ_k table[i][j][k] e_k, with sparse rows {k: c}."""

    def __init__(self, dim: int, table: Sequence[Sequence[dict]]):
        self.dim = dim
        self.table = table

    @classmethod
    def from_algebra(cls, A: PresentedAlgebra) -> "StructureConstants":
        n = A.dimension
        basis = [A.basis_element(i) for i in range(n)]
        table = [[(basis[i] * basis[j]).vector() for j in range(n)] for i in range(n)]
        return cls(n, table)

    @classmethod
    def from_matrices(cls, mats: Sequence[Matrix]) -> "StructureConstants":
        """The algebra spanned by linearly independent, product-closed matrices."""
        flat = [[as_fraction(x) for row in M for x in row] for M in mats]
        n = len(flat)
        ech = Echelon()
        for pos, v in enumerate(flat):
            vec = {k: c for k, c in enumerate(v) if c}
            vec[len(v) + pos] = Fraction(1)
            ech.add(vec)
        width = len(flat[0])
        table = []
        for A in mats:
            row = []
            for B in mats:
                P = matmul(A, B)
                res = ech.reduce({k: c for k, c in enumerate(x for r in P for x in r) if c})
                if any(k < width for k in res):
                    raise ValueError("matrices are not closed under products")
                row.append({k - width: -c for k, c in res.items()})
            table.append(row)
        return cls(n, table)

    def multiply(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for i, a in x.items():
            for j, b in y.items():
                for k, c in self.table[i][j].items():
                    out[k] = out.get(k, 0) + a * b * c
        return {k: c for k, c in out.items() if c}

    def left_trace(self, k: int) -> Fraction:
        """Trace of left multiplication by e_k."""
        return sum((self.table[k][j].get(j, 0) for j in range(self.dim)), Fraction(0))

    def is_associative(self, triples=None) -> bool:
        n = self.dim
        unit = lambda i: {i: Fraction(1)}
        if triples is None:
            triples = ((i, j, k) for i in range(n) for j in range(n) for k in range(n))
        for i, j, k in triples:
            left = self.multiply(self.multiply(unit(i), unit(j)), unit(k))
            right = self.multiply(unit(i), self.multiply(unit(j), unit(k)))
            if left != right:
                return False
        return True


def radical(A: StructureConstants) -> list[dict]:
    """Basis of J(A): the radical of (x, y) -> tr(L_{xy})."""
    n = A.dim
    t = [A.left_trace(k) for k in range(n)]
    G = [[sum((c * t[k] for k, c in A.table[i][j].items()), Fraction(0)) for j in range(n)]
         for i in range(n)]
    basis = [{k: c for k, c in enumerate(v) if c} for v in nullspace(G, n)]
    if not _is_nilpotent(A, basis):
        raise ArithmeticError("trace-form radical is not nilpotent")
    return basis


def _is_nilpotent(A: StructureConstants, J: list[dict]) -> bool:
    """Power the subspace J until it vanishes (J^{k+1} = J^k J)."""
    J = [{k: QQ(c) for k, c in v.items()} for v in J]
    power = J
    for _ in range(A.dim + 1):
        if not power:
            return True
        ech = Echelon()
        for x in power:
            # x e_j for every j, then x y = Σ_j y_j (x e_j)
            xe = []
            for j in range(A.dim):
                acc: dict = {}
                for i, a in x.items():
                    for k, c in A.table[i][j].items():
                        acc[k] = acc.get(k, 0) + a * c
                xe.append(acc)
            for y in J:
                prod: dict = {}
                for j, b in y.items():
                    for k, c in xe[j].items():
                        prod[k] = prod.get(k, 0) + b * c
                ech.add(prod)
        power = ech.basis()
    return not power


def is_two_sided_ideal(A: StructureConstants, J: list[dict]) -> bool:
    ech = Echelon(J)
    for x in J:
        for i in range(A.dim):
            e = {i: Fraction(1)}
            if not ech.contains(A.multiply(e, x)) or not ech.contains(A.multiply(x, e)):
                return False
    return True


class ModulePresentation:
    """A right module given by matrices of the algebra's letters (row convention)."""

    def __init__(self, algebra: PresentedAlgebra, letter_matrices: dict, label: Hashable = None):
        self.algebra = algebra
        self.mats = letter_matrices
        self.label = label
        first = next(iter(letter_matrices.values()), [])
        self.dim = len(first)
        self._word_traces: list | None = None

    @classmethod
    def from_cell(cls, basis: CellularBasis, label) -> "ModulePresentation":
        A = basis.algebra
        mats = {g: basis.action_matrix(label, A.word([g])) for g in range(len(A.letters))}
        return cls(A, mats, label)

    def matrix(self, x: Element) -> Matrix:
        out = [[Fraction(0)] * self.dim for _ in range(self.dim)]
        for w, c in x.terms.items():
            M = identity(self.dim)
            for g in w:
                M = matmul(M, self.mats[g])
            out = [[o + c * m for o, m in zip(ro, rm)] for ro, rm in zip(out, M)]
        return out

    def word_traces(self) -> list[Fraction]:
        """Trace of every normal word, computed along prefixes."""
        if self._word_traces is None:
            A = self.algebra
            mats = {(): identity(self.dim)}
            traces = []
            for w in A.basis:
                if w not in mats:
                    mats[w] = matmul(mats[w[:-1]], self.mats[w[-1]])
                traces.append(sum((mats[w][i][i] for i in range(self.dim)), Fraction(0)))
            self._word_traces = traces
        return self._word_traces

    def trace(self, x: Element) -> Fraction:
        t = self.word_traces()
        return sum((c * t[i] for i, c in x.vector().items()), Fraction(0))

    def quotient(self, sub: Sequence[Sequence]) -> "ModulePresentation":
        """M / N for a submodule N spanned by the given row vectors."""
        R, _ = rref(sub) if sub else ([], [])
        k = len(R)
        pivots = {next(j for j, x in enumerate(row) if x) for row in R}
        comp = [[Fraction(int(i == j)) for j in range(self.dim)] for i in range(self.dim) if i not in pivots]
        P = [list(r) for r in R] + comp
        Pinv = _inverse(P)
        mats = {}
        for g, M in self.mats.items():
            conj = matmul(matmul(P, M), Pinv)
            mats[g] = [row[k:] for row in conj[k:]]
        return ModulePresentation(self.algebra, mats, self.label)


def _inverse(P: Matrix) -> Matrix:
    n = len(P)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(P)]
    R, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise ValueError("singular matrix")
    return [row[n:] for row in R]


def simple_head(basis: CellularBasis, label) -> ModulePresentation:
    """D = C / rad φ for one cell label."""
    C = ModulePresentation.from_cell(basis, label)
    G = basis.gram(label)
    rad = nullspace([list(col) for col in zip(*G)], len(G)) if G else []
    return C.quotient(rad)


def composition_multiplicities(M: ModulePresentation, simples: dict,
                               spanning: Sequence[Element]) -> dict:
    """{label: [M : D(label)]} from the trace identity over a spanning set."""
    labels = list(simples)
    rows = [[simples[l].trace(b) for l in labels] for b in spanning]
    rhs = [M.trace(b) for b in spanning]
    if labels and rank(rows) < len(labels):
        raise SplittingError("simple characters are linearly dependent")
    sol = solve(rows, rhs) if labels else []
    if sol is None:
        raise SplittingError("trace identity has no solution")
    out = {}
    for l, m in zip(labels, sol):
        if m.denominator != 1 or m < 0:
            raise SplittingError(f"multiplicity {m} for {l} is not a natural number")
        out[l] = int(m)
    if sum(out[l] * simples[l].dim for l in labels) != M.dim:
        raise SplittingError("dimensions do not reconcile")
    return out


class DecompositionMatrix:
    def __init__(self, rows: list, cols: list, entries: list, cell_dims: dict, simple_dims: dict):
        self.rows, self.cols, self.entries = rows, cols, entries
        self.cell_dims, self.simple_dims = cell_dims, simple_dims

    def entry(self, row, col) -> int:
        return self.entries[self.rows.index(row)][self.cols.index(col)]

    def is_identity(self) -> bool:
        return self.rows == self.cols and all(
            self.entries[i][j] == int(i == j) for i in range(len(self.rows)) for j in range(len(self.cols)))

    def is_unitriangular(self, ge: Callable) -> bool:
        """d_{λλ} = 1 on simple labels; d_{λμ} ≠ 0 only if λ ⊵ μ.

        Higher cells annihilate C(λ), so every composition factor D(μ) of
        C(λ) has μ at or below λ.
        """
        for i, lam in enumerate(self.rows):
            for j, mu in enumerate(self.cols):
                d = self.entries[i][j]
                if lam == mu and d != 1:
                    return False
                if lam != mu and d and not ge(lam, mu):
                    return False
        return True

    def reconciles(self) -> bool:
        return all(
            sum(d * self.simple_dims[mu] for d, mu in zip(self.entries[i], self.cols)) == self.cell_dims[lam]
            for i, lam in enumerate(self.rows))

    def restrict(self, keep: Callable) -> "DecompositionMatrix":
        ri = [i for i, l in enumerate(self.rows) if keep(l)]
        ci = [j for j, l in enumerate(self.cols) if keep(l)]
        return DecompositionMatrix([self.rows[i] for i in ri], [self.cols[j] for j in ci],
                                   [[self.entries[i][j] for j in ci] for i in ri],
                                   {self.rows[i]: self.cell_dims[self.rows[i]] for i in ri},
                                   {self.cols[j]: self.simple_dims[self.cols[j]] for j in ci})


def decomposition_matrix(basis: CellularBasis) -> DecompositionMatrix:
    """[C(λ) : D(μ)] for every cell label λ and every μ with D(μ) ≠ 0."""
    labels = list(basis.labels)
    simples = {}
    for lab in labels:
        D = simple_head(basis, lab)
        if D.dim:
            simples[lab] = D
    spanning = [entry[3] for entry in basis.entries]
    rows = []
    for lab in labels:
        mult = composition_multiplicities(ModulePresentation.from_cell(basis, lab), simples, spanning)
        rows.append([mult[mu] for mu in simples])
    return DecompositionMatrix(labels, list(simples), rows,
                               {l: basis.cell_dimension(l) for l in labels},
                               {l: D.dim for l, D in simples.items()})
