"""Exact linear algebra over the rationals.

Dense helpers work on lists of rows; ``Echelon`` keeps an incremental
sparse row-echelon basis of vectors stored as ``{index: Fraction}`` dicts.
Ranks and determinants use fraction-free (Bareiss) elimination on
integer-scaled rows.  ``QQ`` is the rational type used on hot paths
(gmpy2's ``mpq`` when installed, else ``Fraction``); the two compare and
hash alike.
"""
from __future__ import annotations

import numbers
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

try:
    from gmpy2 import mpq as QQ
except ImportError:  # pragma: no cover
    QQ = Fraction

Vector = dict  # sparse: int -> Fraction


def as_fraction(x) -> Fraction:
    """Parse ints, rationals (including gmpy2 ``mpq``) and strings like "3/4".

    Floats are rejected: every quantity in this package is exact.
    """
    if type(x) is Fraction:
        return x
    if isinstance(x, bool):
        return Fraction(int(x))
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, numbers.Rational):
        # Fraction(mpq) would keep gmpy2 integers inside the Fraction
        return Fraction(int(x.numerator), int(x.denominator))
    raise TypeError(f"not an exact rational: {x!r}")


def fraction_str(x: Fraction) -> str:
    x = as_fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _integer_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    out = []
    for row in rows:
        row = [as_fraction(v) for v in row]
        m = 1
        for v in row:
            m = lcm(m, v.denominator)
        out.append([int(v * m) for v in row])
    return out


def _bareiss(M: list[list[int]]) -> tuple[int, int]:
    """In-place Bareiss elimination; returns (rank, sign-adjusted last pivot)."""
    nrows = len(M)
    if nrows == 0:
        return 0, 1
    ncols = len(M[0])
    prev = 1
    rank = 0
    sign = 1
    for col in range(ncols):
        piv = None
        for i in range(rank, nrows):
            if M[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        if piv != rank:
            M[rank], M[piv] = M[piv], M[rank]
            sign = -sign
        p = M[rank][col]
        for i in range(rank + 1, nrows):
            mi = M[i][col]
            row_i = M[i]
            row_r = M[rank]
            for j in range(col + 1, ncols):
                row_i[j] = (row_i[j] * p - mi * row_r[j]) // prev
            row_i[col] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank, sign * prev


def rank(rows: Sequence[Sequence]) -> int:
    """Exact rank of a rational matrix given as a list of rows."""
    rows = [r for r in rows]
    if not rows or not len(rows[0]):
        return 0
    return _bareiss(_integer_rows(rows))[0]


def det(rows: Sequence[Sequence]) -> Fraction:
    """Exact determinant of a square rational matrix."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    ints = []
    for row in rows:
        if len(row) != n:
            raise ValueError("determinant of a non-square matrix")
        row = [as_fraction(v) for v in row]
        m = 1
        for v in row:
            m = lcm(m, v.denominator)
        scale /= m
        ints.append([int(v * m) for v in row])
    r, last = _bareiss(ints)
    if r < n:
        return Fraction(0)
    return scale * last


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row-echelon form and pivot columns."""
    M = [[as_fraction(v) for v in row] for row in rows]
    if not M:
        return [], []
    ncols = len(M[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][col] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        p = M[r][col]
        M[r] = [v / p for v in M[r]]
        for i in range(len(M)):
            if i != r and M[i][col] != 0:
                c = M[i][col]
                M[i] = [a - c * b for a, b in zip(M[i], M[r])]
        pivots.append(col)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of {x : A x = 0}."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    R, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        x = [Fraction(0)] * ncols
        x[fc] = Fraction(1)
        for row, pc in zip(R, pivots):
            x[pc] = -row[fc]
        basis.append(x)
    return basis


def solve(A: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """One solution of A x = b, or None when inconsistent."""
    ncols = len(A[0]) if A else 0
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    R, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, pc in zip(R, pivots):
        x[pc] = row[ncols]
    return x


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> list[list[Fraction]]:
    Bt = list(zip(*B)) if B else []
    return [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in Bt] for row in A]


def identity(n: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def transpose(A: Sequence[Sequence]) -> list[list]:
    return [list(c) for c in zip(*A)]


def dense(v: Vector, n: int) -> list[Fraction]:
    out = [Fraction(0)] * n
    for k, c in v.items():
        out[k] = c
    return out


def sparse(v: Sequence) -> Vector:
    return {i: as_fraction(c) for i, c in enumerate(v) if c}


def axpy(y: Vector, a, x: Vector) -> None:
    """y += a * x in place, dropping zeros."""
    if not a:
        return
    for k, c in x.items():
        v = y.get(k, 0) + a * c
        if v:
            y[k] = v
        else:
            y.pop(k, None)


class Echelon:
    """Incremental echelon basis of sparse vectors.

    Each stored row has a pivot (its smallest key) with coefficient 1 and no
    other stored row has a nonzero entry at that pivot.
    """

    def __init__(self, vectors: Iterable[Vector] = ()):
        self.rows: dict = {}
        self._sorted = None
        for v in vectors:
            self.add(v)

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, v: Vector) -> Vector:
        v = {k: QQ(c) for k, c in v.items() if c}
        rows = self.rows
        # rows only carry keys >= their pivot, so one ascending sweep suffices
        for p in self.pivots():
            c = v.get(p)
            if c:
                axpy(v, -c, rows[p])
        return v

    def add(self, v: Vector) -> bool:
        """Insert v; return True when it enlarged the span."""
        w = self.reduce(v)
        if not w:
            return False
        p = min(w)
        c = w[p]
        w = {k: x / c for k, x in w.items()}
        for row in self.rows.values():
            if p in row:
                axpy(row, -row[p], w)
        self.rows[p] = w
        self._sorted = None
        return True

    def contains(self, v: Vector) -> bool:
        return not self.reduce(v)

    def coordinates(self, v: Vector) -> dict | None:
        """Express v in the stored rows, keyed by pivot; None if outside the span."""
        w = {k: QQ(c) for k, c in v.items() if c}
        coords = {}
        for p in self.pivots():
            c = w.get(p)
            if c:
                coords[p] = c
                axpy(w, -c, self.rows[p])
        return None if w else coords

    def basis(self) -> list[Vector]:
        return [dict(self.rows[p]) for p in self.pivots()]

    def pivots(self) -> list:
        if self._sorted is None:
            self._sorted = sorted(self.rows)
        return self._sorted


def find_isomorphism(A: Sequence, B: Sequence, attempts: int = 24) -> list[list[Fraction]] | None:
    """An invertible P with A_g P = P B_g for every g, or None.

    Matrices act on row vectors, so P maps the first module to the second.
    Candidates are combinations of a basis of the intertwiner space; a
    generic combination is invertible whenever any intertwiner is.
    """
    import random

    if len(A) != len(B):
        raise ValueError("need the same number of generators")
    n = len(A[0]) if A else 0
    if any(len(M) != n for M in A) or any(len(M) != n for M in B):
        return None
    if n == 0:
        return []
    # unknown P[i][j] sits at column i*n + j
    rows = []
    for Ag, Bg in zip(A, B):
        for i in range(n):
            for j in range(n):
                row = [Fraction(0)] * (n * n)
                for k in range(n):
                    row[k * n + j] += Fraction(Ag[i][k])
                    row[i * n + k] -= Fraction(Bg[k][j])
                rows.append(row)
    space = nullspace(rows, n * n) if rows else [sparse_unit(n * n, c) for c in range(n * n)]
    if not space:
        return None
    rng = random.Random(0)
    for attempt in range(attempts):
        coeffs = [1] * len(space) if attempt == 0 else [rng.randint(-9, 9) for _ in space]
        flat = [sum(c * v[x] for c, v in zip(coeffs, space)) for x in range(n * n)]
        P = [flat[i * n:(i + 1) * n] for i in range(n)]
        if det(P) != 0:
            return P
    return None


def sparse_unit(n: int, c: int) -> list[Fraction]:
    v = [Fraction(0)] * n
    v[c] = Fraction(1)
    return v
