"""Partitions, multipartitions, tableaux and permutations.

Conventions
-----------
* A partition is a tuple of positive integers, weakly decreasing.
* A multipartition of level ``a`` is a tuple of ``a`` partitions.
* A tableau is a tuple of components; a component is a tuple of rows.
* Permutations act on the right: ``c * w`` is written ``w(c)`` below and
  ``(v * w)(c) = w(v(c))``.  A tableau ``t * w`` replaces each entry ``k``
  by ``w(k)``; ``d(s)`` is the permutation with ``t^lam * d(s) = s``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from math import factorial
from typing import Iterator, NamedTuple, Sequence

from .linalg import as_fraction

Partition = tuple
Multipartition = tuple
Tableau = tuple


# ---------------------------------------------------------------- permutations

@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..r} in one-line notation: ``images[c-1] = w(c)``."""

    images: tuple

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, r: int) -> "Permutation":
        return cls(tuple(range(1, r + 1)))

    @classmethod
    def simple(cls, i: int, r: int) -> "Permutation":
        im = list(range(1, r + 1))
        im[i - 1], im[i] = im[i], im[i - 1]
        return cls(tuple(im))

    @classmethod
    def from_word(cls, word: Sequence[int], r: int) -> "Permutation":
        w = cls.identity(r)
        for i in word:
            w = w * cls.simple(i, r)
        return w

    @property
    def r(self) -> int:
        return len(self.images)

    def __call__(self, c: int) -> int:
        return self.images[c - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # first self, then other
        return Permutation(tuple(other.images[x - 1] for x in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.r
        for c, x in enumerate(self.images, start=1):
            inv[x - 1] = c
        return Permutation(tuple(inv))

    def length(self) -> int:
        im = self.images
        return sum(1 for i in range(len(im)) for j in range(i + 1, len(im)) if im[i] > im[j])

    def sign(self) -> int:
        return -1 if self.length() % 2 else 1

    def reduced_word(self) -> tuple:
        """A reduced word (i_1, ..., i_l) with self = s_{i_1} ... s_{i_l}."""
        word = []
        w = self
        while True:
            pos = {x: c for c, x in enumerate(w.images)}
            for i in range(1, w.r):
                if pos[i + 1] < pos[i]:
                    break
            else:
                break
            word.append(i)
            w = w * Permutation.simple(i, w.r)
        return tuple(reversed(word))

    def extend(self, r: int) -> "Permutation":
        return Permutation(self.images + tuple(range(self.r + 1, r + 1)))

    def __repr__(self):
        return f"Permutation{self.images}"


def all_permutations(r: int) -> list[Permutation]:
    return [Permutation(p) for p in permutations(range(1, r + 1))]


# ---------------------------------------------------------------- partitions

def partitions(m: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of m in reverse lexicographic order."""
    if max_part is None:
        max_part = m
    if m == 0:
        yield ()
        return
    for first in range(min(m, max_part), 0, -1):
        for rest in partitions(m - first, first):
            yield (first,) + rest


def _flatten_key(lam: Multipartition, pad: int) -> tuple:
    out = []
    for comp in lam:
        out.extend(comp)
        out.extend([0] * (pad - len(comp)))
    return tuple(out)


@lru_cache(maxsize=None)
def multipartitions(a: int, m: int) -> tuple:
    """All a-multipartitions of m, listed so that λ ▷ μ puts λ first."""
    out = []

    def rec(level: int, remaining: int, acc: tuple):
        if level == a:
            if remaining == 0:
                out.append(acc)
            return
        for k in range(remaining, -1, -1):
            for p in partitions(k):
                rec(level + 1, remaining - k, acc + (p,))

    rec(0, m, ())
    # zero-padded concatenation: lexicographic order refines dominance
    return tuple(sorted(out, key=lambda lam: _flatten_key(lam, m), reverse=True))


def size(lam: Multipartition) -> int:
    return sum(sum(c) for c in lam)


def profile(lam: Multipartition) -> tuple:
    """[b_0, ..., b_a]: cumulative component sizes."""
    b = [0]
    for comp in lam:
        b.append(b[-1] + sum(comp))
    return tuple(b)


def conjugate_partition(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > j) for j in range(p[0]))


def conjugate(lam: Multipartition) -> Multipartition:
    """Component i of the result is the transpose of component a-i+1."""
    return tuple(conjugate_partition(c) for c in reversed(lam))


def dominance_ge(lam: Multipartition, mu: Multipartition) -> bool:
    if len(lam) != len(mu) or size(lam) != size(mu):
        raise ValueError("dominance needs multipartitions of equal level and size")
    before_l = before_m = 0
    for cl, cm in zip(lam, mu):
        sl, sm = before_l, before_m
        for h in range(max(len(cl), len(cm))):
            sl += cl[h] if h < len(cl) else 0
            sm += cm[h] if h < len(cm) else 0
            if sl < sm:
                return False
        if sl < sm:
            return False
        before_l, before_m = sl, sm
    return True


def boxes(lam: Multipartition) -> list:
    """Boxes (component, row, col) in the row-reading order of t^lam."""
    return [(k, i, j) for k, comp in enumerate(lam)
            for i, row in enumerate(comp) for j in range(row)]


# ---------------------------------------------------------------- tableaux

def _fill(lam: Multipartition, entries: dict) -> Tableau:
    return tuple(tuple(tuple(entries[(k, i, j)] for j in range(row))
                       for i, row in enumerate(comp)) for k, comp in enumerate(lam))


def tableau_entries(t: Tableau) -> dict:
    return {(k, i, j): x for k, comp in enumerate(t)
            for i, row in enumerate(comp) for j, x in enumerate(row)}


def tableau_shape(t: Tableau) -> Multipartition:
    return tuple(tuple(len(row) for row in comp) for comp in t)


def initial_tableau(lam: Multipartition) -> Tableau:
    """t^lam: components left to right, each filled row by row."""
    return _fill(lam, {b: n for n, b in enumerate(boxes(lam), start=1)})


def final_tableau(lam: Multipartition) -> Tableau:
    """t_lam: components right to left, each filled column by column."""
    entries = {}
    n = 1
    for k in reversed(range(len(lam))):
        comp = lam[k]
        ncols = comp[0] if comp else 0
        for j in range(ncols):
            for i, row in enumerate(comp):
                if row > j:
                    entries[(k, i, j)] = n
                    n += 1
    return _fill(lam, entries)


def initial_and_final_tableaux(lam: Multipartition) -> tuple:
    return initial_tableau(lam), final_tableau(lam)


def act(t: Tableau, w: Permutation) -> Tableau:
    return tuple(tuple(tuple(w(x) for x in row) for row in comp) for comp in t)


def is_standard(t: Tableau) -> bool:
    for comp in t:
        for i, row in enumerate(comp):
            if any(row[j] >= row[j + 1] for j in range(len(row) - 1)):
                return False
            if i and any(comp[i - 1][j] >= row[j] for j in range(len(row))):
                return False
    return True


def d_of(s: Tableau) -> Permutation:
    """The permutation d(s) with t^lam * d(s) = s."""
    lam = tableau_shape(s)
    t0 = tableau_entries(initial_tableau(lam))
    ts = tableau_entries(s)
    images = [0] * len(t0)
    for box, x in t0.items():
        images[x - 1] = ts[box]
    return Permutation(tuple(images))


@lru_cache(maxsize=None)
def standard_tableaux(lam: Multipartition) -> tuple:
    """All standard lam-tableaux, ordered by their d(t) one-line images."""
    bx = boxes(lam)
    m = len(bx)
    out = []

    def rec(n: int, filled: dict):
        if n > m:
            out.append(_fill(lam, filled))
            return
        for (k, i, j) in bx:
            if (k, i, j) in filled:
                continue
            if j > 0 and (k, i, j - 1) not in filled:
                continue
            if i > 0 and (k, i - 1, j) not in filled:
                continue
            filled[(k, i, j)] = n
            rec(n + 1, filled)
            del filled[(k, i, j)]

    rec(1, {})
    return tuple(sorted(out, key=lambda t: d_of(t).images))


def count_standard(lam: Multipartition) -> int:
    """|T^std(lam)| by the hook length formula and a multinomial coefficient."""
    total = factorial(size(lam))
    for comp in lam:
        conj = conjugate_partition(comp)
        for i, row in enumerate(comp):
            for j in range(row):
                total //= (row - j) + (conj[j] - i - 1)
    return total


def row_stabilizer(lam: Multipartition) -> list[Permutation]:
    """The Young subgroup S_lam fixing the rows of t^lam setwise."""
    t = initial_tableau(lam)
    rows = [row for comp in t for row in comp if len(row) > 1]
    r = size(lam)
    group = [Permutation.identity(r)]
    for row in rows:
        new = []
        for p in permutations(row):
            im = list(range(1, r + 1))
            for src, dst in zip(row, p):
                im[src - 1] = dst
            g = Permutation(tuple(im))
            new.extend(h * g for h in group)
        group = new
    return group


def w_bracket(b: Sequence[int], r: int) -> Permutation:
    """(b_{i-1}+l) w = r - b_i + l for each nonempty block."""
    if b[0] != 0 or b[-1] != r:
        raise ValueError("profile must run from 0 to r")
    im = [0] * r
    for i in range(1, len(b)):
        for l in range(1, b[i] - b[i - 1] + 1):
            im[b[i - 1] + l - 1] = r - b[i] + l
    return Permutation(tuple(im))


def w_lambda(lam: Multipartition) -> Permutation:
    return d_of(final_tableau(lam))


def w_components(lam: Multipartition) -> list[Permutation]:
    """The factors w_(1), ..., w_(a) with w_lam = w_(1)...w_(a) w_[lam]."""
    r = size(lam)
    wb = w_bracket(profile(lam), r)
    t_low = act(final_tableau(lam), wb.inverse())
    t_up = initial_tableau(lam)
    out = []
    for k in range(len(lam)):
        im = list(range(1, r + 1))
        for src_row, dst_row in zip(t_up[k], t_low[k]):
            for x, y in zip(src_row, dst_row):
                im[x - 1] = y
        out.append(Permutation(tuple(im)))
    return out


# ---------------------------------------------------------------- delta sets

def cosets_D(r: int, f: int) -> tuple:
    """D_r^f by filtering S_r with the tableau predicate."""
    return tuple(d for d in all_permutations(r) if in_D(d, r, f))


def in_D(d: Permutation, r: int, f: int) -> bool:
    m = r - 2 * f
    im = d.images
    if any(im[i] > im[i + 1] for i in range(m - 1)):
        return False
    firsts = []
    for s in range(f):
        x, y = im[m + 2 * s], im[m + 2 * s + 1]
        if x > y:
            return False
        firsts.append(x)
    return all(firsts[i] < firsts[i + 1] for i in range(f - 1))


def _matchings(values: tuple) -> Iterator[tuple]:
    if not values:
        yield ()
        return
    first = values[0]
    for k in range(1, len(values)):
        rest = values[1:k] + values[k + 1:]
        for m in _matchings(rest):
            yield ((first, values[k]),) + m


@lru_cache(maxsize=None)
def cosets_D_constructive(r: int, f: int) -> tuple:
    """D_r^f built directly: a sorted (r-2f)-subset, then f pairs with increasing minima."""
    m = r - 2 * f
    out = []
    for row in combinations(range(1, r + 1), m):
        rest = tuple(x for x in range(1, r + 1) if x not in row)
        for match in _matchings(rest):
            im = list(row)
            for x, y in match:
                im.extend((x, y))
            out.append(Permutation(tuple(im)))
    return tuple(sorted(out, key=lambda p: p.images))


def coset_count(r: int, f: int) -> int:
    return factorial(r) // (2 ** f * factorial(f) * factorial(r - 2 * f))


def D_set(r: int, f: int) -> tuple:
    if r <= 8:
        return tuple(sorted(cosets_D(r, f), key=lambda p: p.images))
    return cosets_D_constructive(r, f)


def xi_positions(r: int, f: int) -> tuple:
    """Positions r-1, r-3, ..., r-2f+1 carrying the dot exponents."""
    return tuple(r - 2 * i + 1 for i in range(1, f + 1))


def xi_vectors(a: int, r: int, f: int) -> list[tuple]:
    """N_a^f as length-r tuples, nonzero only at xi_positions."""
    pos = xi_positions(r, f)
    out = []

    def rec(k: int, acc: list):
        if k == len(pos):
            out.append(tuple(acc))
            return
        for e in range(a):
            acc[pos[k] - 1] = e
            rec(k + 1, acc)
        acc[pos[k] - 1] = 0

    rec(0, [0] * r)
    return out


class DeltaIndex(NamedTuple):
    t: Tableau
    xi: tuple
    d: Permutation


def enumerate_delta(f: int, lam: Multipartition, r: int, a: int | None = None) -> list[DeltaIndex]:
    """delta(f, lam) = T^std(lam) x N_a^f x D_r^f."""
    if a is None:
        a = len(lam)
    if size(lam) != r - 2 * f or f < 0 or 2 * f > r:
        raise ValueError("need |lam| = r - 2f and 0 <= f <= r/2")
    return [DeltaIndex(t, xi, d) for t in standard_tableaux(lam)
            for xi in xi_vectors(a, r, f) for d in D_set(r, f)]


def cell_labels(a: int, r: int) -> list[tuple]:
    """Lambda_{a,r} as (f, lam), listed so that higher strata come first."""
    return [(f, lam) for f in range(r // 2, -1, -1) for lam in multipartitions(a, r - 2 * f)]


def cell_ge(x: tuple, y: tuple) -> bool:
    """(f,lam) ⊵ (h,mu) iff f > h, or f = h and lam ⊵ mu."""
    (f, lam), (h, mu) = x, y
    if f != h:
        return f > h
    return dominance_ge(lam, mu)


# ---------------------------------------------------------------- restrictedness

def _part(p: Partition, j: int) -> int:
    return p[j - 1] if 1 <= j <= len(p) else 0


def u_restricted(lam: Multipartition, u: Sequence) -> bool:
    """Restrictedness, orbit by orbit.

    Parameters whose differences are integers form an orbit; each orbit is
    sorted so that earlier parameters exceed later ones by naturals and the
    adjacent-component inequalities are tested on that order.
    """
    u = [as_fraction(x) for x in u]
    if len(u) != len(lam):
        raise ValueError("level mismatch")
    orbits: list[list[int]] = []
    for i, x in enumerate(u):
        for orb in orbits:
            if (u[orb[0]] - x).denominator == 1:
                orb.append(i)
                break
        else:
            orbits.append([i])
    for orb in orbits:
        orb = sorted(orb, key=lambda i: (-u[i], i))
        for s in range(len(orb) - 1):
            i, k = orb[s], orb[s + 1]
            gap = int(u[i] - u[k])
            upper = lam[i]
            lower = lam[k]
            for j in range(1, len(upper) + 1):
                if _part(upper, gap + j) > _part(lower, j):
                    return False
    return True
