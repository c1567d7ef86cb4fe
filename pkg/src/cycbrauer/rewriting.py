"""Noncommutative rewriting for finitely presented algebras over Q.

Words are tuples of letter indices; a smaller index is a smaller letter.
Monomials are compared degree-lexicographically.  ``complete`` runs
Buchberger's procedure on the two-sided ideal of the relations; when the
quotient is finite dimensional this terminates and the normal words form
a basis.
"""
from __future__ import annotations

import heapq
from typing import Iterable, Sequence

from .linalg import QQ

Word = tuple
Poly = dict  # Word -> rational


class CompletionError(RuntimeError):
    pass


def _neg_key(w: Word):
    return (-len(w), tuple(-x for x in w))


def leading_word(p: Poly) -> Word:
    return max(p, key=lambda w: (len(w), w))


def _contains(w: Word, sub: Word) -> bool:
    L = len(sub)
    return any(w[i:i + L] == sub for i in range(len(w) - L + 1))


class GroebnerBasis:
    """A reduced, monic rewriting system: leading word -> tail (lw = -tail)."""

    def __init__(self):
        self.rules: dict[Word, Poly] = {}
        self._lengths: list[int] = []

    def _refresh(self) -> None:
        self._lengths = sorted({len(w) for w in self.rules})

    def find(self, w: Word):
        n = len(w)
        rules = self.rules
        for L in self._lengths:
            if L > n:
                break
            for i in range(n - L + 1):
                tail = rules.get(w[i:i + L])
                if tail is not None:
                    return i, L, tail
        return None

    def is_normal(self, w: Word) -> bool:
        return self.find(w) is None

    def reduce(self, p: Poly) -> Poly:
        """Full normal form of a polynomial."""
        p = {w: QQ(c) for w, c in p.items() if c}
        heap = [(_neg_key(w), w) for w in p]
        heapq.heapify(heap)
        out: Poly = {}
        while heap:
            _, w = heapq.heappop(heap)
            c = p.pop(w, 0)
            if not c:
                continue
            hit = self.find(w)
            if hit is None:
                out[w] = c
                continue
            i, L, tail = hit
            pre, suf = w[:i], w[i + L:]
            for t, tc in tail.items():
                k = pre + t + suf
                old = p.get(k)
                if old is None:
                    p[k] = -c * tc
                    heapq.heappush(heap, (_neg_key(k), k))
                else:
                    p[k] = old - c * tc
        return out

    def normal_words(self, nletters: int, limit: int = 10**6) -> list[Word]:
        """All normal words, shortest first; raises if more than ``limit``."""
        words = [()]
        frontier = [()]
        rules = self.rules
        lengths = self._lengths
        while frontier:
            nxt = []
            for w in frontier:
                for g in range(nletters):
                    x = w + (g,)
                    n = len(x)
                    if any(x[n - L:] in rules for L in lengths if L <= n):
                        continue
                    nxt.append(x)
            words.extend(nxt)
            if len(words) > limit:
                raise CompletionError("normal words exceed limit; quotient looks infinite")
            frontier = nxt
        return words


def complete(relations: Iterable[Poly], max_rules: int = 20000) -> GroebnerBasis:
    """Buchberger completion with the normal (degree-first) selection strategy."""
    gb = GroebnerBasis()
    queue: list = []
    counter = 0
    for rel in relations:
        rel = {tuple(w): QQ(c) for w, c in rel.items() if c}
        if rel:
            heapq.heappush(queue, (max(len(w) for w in rel), counter, None, rel))
            counter += 1
    while queue:
        _, _, pair, p = heapq.heappop(queue)
        if pair is not None:
            a, b, k = pair
            ta, tb = gb.rules.get(a), gb.rules.get(b)
            if ta is None or tb is None:
                continue  # a parent was interreduced away; its replacement spawns its own pairs
            p = {}
            for w, c in ta.items():
                x = w + b[k:]
                p[x] = p.get(x, 0) + c
            for w, c in tb.items():
                x = a[:-k] + w
                p[x] = p.get(x, 0) - c
        r = gb.reduce(p)
        if not r:
            continue
        lw = leading_word(r)
        lc = r[lw]
        tail = {w: c / lc for w, c in r.items() if w != lw}
        for w in [w for w in gb.rules if len(w) >= len(lw) and _contains(w, lw)]:
            old = dict(gb.rules.pop(w))
            old[w] = QQ(1)
            heapq.heappush(queue, (len(w), counter, None, old))
            counter += 1
        gb.rules[lw] = tail
        gb._refresh()
        if len(gb.rules) > max_rules:
            raise CompletionError("rewriting system grew beyond max_rules")
        for w2 in list(gb.rules):
            for a, b in ((lw, w2), (w2, lw)):
                for k in range(1, min(len(a), len(b))):
                    if a[-k:] == b[:k]:
                        heapq.heappush(queue, (len(a) + len(b) - k, counter, (a, b, k), None))
                        counter += 1
                if w2 == lw:
                    break
    # final inter-reduction of tails
    for w in list(gb.rules):
        gb.rules[w] = gb.reduce(gb.rules[w])
    return gb


class Element:
    """An element of a presented algebra, stored as normal word -> coefficient."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: "PresentedAlgebra", terms: Poly):
        self.algebra = algebra
        self.terms = {w: c for w, c in terms.items() if c}

    def _wrap(self, terms: Poly) -> "Element":
        return type(self)(self.algebra, terms)

    def _coerce(self, other) -> "Element":
        if isinstance(other, Element):
            if other.algebra is not self.algebra:
                raise ValueError("elements of different algebras")
            return other
        return self._wrap({(): QQ(other)})

    def __add__(self, other):
        other = self._coerce(other)
        t = dict(self.terms)
        for w, c in other.terms.items():
            t[w] = t.get(w, 0) + c
        return self._wrap(t)

    __radd__ = __add__

    def __neg__(self):
        return self._wrap({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, Element):
            return self.algebra.multiply(self, other)
        c = QQ(other)
        return self._wrap({w: c * x for w, x in self.terms.items()})

    def __rmul__(self, other):
        c = QQ(other)
        return self._wrap({w: c * x for w, x in self.terms.items()})

    def __pow__(self, n: int):
        out = self.algebra.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, word: Word):
        return self.terms.get(tuple(word), QQ(0))

    def vector(self) -> dict:
        """Sparse coordinates in the normal-word basis (by basis index)."""
        idx = self.algebra.index
        return {idx[w]: c for w, c in self.terms.items()}

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=lambda w: (len(w), w)):
            c = self.terms[w]
            mono = self.algebra.word_str(w)
            parts.append(f"{c}*{mono}" if mono != "1" else f"{c}")
        return " + ".join(parts)


class PresentedAlgebra:
    """Quotient of a free algebra by a two-sided ideal, via a completed basis."""

    element_class = Element

    def __init__(self, letters: Sequence[str], relations: Iterable[Poly]):
        self.letters = list(letters)
        self._letter_index = {name: i for i, name in enumerate(self.letters)}
        self.gb = complete(relations)
        self.basis = self.gb.normal_words(len(self.letters))
        self.index = {w: i for i, w in enumerate(self.basis)}
        self._products: dict = {}
        self._letter_products: dict = {}

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def letter(self, name: str) -> int:
        return self._letter_index[name]

    def word_str(self, w: Word) -> str:
        return "*".join(self.letters[x] for x in w) if w else "1"

    def one(self) -> Element:
        return self.element_class(self, {(): QQ(1)})

    def zero(self) -> Element:
        return self.element_class(self, {})

    def word(self, letters: Iterable) -> Element:
        w = tuple(self._letter_index[x] if isinstance(x, str) else x for x in letters)
        return self.element_class(self, self.gb.reduce({w: QQ(1)}))

    def gen(self, name: str) -> Element:
        return self.word([name])

    def basis_element(self, i: int) -> Element:
        return self.element_class(self, {self.basis[i]: QQ(1)})

    def from_vector(self, v: dict) -> Element:
        return self.element_class(self, {self.basis[i]: c for i, c in v.items() if c})

    def reduce_poly(self, p: Poly) -> Element:
        return self.element_class(self, self.gb.reduce(p))

    def _right_letter(self, w: Word, g: int) -> Poly:
        key = (w, g)
        res = self._letter_products.get(key)
        if res is None:
            res = self.gb.reduce({w + (g,): QQ(1)})
            self._letter_products[key] = res
        return res

    def _word_product(self, u: Word, v: Word) -> Poly:
        # every prefix of a normal word is normal, so u*v = (u*v[:-1])*v[-1]
        if not v:
            return {u: QQ(1)}
        key = (u, v)
        res = self._products.get(key)
        if res is None:
            res = {}
            g = v[-1]
            for w, c in self._word_product(u, v[:-1]).items():
                for x, d in self._right_letter(w, g).items():
                    val = res.get(x, 0) + c * d
                    if val:
                        res[x] = val
                    else:
                        del res[x]
            self._products[key] = res
        return res

    def multiply(self, x: Element, y: Element) -> Element:
        out: Poly = {}
        for u, a in x.terms.items():
            for v, b in y.terms.items():
                for w, c in self._word_product(u, v).items():
                    out[w] = out.get(w, 0) + a * b * c
        return self.element_class(self, out)

    def anti_involution(self, x: Element) -> Element:
        """The anti-automorphism fixing every generator (word reversal)."""
        return self.reduce_poly({w[::-1]: c for w, c in x.terms.items()})

    def relation_holds(self, rel: Poly) -> bool:
        return not self.gb.reduce(rel)
