"""Vertex bijections preserving facets: refinement plus backtracking.

Vertices are first colored by (facet degree, f-vector of the vertex link);
colors are then refined by the multiset of color tuples of incident facets
until the partition stabilizes.  Both complexes are refined together so color
ids are comparable across them.
"""

from __future__ import annotations

from collections import Counter

from .budget import Budget, as_budget
from .complex import SimplicialComplex, count_faces


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class _Side:
    def __init__(self, K: SimplicialComplex):
        self.K = K
        self.n = K.n_vertices
        self.masks = K.bitmasks()
        self.incident: list[list[int]] = [[] for _ in range(self.n)]
        for m in self.masks:
            for i in _bits(m):
                self.incident[i].append(m)
        self.by_size: dict[int, list[int]] = {}
        for m in self.masks:
            self.by_size.setdefault(m.bit_count(), []).append(m)
        self.facet_set = frozenset(self.masks)
        self._inv = None

    def initial_invariants(self) -> list[tuple]:
        if self._inv is None:
            self._inv = self._invariants()
        return self._inv

    def _invariants(self) -> list[tuple]:
        out = []
        for i in range(self.n):
            bit = 1 << i
            link = [m & ~bit for m in self.incident[i]]
            out.append((len(link), tuple(count_faces(link))))
        return out


def _refine(sides: list[_Side], tags: list[list[int]] | None = None) -> list[list[int]]:
    """Stable joint coloring; ``tags`` individualize vertices (``-1`` = none)."""
    raw = [s.initial_invariants() for s in sides]
    if tags is not None:
        raw = [[(t, c) for t, c in zip(tg, r)] for tg, r in zip(tags, raw)]
    table = {c: k for k, c in enumerate(sorted({c for r in raw for c in r}))}
    colors = [[table[c] for c in r] for r in raw]
    n_classes = len(table)
    while True:
        sigs = []
        for s, col in zip(sides, colors):
            sig = []
            for i in range(s.n):
                around = sorted(tuple(sorted(col[j] for j in _bits(m))) for m in s.incident[i])
                sig.append((col[i], tuple(around)))
            sigs.append(sig)
        table = {c: k for k, c in enumerate(sorted({c for r in sigs for c in r}))}
        new = [[table[c] for c in r] for r in sigs]
        if len(table) == n_classes:
            return new
        colors, n_classes = new, len(table)


class Matcher:
    """Backtracking search for facet-preserving bijections ``K -> L``."""

    def __init__(self, K: SimplicialComplex, L: SimplicialComplex):
        self.a = _Side(K)
        self.b = _Side(L)
        self.ca, self.cb = _refine([self.a, self.b])

    def plausible(self) -> bool:
        a, b = self.a, self.b
        if a.n != b.n or len(a.masks) != len(b.masks):
            return False
        if sorted(m.bit_count() for m in a.masks) != sorted(m.bit_count() for m in b.masks):
            return False
        return Counter(self.ca) == Counter(self.cb)

    def _order(self, fixed: list[int]) -> list[int]:
        a = self.a
        size = Counter(self.ca)
        order = list(fixed)
        chosen = set(order)
        touch = [0] * a.n
        for x in order:
            for m in a.incident[x]:
                for y in _bits(m):
                    touch[y] += 1
        while len(order) < a.n:
            x = min(
                (i for i in range(a.n) if i not in chosen),
                key=lambda i: (-touch[i], size[self.ca[i]], i),
            )
            order.append(x)
            chosen.add(x)
            for m in a.incident[x]:
                for y in _bits(m):
                    touch[y] += 1
        return order

    def _consistent(self, x: int, y: int, fwd: list[int], back: list[int]) -> bool:
        for m in self.a.incident[x]:
            img = 0
            for i in _bits(m):
                if fwd[i] >= 0:
                    img |= 1 << fwd[i]
            if not any(img & ~g == 0 for g in self.b.by_size.get(m.bit_count(), ())):
                return False
        for m in self.b.incident[y]:
            pre = 0
            for j in _bits(m):
                if back[j] >= 0:
                    pre |= 1 << back[j]
            if not any(pre & ~g == 0 for g in self.a.by_size.get(m.bit_count(), ())):
                return False
        return True

    def find(self, fixed: list[tuple[int, int]] = (), budget: Budget | int | None = None):
        """First bijection (as list ``i -> j``) extending ``fixed``, or ``None``.

        Candidates are tried in increasing index order, so the witness is the
        lexicographically least one for the search order.
        """
        budget = as_budget(budget)
        if not self.plausible():
            return None
        n = self.a.n
        fwd = [-1] * n
        back = [-1] * n
        for x, y in fixed:
            if self.ca[x] != self.cb[y] or back[y] >= 0 or fwd[x] >= 0:
                return None
            fwd[x], back[y] = y, x
        for x, y in fixed:
            if not self._consistent(x, y, fwd, back):
                return None
        ca, cb = self.ca, self.cb
        if fixed:
            ta, tb = [-1] * n, [-1] * n
            for k, (x, y) in enumerate(fixed):
                ta[x], tb[y] = k, k
            ca, cb = _refine([self.a, self.b], [ta, tb])
            if Counter(ca) != Counter(cb):
                return None
        order = self._order([x for x, _ in fixed])
        start = len(fixed)
        by_color: dict[int, list[int]] = {}
        for j in range(n):
            by_color.setdefault(cb[j], []).append(j)

        def rec(pos: int) -> bool:
            if pos == n:
                return frozenset(
                    sum(1 << fwd[i] for i in _bits(m)) for m in self.a.masks
                ) == self.b.facet_set
            x = order[pos]
            for y in by_color.get(ca[x], ()):
                if back[y] >= 0:
                    continue
                budget.tick()
                fwd[x], back[y] = y, x
                if self._consistent(x, y, fwd, back) and rec(pos + 1):
                    return True
                fwd[x], back[y] = -1, -1
            return False

        if n == 0:
            return [] if self.a.facet_set == self.b.facet_set else None
        return list(fwd) if rec(start) else None


def find_isomorphism(K: SimplicialComplex, L: SimplicialComplex, budget=None) -> dict[str, str] | None:
    """A label bijection mapping the facets of ``K`` onto those of ``L``."""
    m = Matcher(K, L)
    perm = m.find(budget=budget)
    if perm is None:
        return None
    return {K.vertices[i]: L.vertices[j] for i, j in enumerate(perm)}


def is_isomorphic(K: SimplicialComplex, L: SimplicialComplex, budget=None) -> bool:
    return find_isomorphism(K, L, budget) is not None
