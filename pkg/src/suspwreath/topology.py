"""Integer homology, pseudomanifold and neighborliness tests, dual graphs."""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field
from math import gcd
from itertools import combinations

from .budget import Budget, BudgetExceeded, as_budget
from .complex import (
    SimplicialComplex,
    count_faces,
    face_link,
    format_face,
    iter_face_masks,
)
from .verdict import FAILS, HOLDS, UNKNOWN, PropertyVerdict

# -- Smith normal form --------------------------------------------------------


class SparseMatrix:
    """Integer matrix as a dict of rows with a column index for elimination."""

    def __init__(self, n_rows: int, n_cols: int):
        self.n_rows = n_rows
        self.n_cols = n_cols
        self.rows: dict[int, dict[int, int]] = {}
        self.cols: dict[int, set[int]] = {}

    def __setitem__(self, rc: tuple[int, int], value: int) -> None:
        r, c = rc
        if value:
            self.rows.setdefault(r, {})[c] = value
            self.cols.setdefault(c, set()).add(r)
        else:
            row = self.rows.get(r)
            if row and c in row:
                del row[c]
                self.cols[c].discard(r)

    def __getitem__(self, rc: tuple[int, int]) -> int:
        r, c = rc
        return self.rows.get(r, {}).get(c, 0)

    def copy(self) -> "SparseMatrix":
        m = SparseMatrix(self.n_rows, self.n_cols)
        m.rows = {r: dict(row) for r, row in self.rows.items()}
        m.cols = {c: set(rs) for c, rs in self.cols.items()}
        return m

    def matmul(self, other: "SparseMatrix") -> "SparseMatrix":
        out = SparseMatrix(self.n_rows, other.n_cols)
        for r, row in self.rows.items():
            acc: dict[int, int] = {}
            for k, a in row.items():
                for c, b in other.rows.get(k, {}).items():
                    acc[c] = acc.get(c, 0) + a * b
            for c, v in acc.items():
                out[r, c] = v
        return out

    def is_zero(self) -> bool:
        return not any(self.rows.values())


def _add_row(m: SparseMatrix, dst: int, src: int, f: int) -> None:
    # row[dst] -= f * row[src]
    if not f:
        return
    row = m.rows.setdefault(dst, {})
    for c, v in m.rows[src].items():
        new = row.get(c, 0) - f * v
        if new:
            row[c] = new
            m.cols[c].add(dst)
        elif c in row:
            del row[c]
            m.cols[c].discard(dst)


def _add_col(m: SparseMatrix, dst: int, src: int, f: int) -> None:
    # col[dst] -= f * col[src]
    if not f:
        return
    for r in list(m.cols.get(src, ())):
        row = m.rows[r]
        new = row.get(dst, 0) - f * row[src]
        if new:
            row[dst] = new
            m.cols.setdefault(dst, set()).add(r)
        elif dst in row:
            del row[dst]
            m.cols[dst].discard(r)


def _pick_pivot(m: SparseMatrix) -> tuple[int, int, int] | None:
    best = None
    for r, row in m.rows.items():
        for c, v in row.items():
            if best is None or abs(v) < abs(best[2]):
                best = (r, c, v)
                if abs(v) == 1:
                    return best
    return best


def _eliminate(m: SparseMatrix, r: int, c: int, p: int, diag: list[int]) -> None:
    # pivot is a unit: clearing its column leaves row r removable
    for i in sorted(m.cols[c] - {r}):
        _add_row(m, i, r, m.rows[i][c] * p)
    for j in m.rows[r]:
        m.cols[j].discard(r)
    del m.rows[r]
    m.cols.pop(c, None)
    diag.append(1)


def smith_invariants(m: SparseMatrix) -> list[int]:
    """Non-zero invariant factors ``d_1 | d_2 | ...`` of an integer matrix.

    Pivots are least-magnitude entries.  Unit pivots are taken first, from the
    shortest available row and then the shortest column, to limit fill-in;
    whatever remains is reduced with full row and column operations.
    """
    m = m.copy()
    diag: list[int] = []
    heap = [(len(row), r) for r, row in m.rows.items() if row]
    heapq.heapify(heap)
    while heap:
        size, r = heapq.heappop(heap)
        row = m.rows.get(r)
        if not row or len(row) != size:
            continue
        units = [c for c, v in row.items() if v in (1, -1)]
        if not units:
            continue
        c = min(units, key=lambda c: (len(m.cols[c]), c))
        touched = m.cols[c] - {r}
        _eliminate(m, r, c, row[c], diag)
        for i in touched:
            if m.rows.get(i):
                heapq.heappush(heap, (len(m.rows[i]), i))
    while True:
        pivot = _pick_pivot(m)
        if pivot is None:
            break
        r, c, p = pivot
        if p in (1, -1):
            _eliminate(m, r, c, p, diag)
            continue
        for i in sorted(m.cols[c] - {r}):
            _add_row(m, i, r, m.rows[i][c] // p)
        for j in sorted(set(m.rows[r]) - {c}):
            _add_col(m, j, c, m.rows[r][j] // p)
        if len(m.cols[c]) > 1 or len(m.rows[r]) > 1:
            continue
        del m.rows[r]
        m.cols.pop(c, None)
        diag.append(abs(p))
    return _divisibility_chain(diag)


def _divisibility_chain(diag: list[int]) -> list[int]:
    d = sorted(diag)
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            g = gcd(d[i], d[j])
            if g != d[i]:
                d[i], d[j] = g, d[i] * d[j] // g
    return d


# -- chain complexes ----------------------------------------------------------


def _faces_by_size(K: SimplicialComplex) -> list[list[int]]:
    layers: list[list[int]] = []
    for m in iter_face_masks(K.bitmasks()):
        k = m.bit_count()
        while len(layers) <= k:
            layers.append([])
        layers[k].append(m)
    for layer in layers:
        layer.sort()
    return layers


def boundary_matrices(K: SimplicialComplex) -> list[SparseMatrix]:
    """``∂_i`` for ``i = 0..dim``, including the augmentation ``∂_0: C_0 -> Z``.

    Entry ``[i-face, (i-1)-face]``; vertex order is the complex's canonical
    order and the sign of dropping the vertex at position ``p`` is ``(-1)^p``.
    """
    layers = _faces_by_size(K)
    mats = []
    for k in range(1, len(layers)):
        lower = {f: i for i, f in enumerate(layers[k - 1])}
        mat = SparseMatrix(len(layers[k]), len(layers[k - 1]))
        for r, f in enumerate(layers[k]):
            rest = f
            pos = 0
            while rest:
                low = rest & -rest
                rest ^= low
                mat[r, lower[f ^ low]] = -1 if pos % 2 else 1
                pos += 1
        mats.append(mat)
    return mats


@dataclass(frozen=True)
class HomologyGroup:
    betti: int = 0
    torsion: tuple[int, ...] = ()

    def is_zero(self) -> bool:
        return self.betti == 0 and not self.torsion

    def __str__(self) -> str:
        parts = [] if not self.betti else ["Z"] if self.betti == 1 else [f"Z^{self.betti}"]
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class HomologyGroups:
    """Reduced homology ``H~_i`` for ``i = -1 .. dim``."""

    groups: tuple[HomologyGroup, ...] = field(default_factory=tuple)

    def __getitem__(self, i: int) -> HomologyGroup:
        j = i + 1
        if 0 <= j < len(self.groups):
            return self.groups[j]
        return HomologyGroup()

    def nonzero(self) -> dict[int, HomologyGroup]:
        return {i - 1: g for i, g in enumerate(self.groups) if not g.is_zero()}

    def is_trivial(self) -> bool:
        return not self.nonzero()

    def shifted(self, k: int) -> dict[int, HomologyGroup]:
        return {i + k: g for i, g in self.nonzero().items()}

    def euler_characteristic(self) -> int:
        """Reduced Euler characteristic from the ranks."""
        return sum((-1) ** i * g.betti for i, g in self.nonzero().items())

    def lines(self) -> list[str]:
        return [f"H~_{i - 1} = {g}" for i, g in enumerate(self.groups)]

    def __str__(self) -> str:
        return "\n".join(self.lines())


def reduced_homology(K: SimplicialComplex) -> HomologyGroups:
    if K.is_void():
        raise ValueError("homology of the void complex is not defined here")
    mats = boundary_matrices(K)
    sizes = [1] + [m.n_rows for m in mats]
    invariants = [smith_invariants(m) for m in mats]
    ranks = [len(inv) for inv in invariants]
    groups = []
    # degree i = k - 1 where k indexes sizes
    for k in range(len(sizes)):
        rank_out = ranks[k - 1] if k >= 1 else 0
        rank_in = ranks[k] if k < len(ranks) else 0
        tors = tuple(t for t in invariants[k] if t > 1) if k < len(invariants) else ()
        groups.append(HomologyGroup(sizes[k] - rank_out - rank_in, tors))
    return HomologyGroups(tuple(groups))


def rational_betti(K: SimplicialComplex) -> dict[int, int]:
    return {i: g.betti for i, g in reduced_homology(K).nonzero().items() if g.betti}


def is_z_acyclic(K: SimplicialComplex) -> bool:
    return reduced_homology(K).is_trivial()


# -- pseudomanifolds ----------------------------------------------------------

CLOSED = "closed"
WITH_BOUNDARY = "with-boundary"
NEITHER = "neither"


def ridge_counts(K: SimplicialComplex) -> dict[frozenset, int]:
    counts: dict[frozenset, int] = {}
    for f in K.facets:
        for x in f:
            r = f - {x}
            counts[r] = counts.get(r, 0) + 1
    return counts


def is_pseudomanifold(K: SimplicialComplex) -> str:
    if K.is_void() or not K.is_pure():
        raise ValueError("pseudomanifold test needs a pure complex")
    counts = ridge_counts(K).values()
    if all(c == 2 for c in counts):
        return CLOSED
    if all(c <= 2 for c in counts):
        return WITH_BOUNDARY
    return NEITHER


# -- neighborliness -----------------------------------------------------------


def _packing_bound(sets: list[int], allowed: int) -> int:
    used = 0
    count = 0
    for s in sorted(sets, key=lambda s: (s & allowed).bit_count()):
        s &= allowed
        if not s & used:
            used |= s
            count += 1
    return count


def _hitting_set(sets: list[int], allowed: int, chosen: int, depth: int, budget: Budget) -> int | None:
    budget.tick()
    if not sets:
        return chosen
    if depth == 0 or _packing_bound(sets, allowed) > depth:
        return None
    target = min(sets, key=lambda s: ((s & allowed).bit_count(), s))
    choices = target & allowed
    freq = []
    rest = choices
    while rest:
        low = rest & -rest
        rest ^= low
        freq.append((-sum(1 for s in sets if s & low), low))
    freq.sort()
    for _, x in freq:
        found = _hitting_set([s for s in sets if not s & x], allowed, chosen | x, depth - 1, budget)
        if found is not None:
            return found
        allowed &= ~x
    return None


def find_small_nonface(K: SimplicialComplex, k: int, budget=None) -> frozenset | None:
    """A vertex set of size ``<= k`` that is not a face, or ``None``.

    Non-faces are exactly the sets meeting every facet complement, so this is
    a bounded hitting-set search over the complements.
    """
    n = K.n_vertices
    full = (1 << n) - 1
    comps = sorted({full & ~m for m in K.bitmasks()})
    if 0 in comps:
        return None
    found = _hitting_set(comps, full, 0, k, as_budget(budget))
    return None if found is None else K.face_from_mask(found)


def is_k_neighborly(K: SimplicialComplex, k: int, budget=None) -> tuple[bool, frozenset | None]:
    """``(True, None)`` if every ``k`` vertices span a face, else ``(False, witness)``."""
    witness = find_small_nonface(K, k, budget)
    return witness is None, witness


def neighborliness(K: SimplicialComplex, budget=None) -> int:
    """Largest ``k`` such that ``K`` is ``k``-neighborly.

    A simplex is ``k``-neighborly for every ``k``; its vertex count is returned.
    """
    if K.is_void():
        raise ValueError("neighborliness of the void complex is undefined")
    budget = as_budget(budget)
    n = K.n_vertices
    for k in range(1, n + 1):
        if find_small_nonface(K, k, budget) is not None:
            return k - 1
    return n


def neighborly_wreath_parameter_check(e: int, n: int, d: int) -> bool:
    """Whether ``∂Δ_d ≀ K`` can be neighborly for a neighborly ``(e-1)``-sphere ``K`` on ``n`` vertices."""
    if d < 1 or n < e + 2:
        raise ValueError("need d >= 1 and n >= e + 2")
    return (e - 1) % 2 == 1 and e + 2 <= n <= e + 3 and (n != e + 3 or d == 1)


def neighborly_target(K: SimplicialComplex) -> int:
    """``floor(e/2)`` for an ``(e-1)``-dimensional complex."""
    return (K.dimension() + 1) // 2


# -- Cohen-Macaulay -------------------------------------------------------------

CM_FACE_LIMIT = 2**20


def is_cohen_macaulay_Q(K: SimplicialComplex, face_limit: int = CM_FACE_LIMIT) -> PropertyVerdict:
    """Rational Cohen-Macaulay test: every face link has homology only in top degree."""
    total = sum(count_faces(K.bitmasks()))
    if total > face_limit:
        return PropertyVerdict(UNKNOWN, reason=f"{total} faces exceed the limit {face_limit}")
    checked = 0
    for m in iter_face_masks(K.bitmasks()):
        G = K.face_from_mask(m)
        L = face_link(K, G)
        checked += 1
        top = L.dimension()
        for i, b in sorted(rational_betti(L).items()):
            if i < top:
                return PropertyVerdict(
                    FAILS, certificate=(G, i), nodes_explored=checked,
                    reason=f"link of {{{format_face(G)}}} has H~_{i} of rank {b}",
                )
    return PropertyVerdict(HOLDS, nodes_explored=checked)


# -- dual graph -----------------------------------------------------------------


@dataclass(frozen=True)
class DualGraph:
    facets: tuple[frozenset, ...]
    adjacency: tuple[tuple[int, ...], ...]

    def neighbors(self, i: int) -> tuple[int, ...]:
        return self.adjacency[i]


def dual_graph(K: SimplicialComplex) -> DualGraph:
    if K.is_void() or not K.is_pure():
        raise ValueError("dual graph needs a pure complex")
    facets = K.facets
    by_ridge: dict[frozenset, list[int]] = {}
    for i, f in enumerate(facets):
        for x in f:
            by_ridge.setdefault(f - {x}, []).append(i)
    adj: list[set[int]] = [set() for _ in facets]
    for members in by_ridge.values():
        for a, b in combinations(members, 2):
            adj[a].add(b)
            adj[b].add(a)
    return DualGraph(facets, tuple(tuple(sorted(s)) for s in adj))


def _bfs(G: DualGraph, src: int) -> list[int]:
    dist = [-1] * len(G.facets)
    dist[src] = 0
    q = deque([src])
    while q:
        u = q.popleft()
        for w in G.adjacency[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                q.append(w)
    return dist


def dual_diameter(K: SimplicialComplex) -> int:
    G = dual_graph(K)
    best = 0
    for s in range(len(G.facets)):
        dist = _bfs(G, s)
        if min(dist) < 0:
            raise ValueError("disconnected dual graph")
        best = max(best, max(dist))
    return best


def hirsch_gap(K: SimplicialComplex) -> int:
    """``(f_0 - e) - diameter``; negative values violate the Hirsch bound."""
    e = K.dimension() + 1
    return (K.n_vertices - e) - dual_diameter(K)


def _facet_index(K: SimplicialComplex, F) -> int:
    F = frozenset(F)
    try:
        return K.facets.index(F)
    except ValueError:
        raise ValueError(f"not a facet: {{{format_face(F)}}}") from None


def facet_distance(K: SimplicialComplex, F1, F2) -> tuple[int, list[frozenset]]:
    """Dual-graph distance and one shortest facet path from ``F1`` to ``F2``."""
    G = dual_graph(K)
    a, b = _facet_index(K, F1), _facet_index(K, F2)
    parent = {a: None}
    q = deque([a])
    while q:
        u = q.popleft()
        if u == b:
            break
        for w in G.adjacency[u]:
            if w not in parent:
                parent[w] = u
                q.append(w)
    if b not in parent:
        raise ValueError("disconnected dual graph")
    path = []
    u = b
    while u is not None:
        path.append(G.facets[u])
        u = parent[u]
    path.reverse()
    return len(path) - 1, path


NON_REVISITING = "non-revisiting"
ALL_REVISIT = "all-revisit"


@dataclass(frozen=True)
class RevisitReport:
    status: str
    witness: tuple[frozenset, ...] | None
    length_cap: int
    nodes_explored: int


def revisiting_path_report(
    K: SimplicialComplex, F1, F2, length_cap: int | None = None, budget=None
) -> RevisitReport:
    """Search for a facet path from ``F1`` to ``F2`` that never re-enters a vertex it left.

    A non-revisiting path abandons a new vertex outside ``F2`` at every step,
    so its length is at most ``f_0 - |F2|``; with a cap at least that large an
    exhausted search proves that every path revisits.
    """
    G = dual_graph(K)
    a, b = _facet_index(K, F1), _facet_index(K, F2)
    if length_cap is None:
        length_cap = dual_diameter(K) + 4
    complete_cap = K.n_vertices - len(G.facets[b])
    budget = as_budget(budget)
    facets = G.facets
    path = [a]

    def rec(u: int, left: frozenset) -> bool:
        if u == b:
            return True
        if len(path) - 1 >= length_cap:
            return False
        for w in G.adjacency[u]:
            entering = facets[w] - facets[u]
            if entering & left:
                continue
            budget.tick()
            path.append(w)
            if rec(w, left | (facets[u] - facets[w])):
                return True
            path.pop()
        return False

    try:
        found = rec(a, frozenset())
    except BudgetExceeded:
        return RevisitReport(UNKNOWN, None, length_cap, budget.nodes)
    if found:
        return RevisitReport(NON_REVISITING, tuple(facets[i] for i in path), length_cap, budget.nodes)
    status = ALL_REVISIT if length_cap >= complete_cap else UNKNOWN
    return RevisitReport(status, None, length_cap, budget.nodes)


def is_revisiting(path) -> bool:
    """True if some vertex leaves the running facet and later comes back."""
    left: set = set()
    for p, q in zip(path, path[1:]):
        p, q = frozenset(p), frozenset(q)
        if (q - p) & left:
            return True
        left |= p - q
    return False
