"""Vertex-decomposability, shellability, constructibility, cones, non-evasiveness
and collapsibility, each with a certificate and an independent verifier.

Searches are budgeted by node count and answer ``unknown`` when the budget
runs out.  Memo tables are keyed on labelled facet sets.  Cheap necessary
conditions (Euler characteristic, homology) short-circuit hopeless searches
and the obstruction is returned as the certificate.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .budget import Budget, BudgetExceeded, as_budget
from .complex import (
    SimplicialComplex,
    deletion,
    euler_characteristic,
    face_key,
    format_face,
    iter_face_masks,
    link,
)
from .constructions import one_point_suspension, reduced_join_steps, suspension_labels
from .topology import reduced_homology
from .verdict import FAILS, HOLDS, UNKNOWN, PropertyVerdict


def _require_pure(K: SimplicialComplex) -> None:
    if not K.is_pure():
        raise ValueError("complex is not pure")


def _homology_below_top(K: SimplicialComplex):
    """First ``i < dim`` with ``H~_i(K) != 0`` (``None`` if there is none)."""
    if K.is_void() or K.dimension() < 0:
        return None
    H = reduced_homology(K)
    below = [i for i in H.nonzero() if i < K.dimension()]
    return min(below) if below else None


def _run(search, budget) -> PropertyVerdict:
    budget = as_budget(budget)
    try:
        return search(budget)
    except BudgetExceeded:
        return PropertyVerdict(UNKNOWN, None, budget.nodes, "budget exhausted")


# -- vertex decomposability ---------------------------------------------------
#
# A shedding tree is either ("simplex", facet) or (v, link_tree, deletion_tree).


def is_vertex_decomposable(K: SimplicialComplex, budget=None) -> PropertyVerdict:
    _require_pure(K)
    if K.is_void():
        raise ValueError("void complex")

    def search(b: Budget) -> PropertyVerdict:
        if len(K.facets) > 1:
            i = _homology_below_top(K)
            if i is not None:
                return PropertyVerdict(FAILS, ("homology", i), b.nodes, f"H~_{i} != 0 below the top dimension")
        memo: dict = {}
        tree = _vd(K, memo, b)
        if tree is None:
            return PropertyVerdict(FAILS, None, b.nodes, "no shedding vertex order exists")
        return PropertyVerdict(HOLDS, tree, b.nodes)

    return _run(search, budget)


def _vd(K: SimplicialComplex, memo: dict, b: Budget):
    key = K.facets
    if key in memo:
        return memo[key]
    b.tick()
    if len(K.facets) == 1:
        out = ("simplex", K.facets[0])
    elif not K.is_pure():
        out = None
    else:
        out = None
        for v in K.vertices:
            D = deletion(K, v)
            if not D.is_pure():
                continue
            tl = _vd(link(K, v), memo, b)
            if tl is None:
                continue
            td = _vd(D, memo, b)
            if td is not None:
                out = (v, tl, td)
                break
    memo[key] = out
    return out


def verify_shedding_tree(K: SimplicialComplex, tree) -> bool:
    if not K.is_pure():
        return False
    if tree[0] == "simplex" and len(tree) == 2:
        return K.facets == (frozenset(tree[1]),)
    v, tl, td = tree
    if v not in K.index():
        return False
    return verify_shedding_tree(link(K, v), tl) and verify_shedding_tree(deletion(K, v), td)


# -- shellability -------------------------------------------------------------


def verify_shelling(K: SimplicialComplex, order: Sequence[Iterable[str]]) -> bool:
    """Exact check of the shelling condition for ``order`` on the pure ``K``."""
    order = [frozenset(f) for f in order]
    if not K.is_pure() or sorted(order, key=face_key) != list(K.facets):
        return False
    for k in range(1, len(order)):
        F = order[k]
        ridges = [F & G for G in order[:k] if len(F & G) == len(F) - 1]
        for G in order[:k]:
            if not any(F & G <= r for r in ridges):
                return False
    return True


def _shell_step_ok(F: int, placed: Sequence[int], size: int) -> bool:
    missing = 0
    for G in placed:
        if (F & G).bit_count() == size - 1:
            missing |= F & ~G
    return all(F & ~G & missing for G in placed)


def find_shelling(K: SimplicialComplex, budget=None) -> PropertyVerdict:
    """Backtracking over facet orders; states are sets of placed facets.

    Whether a facet may come next only depends on the set already placed, so
    failed sets are remembered.  The certificate is the facet order.
    """
    if K.is_void():
        raise ValueError("void complex")
    if not K.is_pure():
        return PropertyVerdict(FAILS, None, 0, "complex is not pure")

    def search(b: Budget) -> PropertyVerdict:
        masks = K.bitmasks()
        m = len(masks)
        if m > 1:
            i = _homology_below_top(K)
            if i is not None:
                return PropertyVerdict(FAILS, ("homology", i), b.nodes, f"H~_{i} != 0 below the top dimension")
        size = masks[0].bit_count()
        failed: set[int] = set()
        order: list[int] = []

        def rec(state: int) -> bool:
            if len(order) == m:
                return True
            if state in failed:
                return False
            b.tick()
            placed = [masks[i] for i in order]
            for i in range(m):
                if state >> i & 1:
                    continue
                if order and not _shell_step_ok(masks[i], placed, size):
                    continue
                order.append(i)
                if rec(state | 1 << i):
                    return True
                order.pop()
            failed.add(state)
            return False

        if rec(0):
            return PropertyVerdict(HOLDS, [K.facets[i] for i in order], b.nodes)
        return PropertyVerdict(FAILS, None, b.nodes, "no shelling order exists")

    return _run(search, budget)


def _split_suspension_facet(F: frozenset, v: str, a: str, b: str) -> frozenset:
    return (F - {a, b}) | {v} if a in F and b in F else F - {a, b}


def lift_shelling(
    K: SimplicialComplex, order: Sequence[Iterable[str]], v: str, labels: tuple[str, str] | None = None
) -> list[frozenset]:
    """Shelling of ``Susp_1(v, K)`` from a shelling of ``K``.

    A facet avoiding ``v`` becomes the consecutive pair ``F + v'``, ``F + v''``;
    a facet containing ``v`` becomes ``F - v + v' + v''``.
    """
    order = [frozenset(f) for f in order]
    if not verify_shelling(K, order):
        raise ValueError("input is not a shelling of the complex")
    a, b = labels if labels is not None else suspension_labels(K, v)
    out = []
    for F in order:
        if v in F:
            out.append((F - {v}) | {a, b})
        else:
            out += [F | {a}, F | {b}]
    if not verify_shelling(one_point_suspension(K, v, (a, b)), out):
        raise RuntimeError("lifted order failed the shelling check")
    return out


def project_shelling(
    K: SimplicialComplex, order: Sequence[Iterable[str]], v: str, labels: tuple[str, str] | None = None
) -> list[frozenset]:
    """Shelling of ``K`` induced by a shelling of ``Susp_1(v, K)``.

    Each facet is sent to the facet of ``K`` it comes from; repeats are
    dropped, keeping first occurrences.
    """
    a, b = labels if labels is not None else suspension_labels(K, v)
    out, seen = [], set()
    for F in order:
        G = _split_suspension_facet(frozenset(F), v, a, b)
        if G not in seen:
            seen.add(G)
            out.append(G)
    if not verify_shelling(K, out):
        raise RuntimeError("projected order failed the shelling check")
    return out


def lift_shelling_to_wreath(d: int, K: SimplicialComplex, order: Sequence[Iterable[str]]) -> list[frozenset]:
    """Shelling of ``∂Δ_d ≀ K`` by lifting through every reduced join in turn."""
    L, cur = K, [frozenset(f) for f in order]
    for v in K.vertices:
        L, cur = _lift_along_joins(L, cur, v, d, lift_shelling)
    return cur


def _lift_along_joins(L, cur, v, d, lift):
    steps, rename = reduced_join_steps(L, v, d)
    for target, a, b in steps:
        cur = lift(L, cur, target, (a, b))
        L = one_point_suspension(L, target, (a, b))
    if rename:
        L = L.relabel(rename)
        cur = _rename_certificate(cur, rename)
    return L, cur


def _rename_certificate(cert, rename):
    if isinstance(cert, MorseMatching):
        return MorseMatching(
            (frozenset(rename.get(x, x) for x in s), frozenset(rename.get(x, x) for x in t)) for s, t in cert.pairs
        )
    return [frozenset(rename.get(x, x) for x in F) for F in cert]


# -- constructibility ---------------------------------------------------------
#
# A construction tree is ("simplex", facet) or ("split", t1, t2, t_intersection)
# where t1/t2 build the subcomplexes and t_intersection their intersection.


def _generated(facets: Iterable[frozenset]) -> SimplicialComplex:
    return SimplicialComplex(facets, prune=True)


def _intersection(A: SimplicialComplex, B: SimplicialComplex) -> SimplicialComplex:
    return _generated(F & G for F in A.facets for G in B.facets)


def verify_construction(K: SimplicialComplex, tree) -> bool:
    if not K.is_pure():
        return False
    if tree[0] == "simplex":
        return K.facets == (frozenset(tree[1]),)
    _, t1, t2, t3 = tree
    K1, K2 = _tree_complex(t1), _tree_complex(t2)
    if K1 is None or K2 is None:
        return False
    dim = K.dimension()
    if set(K1.facets) | set(K2.facets) != set(K.facets):
        return False
    if not K1.is_pure() or not K2.is_pure() or K1.dimension() != dim or K2.dimension() != dim:
        return False
    I = _intersection(K1, K2)
    if not I.is_pure() or I.dimension() != dim - 1:
        return False
    return verify_construction(K1, t1) and verify_construction(K2, t2) and verify_construction(I, t3)


def _tree_complex(tree) -> SimplicialComplex | None:
    if tree[0] == "simplex":
        return SimplicialComplex([tree[1]])
    A, B = _tree_complex(tree[1]), _tree_complex(tree[2])
    if A is None or B is None:
        return None
    return SimplicialComplex(set(A.facets) | set(B.facets), prune=True)


def _tree_from_shelling(order: Sequence[frozenset]) -> tuple:
    """Construction tree from a shelling: peel off the last facet each time."""
    if len(order) == 1:
        return ("simplex", order[0])
    F = order[-1]
    rest = list(order[:-1])
    I = _generated(F & G for G in rest)
    # any facet order of a pure subcomplex of ∂F is a shelling
    return ("split", _tree_from_shelling(rest), ("simplex", F), _tree_from_shelling(list(I.facets)))


def is_constructible(K: SimplicialComplex, budget=None) -> PropertyVerdict:
    """Shelling first (shellable implies constructible), then bipartition search."""
    _require_pure(K)
    if K.is_void():
        raise ValueError("void complex")

    def search(b: Budget) -> PropertyVerdict:
        if len(K.facets) > 1:
            i = _homology_below_top(K)
            if i is not None:
                return PropertyVerdict(FAILS, ("homology", i), b.nodes, f"H~_{i} != 0 below the top dimension")
        sh = find_shelling(K, b)
        if sh.holds:
            return PropertyVerdict(HOLDS, _tree_from_shelling(sh.certificate), b.nodes, "from a shelling")
        tree = _construct(K, {}, b)
        if tree is None:
            return PropertyVerdict(FAILS, None, b.nodes, "no construction exists")
        return PropertyVerdict(HOLDS, tree, b.nodes)

    return _run(search, budget)


def _construct(K: SimplicialComplex, memo: dict, b: Budget):
    key = K.facets
    if key in memo:
        return memo[key]
    b.tick()
    facets = K.facets
    m = len(facets)
    out = None
    if m == 1:
        out = ("simplex", facets[0])
    elif K.is_pure():
        dim = K.dimension()
        # facet 0 always goes to the first part
        for bits in range(1 << (m - 1)):
            part = bits << 1
            if part == (1 << m) - 2:
                continue
            A = SimplicialComplex._trusted(facets[i] for i in range(m) if not part >> i & 1)
            B = SimplicialComplex._trusted(facets[i] for i in range(m) if part >> i & 1)
            I = _intersection(A, B)
            if not I.is_pure() or I.is_void() or I.dimension() != dim - 1:
                continue
            tI = _construct(I, memo, b)
            if tI is None:
                continue
            tA = _construct(A, memo, b)
            if tA is None:
                continue
            tB = _construct(B, memo, b)
            if tB is not None:
                out = ("split", tA, tB, tI)
                break
    memo[key] = out
    return out


# -- cones and non-evasiveness ------------------------------------------------


def is_cone(K: SimplicialComplex) -> PropertyVerdict:
    if K.is_void():
        return PropertyVerdict(FAILS, None, 0, "void complex")
    common = frozenset.intersection(*K.facets)
    if not common:
        return PropertyVerdict(FAILS, None, 1, "no vertex lies in every facet")
    apex = min(common, key=lambda x: face_key([x]))
    return PropertyVerdict(HOLDS, apex, 1)


# A decision tree is ("point", v) or (v, link_tree, deletion_tree).


def is_non_evasive(K: SimplicialComplex, budget=None) -> PropertyVerdict:
    def search(b: Budget) -> PropertyVerdict:
        if K.is_void() or K.n_vertices == 0:
            return PropertyVerdict(FAILS, None, 0, "no vertices")
        chi = euler_characteristic(K, reduced=True)
        if chi != 0:
            return PropertyVerdict(FAILS, ("euler", chi), b.nodes, "reduced Euler characteristic is not 0")
        H = reduced_homology(K).nonzero()
        if H:
            i = min(H)
            return PropertyVerdict(FAILS, ("homology", i), b.nodes, f"H~_{i} != 0")
        tree = _ne(K, {}, b)
        if tree is None:
            return PropertyVerdict(FAILS, None, b.nodes, "no evasion-free vertex order exists")
        return PropertyVerdict(HOLDS, tree, b.nodes)

    return _run(search, budget)


def _ne(K: SimplicialComplex, memo: dict, b: Budget):
    key = K.facets
    if key in memo:
        return memo[key]
    b.tick()
    out = None
    if K.n_vertices == 1:
        out = ("point", K.vertices[0])
    elif K.n_vertices > 1 and euler_characteristic(K, reduced=True) == 0:
        common = frozenset.intersection(*K.facets)
        # an apex first: its link and deletion coincide
        order = sorted(common, key=lambda x: face_key([x])) + [v for v in K.vertices if v not in common]
        for v in order:
            L = link(K, v)
            if L.n_vertices == 0:
                continue
            tl = _ne(L, memo, b)
            if tl is None:
                continue
            td = _ne(deletion(K, v), memo, b)
            if td is not None:
                out = (v, tl, td)
                break
    memo[key] = out
    return out


def verify_decision_tree(K: SimplicialComplex, tree) -> bool:
    if tree[0] == "point" and len(tree) == 2:
        return K.vertices == (tree[1],)
    v, tl, td = tree
    if v not in K.index() or K.n_vertices < 2:
        return False
    return verify_decision_tree(link(K, v), tl) and verify_decision_tree(deletion(K, v), td)


# -- Morse matchings ----------------------------------------------------------


@dataclass(frozen=True)
class MorseMatching:
    """Matched pairs stored as ``(smaller, larger)``; input may use either order."""

    pairs: tuple[tuple[frozenset, frozenset], ...]

    def __init__(self, pairs: Iterable[tuple[Iterable[str], Iterable[str]]]):
        norm = []
        for s, t in pairs:
            s, t = frozenset(s), frozenset(t)
            if len(s) > len(t):
                s, t = t, s
            norm.append((s, t))
        norm.sort(key=lambda p: (len(p[0]), face_key(p[0]), face_key(p[1])))
        object.__setattr__(self, "pairs", tuple(norm))

    def critical_vertex(self) -> str | None:
        for s, t in self.pairs:
            if not s and len(t) == 1:
                return next(iter(t))
        return None

    def lines(self) -> list[str]:
        return [f"{_fmt(s)} -> {_fmt(t)}" for s, t in self.pairs]


def _fmt(face: frozenset) -> str:
    return format_face(face) if face else "EMPTY"


def critical_vertex(mu: MorseMatching) -> str | None:
    return mu.critical_vertex()


def check_morse_matching(K: SimplicialComplex, mu) -> tuple[bool, str]:
    """``(ok, reason)`` for a perfect acyclic matching on the Hasse diagram with ∅."""
    if not isinstance(mu, MorseMatching):
        mu = MorseMatching(mu)
    idx = K.index()
    faces = set(iter_face_masks(K.bitmasks()))
    partner: dict[int, int] = {}
    for s, t in mu.pairs:
        if not s <= t or len(t) != len(s) + 1:
            return False, f"{_fmt(s)} -> {_fmt(t)} is not a Hasse edge"
        if any(x not in idx for x in t):
            return False, f"{_fmt(t)} is not a face"
        ms, mt = sum(1 << idx[x] for x in s), sum(1 << idx[x] for x in t)
        if mt not in faces:
            return False, f"{_fmt(t)} is not a face"
        if ms in partner or mt in partner:
            return False, "a face is matched twice"
        partner[ms], partner[mt] = mt, ms
    if len(partner) != len(faces):
        return False, f"{len(faces) - len(partner)} faces unmatched"
    # directed cycles only live between two consecutive layers
    by_size: dict[int, list[int]] = {}
    for f in faces:
        by_size.setdefault(f.bit_count(), []).append(f)
    for k in sorted(by_size):
        upper = by_size.get(k + 1)
        if not upper:
            continue
        adj: dict[int, list[int]] = {}
        for t in upper:
            rest = t
            while rest:
                low = rest & -rest
                rest ^= low
                s = t ^ low
                if partner.get(s) == t:
                    adj.setdefault(t, []).append(s)
                else:
                    adj.setdefault(s, []).append(t)
        if _has_cycle(adj):
            return False, f"cycle between layers {k - 1} and {k}"
    return True, ""


def _has_cycle(adj: dict[int, list[int]]) -> bool:
    state: dict[int, int] = {}
    for root in adj:
        if root in state:
            continue
        state[root] = 1
        stack = [(root, iter(adj.get(root, ())))]
        while stack:
            node, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                state[node] = 2
                stack.pop()
                continue
            st = state.get(nxt, 0)
            if st == 1:
                return True
            if st == 0:
                state[nxt] = 1
                stack.append((nxt, iter(adj.get(nxt, ()))))
    return False


def verify_morse_matching(K: SimplicialComplex, mu) -> bool:
    return check_morse_matching(K, mu)[0]


def find_morse_matching(K: SimplicialComplex, budget=None) -> PropertyVerdict:
    """Search for a sequence of elementary collapses down to one vertex.

    The collapsed pairs plus ``(∅, last vertex)`` form a perfect Morse
    matching.  Failed intermediate face sets are remembered.
    """

    def search(b: Budget) -> PropertyVerdict:
        if K.is_void() or K.n_vertices == 0:
            return PropertyVerdict(FAILS, None, 0, "no vertices")
        chi = euler_characteristic(K, reduced=True)
        if chi != 0:
            return PropertyVerdict(FAILS, ("euler", chi), 0, "reduced Euler characteristic is not 0")
        H = reduced_homology(K).nonzero()
        if H:
            i = min(H)
            return PropertyVerdict(FAILS, ("homology", i), 0, f"H~_{i} != 0")
        pairs = _collapse(K, b)
        if pairs is None:
            return PropertyVerdict(FAILS, None, b.nodes, "no collapse sequence exists")
        mu = MorseMatching((K.face_from_mask(s), K.face_from_mask(t)) for s, t in pairs)
        return PropertyVerdict(HOLDS, mu, b.nodes)

    return _run(search, budget)


def _collapse(K: SimplicialComplex, b: Budget):
    faces = [f for f in iter_face_masks(K.bitmasks()) if f]
    cof: dict[int, set[int]] = {f: set() for f in faces}
    for t in faces:
        rest = t
        while rest:
            low = rest & -rest
            rest ^= low
            if t ^ low:
                cof[t ^ low].add(t)
    alive = set(faces)
    failed: set[frozenset] = set()
    done: list[tuple[int, int]] = []

    def free_pairs():
        out = []
        for s in alive:
            if len(cof[s]) == 1:
                t = next(iter(cof[s]))
                if not cof[t]:
                    out.append((-t.bit_count(), s, t))
        out.sort()
        return [(s, t) for _, s, t in out]

    def remove(s, t):
        alive.difference_update((s, t))
        for f in (s, t):
            rest = f
            while rest:
                low = rest & -rest
                rest ^= low
                if f ^ low:
                    cof[f ^ low].discard(f)

    def restore(s, t):
        for f in (t, s):
            alive.add(f)
            rest = f
            while rest:
                low = rest & -rest
                rest ^= low
                if f ^ low:
                    cof[f ^ low].add(f)

    def rec() -> bool:
        if len(alive) == 1:
            return True
        key = frozenset(alive)
        if key in failed:
            return False
        b.tick()
        for s, t in free_pairs():
            remove(s, t)
            done.append((s, t))
            if rec():
                return True
            done.pop()
            restore(s, t)
        failed.add(key)
        return False

    if not rec():
        return None
    return done + [(0, next(iter(alive)))]


def lift_morse_matching(
    K: SimplicialComplex, mu, v: str, labels: tuple[str, str] | None = None
) -> MorseMatching:
    """Perfect Morse matching of ``Susp_1(v, K)`` from one of ``K``.

    With pairs written larger face first, ``(σ, τ)`` becomes
    both faces containing ``v``: ``(σ - v + v'v'', τ - v + v'v'')``;
    ``σ = τ + v``: ``(τ + v', τ)`` and ``(τ + v'v'', τ + v'')``;
    neither face containing ``v``: ``(σ, τ)``, ``(σ + v', τ + v')``, ``(σ + v'', τ + v'')``.
    """
    if not isinstance(mu, MorseMatching):
        mu = MorseMatching(mu)
    ok, why = check_morse_matching(K, mu)
    if not ok:
        raise ValueError(f"input is not a perfect Morse matching: {why}")
    a, b = labels if labels is not None else suspension_labels(K, v)
    ab = frozenset((a, b))
    out = []
    for tau, sigma in mu.pairs:
        if v in tau:
            out.append(((sigma - {v}) | ab, (tau - {v}) | ab))
        elif v in sigma:
            out.append((tau | {a}, tau))
            out.append((tau | ab, tau | {b}))
        else:
            out += [(sigma, tau), (sigma | {a}, tau | {a}), (sigma | {b}, tau | {b})]
    lifted = MorseMatching(out)
    ok, why = check_morse_matching(one_point_suspension(K, v, (a, b)), lifted)
    if not ok:
        raise RuntimeError(f"lifted matching failed verification: {why}")
    return lifted


def lift_morse_to_wreath(d: int, K: SimplicialComplex, mu) -> MorseMatching:
    """Perfect Morse matching of ``∂Δ_d ≀ K`` via every reduced join in turn."""
    L, cur = K, mu if isinstance(mu, MorseMatching) else MorseMatching(mu)
    for v in K.vertices:
        L, cur = _lift_along_joins(L, cur, v, d, lift_morse_matching)
    return cur
