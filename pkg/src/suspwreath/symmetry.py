"""Combinatorial automorphism groups and the wreath-group embedding.

Permutations are dicts on vertex labels.  Group orders come from stabilizer
chains: for the full automorphism group each orbit is found by isomorphism
searches fixing the earlier base points, and for groups given by generators
a plain deterministic Schreier-Sims is used.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from math import factorial

from .budget import BudgetExceeded, as_budget
from .complex import SimplicialComplex, label_key, sort_face
from .constructions import copy_label, wreath_product
from .isomorphism import Matcher

Perm = dict[str, str]


def preserves_facets(K: SimplicialComplex, perm: Mapping[str, str]) -> bool:
    if sorted(perm) != sorted(K.vertices) or sorted(perm.values()) != sorted(K.vertices):
        return False
    facets = set(K.facets)
    return all(frozenset(perm[x] for x in F) in facets for F in K.facets)


def cycle_notation(perm: Mapping[str, str]) -> str:
    seen, out = set(), []
    for x in sorted(perm, key=label_key):
        if x in seen or perm[x] == x:
            seen.add(x)
            continue
        cyc, y = [], x
        while y not in seen:
            seen.add(y)
            cyc.append(y)
            y = perm[y]
        out.append("(" + " ".join(cyc) + ")")
    return "".join(out) or "()"


def parse_cycles(text: str, domain: Iterable[str]) -> Perm:
    perm = {x: x for x in domain}
    text = text.strip()
    if text in ("", "()"):
        return perm
    for chunk in text.replace(")", ")\n").split("\n"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if not (chunk.startswith("(") and chunk.endswith(")")):
            raise ValueError(f"bad cycle {chunk!r}")
        items = chunk[1:-1].split()
        for a, b in zip(items, items[1:] + items[:1]):
            if a not in perm:
                raise ValueError(f"unknown point {a!r}")
            perm[a] = b
    if sorted(perm.values()) != sorted(perm):
        raise ValueError("not a permutation")
    return perm


# -- Schreier-Sims on index permutations -------------------------------------


def _compose(p: tuple, q: tuple) -> tuple:
    """``p`` then ``q``."""
    return tuple(q[i] for i in p)


def _inverse(p: tuple) -> tuple:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def schreier_sims_order(n: int, gens: Sequence[tuple]) -> int:
    """Order of the group generated by index permutations of ``range(n)``."""
    ident = tuple(range(n))
    gens = [g for g in gens if g != ident]
    base: list[int] = []
    strong: list[list[tuple]] = []  # strong generators per level
    trans: list[dict[int, tuple]] = []

    def orbit(level):
        b = base[level]
        tr = {b: ident}
        queue = [b]
        for x in queue:
            for g in strong[level]:
                y = g[x]
                if y not in tr:
                    tr[y] = _compose(tr[x], g)
                    queue.append(y)
        trans[level] = tr

    def sift(g):
        for level in range(len(base)):
            y = g[base[level]]
            if y not in trans[level]:
                return g, level
            g = _compose(g, _inverse(trans[level][y]))
        return g, len(base)

    def add(g, level):
        # g fixes base[:level], so it belongs to every stabilizer up to there
        if level == len(base):
            b = next(i for i in range(n) if g[i] != i)
            base.append(b)
            strong.append([])
            trans.append({})
        for lv in range(level + 1):
            strong[lv].append(g)
            orbit(lv)

    for g in gens:
        h, lv = sift(g)
        if h != ident:
            add(h, lv)
    # saturate with Schreier generators
    changed = True
    while changed:
        changed = False
        for level in range(len(base)):
            for x, u in list(trans[level].items()):
                for s in list(strong[level]):
                    ux_s = _compose(u, s)
                    v = trans[level][ux_s[base[level]]]
                    sch = _compose(ux_s, _inverse(v))
                    if sch == ident:
                        continue
                    h, lv = sift(sch)
                    if h != ident:
                        add(h, lv)
                        changed = True
                        break
                if changed:
                    break
            if changed:
                break
    order = 1
    for tr in trans:
        order *= len(tr)
    return order


@dataclass
class PermutationGroup:
    """Generators on ``domain`` plus the exact order (a lower bound if ``exact`` is false)."""

    domain: tuple[str, ...]
    generators: list[Perm]
    order: int = field(default=0)
    exact: bool = True

    def __post_init__(self):
        self.domain = tuple(sort_face(self.domain))
        if not self.order:
            self.order = self.compute_order()

    def _index_gens(self) -> list[tuple]:
        pos = {x: i for i, x in enumerate(self.domain)}
        return [tuple(pos[g[x]] for x in self.domain) for g in self.generators]

    def compute_order(self) -> int:
        return schreier_sims_order(len(self.domain), self._index_gens())

    def orbits(self) -> list[list[str]]:
        seen, out = set(), []
        for x in self.domain:
            if x in seen:
                continue
            orb, queue = {x}, [x]
            for y in queue:
                for g in self.generators:
                    z = g[y]
                    if z not in orb:
                        orb.add(z)
                        queue.append(z)
            seen |= orb
            out.append(list(sort_face(orb)))
        return out

    def is_transitive(self) -> bool:
        return len(self.orbits()) <= 1

    def lines(self) -> list[str]:
        return [cycle_notation(g) for g in self.generators]


def automorphism_group(K: SimplicialComplex, budget=None) -> PermutationGroup:
    """All facet-preserving vertex bijections, as generators and exact order.

    Base points are the vertices in order.  At each level the orbit of the
    base point under the pointwise stabilizer of the earlier ones is filled
    by searching for an automorphism to every candidate not yet reached.  If
    the budget runs out the group found so far is returned with
    ``exact=False`` and its order is a lower bound.
    """
    budget = as_budget(budget)
    M = Matcher(K, K)
    n = K.n_vertices
    verts = K.vertices
    gens: list[tuple] = []
    exact = True
    try:
        for level in range(n):
            fixed = [(j, j) for j in range(level)]
            level_gens: list[tuple] = []
            orbit = {level}
            for y in range(level + 1, n):
                if y in orbit or M.ca[y] != M.ca[level]:
                    continue
                perm = M.find(fixed + [(level, y)], budget)
                if perm is None:
                    continue
                g = tuple(perm)
                level_gens.append(g)
                gens.append(g)
                queue = list(orbit)
                for x in queue:
                    for h in level_gens:
                        if h[x] not in orbit:
                            orbit.add(h[x])
                            queue.append(h[x])
    except BudgetExceeded:
        exact = False
    perms = [{verts[i]: verts[j] for i, j in enumerate(g)} for g in gens]
    return PermutationGroup(verts, perms, exact=exact)


def is_vertex_transitive(K: SimplicialComplex, budget=None) -> bool:
    G = automorphism_group(K, budget)
    if G.is_transitive():
        return True
    if not G.exact:
        raise BudgetExceeded("automorphism search ran out of budget")
    return False


def wreath_group_generators(
    d: int, K: SimplicialComplex, autK: PermutationGroup | None = None
) -> PermutationGroup:
    """``(S_{d+1})^n ⋊ Aut K`` acting on the vertices of ``∂Δ_d ≀ K``.

    Generators: a transposition and a full cycle of the copies of every base
    vertex, and each generator of ``Aut K`` carried over block-wise.  Every
    generator is checked to map facets onto facets.
    """
    if autK is None:
        autK = automorphism_group(K)
    if d == 0:
        return autK
    W = wreath_product(d, K)
    gens: list[Perm] = []
    ident = {x: x for x in W.vertices}
    for v in K.vertices:
        copies = [copy_label(v, i) for i in range(1, d + 2)]
        swap = dict(ident)
        swap[copies[0]], swap[copies[1]] = copies[1], copies[0]
        gens.append(swap)
        if d > 1:
            rot = dict(ident)
            for a, b in zip(copies, copies[1:] + copies[:1]):
                rot[a] = b
            gens.append(rot)
    for g in autK.generators:
        gens.append({copy_label(v, i): copy_label(g[v], i) for v in K.vertices for i in range(1, d + 2)})
    for g in gens:
        if not preserves_facets(W, g):
            raise RuntimeError(f"wreath generator {cycle_notation(g)} does not preserve facets")
    expected = factorial(d + 1) ** K.n_vertices * autK.order
    G = PermutationGroup(W.vertices, gens, exact=autK.exact)
    if autK.exact and G.order != expected:
        raise RuntimeError(f"wreath group has order {G.order}, expected {expected}")
    return G
