"""Exact rational polytopes: dual wedges, wreath products and facet systems.

Coordinates are ``Fraction`` tuples throughout.  A facet is described by its
vertex names and its normalized normal ``γ``: the facet inequality reads
``1 + <x, γ> >= 0`` with equality exactly on the facet, which requires the
origin to be an interior point.  No convex hull is ever computed; facet
systems are supplied (or produced by the helpers below) and then checked by
sign conditions.
"""

from __future__ import annotations

import warnings
from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product

from .complex import SimplicialComplex, check_label, sort_face
from .constructions import prime_labels, wreath_by_reduced_joins
from .isomorphism import find_isomorphism
from .verdict import FAILS, HOLDS, PropertyVerdict

Vector = tuple[Fraction, ...]


def vec(entries: Iterable) -> Vector:
    return tuple(Fraction(x) for x in entries)


def dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class Facet:
    names: frozenset
    normal: Vector

    def value(self, x: Vector) -> Fraction:
        """``1 + <x, normal>``; zero on the facet, positive inside."""
        return 1 + dot(x, self.normal)


@dataclass(frozen=True)
class PredictedFacet:
    """Facet ``(F_{g+1}, ..., F_n; G)`` of a wreath product.

    ``base`` is the facet ``G`` of the right factor, ``choice`` pairs every
    vertex ``w_k`` outside ``G`` with the chosen facet ``F_k`` of the left one.
    """

    base: frozenset
    choice: tuple[tuple[str, frozenset], ...]
    names: frozenset
    normal: Vector

    def as_facet(self) -> Facet:
        return Facet(self.names, self.normal)


@dataclass(frozen=True)
class GeometricPolytope:
    names: tuple[str, ...]
    vertices: tuple[Vector, ...]
    facets: tuple[Facet, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "vertices", tuple(vec(v) for v in self.vertices))
        object.__setattr__(self, "facets", tuple(self.facets))
        if not self.vertices:
            raise ValueError("a polytope needs at least one vertex")
        if len(self.names) != len(self.vertices):
            raise ValueError("one name per vertex")
        for n in self.names:
            check_label(n)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate vertex names")
        if len({len(v) for v in self.vertices}) != 1:
            raise ValueError("vertices of different ambient dimensions")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex coordinates")
        known = set(self.names)
        for f in self.facets:
            if not f.names <= known or len(f.normal) != self.dim:
                raise ValueError(f"facet {sort_face(f.names)} does not fit the polytope")

    @property
    def dim(self) -> int:
        """Ambient dimension."""
        return len(self.vertices[0])

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    def coords(self, name: str) -> Vector:
        try:
            return self.vertices[self.names.index(name)]
        except ValueError:
            raise KeyError(f"vertex not in polytope: {name!r}") from None

    def with_facets(self, facets: Iterable[Facet]) -> "GeometricPolytope":
        return GeometricPolytope(self.names, self.vertices, tuple(facets))

    def barycenter(self) -> Vector:
        m = len(self.vertices)
        return tuple(sum(col, Fraction(0)) / m for col in zip(*self.vertices))

    def is_centered(self) -> bool:
        return all(x == 0 for x in self.barycenter())


def boundary_complex(P: GeometricPolytope) -> SimplicialComplex:
    """The complex spanned by the facet vertex sets (for simplicial ``P``)."""
    if not P.facets:
        raise ValueError("polytope carries no facet system")
    return SimplicialComplex(f.names for f in P.facets)


# -- exact linear algebra --------------------------------------------------


def _rank(rows: Sequence[Sequence[Fraction]]) -> int:
    m = [list(r) for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][c] != 0:
                f = m[i][c] / m[rank][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def _solve(rows: list[list[Fraction]], rhs: list[Fraction]) -> Vector | None:
    """Unique solution of ``rows @ x = rhs`` or ``None``."""
    n = len(rows[0]) if rows else 0
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    rank = 0
    for c in range(n):
        piv = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if piv is None:
            return None
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][c]
        m[rank] = [a * inv for a in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    if any(row[-1] != 0 for row in m[rank:]):
        return None
    return tuple(m[i][-1] for i in range(n))


def facet_normal(P: GeometricPolytope, names: Iterable[str]) -> Vector:
    """Normalized normal of the hyperplane through the named vertices.

    Raises ``ValueError`` unless the vertices span a unique hyperplane that
    avoids the origin and leaves every other vertex strictly inside.
    """
    names = frozenset(names)
    pts = [list(P.coords(n)) for n in sort_face(names)]
    gamma = _solve(pts, [Fraction(-1)] * len(pts))
    if gamma is None:
        raise ValueError(f"no unique normalized hyperplane through {sort_face(names)}")
    f = Facet(names, gamma)
    for n, x in zip(P.names, P.vertices):
        if n not in names and f.value(x) <= 0:
            raise ValueError(f"{sort_face(names)} is not a facet: vertex {n} violates it")
    return gamma


def facet_system(P: GeometricPolytope, name_sets: Iterable[Iterable[str]]) -> GeometricPolytope:
    """``P`` with facets ``name_sets`` attached, normals computed exactly."""
    return P.with_facets(Facet(frozenset(s), facet_normal(P, s)) for s in name_sets)


# -- standard polytopes -------------------------------------------------------


def _labels(n: int) -> list[str]:
    return [str(i) for i in range(1, n + 1)]


def segment() -> GeometricPolytope:
    """``[-1, 1]`` with vertices ``1 = -1`` and ``2 = 1``."""
    P = GeometricPolytope(["1", "2"], [(-1,), (1,)])
    return facet_system(P, [["1"], ["2"]])


def simplex_polytope(d: int) -> GeometricPolytope:
    """``d``-simplex with vertices ``e_1 .. e_d`` and ``-(1, .., 1)``; centered."""
    if d < 1:
        raise ValueError("simplex polytope needs d >= 1")
    verts = [tuple(int(i == j) for j in range(d)) for i in range(d)]
    verts.append(tuple([-1] * d))
    P = GeometricPolytope(_labels(d + 1), verts)
    return facet_system(P, combinations(P.names, d))


def cross_polytope(k: int) -> GeometricPolytope:
    """``conv(±e_i)``; ``+e_i`` is named ``2i-1`` and ``-e_i`` is ``2i``."""
    if k < 1:
        raise ValueError("cross-polytope needs k >= 1")
    names, verts = [], []
    for i in range(k):
        for s, name in ((1, 2 * i + 1), (-1, 2 * i + 2)):
            names.append(str(name))
            verts.append(tuple(s * int(j == i) for j in range(k)))
    P = GeometricPolytope(names, verts)
    pairs = [(names[2 * i], names[2 * i + 1]) for i in range(k)]
    return facet_system(P, product(*pairs))


def polygon(points: Sequence[Sequence]) -> GeometricPolytope:
    """Convex polygon with vertices in cyclic order, named ``1 .. n``."""
    n = len(points)
    if n < 3:
        raise ValueError("polygon needs at least 3 points")
    P = GeometricPolytope(_labels(n), points)
    return facet_system(P, [(P.names[i], P.names[(i + 1) % n]) for i in range(n)])


# rational convex pentagon with vertex barycenter 0
PENTAGON = [(2, 0), (1, 2), (-1, 2), (-2, 0), (0, -4)]


def pentagon() -> GeometricPolytope:
    return polygon(PENTAGON)


def translate_to_vertex_barycenter(P: GeometricPolytope) -> GeometricPolytope:
    c = P.barycenter()
    if all(x == 0 for x in c):
        return P
    verts = [tuple(a - b for a, b in zip(v, c)) for v in P.vertices]
    Q = GeometricPolytope(P.names, verts)
    # 1 + <x - c, γ'> = 0 on the facet gives γ' = γ / (1 + <c, γ>)
    facets = []
    for f in P.facets:
        s = 1 + dot(c, f.normal)
        if s <= 0:
            raise ValueError("barycenter is not interior to the polytope")
        facets.append(Facet(f.names, tuple(g / s for g in f.normal)))
    return Q.with_facets(facets)


# -- dual wedge ------------------------------------------------------------


def dual_wedge(P: GeometricPolytope, v: str) -> GeometricPolytope:
    """``DW(v, P)``: ``u ⊕ 0`` for ``u != v`` plus ``v' = v ⊕ 1`` and ``v'' = v ⊕ -1``.

    New names follow the one-point suspension (extra primes on collision).

    A facet system on ``P`` is carried over: a facet ``F`` avoiding ``v``
    yields ``F + v'`` and ``F + v''``, a facet ``G`` containing ``v`` yields
    ``G - v + v' + v''``.
    """
    x = P.coords(v)
    a, b = prime_labels(set(P.names) - {v}, v)
    names, verts = [], []
    for n, y in zip(P.names, P.vertices):
        if n == v:
            names += [a, b]
            verts += [y + (Fraction(1),), y + (Fraction(-1),)]
        else:
            names.append(n)
            verts.append(y + (Fraction(0),))
    facets = []
    for f in P.facets:
        if v in f.names:
            facets.append(Facet((f.names - {v}) | {a, b}, f.normal + (Fraction(0),)))
        else:
            s = 1 + dot(x, f.normal)
            facets.append(Facet(f.names | {a}, f.normal + (-s,)))
            facets.append(Facet(f.names | {b}, f.normal + (s,)))
    return GeometricPolytope(names, verts, facets)


# -- wreath product -----------------------------------------------------------


def wreath_name(v: str, w: str) -> str:
    return f"{v}^{w}"


def _centered(P: GeometricPolytope, which: str) -> GeometricPolytope:
    if P.is_centered():
        return P
    warnings.warn(f"{which} factor translated to put its vertex barycenter at 0", stacklevel=3)
    return translate_to_vertex_barycenter(P)


def polytope_wreath(P: GeometricPolytope, Q: GeometricPolytope) -> GeometricPolytope:
    """``P ≀ Q`` in ``R^(n d + e)``: vertex ``v^w`` is ``v`` in block ``w`` followed by ``w``.

    When both factors carry facet systems the predicted facets are attached.
    """
    P, Q = _centered(P, "left"), _centered(Q, "right")
    d, n = P.dim, Q.n_vertices
    names, verts = [], []
    for k, (w, y) in enumerate(zip(Q.names, Q.vertices)):
        for v, x in zip(P.names, P.vertices):
            names.append(wreath_name(v, w))
            verts.append((Fraction(0),) * (k * d) + x + (Fraction(0),) * ((n - k - 1) * d) + y)
    W = GeometricPolytope(names, verts)
    if P.facets and Q.facets:
        W = W.with_facets(pf.as_facet() for pf in predicted_facets(P, Q))
    return W


def _check_system(X: GeometricPolytope, facets: Sequence[Facet], which: str) -> None:
    for f in facets:
        for n, x in zip(X.names, X.vertices):
            val = f.value(x)
            if (val == 0) != (n in f.names) or val < 0:
                raise ValueError(
                    f"invalid {which} facet {{{' '.join(sort_face(f.names))}}}: "
                    f"vertex {n} gives 1 + <x, normal> = {val}"
                )


def predicted_facets(
    P: GeometricPolytope,
    Q: GeometricPolytope,
    facetsP: Sequence[Facet] | None = None,
    facetsQ: Sequence[Facet] | None = None,
) -> list[PredictedFacet]:
    """All facets ``(F_{g+1}, ..., F_n; G)`` of ``P ≀ Q`` with their normals.

    The normal is ``(sum over w_k not in G of (1 + <w_k, γ>) φ_k in block k) ⊕ γ``
    where ``γ`` is the normal of ``G`` and ``φ_k`` that of ``F_k``.  Both
    factors must be vertex-barycentered.
    """
    facetsP = P.facets if facetsP is None else tuple(facetsP)
    facetsQ = Q.facets if facetsQ is None else tuple(facetsQ)
    if not P.is_centered() or not Q.is_centered():
        raise ValueError("factors must have vertex barycenter 0")
    _check_system(P, facetsP, "left")
    _check_system(Q, facetsQ, "right")
    d = P.dim
    zero = (Fraction(0),) * d
    out = []
    for G in facetsQ:
        outside = [(k, w, y) for k, (w, y) in enumerate(zip(Q.names, Q.vertices)) if w not in G.names]
        base_names = {wreath_name(v, w) for w in G.names for v in P.names}
        for picks in product(facetsP, repeat=len(outside)):
            blocks = [zero] * Q.n_vertices
            names = set(base_names)
            choice = []
            for (k, w, y), F in zip(outside, picks):
                s = 1 + dot(y, G.normal)
                blocks[k] = tuple(s * p for p in F.normal)
                names.update(wreath_name(v, w) for v in F.names)
                choice.append((w, F.names))
            normal = tuple(x for b in blocks for x in b) + G.normal
            out.append(PredictedFacet(G.names, tuple(choice), frozenset(names), normal))
    return out


def verify_facet_system(
    X: GeometricPolytope, predicted: Sequence[Facet | PredictedFacet], simplicial: bool = False
) -> PropertyVerdict:
    """Check a claimed facet system of ``X`` by exact sign conditions.

    Every normal must give ``1 + <x, normal> = 0`` exactly on its vertex set
    and ``> 0`` on all other vertices, and the vertex set must affinely span
    a hyperplane.  With ``simplicial=True`` every facet must have ``dim``
    vertices and every ridge must lie in exactly two facets; a closed
    pseudomanifold of genuine facets is then the whole boundary.
    """
    nodes = 0
    for f in predicted:
        nodes += 1
        label = sort_face(f.names)
        for n, x in zip(X.names, X.vertices):
            val = 1 + dot(x, f.normal)
            on = n in f.names
            if (on and val != 0) or (not on and val <= 0):
                return PropertyVerdict(FAILS, (label, n, val), nodes, "sign condition violated")
        pts = [X.coords(n) for n in label]
        diffs = [[a - b for a, b in zip(p, pts[0])] for p in pts[1:]]
        if (_rank(diffs) if diffs else 0) != X.dim - 1:
            return PropertyVerdict(FAILS, (label, None, None), nodes, "vertex set does not span a hyperplane")
        if simplicial and len(label) != X.dim:
            return PropertyVerdict(FAILS, (label, None, None), nodes, "facet is not a simplex")
    if simplicial:
        ridges = Counter()
        for f in predicted:
            for v in f.names:
                ridges[f.names - {v}] += 1
        for r, c in sorted(ridges.items(), key=lambda rc: sort_face(rc[0])):
            if c != 2:
                return PropertyVerdict(FAILS, (sort_face(r), c), nodes, "ridge not in exactly two facets")
    return PropertyVerdict(HOLDS, len(predicted), nodes)


def projection_pi(P: GeometricPolytope, Q: GeometricPolytope) -> dict[str, tuple[str, str]]:
    """Name-level ``π``: ``v^w -> (v, w)``."""
    return {wreath_name(v, w): (v, w) for w in Q.names for v in P.names}


def blocking_beta(pf: PredictedFacet) -> frozenset:
    """The facet ``G`` of the right factor underlying a predicted facet."""
    return pf.base


def wreath_symmetry(
    P: GeometricPolytope,
    Q: GeometricPolytope,
    block_maps: dict[str, Sequence[Sequence]] | None = None,
    q_map: Sequence[Sequence] | None = None,
) -> dict[str, str]:
    """Vertex permutation of ``P ≀ Q`` induced by a coordinate transformation.

    ``block_maps[w]`` is a linear map applied to block ``w``; ``q_map`` is a
    linear map of the right factor's space, which also moves the blocks along
    the induced permutation of ``Q``'s vertices.  Raises ``ValueError`` if
    the transformation does not permute the vertex set.
    """
    block_maps = block_maps or {}
    P, Q = _centered(P, "left"), _centered(Q, "right")

    def apply(A, x):
        return tuple(dot(vec(row), x) for row in A) if A is not None else x

    qperm = {}
    for w, y in zip(Q.names, Q.vertices):
        img = apply(q_map, y)
        if img not in Q.vertices:
            raise ValueError("right map does not permute the vertices")
        qperm[w] = Q.names[Q.vertices.index(img)]
    W = polytope_wreath(P, Q)
    d = P.dim
    k_of = {w: k for k, w in enumerate(Q.names)}
    out = {}
    for name, x in zip(W.names, W.vertices):
        blocks = [x[k * d:(k + 1) * d] for k in range(Q.n_vertices)]
        tail = x[Q.n_vertices * d:]
        new = [None] * Q.n_vertices
        for w, k in k_of.items():
            new[k_of[qperm[w]]] = apply(block_maps.get(w), blocks[k])
        img = tuple(c for b in new for c in b) + apply(q_map, tail)
        if img not in W.vertices:
            raise ValueError("transformation does not permute the wreath vertices")
        out[name] = W.names[W.vertices.index(img)]
    return out


def wreath_equals_iterated_dual_wedge(d: int, Q: GeometricPolytope) -> PropertyVerdict:
    """Compare ``∂(Δ_d ≀ Q)`` from predicted facets with ``d``-fold dual wedges at every vertex.

    Dual wedging is done combinatorially, as iterated one-point suspension of
    the boundary complex of ``Q``.  The certificate is an isomorphism.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    if not Q.facets or any(len(f.names) != Q.dim for f in Q.facets):
        raise ValueError("right factor must be simplicial with a facet system")
    P = simplex_polytope(d)
    Qc = _centered(Q, "right")
    W = polytope_wreath(P, Qc)
    check = verify_facet_system(W, W.facets, simplicial=True)
    if not check.holds:
        return PropertyVerdict(FAILS, check.certificate, check.nodes_explored, "predicted facets invalid: " + check.reason)
    left = boundary_complex(W)
    right = wreath_by_reduced_joins(d, boundary_complex(Qc))
    iso = find_isomorphism(left, right)
    if iso is None:
        return PropertyVerdict(FAILS, None, check.nodes_explored, "boundary complexes not isomorphic")
    return PropertyVerdict(HOLDS, iso, check.nodes_explored)
