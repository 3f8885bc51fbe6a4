"""Finite abstract simplicial complexes stored by their facets.

Vertices are opaque string labels.  A complex is immutable; every operation
returns a new complex.  Faces are ``frozenset`` objects of labels, and the
empty face is ``frozenset()``.

Two degenerate complexes are distinct values: the *void* complex (no facets at
all) and ``{∅}`` (a single empty facet, dimension -1).
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Iterator, Mapping
from itertools import combinations

Face = frozenset

EMPTY_FACE: frozenset = frozenset()

_TOKEN = re.compile(r"(\d+)")


def label_key(label: str) -> tuple:
    """Total order on labels: digit runs compare numerically, ties by raw text."""
    parts = _TOKEN.split(label)
    key = tuple((0, int(p), "") if p.isdigit() else (1, 0, p) for p in parts if p)
    return key, label


def sort_face(face: Iterable[str]) -> tuple[str, ...]:
    return tuple(sorted(face, key=label_key))


def face_key(face: Iterable[str]) -> tuple:
    return tuple(label_key(x) for x in sort_face(face))


def format_face(face: Iterable[str]) -> str:
    items = sort_face(face)
    return " ".join(items) if items else "EMPTYFACET"


def check_label(label: str) -> str:
    if not isinstance(label, str) or not label:
        raise ValueError(f"invalid vertex label {label!r}")
    if "#" in label or any(c.isspace() for c in label) or label == "EMPTYFACET":
        raise ValueError(f"invalid vertex label {label!r}")
    return label


class FVector(tuple):
    """Face counts ``(f_0, ..., f_dim)``; ``f_{-1} = 1`` is implicit."""

    @property
    def dim(self) -> int:
        return len(self) - 1

    def extended(self) -> tuple[int, ...]:
        """Counts with the empty face prepended: ``(1, f_0, ..., f_dim)``."""
        return (1,) + tuple(self)

    def __repr__(self) -> str:
        return f"FVector({tuple(self)!r})"


class SimplicialComplex:
    """An abstract simplicial complex given by its inclusion-maximal faces.

    ``prune=True`` silently drops facets contained in other facets; otherwise
    such input raises ``ValueError``.
    """

    __slots__ = ("_facets", "_vertices", "_masks")

    def __init__(self, facets: Iterable[Iterable[str]] = (), *, prune: bool = False):
        fs = set()
        for f in facets:
            face = frozenset(f)
            for x in face:
                check_label(x)
            fs.add(face)
        redundant = _redundant_facets(fs)
        if redundant and not prune:
            bad = min(redundant, key=face_key)
            raise ValueError(f"facet {{{format_face(bad)}}} is contained in another facet")
        self._set(fs - redundant)

    @classmethod
    def _trusted(cls, facets: Iterable[frozenset]) -> "SimplicialComplex":
        # caller guarantees maximality and valid labels
        obj = cls.__new__(cls)
        obj._set(set(facets))
        return obj

    def _set(self, fs: set) -> None:
        self._facets = tuple(sorted(fs, key=face_key))
        self._vertices = sort_face(set().union(*fs)) if fs else ()
        self._masks = None

    # -- basic queries -----------------------------------------------------

    @property
    def facets(self) -> tuple[frozenset, ...]:
        return self._facets

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._vertices

    @property
    def n_vertices(self) -> int:
        return len(self._vertices)

    def is_void(self) -> bool:
        return not self._facets

    def __contains__(self, face: Iterable[str]) -> bool:
        face = frozenset(face)
        return any(face <= f for f in self._facets)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._facets == other._facets

    def __hash__(self) -> int:
        return hash(self._facets)

    def __repr__(self) -> str:
        body = ", ".join("{" + ",".join(sort_face(f)) + "}" for f in self._facets[:8])
        more = ", ..." if len(self._facets) > 8 else ""
        return f"SimplicialComplex([{body}{more}])"

    def dimension(self) -> int:
        if not self._facets:
            raise ValueError("the void complex has no dimension")
        return max(len(f) for f in self._facets) - 1

    def is_pure(self) -> bool:
        return len({len(f) for f in self._facets}) <= 1

    def is_simplex(self) -> bool:
        return len(self._facets) == 1

    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self._vertices)}

    def bitmasks(self) -> tuple[int, ...]:
        """Facets as integer bitmasks over ``self.vertices`` (bit i = vertex i)."""
        if self._masks is None:
            idx = self.index()
            self._masks = tuple(sum(1 << idx[x] for x in f) for f in self._facets)
        return self._masks

    def face_from_mask(self, mask: int) -> frozenset:
        vs = self._vertices
        return frozenset(vs[i] for i in range(len(vs)) if mask >> i & 1)

    def iter_faces(self, include_empty: bool = True) -> Iterator[frozenset]:
        for m in iter_face_masks(self.bitmasks()):
            if m or include_empty:
                yield self.face_from_mask(m)

    def faces_of_dim(self, i: int) -> list[frozenset]:
        """All ``i``-faces in canonical order (``i = -1`` gives ``[∅]``)."""
        out = set()
        for f in self._facets:
            if len(f) >= i + 1:
                out.update(frozenset(c) for c in combinations(f, i + 1))
        return sorted(out, key=face_key)

    def relabel(self, mapping: Mapping[str, str]) -> "SimplicialComplex":
        img = [frozenset(mapping.get(x, x) for x in f) for f in self._facets]
        if any(len(a) != len(b) for a, b in zip(img, self._facets)):
            raise ValueError("relabeling is not injective on a facet")
        return SimplicialComplex(img)


def _redundant_facets(fs: set) -> set:
    by_size: dict[int, list[frozenset]] = {}
    for f in fs:
        by_size.setdefault(len(f), []).append(f)
    sizes = sorted(by_size)
    out = set()
    for i, s in enumerate(sizes):
        bigger = [g for t in sizes[i + 1:] for g in by_size[t]]
        if not bigger:
            break
        for f in by_size[s]:
            if any(f < g for g in bigger):
                out.add(f)
    return out


def iter_face_masks(masks: Iterable[int]) -> Iterator[int]:
    """Each face of the complex spanned by ``masks`` exactly once (∅ first).

    Depth-first over faces, extending only by vertices above the current
    maximum, so no global face set is kept.
    """
    masks = list(masks)
    if not masks:
        return
    yield 0
    stack = [(0, 0, masks)]
    while stack:
        face, start, cands = stack.pop()
        union = 0
        for m in cands:
            union |= m
        rest = (union >> start) << start
        while rest:
            low = rest & -rest
            rest ^= low
            j = low.bit_length() - 1
            nf = face | low
            yield nf
            stack.append((nf, j + 1, [m for m in cands if m & low]))


def count_faces(masks: Iterable[int]) -> list[int]:
    """Counts of faces by cardinality, index 0 being the empty face."""
    counts: list[int] = []
    for m in iter_face_masks(masks):
        k = m.bit_count()
        while len(counts) <= k:
            counts.append(0)
        counts[k] += 1
    return counts


# -- operations -------------------------------------------------------------


def _require_vertex(K: SimplicialComplex, v: str) -> None:
    if v not in K.index():
        raise KeyError(f"vertex not in complex: {v!r}")


def link(K: SimplicialComplex, v: str) -> SimplicialComplex:
    _require_vertex(K, v)
    return SimplicialComplex._trusted(f - {v} for f in K.facets if v in f)


def star(K: SimplicialComplex, v: str) -> SimplicialComplex:
    _require_vertex(K, v)
    return SimplicialComplex._trusted(f for f in K.facets if v in f)


def deletion(K: SimplicialComplex, v: str) -> SimplicialComplex:
    _require_vertex(K, v)
    return SimplicialComplex((f - {v} for f in K.facets), prune=True)


def face_link(K: SimplicialComplex, face: Iterable[str]) -> SimplicialComplex:
    """Link of an arbitrary face; ``face_link(K, ∅) == K``."""
    face = frozenset(face)
    if face not in K:
        raise KeyError(f"not a face: {{{format_face(face)}}}")
    return SimplicialComplex._trusted(f - face for f in K.facets if face <= f)


def induced(K: SimplicialComplex, vertices: Iterable[str]) -> SimplicialComplex:
    keep = frozenset(vertices)
    return SimplicialComplex((f & keep for f in K.facets), prune=True)


def cone(apex: str, K: SimplicialComplex) -> SimplicialComplex:
    check_label(apex)
    if apex in K.index():
        raise ValueError(f"apex {apex!r} already a vertex")
    return SimplicialComplex._trusted(f | {apex} for f in K.facets)


def join(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    """Join product; vertex sets that meet are renamed with ``L.``/``R.``."""
    if set(K.vertices) & set(L.vertices):
        K = K.relabel({v: "L." + v for v in K.vertices})
        L = L.relabel({v: "R." + v for v in L.vertices})
    return SimplicialComplex._trusted(f | g for f in K.facets for g in L.facets)


def f_vector(K: SimplicialComplex) -> FVector:
    if K.is_void():
        raise ValueError("f-vector of the void complex is undefined")
    return FVector(count_faces(K.bitmasks())[1:])


def euler_characteristic(K: SimplicialComplex, reduced: bool = False) -> int:
    chi = sum((-1) ** i * c for i, c in enumerate(f_vector(K)))
    return chi - 1 if reduced else chi


def dimension(K: SimplicialComplex) -> int:
    return K.dimension()


def is_pure(K: SimplicialComplex) -> bool:
    return K.is_pure()
