"""Standard input complexes, all on vertices labelled ``"1".."n"``."""

from __future__ import annotations

from itertools import combinations, product

from .complex import SimplicialComplex


def _labels(n: int) -> list[str]:
    return [str(i) for i in range(1, n + 1)]


def simplex(k: int) -> SimplicialComplex:
    """The full ``k``-simplex on ``k+1`` vertices."""
    if k < 0:
        raise ValueError("simplex dimension must be >= 0")
    return SimplicialComplex([_labels(k + 1)])


def simplex_boundary(k: int) -> SimplicialComplex:
    """Boundary of the ``k``-simplex; ``simplex_boundary(0)`` is ``{∅}``."""
    if k < 0:
        raise ValueError("simplex dimension must be >= 0")
    return SimplicialComplex(combinations(_labels(k + 1), k))


def cycle(n: int) -> SimplicialComplex:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    vs = _labels(n)
    return SimplicialComplex((vs[i], vs[(i + 1) % n]) for i in range(n))


def path(n: int) -> SimplicialComplex:
    if n < 2:
        raise ValueError("path needs n >= 2")
    vs = _labels(n)
    return SimplicialComplex(zip(vs, vs[1:]))


def cross_polytope_boundary(k: int) -> SimplicialComplex:
    """Join of ``k`` copies of S^0; antipodal pairs are ``{2i-1, 2i}``."""
    if k < 1:
        raise ValueError("cross-polytope needs k >= 1")
    pairs = [(str(2 * i + 1), str(2 * i + 2)) for i in range(k)]
    return SimplicialComplex(product(*pairs))


def gale_evenness(subset: frozenset[int] | set[int], n: int) -> bool:
    """Every two non-members ``i < j`` of ``[1..n]`` enclose an even number of members."""
    outside = [i for i in range(1, n + 1) if i not in subset]
    for a, b in zip(outside, outside[1:]):
        if sum(1 for s in subset if a < s < b) % 2:
            return False
    return True


def cyclic_polytope_boundary(e: int, n: int) -> SimplicialComplex:
    """Boundary complex of the cyclic ``e``-polytope with ``n`` vertices."""
    if e < 2 or n < e + 1:
        raise ValueError("cyclic polytope needs e >= 2 and n >= e + 1")
    facets = [
        [str(i) for i in s]
        for s in combinations(range(1, n + 1), e)
        if gale_evenness(set(s), n)
    ]
    return SimplicialComplex(facets)


GENERATORS = {
    "simplex": (simplex, 1),
    "simplex-boundary": (simplex_boundary, 1),
    "cycle": (cycle, 1),
    "path": (path, 1),
    "cross": (cross_polytope_boundary, 1),
    "cyclic": (cyclic_polytope_boundary, 2),
}
