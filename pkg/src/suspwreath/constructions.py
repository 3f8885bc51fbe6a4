"""One-point suspension, reduced join and wreath product of complexes.

Label conventions: the two suspension copies of ``v`` are ``v'`` and ``v''``;
the copies made by a reduced join or a wreath product are ``v^1 .. v^{d+1}``.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from itertools import product
from math import comb

from .complex import FVector, SimplicialComplex, check_label
from .isomorphism import is_isomorphic


def copy_label(v: str, i: int) -> str:
    return f"{v}^{i}"


def prime_labels(taken: set[str], v: str) -> tuple[str, str]:
    """``v'`` and ``v''``, or more primes if those are in ``taken``."""
    k = 1
    while v + "'" * k in taken or v + "'" * (k + 1) in taken:
        k += 1
    return v + "'" * k, v + "'" * (k + 1)


def suspension_labels(K: SimplicialComplex, v: str) -> tuple[str, str]:
    """Fresh names for the two copies of ``v``."""
    return prime_labels(set(K.vertices) - {v}, v)


def one_point_suspension(
    K: SimplicialComplex, v: str, labels: tuple[str, str] | None = None
) -> SimplicialComplex:
    """``Susp_1(v, K)`` built from its three kinds of facets."""
    if v not in K.index():
        raise KeyError(f"vertex not in complex: {v!r}")
    a, b = labels if labels is not None else suspension_labels(K, v)
    check_label(a), check_label(b)
    if a == b or ({a, b} & (set(K.vertices) - {v})):
        raise ValueError("suspension labels must be new and distinct")
    facets = []
    for f in K.facets:
        if v in f:
            facets.append((f - {v}) | {a, b})
        else:
            facets.append(f | {a})
            facets.append(f | {b})
    return SimplicialComplex._trusted(facets)


def _copy_base(taken: set[str], v: str, d: int) -> str:
    base = v
    while any(copy_label(base, i) in taken for i in range(1, d + 2)):
        base += "_"
    return base


def reduced_join_steps(
    K: SimplicialComplex, v: str, d: int
) -> tuple[list[tuple[str, str, str]], dict[str, str]]:
    """The suspensions realising ``∂Δ_d *_v K`` and the final renaming.

    Each step is ``(suspended vertex, first copy, second copy)``; step ``s``
    suspends the second copy made by step ``s-1``.  The renaming sends the
    surviving copies, in creation order, to ``v^1 .. v^{d+1}``.
    """
    if d < 0:
        raise ValueError("d must be >= 0")
    if v not in K.index():
        raise KeyError(f"vertex not in complex: {v!r}")
    if d == 0:
        return [], {}
    verts = set(K.vertices)
    steps = []
    target = v
    kept = []
    for _ in range(d):
        taken = verts - {target}
        a, b = prime_labels(taken, target)
        steps.append((target, a, b))
        verts = taken | {a, b}
        kept.append(a)
        target = b
    kept.append(target)
    base = _copy_base(set(K.vertices) - {v}, v, d)
    return steps, {c: copy_label(base, i) for i, c in enumerate(kept, 1)}


def reduced_join(d: int, K: SimplicialComplex, v: str) -> SimplicialComplex:
    """``∂Δ_d *_v K`` as ``d`` iterated one-point suspensions at ``v``."""
    steps, rename = reduced_join_steps(K, v, d)
    L = K
    for target, a, b in steps:
        L = one_point_suspension(L, target, (a, b))
    return L.relabel(rename) if rename else L


def iter_wreath_facets(d: int, K: SimplicialComplex) -> Iterator[frozenset]:
    """Facets of ``∂Δ_d ≀ K`` one at a time, in a deterministic order."""
    if d < 0:
        raise ValueError("d must be >= 0")
    if K.n_vertices == 0:
        raise ValueError("wreath product needs a complex with at least one vertex")
    copies = {v: [copy_label(v, i) for i in range(1, d + 2)] for v in K.vertices}
    for f in K.facets:
        full = frozenset(c for v in f for c in copies[v])
        rest = [v for v in K.vertices if v not in f]
        for omit in product(range(d + 1), repeat=len(rest)):
            yield full.union(
                c for v, o in zip(rest, omit) for i, c in enumerate(copies[v]) if i != o
            )


def wreath_facet_count(d: int, K: SimplicialComplex) -> int:
    n = K.n_vertices
    return sum((d + 1) ** (n - len(f)) for f in K.facets)


def wreath_product(d: int, K: SimplicialComplex) -> SimplicialComplex:
    """``∂Δ_d ≀ K``; ``d = 0`` returns ``K`` itself."""
    if d == 0:
        return K
    return SimplicialComplex._trusted(iter_wreath_facets(d, K))


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Tuples ``(u_1..u_parts)`` of naturals with ``sum k*u_k == total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for u in range(total // parts + 1):
        for rest in _compositions(total - u * parts, parts - 1):
            yield rest + (u,)


def wreath_f_vector_formula(d: int, fK: Sequence[int], n: int | None = None) -> FVector:
    """Closed-form f-vector of ``∂Δ_d ≀ K`` from ``f(K)``."""
    fK = tuple(fK)
    if not fK:
        raise ValueError("need a complex with at least one vertex")
    if n is None:
        n = fK[0]
    if n != fK[0]:
        raise ValueError(f"n = {n} disagrees with f_0 = {fK[0]}")
    e = len(fK)
    fext = (1,) + fK
    out = []
    for i in range(n * d + e):
        total = 0
        lo = max(0, i + 1 - n * d)
        hi = min(e, (i + 1) // (d + 1))
        for j in range(lo, hi + 1):
            inner = 0
            for us in _compositions(i + 1 - j * (d + 1), d):
                left = n - j
                term = 1
                for k in range(d, 0, -1):
                    u = us[k - 1]
                    term *= comb(left, u) * comb(d + 1, k) ** u
                    left -= u
                inner += term
            total += fext[j] * inner
        out.append(total)
    return FVector(out)


def verify_reduced_join_commutes(
    K: SimplicialComplex, v1: str, v2: str, d1: int, d2: int
) -> bool:
    if v1 == v2:
        raise ValueError("vertices must be distinct")
    for v in (v1, v2):
        if v not in K.index():
            raise KeyError(f"vertex not in complex: {v!r}")
    a = reduced_join(d1, reduced_join(d2, K, v2), v1)
    b = reduced_join(d2, reduced_join(d1, K, v1), v2)
    return a == b or is_isomorphic(a, b)


def wreath_by_reduced_joins(d: int, K: SimplicialComplex, order: Sequence[str] | None = None) -> SimplicialComplex:
    """Successive reduced joins over all vertices of ``K`` in ``order``."""
    L = K
    for v in order if order is not None else K.vertices:
        L = reduced_join(d, L, v)
    return L
