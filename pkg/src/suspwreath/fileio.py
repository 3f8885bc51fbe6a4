"""Text formats for complexes, polytopes and certificates.

Facet files: one facet per line as whitespace-separated labels, ``EMPTYFACET``
for the empty facet, lines starting with ``#`` are comments.  Polytope files
start with ``POLYTOPE <dim> <n>``, followed by ``name: r_1 .. r_dim`` vertex
lines and optional ``FACET names | normal: r_1 .. r_dim`` lines.
"""

from __future__ import annotations

import warnings
from fractions import Fraction

from .complex import SimplicialComplex, format_face, sort_face
from .decomposability import MorseMatching
from .polytope import Facet, GeometricPolytope, format_rational


class FormatError(ValueError):
    pass


def _content_lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield no, line


def parse_complex(text: str, prune: bool = False) -> SimplicialComplex:
    """Parse a facet file; redundant facets are an error unless ``prune``."""
    facets = []
    for no, line in _content_lines(text):
        facets.append(frozenset() if line == "EMPTYFACET" else frozenset(line.split()))
        if len(line.split()) != len(facets[-1]) and line != "EMPTYFACET":
            raise FormatError(f"line {no}: repeated vertex in facet")
    try:
        K = SimplicialComplex(facets)
    except ValueError as exc:
        if not prune or "contained in another facet" not in str(exc):
            raise FormatError(str(exc)) from None
        K = SimplicialComplex(facets, prune=True)
        warnings.warn(f"dropped {len(set(facets)) - len(K.facets)} non-maximal facets", stacklevel=2)
    return K


def format_complex(K: SimplicialComplex) -> str:
    return "".join(format_face(F) + "\n" for F in K.facets)


def read_complex(path: str, prune: bool = False) -> SimplicialComplex:
    with open(path, encoding="utf-8") as fh:
        return parse_complex(fh.read(), prune)


def write_complex(K: SimplicialComplex, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_complex(K))


# -- polytopes --------------------------------------------------------------


def _rationals(tokens: list[str], no: int) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(t) for t in tokens)
    except (ValueError, ZeroDivisionError):
        raise FormatError(f"line {no}: bad rational in {' '.join(tokens)!r}") from None


def parse_polytope(text: str) -> GeometricPolytope:
    lines = list(_content_lines(text))
    if not lines:
        raise FormatError("empty polytope file")
    no, head = lines[0]
    parts = head.split()
    if len(parts) != 3 or parts[0] != "POLYTOPE":
        raise FormatError(f"line {no}: expected 'POLYTOPE <dim> <n>'")
    try:
        dim, n = int(parts[1]), int(parts[2])
    except ValueError:
        raise FormatError(f"line {no}: bad header numbers") from None
    names, verts, facets = [], [], []
    for no, line in lines[1:]:
        if line.startswith("FACET"):
            body = line[len("FACET"):]
            if "|" not in body or "normal:" not in body:
                raise FormatError(f"line {no}: expected 'FACET names | normal: ...'")
            left, right = body.split("|", 1)
            normal = _rationals(right.split("normal:", 1)[1].split(), no)
            if len(normal) != dim:
                raise FormatError(f"line {no}: normal has {len(normal)} entries, expected {dim}")
            facets.append(Facet(frozenset(left.split()), normal))
            continue
        if ":" not in line:
            raise FormatError(f"line {no}: expected 'name: coordinates'")
        name, rest = line.split(":", 1)
        x = _rationals(rest.split(), no)
        if len(x) != dim:
            raise FormatError(f"line {no}: vertex has {len(x)} coordinates, expected {dim}")
        names.append(name.strip())
        verts.append(x)
    if len(names) != n:
        raise FormatError(f"header announces {n} vertices, found {len(names)}")
    try:
        return GeometricPolytope(names, verts, facets)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def format_polytope(P: GeometricPolytope) -> str:
    out = [f"POLYTOPE {P.dim} {P.n_vertices}"]
    for name, x in zip(P.names, P.vertices):
        out.append(f"{name}: " + " ".join(format_rational(c) for c in x))
    for f in P.facets:
        out.append(
            f"FACET {' '.join(sort_face(f.names))} | normal: " + " ".join(format_rational(c) for c in f.normal)
        )
    return "\n".join(out) + "\n"


# -- certificates -----------------------------------------------------------


def format_shelling(order) -> str:
    return "".join(format_face(F) + "\n" for F in order)


def parse_shelling(text: str) -> list[frozenset]:
    return [frozenset() if line == "EMPTYFACET" else frozenset(line.split()) for _, line in _content_lines(text)]


def format_matching(mu: MorseMatching) -> str:
    return "".join(line + "\n" for line in mu.lines())


def parse_matching(text: str) -> MorseMatching:
    pairs = []
    for no, line in _content_lines(text):
        if "->" not in line:
            raise FormatError(f"line {no}: expected 'face -> face'")
        a, b = line.split("->", 1)
        pairs.append(tuple(frozenset() if s.strip() == "EMPTY" else frozenset(s.split()) for s in (a, b)))
    return MorseMatching(pairs)


def format_tree(tree, indent: int = 0) -> str:
    """Shedding, decision and construction trees as indented lists."""
    pad = "  " * indent
    tag = tree[0]
    if tag == "simplex":
        return f"{pad}simplex {format_face(tree[1])}\n"
    if tag == "point":
        return f"{pad}point {tree[1]}\n"
    if tag == "split":
        return (
            f"{pad}split\n"
            + format_tree(tree[1], indent + 1)
            + format_tree(tree[2], indent + 1)
            + f"{pad}  meet\n"
            + format_tree(tree[3], indent + 2)
        )
    v, tl, td = tree
    return (
        f"{pad}vertex {v}\n{pad}  link\n" + format_tree(tl, indent + 2)
        + f"{pad}  deletion\n" + format_tree(td, indent + 2)
    )
