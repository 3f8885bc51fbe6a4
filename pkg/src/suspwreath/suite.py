"""Acceptance criteria as runnable checks, shared by the CLI ``paper-suite``.

Each check returns ``(passed, detail)``.
"""

from __future__ import annotations

from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .complex import SimplicialComplex, f_vector
from .constructions import one_point_suspension, wreath_f_vector_formula, wreath_product
from .decomposability import (
    MorseMatching,
    check_morse_matching,
    find_shelling,
    is_cone,
    is_non_evasive,
    is_vertex_decomposable,
    lift_morse_matching,
    lift_shelling,
    lift_shelling_to_wreath,
    project_shelling,
    verify_shelling,
)
from .generators import (
    cross_polytope_boundary,
    cycle,
    cyclic_polytope_boundary,
    path,
    simplex,
    simplex_boundary,
)
from .isomorphism import is_isomorphic
from .polytope import (
    cross_polytope,
    pentagon,
    polytope_wreath,
    segment,
    simplex_polytope,
    verify_facet_system,
    wreath_equals_iterated_dual_wedge,
)
from .symmetry import automorphism_group, wreath_group_generators
from .topology import (
    dual_diameter,
    hirsch_gap,
    is_k_neighborly,
    neighborliness,
    neighborly_wreath_parameter_check,
    reduced_homology,
)

Result = tuple[bool, str]


def _cx(*facets: str) -> SimplicialComplex:
    return SimplicialComplex(f.split() for f in facets)


def corpus() -> dict[str, SimplicialComplex]:
    """Small pure complexes (at most 8 vertices) used across the checks."""
    return {
        "point": _cx("1"),
        "S0": simplex_boundary(1),
        "path4": path(4),
        "C4": cycle(4),
        "C5": cycle(5),
        "bd-triangle": simplex_boundary(2),
        "triangle": simplex(2),
        "bd-tetrahedron": simplex_boundary(3),
        "two-edges": _cx("1 2", "3 4"),
        "bowtie": _cx("1 2 3", "3 4 5"),
        "cone-C4": _cx("1 2 5", "2 3 5", "3 4 5", "1 4 5"),
        "moebius": _cx("1 2 3", "2 3 4", "3 4 5", "1 4 5", "1 2 5"),
        "octahedron": cross_polytope_boundary(3),
        "RP2": _cx("1 2 3", "1 3 4", "1 4 5", "1 5 6", "1 2 6", "2 3 5", "2 4 5", "2 4 6", "3 4 6", "3 5 6"),
        "bd-C4(6)": cyclic_polytope_boundary(4, 6),
    }


def c1_fvector_regression() -> Result:
    want = (10, 45, 120, 205, 222, 140, 40)
    K = cycle(5)
    enum = tuple(f_vector(wreath_product(1, K)))
    formula = tuple(wreath_f_vector_formula(1, f_vector(K)))
    return enum == want and formula == want, f"enumerated {enum}, formula {formula}"


def c2_formula_vs_enumeration() -> Result:
    bad = []
    cases = 0
    for name, K in [("C5", cycle(5)), ("bd-tetrahedron", simplex_boundary(3)),
                    ("octahedron", cross_polytope_boundary(3)), ("path4", path(4))]:
        for d in (1, 2):
            if K.n_vertices * (d + 1) > 18:
                continue
            cases += 1
            if wreath_f_vector_formula(d, f_vector(K)) != f_vector(wreath_product(d, K)):
                bad.append(f"{name}, d={d}")
    return not bad, f"{cases} cases" + (f"; mismatches: {bad}" if bad else "")


def c3_simplex_identities() -> Result:
    results = [is_isomorphic(wreath_product(1, simplex_boundary(k)), simplex_boundary(2 * k + 1)) for k in (1, 2, 3)]
    results.append(is_isomorphic(wreath_product(2, simplex_boundary(2)), simplex_boundary(8)))
    return all(results), f"verdicts {results}"


def c4_facet_count() -> Result:
    bad = []
    for name, K in corpus().items():
        e, n = K.dimension() + 1, K.n_vertices
        for d in (1, 2):
            if n * (d + 1) > 18:
                continue
            if f_vector(wreath_product(d, K))[-1] != len(K.facets) * (d + 1) ** (n - e):
                bad.append(f"{name}, d={d}")
    W = polytope_wreath(segment(), pentagon())
    v = verify_facet_system(W, W.facets, simplicial=True)
    ok = not bad and len(W.facets) == 40 and v.holds
    return ok, f"polytope facets {len(W.facets)}, verification {v.status}" + (f"; mismatches {bad}" if bad else "")


def c5_tetrahedron() -> Result:
    W = polytope_wreath(segment(), segment())
    want = {tuple(Fraction(c) for c in p) for p in [(-1, 0, -1), (1, 0, -1), (0, -1, 1), (0, 1, 1)]}
    return set(W.vertices) == want, f"vertices {sorted(tuple(map(str, p)) for p in W.vertices)}"


def c6_iterated_dual_wedge() -> Result:
    cases = [(1, simplex_polytope(2)), (1, cross_polytope(2)), (2, segment())]
    verdicts = [wreath_equals_iterated_dual_wedge(d, Q).status for d, Q in cases]
    return all(s == "holds" for s in verdicts), f"verdicts {verdicts}"


def c7_morse_lift() -> Result:
    pi = path(4)
    mu = MorseMatching([("1 2".split(), ["1"]), ("2 3".split(), ["2"]), ("3 4".split(), ["3"]), (["4"], [])])
    lifted = lift_morse_matching(pi, mu, "4")
    ok, why = check_morse_matching(one_point_suspension(pi, "4"), lifted)
    crit = lifted.critical_vertex()
    return ok and crit == "4'", f"perfect+acyclic={ok} {why}, critical vertex {crit}"


PRESERVED = {
    "vertex-decomposable": lambda K: is_vertex_decomposable(K),
    "shellable": lambda K: find_shelling(K),
    "cone": is_cone,
    "non-evasive": lambda K: is_non_evasive(K),
}


def c8_preservation() -> Result:
    bad, undecided, checks = [], [], 0
    for name, K in corpus().items():
        base = {p: f(K) for p, f in PRESERVED.items()}
        for v in K.vertices:
            S = one_point_suspension(K, v)
            for p, f in PRESERVED.items():
                checks += 1
                r = f(S)
                if not (r.decided and base[p].decided):
                    undecided.append(f"{name}/{v}/{p}")
                elif r.status != base[p].status:
                    bad.append(f"{name}/{v}/{p}")
    ok = not bad and not undecided
    return ok, f"{checks} comparisons; mismatches {bad}; undecided {undecided}"


def c9_homology_shift() -> Result:
    bad = []
    for name, K in corpus().items():
        H = reduced_homology(K)
        for v in K.vertices:
            if reduced_homology(one_point_suspension(K, v)).nonzero() != H.shifted(1):
                bad.append(f"{name}/{v}")
    H = reduced_homology(one_point_suspension(cycle(5), "1"))
    special = {i: str(g) for i, g in H.nonzero().items()}
    return not bad and special == {2: "Z"}, f"mismatches {bad}; Susp(C5) nonzero {special}"


def c10_neighborliness_transfer() -> Result:
    bad = []
    for name, K in corpus().items():
        k = neighborliness(K)
        for d in (1, 2):
            if K.n_vertices * (d + 1) > 18:
                continue
            W = wreath_product(d, K)
            if not is_k_neighborly(W, k * (d + 1) + d)[0]:
                bad.append(f"{name}, d={d}: not {k * (d + 1) + d}-neighborly")
            if k < K.n_vertices and is_k_neighborly(W, (k + 1) * (d + 1))[0]:
                bad.append(f"{name}, d={d}: is {(k + 1) * (d + 1)}-neighborly")
    w = neighborliness(wreath_product(1, cycle(5)))
    return not bad and w == 3, f"wreath(1,C5) neighborliness {w}; violations {bad}"


def c11_parameter_law() -> Result:
    bad, cells = [], 0
    for e in (2, 3, 4):
        for n in (e + 2, e + 3, e + 4):
            for d in (1, 2):
                cells += 1
                W = wreath_product(d, cyclic_polytope_boundary(e, n))
                measured = is_k_neighborly(W, (n * d + e) // 2)[0]
                if measured != neighborly_wreath_parameter_check(e, n, d):
                    bad.append((e, n, d))
    return not bad, f"{cells} cells; disagreements {bad}"


def c12_symmetry() -> Result:
    parts, ok = [], True
    for d, name, K in [(1, "S0", simplex_boundary(1)), (1, "C4", cycle(4)), (1, "C5", cycle(5))]:
        A = automorphism_group(K)
        G = wreath_group_generators(d, K, A)
        full = automorphism_group(wreath_product(d, K))
        divides = full.exact and full.order % G.order == 0
        transfer = not A.is_transitive() or G.is_transitive()
        ok &= divides and transfer and G.order == 2 ** K.n_vertices * A.order
        parts.append(f"{name}: |wreath group|={G.order} |Aut|={full.order} transitive={G.is_transitive()}")
    return ok, "; ".join(parts)


def c13_shelling_lift() -> Result:
    bad, n = [], 0
    for name, K in corpus().items():
        sh = find_shelling(K)
        if not sh.holds:
            continue
        for v in K.vertices:
            n += 1
            S = one_point_suspension(K, v)
            if not verify_shelling(S, lift_shelling(K, sh.certificate, v)):
                bad.append(f"lift {name}/{v}")
            own = find_shelling(S)
            if not own.holds or not verify_shelling(K, project_shelling(K, own.certificate, v)):
                bad.append(f"project {name}/{v}")
    C5 = cycle(5)
    wo = lift_shelling_to_wreath(1, C5, find_shelling(C5).certificate)
    wok = verify_shelling(wreath_product(1, C5), wo)
    return not bad and wok, f"{n} suspensions; wreath(1,C5) lift verified={wok}; failures {bad}"


def c14_hirsch() -> Result:
    simplices = [dual_diameter(simplex_boundary(d)) for d in (2, 3, 4, 5)]
    dc5, gc5 = dual_diameter(cycle(5)), hirsch_gap(cycle(5))
    gw = hirsch_gap(wreath_product(1, cycle(5)))
    ok = all(x == 1 for x in simplices) and dc5 == 2 and gc5 == 1 and gw >= 0
    return ok, f"simplex boundaries {simplices}; C5 diameter {dc5} gap {gc5}; wreath(1,C5) gap {gw}"


CRITERIA: list[tuple[int, str, Callable[[], Result]]] = [
    (1, "f-vector regression", c1_fvector_regression),
    (2, "formula vs enumeration", c2_formula_vs_enumeration),
    (3, "simplex identities", c3_simplex_identities),
    (4, "facet-count corollary", c4_facet_count),
    (5, "tetrahedron coordinates", c5_tetrahedron),
    (6, "wreath = iterated dual wedge", c6_iterated_dual_wedge),
    (7, "Morse lift on the path", c7_morse_lift),
    (8, "suspension preservation", c8_preservation),
    (9, "homology shift", c9_homology_shift),
    (10, "neighborliness transfer", c10_neighborliness_transfer),
    (11, "neighborly parameter law", c11_parameter_law),
    (12, "symmetry embedding", c12_symmetry),
    (13, "shelling lift", c13_shelling_lift),
    (14, "Hirsch diagnostics", c14_hirsch),
]


def _run_one(i: int) -> tuple[int, str, bool, str]:
    num, title, fn = CRITERIA[i]
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failed criterion, reported as such
        ok, detail = False, f"error: {exc!r}"
    return num, title, ok, detail


def run_suite(threads: int = 1) -> list[tuple[int, str, bool, str]]:
    """All criteria in order; ``threads > 1`` runs them in worker processes."""
    idx = range(len(CRITERIA))
    if threads <= 1:
        return [_run_one(i) for i in idx]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(_run_one, idx))
