"""Acceptance criteria, one test per criterion.  All comparisons are exact."""

from fractions import Fraction

import pytest

import oracles
from suspwreath import SimplicialComplex, f_vector, one_point_suspension, wreath_f_vector_formula, wreath_product
from suspwreath.decomposability import (
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
from suspwreath.generators import cross_polytope_boundary, cycle, cyclic_polytope_boundary, path, simplex_boundary
from suspwreath.isomorphism import is_isomorphic
from suspwreath.polytope import (
    cross_polytope,
    pentagon,
    polytope_wreath,
    segment,
    simplex_polytope,
    verify_facet_system,
    wreath_equals_iterated_dual_wedge,
)
from suspwreath.suite import corpus
from suspwreath.symmetry import automorphism_group, wreath_group_generators
from suspwreath.topology import (
    dual_diameter,
    hirsch_gap,
    is_k_neighborly,
    neighborliness,
    neighborly_wreath_parameter_check,
    reduced_homology,
)

CORPUS = corpus()


def test_criterion_01_fvector_regression():
    want = (10, 45, 120, 205, 222, 140, 40)
    C5 = cycle(5)
    assert tuple(f_vector(wreath_product(1, C5))) == want
    assert tuple(wreath_f_vector_formula(1, f_vector(C5))) == want


@pytest.mark.parametrize("d", [1, 2])
@pytest.mark.parametrize(
    "name,K",
    [("C5", cycle(5)), ("bd-tetrahedron", simplex_boundary(3)),
     ("octahedron", cross_polytope_boundary(3)), ("path4", path(4))],
)
def test_criterion_02_formula_vs_enumeration(name, K, d):
    if K.n_vertices * (d + 1) > 18:
        pytest.skip("outside n(d+1) <= 18")
    assert wreath_f_vector_formula(d, f_vector(K)) == f_vector(wreath_product(d, K))


def test_criterion_03_simplex_identities():
    for k in (1, 2, 3):
        assert is_isomorphic(wreath_product(1, simplex_boundary(k)), simplex_boundary(2 * k + 1))
    assert is_isomorphic(wreath_product(2, simplex_boundary(2)), simplex_boundary(8))


def test_criterion_04_facet_count():
    for name, K in CORPUS.items():
        e, n = K.dimension() + 1, K.n_vertices
        for d in (1, 2):
            if n * (d + 1) > 18:
                continue
            assert f_vector(wreath_product(d, K))[-1] == len(K.facets) * (d + 1) ** (n - e), (name, d)
    W = polytope_wreath(segment(), pentagon())
    assert len(W.facets) == 5 * 2**3
    assert verify_facet_system(W, W.facets, simplicial=True).holds
    # independent brute-force hull agrees with the predicted facets
    pts = dict(zip(W.names, W.vertices))
    assert oracles.hull_facets(pts) == {f.names for f in W.facets}


def test_criterion_05_tetrahedron_coordinates():
    W = polytope_wreath(segment(), segment())
    want = {tuple(Fraction(c) for c in p) for p in [(-1, 0, -1), (1, 0, -1), (0, -1, 1), (0, 1, 1)]}
    assert set(W.vertices) == want
    assert len(W.vertices) == 4


@pytest.mark.parametrize("d,Q", [(1, simplex_polytope(2)), (1, cross_polytope(2)), (2, segment())],
                         ids=["triangle", "square", "segment"])
def test_criterion_06_wreath_is_iterated_dual_wedge(d, Q):
    assert wreath_equals_iterated_dual_wedge(d, Q).holds


def test_criterion_07_morse_lift_on_path():
    pi = path(4)
    mu = MorseMatching([(["1", "2"], ["1"]), (["2", "3"], ["2"]), (["3", "4"], ["3"]), (["4"], [])])
    lifted = lift_morse_matching(pi, mu, "4")
    S = one_point_suspension(pi, "4")
    ok, why = check_morse_matching(S, lifted)
    assert ok, why
    assert oracles.morse_ok(S.facets, lifted.pairs)
    assert lifted.critical_vertex() == "4'"


PROPERTIES = {
    "vertex-decomposable": is_vertex_decomposable,
    "shellable": find_shelling,
    "cone": is_cone,
    "non-evasive": is_non_evasive,
}


@pytest.mark.parametrize("prop", sorted(PROPERTIES))
def test_criterion_08_suspension_preserves(prop):
    f = PROPERTIES[prop]
    assert len(CORPUS) >= 10 and all(K.n_vertices <= 8 for K in CORPUS.values())
    for name, K in CORPUS.items():
        base = f(K)
        assert base.decided, name
        for v in K.vertices:
            r = f(one_point_suspension(K, v))
            assert r.decided, (name, v)
            assert r.status == base.status, (name, v)


def test_criterion_09_homology_shift():
    for name, K in CORPUS.items():
        H = reduced_homology(K)
        for v in K.vertices:
            S = one_point_suspension(K, v)
            assert reduced_homology(S).nonzero() == H.shifted(1), (name, v)
    H = reduced_homology(one_point_suspension(cycle(5), "1")).nonzero()
    assert list(H) == [2]
    assert H[2].betti == 1 and not H[2].torsion


def test_criterion_10_neighborliness_transfer():
    for name, K in CORPUS.items():
        k = neighborliness(K)
        assert k == oracles.neighborliness(K.facets), name
        for d in (1, 2):
            if K.n_vertices * (d + 1) > 18:
                continue
            W = wreath_product(d, K)
            assert is_k_neighborly(W, k * (d + 1) + d)[0], (name, d)
            if k < K.n_vertices:
                assert not is_k_neighborly(W, (k + 1) * (d + 1))[0], (name, d)
    assert neighborliness(wreath_product(1, cycle(5))) == 3


def test_criterion_11_neighborly_parameter_law():
    assert is_k_neighborly(wreath_product(1, cyclic_polytope_boundary(4, 6)), 5)[0]
    for e in (2, 3, 4):
        for n in (e + 2, e + 3, e + 4):
            for d in (1, 2):
                W = wreath_product(d, cyclic_polytope_boundary(e, n))
                measured = is_k_neighborly(W, (n * d + e) // 2)[0]
                assert measured == neighborly_wreath_parameter_check(e, n, d), (e, n, d)


@pytest.mark.parametrize("K", [simplex_boundary(1), cycle(4), cycle(5)], ids=["S0", "C4", "C5"])
def test_criterion_12_symmetry_embedding(K):
    d = 1
    A = automorphism_group(K)
    assert A.order == oracles.automorphism_count(K.facets)
    G = wreath_group_generators(d, K, A)
    assert G.order == 2**K.n_vertices * A.order
    full = automorphism_group(wreath_product(d, K))
    assert full.exact and full.order % G.order == 0
    if K.n_vertices > 2:
        assert A.is_transitive() and G.is_transitive()


def test_criterion_13_shelling_lift():
    for name, K in CORPUS.items():
        sh = find_shelling(K)
        if not sh.holds:
            continue
        for v in K.vertices:
            S = one_point_suspension(K, v)
            lifted = lift_shelling(K, sh.certificate, v)
            assert verify_shelling(S, lifted), (name, v)
            assert oracles.is_shelling(lifted), (name, v)
            own = find_shelling(S)
            assert own.holds
            assert verify_shelling(K, project_shelling(K, own.certificate, v)), (name, v)
    C5 = cycle(5)
    order = lift_shelling_to_wreath(1, C5, find_shelling(C5).certificate)
    assert verify_shelling(wreath_product(1, C5), order)


def test_criterion_14_hirsch_diagnostics():
    for d in (2, 3, 4, 5):
        assert dual_diameter(simplex_boundary(d)) == 1
    assert dual_diameter(cycle(5)) == 2 == oracles.dual_diameter(cycle(5).facets)
    assert hirsch_gap(cycle(5)) == 1
    assert hirsch_gap(wreath_product(1, cycle(5))) >= 0
