import warnings
from fractions import Fraction

import pytest

import oracles
from suspwreath import f_vector, one_point_suspension
from suspwreath.generators import cross_polytope_boundary, simplex_boundary
from suspwreath.isomorphism import is_isomorphic
from suspwreath.polytope import (
    Facet,
    GeometricPolytope,
    blocking_beta,
    boundary_complex,
    cross_polytope,
    dual_wedge,
    facet_normal,
    pentagon,
    polygon,
    polytope_wreath,
    predicted_facets,
    projection_pi,
    segment,
    simplex_polytope,
    translate_to_vertex_barycenter,
    verify_facet_system,
    wreath_symmetry,
)

F = Fraction


def hull(P):
    return oracles.hull_facets(dict(zip(P.names, P.vertices)))


@pytest.mark.parametrize("P", [segment(), simplex_polytope(2), simplex_polytope(3), cross_polytope(3), pentagon()])
def test_standard_facet_systems_are_exact(P):
    assert verify_facet_system(P, P.facets).holds
    if P.dim > 1:
        assert {f.names for f in P.facets} == hull(P)


def test_facet_normal():
    P = simplex_polytope(2)
    assert facet_normal(P, ["1", "2"]) == (F(-1), F(-1))
    assert boundary_complex(cross_polytope(3)) == cross_polytope_boundary(3)


def test_validation():
    with pytest.raises(ValueError):
        GeometricPolytope(["a", "a"], [(0,), (1,)])
    with pytest.raises(ValueError):
        GeometricPolytope(["a", "b"], [(0,), (0, 1)])
    with pytest.raises(ValueError):
        GeometricPolytope([], [])


def test_translate_to_vertex_barycenter():
    P = polygon([(-1, -1), (3, -1), (3, 3), (-1, 3)])
    assert not P.is_centered()
    Q = translate_to_vertex_barycenter(P)
    assert Q.is_centered()
    assert Q.coords("1") == (F(-2), F(-2))
    assert verify_facet_system(Q, Q.facets).holds
    assert translate_to_vertex_barycenter(Q) is Q


def test_perturbed_normal_fails_with_witness():
    P = simplex_polytope(2)
    f = P.facets[0]
    bad = Facet(f.names, (f.normal[0] + F(1, 10),) + f.normal[1:])
    v = verify_facet_system(P, [bad] + list(P.facets[1:]))
    assert v.status == "fails"
    label, vertex, value = v.certificate
    assert vertex in f.names and value != 0


def test_ridge_condition_catches_missing_facet():
    P = simplex_polytope(2)
    v = verify_facet_system(P, P.facets[:-1], simplicial=True)
    assert v.status == "fails" and "ridge" in v.reason


def test_dual_wedge_matches_one_point_suspension():
    Q = pentagon()
    for v in Q.names:
        D = dual_wedge(Q, v)
        assert verify_facet_system(D, D.facets, simplicial=True).holds
        assert boundary_complex(D) == one_point_suspension(boundary_complex(Q), v)
        assert {f.names for f in D.facets} == hull(D)


def test_dual_wedge_at_primed_vertex():
    D = dual_wedge(segment(), "1")
    E = dual_wedge(D, "1'")
    assert verify_facet_system(E, E.facets, simplicial=True).holds
    assert E.n_vertices == 4


def test_wreath_segment_pentagon():
    W = polytope_wreath(segment(), pentagon())
    assert W.dim == 7 and W.n_vertices == 10
    assert f_vector(boundary_complex(W)) == (10, 45, 120, 205, 222, 140, 40)


def test_wreath_triangle_square_is_hull():
    W = polytope_wreath(simplex_polytope(2), cross_polytope(2))
    assert verify_facet_system(W, W.facets, simplicial=True).holds
    assert {f.names for f in W.facets} == hull(W)


def test_predicted_facets_and_beta_pi():
    P, Q = segment(), pentagon()
    pred = predicted_facets(P, Q)
    assert len(pred) == 40
    pi = projection_pi(P, Q)
    assert pi["1^3"] == ("1", "3")
    bases = {f.names for f in Q.facets}
    for pf in pred:
        G = blocking_beta(pf)
        assert G in bases
        # every vertex of G keeps all copies, every other vertex keeps exactly one
        for w in Q.names:
            kept = {v for v, ww in (pi[n] for n in pf.names) if ww == w}
            assert len(kept) == (2 if w in G else 1)


def test_uncentered_factor_warns():
    P = polygon([(-1, -1), (3, -1), (-1, 3)])
    with pytest.warns(UserWarning, match="barycenter"):
        W = polytope_wreath(segment(), P)
    assert verify_facet_system(W, W.facets, simplicial=True).holds
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        polytope_wreath(segment(), pentagon())


def test_wreath_symmetry():
    P, Q = segment(), cross_polytope(2)
    flip = [[-1]]
    perm = wreath_symmetry(P, Q, block_maps={"1": flip})
    assert perm["1^1"] == "2^1" and perm["1^2"] == "1^2"
    rot = [[0, -1], [1, 0]]
    perm = wreath_symmetry(P, Q, q_map=rot)
    W = boundary_complex(polytope_wreath(P, Q))
    assert sorted(perm.values()) == sorted(W.vertices)
    assert {frozenset(perm[x] for x in f) for f in W.facets} == set(W.facets)
    with pytest.raises(ValueError):
        wreath_symmetry(P, Q, q_map=[[2, 0], [0, 1]])


def test_wreath_of_segments_is_tetrahedron():
    W = polytope_wreath(segment(), segment())
    assert is_isomorphic(boundary_complex(W), simplex_boundary(3))
