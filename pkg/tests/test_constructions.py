import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from suspwreath import SimplicialComplex, euler_characteristic, f_vector, one_point_suspension, reduced_join
from suspwreath import wreath_f_vector_formula, wreath_product
from suspwreath.constructions import (
    iter_wreath_facets,
    verify_reduced_join_commutes,
    wreath_by_reduced_joins,
    wreath_facet_count,
)
from suspwreath.generators import cross_polytope_boundary, cycle, path, simplex, simplex_boundary
from suspwreath.isomorphism import is_isomorphic
from test_complex import complexes


def test_suspension_of_c5():
    S = one_point_suspension(cycle(5), "1")
    assert f_vector(S) == (6, 12, 8)
    assert euler_characteristic(S) == 2
    assert {"1'", "1''"} <= set(S.vertices) and "1" not in S.vertices


def test_suspension_matches_brute_force_definition():
    K = SimplicialComplex([["1", "2", "3"], ["3", "4"]])
    for v in K.vertices:
        S = one_point_suspension(K, v, ("a", "b"))
        assert set(S.facets) == oracles.suspension(K.facets, v)


def test_suspension_label_escapes():
    K = SimplicialComplex([["1", "1'"]])
    S = one_point_suspension(K, "1")
    assert "1''" in S.vertices and "1'''" in S.vertices
    with pytest.raises(ValueError):
        one_point_suspension(K, "1", ("1'", "z"))
    with pytest.raises(KeyError):
        one_point_suspension(K, "7")


def test_reduced_join_is_iterated_suspension():
    K = cycle(4)
    R = reduced_join(2, K, "1")
    assert set(R.vertices) >= {"1^1", "1^2", "1^3"}
    S = one_point_suspension(one_point_suspension(K, "1"), "1''")
    assert is_isomorphic(R, S)
    assert reduced_join(0, K, "1") == K


def test_reduced_joins_commute():
    assert verify_reduced_join_commutes(cycle(5), "1", "3", 1, 2)
    assert verify_reduced_join_commutes(path(4), "1", "2", 2, 1)


@pytest.mark.parametrize("d", [1, 2])
@pytest.mark.parametrize("K", [cycle(4), path(3), simplex_boundary(2), SimplicialComplex([["1", "2"], ["3"]])])
def test_wreath_matches_definition(K, d):
    W = wreath_product(d, K)
    assert set(W.facets) == oracles.wreath_facets(d, K.facets)
    assert W == wreath_by_reduced_joins(d, K)
    assert len(W.facets) == wreath_facet_count(d, K)


def test_wreath_zero_and_errors():
    assert wreath_product(0, cycle(4)) == cycle(4)
    with pytest.raises(ValueError):
        next(iter_wreath_facets(-1, cycle(4)))


def test_wreath_of_simplex_is_simplex():
    assert is_isomorphic(wreath_product(1, simplex(2)), simplex(5))


def test_wreath_identity_bd_triangle():
    assert is_isomorphic(wreath_product(2, simplex_boundary(2)), simplex_boundary(8))


def test_formula_on_octahedron():
    K = cross_polytope_boundary(3)
    assert wreath_f_vector_formula(1, f_vector(K)) == f_vector(wreath_product(1, K))
    with pytest.raises(ValueError):
        wreath_f_vector_formula(1, f_vector(K), n=7)


@settings(max_examples=40, deadline=None)
@given(complexes(5), st.integers(1, 2))
def test_formula_matches_enumeration(K, d):
    assert wreath_f_vector_formula(d, f_vector(K)) == f_vector(wreath_product(d, K))
