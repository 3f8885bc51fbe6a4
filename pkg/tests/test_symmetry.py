import pytest

import oracles
from suspwreath import SimplicialComplex, wreath_product
from suspwreath.generators import cross_polytope_boundary, cycle, cyclic_polytope_boundary, path, simplex_boundary
from suspwreath.isomorphism import find_isomorphism, is_isomorphic
from suspwreath.symmetry import (
    PermutationGroup,
    automorphism_group,
    cycle_notation,
    is_vertex_transitive,
    parse_cycles,
    preserves_facets,
    schreier_sims_order,
    wreath_group_generators,
)


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_cycle_dihedral(n):
    G = automorphism_group(cycle(n))
    assert G.order == 2 * n and G.exact and G.is_transitive()


@pytest.mark.parametrize("K", [path(4), cross_polytope_boundary(3), simplex_boundary(3),
                               SimplicialComplex([["1", "2", "3"], ["3", "4"]])])
def test_automorphism_order_matches_brute_force(K):
    G = automorphism_group(K)
    assert G.order == oracles.automorphism_count(K.facets)
    assert all(preserves_facets(K, g) for g in G.generators)


def test_transitivity():
    assert not is_vertex_transitive(path(4))
    assert is_vertex_transitive(cross_polytope_boundary(3))


def test_schreier_sims():
    assert schreier_sims_order(5, [(1, 2, 3, 4, 0), (1, 0, 2, 3, 4)]) == 120
    assert schreier_sims_order(4, [(1, 0, 3, 2)]) == 2
    assert schreier_sims_order(3, []) == 1


def test_cycle_notation_round_trip():
    dom = ["1", "2", "3", "4", "10"]
    p = parse_cycles("(1 2 10)(3 4)", dom)
    assert cycle_notation(p) == "(1 2 10)(3 4)"
    assert cycle_notation(parse_cycles("()", dom)) == "()"
    with pytest.raises(ValueError):
        parse_cycles("(1 9)", dom)
    with pytest.raises(ValueError):
        parse_cycles("(1 2)(1 3)", dom)


def test_wreath_group_d0_returns_aut():
    A = automorphism_group(cycle(5))
    assert wreath_group_generators(0, cycle(5), A) is A


@pytest.mark.parametrize("d,K", [(1, path(3)), (2, simplex_boundary(1)), (1, simplex_boundary(2))])
def test_wreath_group_divides_full_group(d, K):
    G = wreath_group_generators(d, K)
    full = automorphism_group(wreath_product(d, K))
    assert full.order % G.order == 0


def test_permutation_group_orbits():
    G = PermutationGroup(["1", "2", "3", "4"], [{"1": "2", "2": "1", "3": "3", "4": "4"}])
    assert G.order == 2 and G.orbits() == [["1", "2"], ["3"], ["4"]]
    assert G.lines() == ["(1 2)"]


def test_isomorphism():
    K = cycle(5)
    L = K.relabel({"1": "a", "2": "b", "3": "c", "4": "d", "5": "e"})
    m = find_isomorphism(K, L)
    assert {frozenset(m[x] for x in f) for f in K.facets} == set(L.facets)
    assert not is_isomorphic(cycle(6), SimplicialComplex([["1", "2"], ["2", "3"], ["3", "1"], ["4", "5"], ["5", "6"], ["6", "4"]]))
    assert not is_isomorphic(path(4), cycle(4))


@pytest.mark.parametrize("e", [1, 2])
def test_small_odd_cyclic_polytope_group_is_klein(e):
    G = automorphism_group(cyclic_polytope_boundary(2 * e + 3, 2 * e + 6))
    assert G.order == 4
    a, b = G.generators
    assert all(a[a[x]] == x and b[b[x]] == x and a[b[x]] == b[a[x]] for x in G.domain)
