import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from suspwreath import SimplicialComplex, cone, deletion, euler_characteristic, f_vector, join, link, star
from suspwreath.complex import face_link, format_face, induced, label_key
from suspwreath.generators import cycle, path, simplex, simplex_boundary


def cx(*facets):
    return SimplicialComplex(f.split() for f in facets)


@st.composite
def complexes(draw, max_vertices=6):
    n = draw(st.integers(1, max_vertices))
    labels = [str(i) for i in range(1, n + 1)]
    facets = draw(st.lists(st.sets(st.sampled_from(labels), min_size=1), min_size=1, max_size=6))
    return SimplicialComplex(facets, prune=True)


def test_redundant_facet_rejected_or_pruned():
    with pytest.raises(ValueError, match="contained in another facet"):
        cx("1 2 3", "1 2")
    assert cx("1 2 3", "4").facets == (frozenset("123"), frozenset("4"))
    assert SimplicialComplex([["1", "2", "3"], ["1", "2"]], prune=True) == cx("1 2 3")


def test_bad_label_rejected():
    with pytest.raises(ValueError):
        SimplicialComplex([["a b"]])


def test_natural_label_order():
    assert sorted(["10", "2", "1"], key=label_key) == ["1", "2", "10"]
    assert cycle(12).vertices[-1] == "12"


def test_void_and_empty_facet():
    void = SimplicialComplex()
    assert void.is_void()
    empty = SimplicialComplex([[]])
    assert not empty.is_void() and empty.dimension() == -1
    assert format_face(frozenset()) == "EMPTYFACET"
    with pytest.raises(ValueError):
        f_vector(void)


def test_link_star_deletion_examples():
    K = cx("1 2 3", "3 4")
    assert link(K, "3") == cx("1 2", "4")
    assert deletion(K, "3") == cx("1 2", "4")
    assert star(K, "3") == K
    assert link(K, "4") == cx("3")
    assert face_link(K, ["1", "2"]) == cx("3")
    assert induced(K, ["1", "2", "4"]) == cx("1 2", "4")


def test_link_of_cycle_vertex_is_s0():
    assert link(cycle(5), "1") == cx("2", "5")


def test_cone_and_join():
    K = path(3)
    C = cone("x", K)
    assert f_vector(C) == (4, 5, 2)
    with pytest.raises(ValueError):
        cone("1", K)
    J = join(simplex_boundary(1), simplex_boundary(1))
    assert f_vector(J) == (4, 4)
    assert set(J.vertices) == {"L.1", "L.2", "R.1", "R.2"}


def test_euler_characteristic():
    assert euler_characteristic(simplex_boundary(3)) == 2
    assert euler_characteristic(cycle(6)) == 0
    assert euler_characteristic(simplex(4), reduced=True) == 0


def test_relabel():
    K = path(3).relabel({"1": "a"})
    assert K == cx("a 2", "2 3")


@settings(max_examples=60, deadline=None)
@given(complexes())
def test_f_vector_matches_brute_force(K):
    assert tuple(f_vector(K)) == oracles.fvec(K.facets)


@settings(max_examples=60, deadline=None)
@given(complexes(), st.data())
def test_link_and_deletion_match_brute_force(K, data):
    v = data.draw(st.sampled_from(K.vertices))
    assert set(link(K, v).facets) == oracles.link(K.facets, v)
    assert set(deletion(K, v).facets) == oracles.deletion(K.facets, v)


@settings(max_examples=40, deadline=None)
@given(complexes(4), complexes(4))
def test_join_f_vector_is_convolution(K, L):
    fk, fl = (1,) + tuple(f_vector(K)), (1,) + tuple(f_vector(L))
    want = [sum(fk[i] * fl[k - i] for i in range(len(fk)) if 0 <= k - i < len(fl))
            for k in range(len(fk) + len(fl) - 1)]
    assert (1,) + tuple(f_vector(join(K, L))) == tuple(want)
