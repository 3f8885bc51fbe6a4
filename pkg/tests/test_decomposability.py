import pytest
from hypothesis import given, settings

import oracles
from suspwreath import SimplicialComplex, one_point_suspension, wreath_product
from suspwreath.budget import Budget
from suspwreath.decomposability import (
    MorseMatching,
    check_morse_matching,
    find_morse_matching,
    find_shelling,
    is_cone,
    is_constructible,
    is_non_evasive,
    is_vertex_decomposable,
    lift_morse_matching,
    lift_morse_to_wreath,
    lift_shelling,
    project_shelling,
    verify_construction,
    verify_decision_tree,
    verify_morse_matching,
    verify_shedding_tree,
    verify_shelling,
)
from suspwreath.generators import cross_polytope_boundary, cycle, path, simplex, simplex_boundary
from suspwreath.suite import corpus
from test_complex import complexes

CORPUS = corpus()
TWO_EDGES = SimplicialComplex([["1", "2"], ["3", "4"]])


def cx(*facets):
    return SimplicialComplex(f.split() for f in facets)


def test_two_disjoint_edges_fail_everything():
    for check in (is_vertex_decomposable, find_shelling, is_constructible, is_non_evasive, find_morse_matching):
        assert check(TWO_EDGES).status == "fails", check.__name__
    assert is_cone(TWO_EDGES).status == "fails"


def test_shelling_examples():
    assert verify_shelling(cycle(4), [["1", "2"], ["2", "3"], ["3", "4"], ["1", "4"]])
    assert not verify_shelling(cycle(4), [["1", "2"], ["3", "4"], ["2", "3"], ["1", "4"]])
    assert not verify_shelling(cycle(4), [["1", "2"], ["2", "3"]])
    assert find_shelling(CORPUS["bowtie"]).status == "fails"
    assert find_shelling(CORPUS["RP2"]).status == "fails"
    assert find_shelling(CORPUS["moebius"]).certificate == ("homology", 1)
    assert find_shelling(CORPUS["cone-C4"]).holds


@pytest.mark.parametrize("name", sorted(n for n, K in CORPUS.items() if len(K.facets) <= 6))
def test_shellable_matches_brute_force(name):
    K = CORPUS[name]
    v = find_shelling(K)
    assert v.holds == oracles.shellable(K.facets)
    if v.holds:
        assert oracles.is_shelling(v.certificate)


@settings(max_examples=40, deadline=None)
@given(complexes(5))
def test_shellable_random(K):
    if not K.is_pure() or len(K.facets) > 6:
        return
    v = find_shelling(K)
    assert v.holds == oracles.shellable(K.facets)


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_certificates_pass_verifiers(name):
    K = CORPUS[name]
    vd = is_vertex_decomposable(K)
    if vd.holds:
        assert verify_shedding_tree(K, vd.certificate)
    sh = find_shelling(K)
    if sh.holds:
        assert verify_shelling(K, sh.certificate)
    co = is_constructible(K)
    if co.holds:
        assert verify_construction(K, co.certificate)
    ne = is_non_evasive(K)
    if ne.holds:
        assert verify_decision_tree(K, ne.certificate)
    mm = find_morse_matching(K)
    if mm.holds:
        assert verify_morse_matching(K, mm.certificate)
        assert oracles.morse_ok(K.facets, mm.certificate.pairs)


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_hierarchy(name):
    K = CORPUS[name]
    vd, sh, co = is_vertex_decomposable(K), find_shelling(K), is_constructible(K)
    cone, ne, col = is_cone(K), is_non_evasive(K), find_morse_matching(K)
    assert not vd.holds or sh.holds
    assert not sh.holds or co.holds
    assert not cone.holds or ne.holds
    assert not ne.holds or col.holds


def test_known_verdicts():
    assert is_vertex_decomposable(cross_polytope_boundary(3)).holds
    assert is_constructible(simplex_boundary(3)).holds
    assert is_cone(CORPUS["cone-C4"]).certificate == "5"
    assert is_non_evasive(path(5)).holds
    assert is_non_evasive(cycle(5)).status == "fails"
    assert find_morse_matching(simplex(3)).holds
    assert find_morse_matching(cycle(4)).status == "fails"
    assert find_morse_matching(CORPUS["RP2"]).status == "fails"


def test_small_budget_gives_unknown():
    v = is_vertex_decomposable(CORPUS["bd-C4(6)"], budget=Budget(2))
    assert v.status == "unknown" and not v.decided


def test_non_pure_rejected():
    with pytest.raises(ValueError):
        is_vertex_decomposable(cx("1 2 3", "4"))


def test_morse_matching_checks():
    K = path(3)
    good = MorseMatching([(["1", "2"], ["1"]), (["2", "3"], ["2"]), (["3"], [])])
    assert check_morse_matching(K, good)[0]
    assert good.critical_vertex() == "3"
    assert "EMPTY -> 3" in good.lines()
    missing = MorseMatching([(["1", "2"], ["1"]), (["3"], [])])
    assert not check_morse_matching(K, missing)[0]
    cyc = MorseMatching([(["1", "2"], ["1"]), (["2", "3"], ["2"]), (["1", "3"], ["3"])])
    assert not check_morse_matching(cycle(3), cyc)[0]
    assert not oracles.morse_ok(cycle(3).facets, cyc.pairs)


def test_lift_shelling_and_projection():
    K = cycle(5)
    order = find_shelling(K).certificate
    for v in K.vertices:
        lifted = lift_shelling(K, order, v)
        S = one_point_suspension(K, v)
        assert oracles.is_shelling(lifted) and verify_shelling(S, lifted)
        assert verify_shelling(K, project_shelling(K, lifted, v))
    with pytest.raises(ValueError):
        lift_shelling(K, list(reversed(K.facets))[:2], "1")


def test_lift_morse_to_wreath():
    K = path(3)
    mu = find_morse_matching(K).certificate
    lifted = lift_morse_to_wreath(1, K, mu)
    W = wreath_product(1, K)
    assert check_morse_matching(W, lifted)[0]
    assert oracles.morse_ok(W.facets, lifted.pairs)


def test_lift_morse_each_vertex():
    K = CORPUS["cone-C4"]
    mu = find_morse_matching(K).certificate
    for v in K.vertices:
        lifted = lift_morse_matching(K, mu, v)
        assert oracles.morse_ok(one_point_suspension(K, v).facets, lifted.pairs)
