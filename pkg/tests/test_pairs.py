import random

import pytest

import oracles
from corrideal import (
    IdealPair,
    PairKind,
    enumerate_pairs,
    ideal_generated_by,
    invariance,
    invariant_ideal_bijection,
    pair_is_valid,
    relcp_analyze,
    structural_ideals,
    validate_correspondence,
)
from corrideal.errors import NotCompactlyActing, SizeLimit
from generators import random_correspondence


def rendered(X, lattice):
    return [(X.render(p.first), X.render(p.second)) for p in lattice]


def test_graph_has_six_o_pairs(graph):
    lattice = enumerate_pairs(graph, "O")
    assert rendered(graph, lattice) == [
        ([], []),
        (["v0"], ["v0"]),
        (["v1"], ["v1"]),
        (["v1"], ["v1", "v2"]),
        (["v0", "v1"], ["v0", "v1"]),
        (["v0", "v1", "v2"], ["v0", "v1", "v2"]),
    ]
    # the 2 x 3 grid: rows 0 < I1 < (I1,I12) and I0 < I01 < A, plus verticals
    assert lattice.covering_edges == [(0, 1), (0, 2), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5)]


def test_ex2_pairs(ex2):
    o_pairs = enumerate_pairs(ex2, "o")
    assert rendered(ex2, o_pairs) == [
        ([], ["p3"]),
        (["p1"], ["p1", "p3"]),
        (["p2"], ["p2", "p3"]),
        (["p1", "p2", "p3"], ["p1", "p2", "p3"]),
    ]
    assert len(enumerate_pairs(ex2, PairKind.T)) == 8


def test_ex1_pairs(ex1):
    assert rendered(ex1, enumerate_pairs(ex1, "O")) == [([], ["a", "b"]), (["a", "b", "c"], ["a", "b", "c"])]


@pytest.mark.parametrize("kind", ["T", "O"])
@pytest.mark.parametrize("seed", range(40))
def test_enumeration_matches_brute_force(kind, seed):
    X = random_correspondence(random.Random(seed), max_blocks=4)
    lattice = enumerate_pairs(X, kind)
    expected = oracles.all_pairs(X, kind)
    assert [(frozenset(p.first), frozenset(p.second)) for p in lattice] == expected
    assert set(lattice.order_relation) == oracles.covering_relation(expected)


def test_meet_table_is_closed(worked_example):
    for kind in PairKind:
        lattice = enumerate_pairs(worked_example, kind)
        for (a, b), c in lattice.meet_table.items():
            meet = lattice.pairs[a] & lattice.pairs[b]
            assert lattice.pairs[c].key == meet.key


def test_union_of_o_pairs_can_fail(ex2):
    p1, p2 = ex2.ideal("p1"), ex2.ideal("p2")
    assert invariance(ex2, p1).invariant and invariance(ex2, p2).invariant
    assert not invariance(ex2, p1 | p2).negatively_invariant
    assert not any(p.first == p1 | p2 for p in enumerate_pairs(ex2, "O"))


def test_pair_validity_examples(graph, ex2, worked_example):
    assert pair_is_valid(graph, graph.ideal("v1"), graph.ideal("v1,v2"), "O")
    assert not pair_is_valid(ex2, ex2.ideal("p1,p2"), ex2.algebra.full(), "O")
    X = worked_example
    assert pair_is_valid(X, X.ideal(), structural_ideals(X).katsura, "O")
    assert pair_is_valid(X, X.algebra.full(), X.algebra.full(), "O")


def test_o_pair_first_components_are_invariant(worked_example):
    X = worked_example
    firsts = {p.first for p in enumerate_pairs(X, "O")}
    for I in X.algebra.all_ideals():
        if I in firsts:
            assert invariance(X, I).invariant


def test_size_limit():
    X = validate_correspondence({"blocks": [(f"x{k}", 1) for k in range(4)], "fullness": [0] * 4})
    with pytest.raises(SizeLimit):
        enumerate_pairs(X, "T", limit=3)
    assert len(enumerate_pairs(X, "T", limit=4)) == 16


class TestRelCP:
    def test_injective_case(self, ex2):
        report = relcp_analyze(ex2, ex2.ideal("p3"))
        assert report.limit == ex2.ideal() and not report.algebra_is_zero

    def test_graph_kernel_tower(self, graph):
        report = relcp_analyze(graph, graph.ideal("v0,v1"))
        assert [graph.render(K) for K in report.tower] == [[], ["v0", "v1"]]
        assert graph.render(report.limit) == ["v0", "v1"]
        assert report.kernel_of_pi == report.limit
        assert report.omega.key == (graph.ideal("v0,v1").mask, graph.ideal("v0,v1").mask)

    def test_not_compactly_acting(self, graph):
        with pytest.raises(NotCompactlyActing):
            relcp_analyze(graph, graph.ideal("v2"))

    def test_zero_algebra(self):
        X = validate_correspondence({"blocks": [("x", 1)], "fullness": [0]})
        assert relcp_analyze(X, X.ideal("x")).algebra_is_zero

    def test_minimality(self, worked_example):
        X = worked_example
        compact = structural_ideals(X).compactly_acting
        t_pairs = oracles.all_pairs(X, "T")
        for S in oracles.subsets(X.n):
            if not S <= set(compact):
                continue
            report = relcp_analyze(X, X.ideal(sorted(S)))
            omega = (frozenset(report.omega.first), frozenset(report.omega.second))
            assert omega in t_pairs
            above = [p for p in t_pairs if S <= p[1]]
            assert all(omega[0] <= p[0] and omega[1] <= p[1] for p in above)


class TestGeneratedIdeals:
    def test_ex1(self, ex1):
        pair = ideal_generated_by(ex1, ex1.ideal("a"))
        assert ex1.render(pair.first) == ex1.render(pair.second) == ["a", "b", "c"]

    def test_ex2(self, ex2):
        pair = ideal_generated_by(ex2, ex2.ideal("p1"))
        assert (ex2.render(pair.first), ex2.render(pair.second)) == (["p1"], ["p1", "p3"])

    def test_zero(self, worked_example):
        X = worked_example
        pair = ideal_generated_by(X, X.ideal())
        assert pair.first == X.ideal() and pair.second == structural_ideals(X).katsura


class TestBijection:
    def test_ex2(self, ex2):
        result = invariant_ideal_bijection(ex2)
        assert result and len(result.mapping) == 4
        for I, pair in result.mapping.items():
            assert pair.second == I | ex2.ideal("p3")

    def test_graph_hypothesis_fails(self, graph):
        result = invariant_ideal_bijection(graph)
        assert not result
        assert graph.render(result.witness) == ["v2"]

    def test_empty(self):
        X = validate_correspondence({"blocks": [], "fullness": []})
        result = invariant_ideal_bijection(X)
        assert len(result.mapping) == 1
        assert result.mapping[X.ideal()] == IdealPair(X.ideal(), X.ideal(), PairKind.O)
