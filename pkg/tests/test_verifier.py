
import pytest

from connfunc.core import CountedOracle, GroundSet, SetFunctionTable
from connfunc.graphs import Multigraph, iter_edge_lists, unlabeled_edge_lists
from connfunc.matroids import uniform_matroid
from connfunc.verifier import (
    GraphicVerdict,
    agrees_on_e_controlled,
    controlled_subsets,
    e_controlled_sets,
    query_budget,
    recognize_graphic,
)
from oracles import e_controlled_by_definition
from sweeps import increment_counterexamples, matroid_tables, controlled_agreement_counterexamples

P3 = Multigraph.from_ends([("u", "v"), ("v", "w")], "ab")
K3 = Multigraph.from_ends([("u", "v"), ("v", "w"), ("u", "w")], "abc")
K14 = Multigraph.from_ends([("c", 1), ("c", 2), ("c", 3), ("c", 4)], "abcd")
K4 = Multigraph.from_ends([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], "abcdef")
U24 = uniform_matroid(2, 4).connectivity()


def test_controlled_subsets():
    assert controlled_subsets(0b1110) == [0, 0b0010, 0b0100, 0b1000, 0b1110]
    assert controlled_subsets(0) == [0]
    assert controlled_subsets(0b10) == [0, 0b10]


class TestEControlled:
    def test_path(self):
        fam = e_controlled_sets(P3, "a")
        assert sorted(fam.sets) == [0b00, 0b01, 0b10, 0b11]

    def test_triangle(self):
        assert len(e_controlled_sets(K3, "a")) == 8

    def test_star(self):
        assert len(e_controlled_sets(K14, "a")) == 10

    @pytest.mark.parametrize("k", range(1, 6))
    def test_matches_definition(self, k):
        for ends in unlabeled_edge_lists(k):
            g = Multigraph.from_ends(ends)
            for i in range(k):
                got = {frozenset(j for j in range(k) if y >> j & 1) for y in e_controlled_sets(g, i).sets}
                assert got == e_controlled_by_definition(ends, i)
                du = g.degree(g.edges[i].u) - 1
                dv = g.degree(g.edges[i].v) - 1
                assert len(got) <= 2 * (du + 2) * (dv + 2)


class TestAgreement:
    def test_self(self):
        assert agrees_on_e_controlled(CountedOracle(P3.gamma_table()), P3)

    def test_u24_against_matching(self):
        matching = Multigraph.from_ends([(0, 1), (2, 3), (4, 5), (6, 7)])
        assert not agrees_on_e_controlled(CountedOracle(U24), matching)

    def test_triangle_vs_triple_edge(self):
        triple = Multigraph.from_ends([(0, 1), (0, 1), (0, 1)], "abc")
        assert triple.gamma_table() == K3.gamma_table()
        assert agrees_on_e_controlled(CountedOracle(K3.gamma_table()), triple)


def test_budget_formula():
    assert query_budget(4) == 4 + 6 + 8 + 2 * 4 * 25
    assert all(query_budget(n) <= 300 * (n + 4) ** 3 for n in range(1, 200))
    ratios = [query_budget(n) / 2 ** n for n in range(6, 13)]
    assert all(a > b for a, b in zip(ratios, ratios[1:]))


class TestRecognize:
    def test_path(self):
        o = CountedOracle(P3.gamma_table())
        v = recognize_graphic(o)
        assert v.graphic and v.witness.gamma_table() == P3.gamma_table()
        assert v.queries_used == o.distinct_count <= query_budget(2)

    def test_u24(self):
        v = recognize_graphic(CountedOracle(U24))
        assert not v.graphic and v.witness is None and v.reason
        assert v.queries_used <= query_budget(4)

    def test_k4(self):
        v = recognize_graphic(CountedOracle(K4.gamma_table()))
        assert v.graphic
        assert v.witness.labels == K4.labels
        assert v.witness.gamma_table() == K4.gamma_table()

    def test_out_of_range_singleton(self):
        t = SetFunctionTable(GroundSet(2), [0, 3, 3, 0])
        v = recognize_graphic(CountedOracle(t))
        assert not v.graphic and "not in" in v.reason

    def test_json(self):
        v = recognize_graphic(CountedOracle(P3.gamma_table()))
        d = v.to_json()
        assert d["graphic"] and d["queries"] == v.queries_used
        assert Multigraph.from_json(d["witness"]) == v.witness
        assert GraphicVerdict(False, None, 3, "x").to_json() == {"graphic": False, "queries": 3, "reason": "x"}

    @pytest.mark.parametrize("k", range(1, 6))
    def test_all_labelled(self, k):
        for ends in iter_edge_lists(k):
            t = Multigraph.from_ends(ends).gamma_table()
            o = CountedOracle(t)
            v = recognize_graphic(o)
            assert v.graphic and v.witness.gamma_table() == t
            assert v.queries_used <= query_budget(k)


@pytest.mark.parametrize("k", range(1, 6))
def test_controlled_agreement_graph_pairs(k):
    checked, agreeing, bad = controlled_agreement_counterexamples(k)
    assert agreeing >= len(list(iter_edge_lists(k)))
    assert bad == []


@pytest.mark.parametrize("n", range(1, 6))
def test_controlled_agreement_matroid_tables(n):
    assert controlled_agreement_counterexamples(n, matroid_tables(n))[2] == []


@pytest.mark.parametrize("k", range(1, 6))
def test_increment_bound(k):
    checked, bad = increment_counterexamples(k)
    assert checked > 0
    assert bad == []
