import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _strategies import graphs
from entangle.errors import GraphDomainError, ParseError, SizeLimitError, UnsupportedOperationError
from entangle.graph import (
    Graph,
    MinorOperation,
    canonical_form,
    complete_graph,
    contract_edge,
    cycle_graph,
    delete_edge,
    delete_vertex,
    empty_graph,
    graphs_on,
    graphs_up_to,
    is_minor,
    neighbors,
    one_step_minors,
    parse_edge_list,
    parse_graph6,
    path_graph,
    read_graph6_lines,
    to_edge_list,
    to_graph6,
)


def reference_graph6(n, edges):
    """Straight transcription of the graph6 layout, kept apart from the library encoder."""
    present = {frozenset(e) for e in edges}
    bits = "".join("1" if frozenset((i, j)) in present else "0" for j in range(1, n) for i in range(j))
    bits += "0" * (-len(bits) % 6)
    return chr(n + 63) + "".join(chr(int(bits[p:p + 6], 2) + 63) for p in range(0, len(bits), 6))


class TestEdgeList:
    def test_single_edge(self):
        g = parse_edge_list("0 1")
        assert g.vertices == (0, 1) and g.edges == {(0, 1), (1, 0)} and not g.directed

    def test_triangle(self):
        assert parse_edge_list("0 1\n1 2\n2 0") == cycle_graph(3)

    def test_directed_header(self):
        g = parse_edge_list("n 3 directed\n0 1\n1 2")
        assert g.directed and g.n == 3 and g.edges == {(0, 1), (1, 2)}

    def test_comments_blanks_duplicates(self):
        g = parse_edge_list("# a path\n\nn 4\n0 1  # first\n1 0\n1 2\n")
        assert g.n == 4 and g.edge_list() == [(0, 1), (1, 2)]

    @pytest.mark.parametrize("text, line", [("0 1\n1\n", 2), ("0 x", 1), ("n 2\n0 5", 2), ("0 1\nn 3", 2)])
    def test_malformed_reports_line(self, text, line):
        with pytest.raises(ParseError) as err:
            parse_edge_list(text)
        assert err.value.line == line

    def test_self_loop_rejected(self):
        with pytest.raises(ParseError, match="self-loop"):
            parse_edge_list("0 1\n2 2")

    def test_round_trip(self):
        g = Graph.from_edges([0, 2, 5], [(0, 5), (2, 5)])
        assert parse_edge_list(to_edge_list(g)) == g.compact()


class TestGraph6:
    @pytest.mark.parametrize("text, n, edges", [
        ("A_", 2, [(0, 1)]),
        ("@", 1, []),
        ("Bw", 3, [(0, 1), (0, 2), (1, 2)]),
        ("?", 0, []),
    ])
    def test_known_strings(self, text, n, edges):
        assert reference_graph6(n, edges) == text
        g = parse_graph6(text)
        assert g.n == n and g.edge_list() == edges
        assert to_graph6(g) == text

    @pytest.mark.parametrize("bad", ["", "A", "A__", "A!", "Bwé"])
    def test_rejects(self, bad):
        with pytest.raises(ParseError):
            parse_graph6(bad)

    def test_header_and_batch(self):
        gs = list(read_graph6_lines(">>graph6<<A_\n\nBw\n"))
        assert [g.n for g in gs] == [2, 3]

    def test_long_size_field(self):
        g = path_graph(70)
        text = to_graph6(g)
        assert text[0] == "~" and parse_graph6(text) == g

    def test_directed_unsupported(self, dipath3):
        with pytest.raises(UnsupportedOperationError):
            to_graph6(dipath3)

    @given(graphs(max_n=7))
    def test_round_trip_matches_reference(self, g):
        text = to_graph6(g)
        assert text == reference_graph6(g.n, g.edge_list())
        assert parse_graph6(text) == g


class TestOperations:
    def test_neighbors(self, c3, k1, dipath3):
        assert neighbors(c3, 0) == {1, 2}
        assert neighbors(k1, 0) == set()
        assert neighbors(dipath3, 2) == set()
        with pytest.raises(GraphDomainError):
            neighbors(c3, 7)

    def test_delete_edge(self, k2, c3):
        assert delete_edge(k2, 0, 1) == empty_graph(2)
        assert delete_edge(c3, 0, 1).edge_list() == [(0, 2), (1, 2)]
        two_cycle = Graph.from_edges(2, [(0, 1), (1, 0)], directed=True)
        assert delete_edge(two_cycle, 0, 1).edges == {(1, 0)}
        with pytest.raises(GraphDomainError):
            delete_edge(empty_graph(2), 0, 1)

    def test_contract_edge(self, k2, c3):
        g, cm = contract_edge(k2, 0, 1)
        assert g == empty_graph(1) and cm.check()
        g, cm = contract_edge(c3, 0, 1)
        assert g.vertices == (0, 2) and g.edge_list() == [(0, 2)]
        assert cm.map == {0: 0, 1: 0, 2: 2}
        g, _ = contract_edge(path_graph(4), 1, 2)
        assert g.vertices == (0, 1, 3) and g.edge_list() == [(0, 1), (1, 3)]

    def test_contract_errors(self, dipath3, p3):
        with pytest.raises(UnsupportedOperationError):
            contract_edge(dipath3, 0, 1)
        with pytest.raises(GraphDomainError):
            contract_edge(p3, 0, 2)

    def test_delete_vertex(self, k2):
        assert delete_vertex(k2, 0) == Graph.from_edges([1], [])
        assert delete_vertex(path_graph(3), 1) == Graph.from_edges([0, 2], [])
        c3_plus = Graph.from_edges(4, cycle_graph(3).edges)
        assert delete_vertex(c3_plus, 3) == cycle_graph(3)
        with pytest.raises(GraphDomainError):
            delete_vertex(k2, 5)

    def test_graph_invariants_enforced(self):
        with pytest.raises(GraphDomainError):
            Graph.from_edges(2, [(0, 0)])
        with pytest.raises(GraphDomainError):
            Graph.from_edges(2, [(0, 3)])

    @given(graphs())
    def test_contraction_map_reproduces_target(self, h):
        for u, v in h.edge_list():
            g, cm = contract_edge(h, u, v)
            f = cm.map
            assert {(f[x], f[y]) for x, y in h.edges if f[x] != f[y]} == set(g.edges)
            assert f[u] == f[v] == min(u, v)
            assert cm.check()


class TestCanonicalForm:
    def test_relabelled_triangle(self, c3):
        g = Graph.from_edges([3, 7, 9], [(3, 9), (9, 7), (7, 3)])
        assert canonical_form(g) == canonical_form(c3)

    def test_distinguishes(self, p3, c3, k2):
        assert canonical_form(p3) != canonical_form(c3)
        arc = Graph.from_edges(2, [(0, 1)], directed=True)
        assert canonical_form(k2) != canonical_form(arc)

    def test_size_limit(self):
        with pytest.raises(SizeLimitError):
            canonical_form(empty_graph(9))

    @given(graphs(max_n=7), st.randoms())
    def test_permutation_invariant(self, g, rnd):
        perm = list(g.vertices)
        rnd.shuffle(perm)
        assert canonical_form(g.relabel(dict(zip(g.vertices, perm)))) == canonical_form(g)

    @given(graphs(max_n=4, directed=True), st.randoms())
    def test_permutation_invariant_directed(self, g, rnd):
        perm = list(g.vertices)
        rnd.shuffle(perm)
        assert canonical_form(g.relabel(dict(zip(g.vertices, perm)))) == canonical_form(g)

    def test_iso_iff_equal_codes_on_small_labelled_graphs(self):
        # brute-force isomorphism against codes for every labelled graph on 4 vertices
        pairs = list(itertools.combinations(range(4), 2))
        labelled = [Graph.from_edges(4, [p for i, p in enumerate(pairs) if m >> i & 1]) for m in range(64)]
        rng = random.Random(3)
        for _ in range(300):
            a, b = rng.choice(labelled), rng.choice(labelled)
            iso = any(a.relabel(dict(enumerate(p))) == b for p in itertools.permutations(range(4)))
            assert iso == (canonical_form(a) == canonical_form(b))


class TestMinors:
    def test_k2(self, k2):
        result = one_step_minors(k2)
        assert [str(op) for op, _ in result] == ["delete_edge(0, 1)", "contract_edge(0, 1)"]
        assert result[0][1] == empty_graph(2) and result[1][1] == empty_graph(1)

    def test_single_vertex(self, k1):
        [(op, g)] = one_step_minors(k1)
        assert op == MinorOperation("delete_isolated_vertex", (0,)) and g.n == 0

    def test_triangle_counts(self, c3):
        result = one_step_minors(c3)
        assert len(result) == 6
        assert len({canonical_form(g) for _, g in result}) == 2

    def test_isolated_vertex_precondition(self, k2):
        with pytest.raises(GraphDomainError):
            MinorOperation("delete_isolated_vertex", (0,)).apply(k2)

    def test_directed_has_no_contractions(self, dipath3):
        kinds = {op.kind for op, _ in one_step_minors(dipath3)}
        assert kinds == {"delete_edge"}

    def test_is_minor_examples(self, k2, c3):
        assert is_minor(k2, c3)
        assert not is_minor(c3, path_graph(4))
        assert is_minor(c3, complete_graph(4))
        with pytest.raises(SizeLimitError):
            is_minor(k2, empty_graph(8))

    def test_k4_minor_closure(self):
        # every graph with at most 4 vertices is a minor of K4
        k4 = complete_graph(4)
        assert all(is_minor(g, k4) for g in graphs_up_to(4))
        assert not is_minor(complete_graph(4), cycle_graph(5))

    @settings(max_examples=30, deadline=None)
    @given(graphs(max_n=5))
    def test_one_step_minors_are_minors(self, g):
        for _, m in one_step_minors(g):
            assert is_minor(m, g)

    def test_minor_relation_reflexive_transitive(self):
        catalog = graphs_up_to(4)
        rel = {(i, j): is_minor(a, b) for i, a in enumerate(catalog) for j, b in enumerate(catalog)}
        idx = range(len(catalog))
        assert all(rel[i, i] for i in idx)
        for i, j, k in itertools.product(idx, repeat=3):
            if rel[i, j] and rel[j, k]:
                assert rel[i, k]


def test_enumeration_counts():
    # numbers of unlabelled graphs / digraphs by vertex count
    assert [len(graphs_on(n)) for n in range(7)] == [1, 1, 2, 4, 11, 34, 156]
    assert [len(graphs_on(n, directed=True)) for n in range(5)] == [1, 1, 3, 16, 218]
