import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tdsr.errors import MalformedLine, OrderTooLarge, SelfLoop, VertexOutOfRange
from tdsr.families import cycle_graph, path_graph
from tdsr.graph import (
    Graph,
    from_edge_list,
    from_json,
    from_vertices,
    iter_bits,
    parse_vertex_list,
    set_label,
    to_dot,
    to_edge_list,
    to_json,
)


@st.composite
def graphs(draw, min_n=1, max_n=10):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


def test_k2_from_edge_list():
    g = from_edge_list("n 2\n0 1")
    assert g.n == 2
    assert g.adj == (0b10, 0b01)


def test_p4_from_edge_list_matches_generator():
    assert from_edge_list("n 4\n0 1\n1 2\n2 3") == path_graph(4)


def test_comments_blank_lines_and_duplicates():
    g = from_edge_list("# a triangle\nn 3\n\n0 1  # first\n1 2\n2 0\n1 0\n")
    assert g.edges == ((0, 1), (0, 2), (1, 2))


def test_self_loop_rejected():
    with pytest.raises(SelfLoop) as info:
        from_edge_list("n 3\n0 0")
    assert info.value.lines == [2]


def test_all_offending_lines_reported():
    with pytest.raises(VertexOutOfRange) as info:
        from_edge_list("n 3\n0 5\n0 1\nfoo\n2 2\n")
    assert info.value.lines == [2, 4, 5]


@pytest.mark.parametrize("text", ["0 1\n", "n x\n", "", "n 3\n0 1 2\n"])
def test_malformed(text):
    with pytest.raises(MalformedLine):
        from_edge_list(text)


def test_order_cap():
    with pytest.raises(OrderTooLarge):
        from_edge_list("n 31\n0 1")
    assert from_edge_list("n 30\n0 29").n == 30


def test_graph_rejects_asymmetry_and_loops():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0))
    with pytest.raises(ValueError):
        Graph(1, (1,))


def test_json_export_sorted_and_roundtrip():
    g = Graph.from_edges(4, [(2, 3), (0, 1), (1, 2)])
    data = to_json(g)
    assert data == {"n": 4, "edges": [[0, 1], [1, 2], [2, 3]]}
    assert from_json(json.dumps(data)) == g


def test_edge_list_roundtrip():
    g = cycle_graph(6)
    assert from_edge_list(to_edge_list(g)) == g


def test_dot_k2():
    assert to_dot(path_graph(2)) == "graph G {\n  0;\n  1;\n  0 -- 1;\n}\n"


def test_dot_labels():
    dot = to_dot(path_graph(3), ["{0}", "{1}", '"x"'])
    assert dot.count(" -- ") == 2
    assert '0 [label="{0}"];' in dot
    assert '2 [label="\\"x\\""];' in dot


def test_vertex_set_helpers():
    assert from_vertices([0, 2, 5]) == 0b100101
    assert list(iter_bits(0b100101)) == [0, 2, 5]
    assert set_label(0b100101) == "{0,2,5}"
    assert parse_vertex_list("0,2,5") == 0b100101
    assert parse_vertex_list("{1}") == 2
    with pytest.raises(MalformedLine):
        parse_vertex_list("a,b")


def test_components_and_distance():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (3, 4)])
    assert g.components() == [0b00111, 0b11000]
    assert not g.is_connected()
    assert g.distance(0, 2) == 2
    assert g.distance(0, 3) is None


def test_induced_relabels_in_order():
    g = cycle_graph(5)
    assert g.induced(0b10101).edges == ((0, 2),)


@settings(max_examples=60, deadline=None)
@given(graphs(), st.randoms(use_true_random=False))
def test_relabel_preserves_degree_multiset(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    assert sorted(h.degrees) == sorted(g.degrees)
    assert h.num_edges == g.num_edges
    for u, v in g.edges:
        assert h.adj[perm[u]] >> perm[v] & 1
