import json

import pytest

from stardecomp.graphs import (
    Graph,
    JoinLayout,
    complete_graph,
    disjoint_cliques,
    empty_graph,
    format_edge_list,
    graph_from_edges,
    graph_from_json_dict,
    graph_to_json_dict,
    join,
    join_edge_count,
    parse_edge_list,
    read_graph,
    write_graph,
)


@pytest.mark.parametrize("n,expected", [(0, 0), (6, 15), (12, 66)])
def test_complete_graph_edge_counts(n, expected):
    assert complete_graph(n).num_edges == expected


def test_graph_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph(3, frozenset({(0, 3)}))
    with pytest.raises(ValueError):
        graph_from_edges(3, [(1, 1)])


def test_join_edge_count_single_edge():
    base = graph_from_edges(8, [(0, 1)])
    assert join_edge_count(base, 2) == 18
    assert join(base, 2).num_edges == 18


def test_join_with_zero_is_identity():
    base = graph_from_edges(5, [(0, 1), (2, 3)])
    assert join(base, 0) == base


def test_join_single_vertex_gives_k2():
    assert join(empty_graph(1), 1) == complete_graph(2)


def test_join_degrees_and_twins():
    base = graph_from_edges(4, [(0, 1), (1, 2)])
    g = join(base, 3)
    for z in range(4, 7):
        assert g.degree(z) == 4 + 3 - 1
    for y in range(4):
        assert g.degree(y) == base.degree(y) + 3
    # join vertices are pairwise twin
    for z1 in range(4, 7):
        for z2 in range(z1 + 1, 7):
            assert g.neighbors(z1) - {z2} == g.neighbors(z2) - {z1}


def test_join_layout_realize():
    layout = JoinLayout(graph_from_edges(3, [(0, 1)]), 2)
    assert list(layout.join_vertices) == [3, 4]
    assert layout.realize() == join(layout.base, 2)
    assert layout.edge_count() == layout.realize().num_edges


def test_complement_involution():
    g = graph_from_edges(5, [(0, 1), (1, 2), (3, 4)])
    assert g.complement().complement() == g
    assert complete_graph(4).complement() == empty_graph(4)


def test_disjoint_cliques_layout():
    g = disjoint_cliques([4, 1])
    assert g.n == 5
    assert g.num_edges == 6
    assert g.components() == [[0, 1, 2, 3], [4]]


def test_components_and_induced_edges():
    g = graph_from_edges(6, [(0, 1), (1, 2), (4, 5)])
    comps = g.components()
    assert comps == [[0, 1, 2], [3], [4, 5]]
    assert g.induced_edge_count({0, 1, 2}) == 2
    assert g.induced_edge_count({4, 5}) == 1


def test_edge_list_round_trip(tmp_path):
    g = graph_from_edges(5, [(3, 1), (0, 4), (2, 3)])
    text = format_edge_list(g)
    assert parse_edge_list(text) == g
    path = tmp_path / "g.txt"
    write_graph(g, path)
    assert read_graph(path) == g
    # canonical writer output is stable
    write_graph(g, tmp_path / "g2.txt")
    assert (tmp_path / "g.txt").read_bytes() == (tmp_path / "g2.txt").read_bytes()


def test_json_round_trip(tmp_path):
    g = graph_from_edges(4, [(0, 1), (2, 3)])
    assert graph_from_json_dict(graph_to_json_dict(g)) == g
    path = tmp_path / "g.json"
    write_graph(g, path)
    assert read_graph(path) == g
    data = json.loads(path.read_text())
    assert data["edges"] == [[0, 1], [2, 3]]


def test_parse_edge_list_rejects_garbage():
    with pytest.raises(ValueError):
        parse_edge_list("")
    with pytest.raises(ValueError):
        parse_edge_list("3\n0 1 2\n")
