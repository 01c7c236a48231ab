import io

import pytest

from ncb.errors import EmptyGraphError, GraphParseError, NodeDomainError
from ncb.graph import (
    Graph,
    closed_neighborhood,
    community_neighborhood,
    load_edge_list,
    load_gml,
    load_graph,
    neighborhood,
)


def test_edge_list_symmetrizes_and_drops_duplicates(caplog):
    text = "# comment\n\na b\nb a\nb c 3.5 extra\nc c\n"
    g = load_edge_list(io.StringIO(text))
    assert g.n == 3
    assert g.m == 2
    assert g.labels == ("a", "b", "c")
    assert g.degree(g.node_id("b")) == 2
    assert "1 self-loops and 1 duplicate" in caplog.text


def test_edge_list_custom_delimiter():
    g = load_edge_list(io.StringIO("x,y\ny,z\n"), delimiter=",")
    assert g.edge_labels() == {frozenset({"x", "y"}), frozenset({"y", "z"})}


def test_edge_list_reports_line_number():
    with pytest.raises(GraphParseError) as err:
        load_edge_list(io.StringIO("# header\n1 2\nlonely\n"))
    assert err.value.line == 3
    assert "line 3" in str(err.value)


def test_self_loops_only_is_empty():
    with pytest.raises(EmptyGraphError):
        load_edge_list(io.StringIO("1 1\n2 2\n"))


def test_gml_without_nodes_is_parse_error():
    with pytest.raises(GraphParseError):
        load_gml(io.StringIO("graph [\n]\n"))


def test_gml_malformed():
    with pytest.raises(GraphParseError):
        load_gml(io.StringIO("graph [ node [ id 0 ] edge [ source 0 "))


def test_gml_isolated_node_kept():
    g = load_gml(io.StringIO("graph [ node [ id 0 ] node [ id 1 ] node [ id 2 ] edge [ source 0 target 1 ] ]"))
    assert g.n == 3
    assert g.m == 1
    assert g.degree(g.node_id("2")) == 0


def test_gml_repeated_and_reversed_edges(caplog):
    text = (
        "graph [\n"
        "  node [ id 0 ] node [ id 1 ] node [ id 2 ]\n"
        "  edge [ source 0 target 1 ] edge [ source 1 target 0 ] edge [ source 1 target 2 ]\n"
        "]\n"
    )
    g = load_gml(io.StringIO(text))
    assert g.n == 3
    assert g.m == 2
    assert "1 duplicate" in caplog.text


def test_gml_file_with_reversed_edge(tmp_path):
    path = tmp_path / "dup.gml"
    path.write_text("graph\n[\n  node [ id 7 ]\n  node [ id 9 ]\n  edge [ source 7 target 9 ]\n  edge [ source 9 target 7 ]\n]\n")
    g = load_graph(path)
    assert g.m == 1
    assert g.labels == ("7", "9")


def test_non_utf8_file_is_parse_error(tmp_path):
    path = tmp_path / "edges.txt"
    path.write_bytes(b"\xff\xfe")
    with pytest.raises(GraphParseError, match="UTF-8"):
        load_graph(path)


def test_asymmetric_adjacency_rejected():
    # degree sum is even, but 0 -> 2 and 0 -> 1 have no reverse edges
    with pytest.raises(ValueError, match="not symmetric"):
        Graph([[1, 2], [], []], ["a", "b", "c"])
    with pytest.raises(ValueError, match="not symmetric"):
        Graph([[1], [0, 2], [0]], ["a", "b", "c"])


def test_karate_formats_agree(data_dir):
    from_text = load_graph(data_dir / "karate.txt")
    from_gml = load_graph(data_dir / "karate.gml")
    assert (from_text.n, from_text.m) == (34, 78)
    assert (from_gml.n, from_gml.m) == (34, 78)
    assert from_text.edge_labels() == from_gml.edge_labels()


def test_explicit_format_overrides_extension(tmp_path):
    path = tmp_path / "graph.dat"
    path.write_text("graph [ node [ id 0 ] node [ id 1 ] edge [ source 0 target 1 ] ]")
    assert load_graph(path, fmt="gml").m == 1
    with pytest.raises(GraphParseError):
        load_graph(path, fmt="pajek")


def test_neighborhoods(karate):
    assert karate.degree(33) == 17
    assert neighborhood(karate, 33) == karate.adj_set(33)
    assert 33 not in neighborhood(karate, 33)
    assert closed_neighborhood(karate, 33) == karate.adj_set(33) | {33}
    assert community_neighborhood(karate, [0, 1]) == (karate.adj_set(0) | karate.adj_set(1)) - {0, 1}


def test_node_domain_errors(karate):
    with pytest.raises(NodeDomainError):
        karate.degree(34)
    with pytest.raises(NodeDomainError):
        neighborhood(karate, -1)
    with pytest.raises(NodeDomainError):
        community_neighborhood(karate, [])
    with pytest.raises(NodeDomainError):
        karate.node_id("nope")


def test_degree_sum_and_edges(karate):
    assert sum(karate.degrees) == 2 * karate.m == karate.total_volume
    assert all(u < v for u, v in karate.edges())
    assert karate.edge_array().shape == (78, 2)


def test_networkx_round_trip(karate):
    back = Graph.from_networkx(karate.to_networkx())
    assert back.edge_labels() == karate.edge_labels()
