import pytest

from edgecrit.graph import (
    Graph,
    Graph6Error,
    GraphError,
    VertexPartition,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    from_graph6,
    full_deficiency_pairs,
    is_overfull,
    neighborhood_bipartitions,
    octahedron_graph,
    path_graph,
    petersen_graph,
    read_graph6_lines,
    split_vertex,
    to_graph6,
)

from oracles import graph6_encode


def test_edges_are_normalised_and_sorted():
    g = Graph(4, [(3, 1), (0, 2), (1, 0)])
    assert g.edges == ((0, 1), (0, 2), (1, 3))
    assert g.m == 3
    assert g.degrees == (2, 2, 1, 1)


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 1), (1, 0)], [(0, 5)]])
def test_rejects_loops_duplicates_and_out_of_range(edges):
    with pytest.raises(GraphError):
        Graph(3, edges)


def test_basic_queries():
    g = cycle_graph(5)
    assert g.max_degree == 2 and g.min_degree == 2
    assert g.neighbors(0) == [1, 4]
    assert g.has_edge(4, 0) and not g.has_edge(0, 2)
    assert g.edge_id(4, 0) == g.edges.index((0, 4))
    assert g.is_connected()
    assert not Graph(3, [(0, 1)]).is_connected()


def test_distance_to_set():
    g = path_graph(5)
    assert g.distance_to_set(0, [4]) == 4
    assert g.distance_to_set(2, [2]) == 0
    assert Graph(3, [(0, 1)]).distance_to_set(0, [2]) == float("inf")


def test_remove_and_relabel():
    g = complete_graph(4)
    h = g.remove_edge(0, 1)
    assert h.m == 5 and not h.has_edge(0, 1)
    assert g.remove_vertex(3) == complete_graph(3)
    assert cycle_graph(4).relabel([1, 2, 3, 0]) == cycle_graph(4)
    with pytest.raises(GraphError):
        g.remove_edge(0, 0)


@pytest.mark.parametrize(
    "g, text",
    [
        (complete_graph(5), "D~{"),
        (cycle_graph(5), "Dhc"),
        (complete_graph(3), "Bw"),
        (Graph(0), "?"),
        (Graph(1), "@"),
    ],
)
def test_graph6_known_strings(g, text):
    assert to_graph6(g) == text
    assert from_graph6(text) == g


def test_graph6_matches_reference_encoder():
    for g in [petersen_graph(), octahedron_graph(), complete_bipartite_graph(3, 4), path_graph(7)]:
        assert to_graph6(g) == graph6_encode(g.n, g.edges)


def test_graph6_header_and_padding():
    assert from_graph6(">>graph6<<Dhc\n") == cycle_graph(5)
    # nonzero padding bits are tolerated
    assert from_graph6("D~~") == complete_graph(5)
    assert from_graph6(b"Bw") == complete_graph(3)


@pytest.mark.parametrize(
    "text, offset",
    [("", 0), ("D~", 2), ("D~{{", 3), ("D~ {", 2), ("~~", 0), ("!", 0)],
)
def test_graph6_errors_carry_offsets(text, offset):
    with pytest.raises(Graph6Error) as info:
        from_graph6(text)
    assert info.value.offset == offset


def test_read_graph6_lines_skips_blanks():
    assert list(read_graph6_lines(["Bw\n", "\n", "Dhc"])) == [complete_graph(3), cycle_graph(5)]


def test_overfull_and_deficiency():
    assert is_overfull(complete_graph(5))
    assert is_overfull(cycle_graph(5))
    assert not is_overfull(complete_graph(4))
    assert not is_overfull(petersen_graph())
    # C5: every edge has degree sum 4 = Delta + 2
    assert full_deficiency_pairs(cycle_graph(5)) == list(cycle_graph(5).edges)
    assert full_deficiency_pairs(complete_graph(4)) == []


def test_split_vertex():
    k4 = complete_graph(4)
    h = split_vertex(k4, 0, VertexPartition.of([1], [2, 3]))
    assert h.n == 5 and h.m == 7
    assert h.has_edge(0, 4) and h.has_edge(0, 1) and h.has_edge(4, 2) and not h.has_edge(0, 2)
    with pytest.raises(GraphError):
        split_vertex(k4, 0, VertexPartition.of([1, 2, 3], []))
    with pytest.raises(GraphError):
        split_vertex(k4, 0, VertexPartition.of([1, 2], [2, 3]))
    with pytest.raises(GraphError):
        split_vertex(k4, 0, VertexPartition.of([1], [2]))


def test_neighborhood_bipartitions_count():
    # 2^(d-1) - 1 unordered splits into nonempty parts
    assert len(list(neighborhood_bipartitions(complete_graph(4), 0))) == 3
    assert len(list(neighborhood_bipartitions(octahedron_graph(), 0))) == 7
    assert len(list(neighborhood_bipartitions(octahedron_graph(), 0, cap=2))) == 2
    assert list(neighborhood_bipartitions(path_graph(3), 0)) == []


def test_named_graphs():
    assert petersen_graph().m == 15 and set(petersen_graph().degrees) == {3}
    assert octahedron_graph().m == 12 and set(octahedron_graph().degrees) == {4}
    assert complete_bipartite_graph(2, 3).m == 6
