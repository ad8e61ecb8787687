import pytest

from edgecrit.coloring import ChainError, Coloring, ColoringError, mask_to_set, set_to_mask
from edgecrit.graph import Graph, complete_graph, cycle_graph, path_graph


def path_coloring(colors):
    g = path_graph(len(colors) + 1)
    return Coloring(g, max(colors), list(colors))


def test_masks_round_trip():
    assert set_to_mask({1, 3}) == 0b1010
    assert mask_to_set(0b1010) == frozenset({1, 3})


def test_improper_initial_coloring_rejected():
    with pytest.raises(ColoringError):
        Coloring(path_graph(3), 2, [1, 1])
    with pytest.raises(ColoringError):
        Coloring(path_graph(3), 2, [1, 3])
    with pytest.raises(ColoringError):
        Coloring(path_graph(3), 2, [1])


def test_mapping_and_missing_sets():
    g = cycle_graph(4)
    col = Coloring(g, 3, {(0, 1): 1, (1, 2): 2})
    assert col.missing(1) == {3}
    assert col.missing(3) == {1, 2, 3}
    assert col.present(1) == {1, 2}
    assert col.color_of(1, 0) == 1 and col.color_of(2, 3) is None
    assert col.uncolored_edges() == [(0, 3), (2, 3)]
    assert not col.is_total() and col.is_proper()
    assert col.missing_of_set([0, 1]) == {2, 3}
    assert col.missing_count(3) == 4


def test_elementary():
    col = path_coloring([1, 2])
    assert col.is_elementary([0, 2])  # 0 misses {2}, 2 misses {1}
    assert col.is_elementary([0, 1, 2])  # 1 misses nothing
    col2 = Coloring(path_graph(3), 2, [1, 0])
    assert not col2.is_elementary([1, 2])  # both miss 2


def test_chain_component_path_and_cycle():
    col = path_coloring([1, 2, 1, 2])
    ch = col.chain_component(2, 1, 2)
    assert ch.kind == "path" and ch.endpoints in ((0, 4), (4, 0)) and len(ch) == 5
    c4 = Coloring(cycle_graph(4), 2, {(0, 1): 1, (1, 2): 2, (2, 3): 1, (0, 3): 2})
    cyc = c4.chain_component(0, 1, 2)
    assert cyc.kind == "cycle" and len(cyc.edges()) == 4
    with pytest.raises(ChainError):
        col.chain_component(0, 1, 1)


def test_swap_at_endpoint_and_interior():
    col = path_coloring([1, 2, 1])
    col.swap_at(0, 1, 2)
    assert col.colors == [2, 1, 2]
    with pytest.raises(ChainError):
        col.swap_at(1, 1, 2)


def test_swap_involution():
    col = path_coloring([1, 2, 3, 1])
    before = col.copy()
    col.swap_at(0, 1, 2)
    col.swap_at(0, 1, 2)
    assert col == before


def test_swap_sequence():
    # vertex 0 misses 2 and 3 with k = 3
    col = Coloring(path_graph(4), 3, [1, 2, 3])
    col.swap_sequence(0, [2, 1])
    assert col.colors == [2, 1, 3]
    with pytest.raises(ColoringError):
        col.swap_sequence(0, [2, 3])


def test_linked_and_subchain_swap():
    col = path_coloring([1, 2, 1, 2])
    assert col.linked(0, 4, 1, 2)
    sub = col.subchain_between(1, 3, 1, 2)
    assert sub.vertices == (1, 2, 3)
    # swapping an interior piece would clash at its ends
    with pytest.raises(ColoringError):
        col.swap_subchain(1, 3, 1, 2)
    col.swap_subchain(0, 4, 1, 2)
    assert col.colors == [2, 1, 2, 1]


def test_single_edge_updates():
    col = Coloring(path_graph(3), 2)
    col.color_edge(0, 1, 1)
    with pytest.raises(ColoringError):
        col.color_edge(1, 2, 1)
    col.color_edge(1, 2, 2)
    with pytest.raises(ColoringError):
        col.recolor_edge(0, 1, 2, 1)
    col.uncolor_edge(1, 2)
    col.recolor_edge(0, 1, 1, 2)
    assert col.colors == [2, 0]
    with pytest.raises(ColoringError):
        col.uncolor_edge(1, 2)
    with pytest.raises(ColoringError):
        col.color_edge(0, 2, 1)


def test_text_round_trip():
    g = complete_graph(4)
    col = Coloring(g, 3, [1, 2, 3, 3, 2, 0])
    text = col.to_text()
    assert text.splitlines()[0] == "k 3" and text.splitlines()[-1] == "2 3 -"
    assert Coloring.from_text(g, text) == col
    with pytest.raises(ColoringError):
        Coloring.from_text(g, "3\n")
    with pytest.raises(ColoringError):
        Coloring.from_text(g, "k 3\n0 9 1\n")


def test_permuted():
    col = Coloring(cycle_graph(4), 2, {(0, 1): 1, (1, 2): 2, (2, 3): 1, (0, 3): 2})
    swapped = col.permuted({1: 2, 2: 1})
    assert swapped.colors == [2 if c == 1 else 1 for c in col.colors]


def test_chains_lists_every_nontrivial_component():
    g = Graph(6, [(0, 1), (1, 2), (3, 4), (4, 5)])
    col = Coloring(g, 2, [1, 2, 2, 1])
    assert sorted(len(ch) for ch in col.chains(1, 2)) == [3, 3]
