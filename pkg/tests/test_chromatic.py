import pytest

from edgecrit.chromatic import (
    budgeted_colorings,
    canonical_word,
    chromatic_index,
    classify,
    critical_edges,
    enumerate_colorings,
    find_delta_coloring,
    is_delta_critical,
    sample_colorings,
    vizing_plus_one_coloring,
)
from edgecrit.graph import (
    Graph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    from_graph6,
    path_graph,
    petersen_graph,
)

from oracles import all_edge_colorings, chromatic_index_by_counting, first_occurrence_form

# (graph, k, full count, canonical count): counts from brute force over k**m words
ENUMERATION_CASES = [
    (complete_graph(3), 3, 6, 1),
    (cycle_graph(4), 2, 2, 1),
    (cycle_graph(5), 3, 30, 5),
    (complete_graph(4), 3, 6, 1),
    (path_graph(4), 2, 2, 1),
    (complete_bipartite_graph(3, 3), 3, 12, 2),
    (cycle_graph(5), 4, 240, 10),
]


@pytest.mark.parametrize(
    "g, chi",
    [
        (complete_graph(3), 3),
        (complete_graph(4), 3),
        (complete_graph(5), 5),
        (cycle_graph(5), 3),
        (cycle_graph(6), 2),
        (petersen_graph(), 4),
        (Graph(3), 0),
        (complete_bipartite_graph(3, 4), 4),
    ],
)
def test_chromatic_index_known_values(g, chi):
    assert chromatic_index(g) == chi
    assert chromatic_index_by_counting(g) == chi


def test_classify():
    assert classify(cycle_graph(5)) == 2
    assert classify(cycle_graph(6)) == 1
    assert classify(petersen_graph()) == 2


def test_find_delta_coloring():
    col = find_delta_coloring(complete_graph(4), 3)
    assert col is not None and col.is_total() and col.is_proper()
    assert find_delta_coloring(complete_graph(5), 4) is None


def test_critical_edges():
    assert len(critical_edges(cycle_graph(5))) == 5
    assert critical_edges(cycle_graph(6)) == []
    # K5 minus an edge is still overfull, so no edge of K5 is critical
    assert critical_edges(complete_graph(5)) == []
    assert is_delta_critical(from_graph6("D^{"))


@pytest.mark.parametrize(
    "g, expected",
    [
        (cycle_graph(3), True),
        (cycle_graph(5), True),
        (cycle_graph(7), True),
        (complete_graph(4), False),
        (complete_graph(5), False),
        (petersen_graph(), False),
        (from_graph6("DNw"), True),
        (Graph(7, [(i, (i + 1) % 5) for i in range(5)] + [(5, 6)]), False),
    ],
)
def test_is_delta_critical(g, expected):
    assert is_delta_critical(g) is expected


@pytest.mark.parametrize("g, k, full, canonical", ENUMERATION_CASES)
def test_enumeration_counts_match_brute_force(g, k, full, canonical):
    brute = all_edge_colorings(g, k)
    assert len(brute) == full
    assert len({first_occurrence_form(w) for w in brute}) == canonical
    full_words = list(enumerate_colorings(g, k, "full").words())
    assert sorted(full_words) == sorted(brute)
    canon = list(enumerate_colorings(g, k, "canonical").words())
    assert sorted(canon) == sorted({first_occurrence_form(w) for w in brute})


def test_enumeration_edge_cases():
    assert list(enumerate_colorings(cycle_graph(5), 2).words()) == []
    assert len(list(enumerate_colorings(cycle_graph(5), 3, "full", cap=7))) == 7
    with pytest.raises(ValueError):
        enumerate_colorings(cycle_graph(5), 1)
    with pytest.raises(ValueError):
        enumerate_colorings(cycle_graph(5), 3, cap=-1)
    # deterministic order
    a = list(enumerate_colorings(complete_bipartite_graph(3, 3), 3, "full").words())
    b = list(enumerate_colorings(complete_bipartite_graph(3, 3), 3, "full").words())
    assert a == b


def test_canonical_word():
    assert canonical_word([3, 0, 1, 3, 2]) == (1, 0, 2, 1, 3)


def test_budgeted_colorings():
    small = budgeted_colorings(cycle_graph(5), 4, budget=100)
    assert small.exhaustive and len(small.words) == 10
    capped = budgeted_colorings(cycle_graph(5), 4, budget=3, seed=11)
    assert not capped.exhaustive and capped.seed == 11 and len(capped.words) == 3
    assert capped.words == budgeted_colorings(cycle_graph(5), 4, budget=3, seed=11).words
    unlimited = budgeted_colorings(cycle_graph(5), 4, budget=0)
    assert unlimited.exhaustive and len(unlimited.words) == 10


def test_sample_colorings_are_proper_and_canonical():
    g = petersen_graph()
    words = sample_colorings(g, 4, 20, seed=3)
    assert len(words) == 20 and len(set(words)) == 20
    for w in words:
        assert canonical_word(w) == w
        assert all(
            not (w[i] == w[j] and set(g.edges[i]) & set(g.edges[j]))
            for i in range(g.m)
            for j in range(i + 1, g.m)
        )


@pytest.mark.parametrize(
    "g", [complete_graph(5), complete_graph(6), petersen_graph(), cycle_graph(7), complete_bipartite_graph(4, 5)]
)
def test_vizing_plus_one(g):
    col = vizing_plus_one_coloring(g)
    assert col.k == g.max_degree + 1
    assert col.is_total() and col.is_proper()
