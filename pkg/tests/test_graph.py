import networkx as nx
import pytest
from hypothesis import given, settings

from chibound.errors import InputError
from chibound.graph import (Graph, complement, complete_graph, components, cycle_graph, disjoint_union,
                            empty_graph, from_edges, induced_subgraph, is_anticomplete_between, is_clique,
                            is_complete_between, is_stable, iter_bits, mask_of, path_graph, validate)

from conftest import to_nx
from strategies import graphs


def test_from_edges_builds_symmetric_rows():
    G = from_edges(3, [(0, 1)])
    assert G.rows == (2, 1, 0)
    assert validate(G)
    assert G.adjacent(1, 0) and not G.adjacent(0, 2)


@pytest.mark.parametrize("edges", [[(0, 3)], [(1, 1)], [(-1, 0)]])
def test_from_edges_rejects_bad_edges(edges):
    with pytest.raises(InputError):
        from_edges(3, edges)


def test_validate_catches_asymmetry_and_loops():
    with pytest.raises(InputError):
        validate(Graph(2, [2, 0]))
    with pytest.raises(InputError):
        validate(Graph(1, [1]))


def test_edges_are_sorted_pairs():
    assert cycle_graph(4).edges() == [(0, 1), (0, 3), (1, 2), (2, 3)]
    assert complete_graph(4).edge_count() == 6


def test_induced_subgraph_reindexes_in_ascending_order():
    H, index = induced_subgraph(path_graph(5), [1, 3, 4])
    assert index == {1: 0, 3: 1, 4: 2}
    assert H.edges() == [(1, 2)]


def test_complement_and_union():
    assert complement(complete_graph(4)) == empty_graph(4)
    G = disjoint_union(complete_graph(2), complete_graph(3))
    assert G.edge_count() == 4
    assert len(components(G)) == 2


def test_components_ordered_by_least_vertex():
    G = from_edges(6, [(4, 5), (0, 2)])
    assert [sorted(iter_bits(c)) for c in components(G)] == [[0, 2], [1], [3], [4, 5]]


def test_co_components_of_a_path():
    parts = components(path_graph(3), co=True)
    assert [sorted(iter_bits(c)) for c in parts] == [[0, 2], [1]]


def test_clique_and_stable_checks():
    G = cycle_graph(5)
    assert is_clique(G, [0, 1])
    assert not is_clique(G, [0, 1, 2])
    assert is_stable(G, [0, 2])
    assert is_stable(G, mask_of([]))


def test_between_checks_reject_overlap():
    G = complete_graph(4)
    assert is_complete_between(G, [0, 1], [2, 3])
    assert not is_anticomplete_between(G, [0], [1])
    with pytest.raises(InputError):
        is_complete_between(G, [0, 1], [1, 2])


def test_vertex_sets_are_range_checked():
    with pytest.raises(InputError):
        complete_graph(3).as_mask([3])


def test_cycle_needs_three_vertices():
    with pytest.raises(InputError):
        cycle_graph(2)


@settings(deadline=None, max_examples=80)
@given(graphs(max_n=12))
def test_components_agree_with_networkx(G):
    ours = {frozenset(iter_bits(c)) for c in components(G)}
    theirs = {frozenset(c) for c in nx.connected_components(to_nx(G))}
    assert ours == theirs


@settings(deadline=None, max_examples=80)
@given(graphs(max_n=12))
def test_complement_is_an_involution(G):
    assert complement(complement(G)) == G
    assert validate(complement(G))
