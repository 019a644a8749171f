from itertools import combinations, permutations

import networkx as nx
import pytest
from hypothesis import given, settings

from chibound.errors import InputError
from chibound.generators import grotzsch, h_n, schlafli_complement
from chibound.graph import complete_graph, cycle_graph, from_edges, is_clique, path_graph
from chibound.oracle import find_forbidden_by_enumeration
from chibound.recognition import (Witness, WitnessKind, class_membership, clique_number, find_forbidden_through_edge,
                                  find_induced_diamond, find_induced_p2p4, find_p4_across_matched_cliques,
                                  find_p4_free_violation, find_triangle, max_clique, witness_holds)

from conftest import diamond, to_nx
from strategies import graphs

P4_PLUS_EDGE = from_edges(6, [(0, 1), (1, 2), (2, 3), (4, 5)])


def test_triangle_is_lexicographically_first():
    assert find_triangle(complete_graph(4)) == Witness(WitnessKind.TRIANGLE, (0, 1, 2))
    assert find_triangle(grotzsch()) is None


def test_diamond_witness_order():
    w = find_induced_diamond(diamond())
    assert w == Witness(WitnessKind.DIAMOND, (0, 1, 2, 3))
    assert witness_holds(diamond(), w)


def test_p2_union_p4_witness():
    w = find_induced_p2p4(P4_PLUS_EDGE)
    assert w == Witness(WitnessKind.P2_UNION_P4, (4, 5, 0, 1, 2, 3))
    assert witness_holds(P4_PLUS_EDGE, w)


def test_p4_detection():
    assert find_p4_free_violation(complete_graph(6)) is None
    w = find_p4_free_violation(path_graph(4))
    assert w.vertices == (0, 1, 2, 3)


@pytest.mark.parametrize("G", [grotzsch(), schlafli_complement(), h_n(5), cycle_graph(5), complete_graph(5)])
def test_known_members(G):
    assert class_membership(G).in_class


@pytest.mark.parametrize("G, kind", [(diamond(), WitnessKind.DIAMOND), (P4_PLUS_EDGE, WitnessKind.P2_UNION_P4)])
def test_known_non_members(G, kind):
    verdict = class_membership(G)
    assert not verdict.in_class
    assert verdict.witness.kind is kind
    assert verdict.to_dict()["witness"]["kind"] == kind.value


def test_forbidden_through_edge():
    w = find_forbidden_through_edge(diamond(), 0, 1)
    assert w.kind is WitnessKind.DIAMOND
    assert {0, 1} <= set(w.vertices)
    assert witness_holds(diamond(), w)
    assert find_forbidden_through_edge(cycle_graph(5), 0, 1) is None
    with pytest.raises(InputError):
        find_forbidden_through_edge(cycle_graph(5), 0, 2)


def test_witness_holds_rejects_wrong_shapes():
    assert not witness_holds(cycle_graph(5), Witness(WitnessKind.TRIANGLE, (0, 1, 2)))
    assert not witness_holds(path_graph(4), Witness(WitnessKind.P4, (0, 2, 1, 3)))


@settings(deadline=None, max_examples=150)
@given(graphs(min_n=6, max_n=10))
def test_membership_agrees_with_enumeration(G):
    verdict = class_membership(G)
    expected = (find_forbidden_by_enumeration(G, "Diamond") is None
                and find_forbidden_by_enumeration(G, "P2UnionP4") is None)
    assert verdict.in_class == expected
    if not verdict.in_class:
        assert witness_holds(G, verdict.witness)


@settings(deadline=None, max_examples=150)
@given(graphs(max_n=9))
def test_edge_local_check_matches_membership(G):
    # a member stays a member exactly when no new forbidden subgraph passes through the new edge
    if not class_membership(G).in_class:
        return
    for u, v in combinations(range(G.n), 2):
        if G.adjacent(u, v):
            continue
        rows = list(G.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        H = type(G)(G.n, rows)
        local = find_forbidden_through_edge(H, u, v)
        assert (local is None) == class_membership(H).in_class
        if local is not None:
            assert witness_holds(H, local)


@settings(deadline=None, max_examples=120)
@given(graphs(max_n=12))
def test_max_clique_is_lexicographically_first(G):
    cliques = [tuple(sorted(c)) for c in nx.find_cliques(to_nx(G))] if G.n else []
    omega = max((len(c) for c in cliques), default=0)
    assert clique_number(G) == omega
    clique = max_clique(G)
    assert len(clique) == omega
    assert is_clique(G, clique)
    if omega:
        assert clique == min(c for c in cliques if len(c) == omega)


def test_max_clique_within_subset():
    G = complete_graph(5)
    assert max_clique(G, [1, 3, 4]) == (1, 3, 4)
    assert clique_number(G, 0) == 0


def _matched_cliques(a, b, matching):
    X = list(range(a))
    Y = list(range(a, a + b))
    edges = list(combinations(X, 2)) + list(combinations(Y, 2)) + list(matching)
    return from_edges(a + b, edges), X, Y


def _matchings(X, Y):
    for size in range(1, min(len(X), len(Y)) + 1):
        for xs in combinations(X, size):
            for ys in permutations(Y, size):
                yield list(zip(xs, ys))


def test_cross_clique_p4_exhaustive():
    checked = 0
    for a in range(2, 5):
        for b in range(2, 5):
            if max(a, b) < 3:
                continue
            X0, Y0 = list(range(a)), list(range(a, a + b))
            for matching in _matchings(X0, Y0):
                G, X, Y = _matched_cliques(a, b, matching)
                for x in X:
                    for y in Y:
                        w = find_p4_across_matched_cliques(G, X, Y, x, y)
                        assert w.kind is WitnessKind.P4
                        assert witness_holds(G, w)
                        assert x in w.vertices and y in w.vertices
                        checked += 1
    assert checked > 1000


@pytest.mark.parametrize("X, Y, x, y", [
    ([0, 1, 2], [3, 4], 0, 3),        # no matching edge
    ([0, 1], [2, 3], 0, 2),           # both cliques too small
    ([0, 1, 2], [3, 4, 5], 3, 0),     # query vertices swapped
])
def test_cross_clique_preconditions(X, Y, x, y):
    G = from_edges(6, list(combinations(X, 2)) + list(combinations(Y, 2)) + ([(0, 3)] if x == 3 else []))
    with pytest.raises(InputError):
        find_p4_across_matched_cliques(G, X, Y, x, y)
