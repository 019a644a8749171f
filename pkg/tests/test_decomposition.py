from itertools import combinations

import pytest

from chibound.decomposition import (cell_of, check_condition_star, find_kk_anticomplete_to_A, primary_partition,
                                    relabel, secondary_partition, snapshot, verify_s_properties)
from chibound.errors import InputError, TheoryViolation
from chibound.generators import h_n
from chibound.graph import from_edges, iter_bits, mask_of
from chibound.recognition import WitnessKind, witness_holds


def two_cliques(a, b, extra=(), more=0):
    """K_a on 0..a-1, K_b on a..a+b-1, `more` further vertices, extra edges."""
    edges = list(combinations(range(a), 2)) + list(combinations(range(a, a + b), 2)) + list(extra)
    return from_edges(a + b + more, edges)


def test_primary_partition_of_h5():
    G = h_n(5)
    P = primary_partition(G, range(5))
    assert P.omega == 5
    assert P.C[1] == mask_of([5])
    assert P.C[2] == mask_of([7])
    assert P.C[0] == mask_of([6])
    assert all(not P.C[i] for i in range(3, 6))


def test_primary_partition_needs_a_clique():
    with pytest.raises(InputError):
        primary_partition(h_n(5), [0, 5, 6])


def test_two_neighbours_in_A_give_a_diamond():
    G = from_edges(4, [(0, 1), (0, 2), (1, 2), (3, 0), (3, 1)])
    with pytest.raises(TheoryViolation) as info:
        primary_partition(G, [0, 1, 2])
    assert info.value.property_id == "N_A"
    assert info.value.witness.kind is WitnessKind.DIAMOND
    assert witness_holds(G, info.value.witness)


def l41_pair():
    return two_cliques(4, 4, [(0, 4), (8, 9), (0, 8), (0, 9), (4, 8), (4, 9)], more=2)


def test_s_cell_may_hold_an_edge_when_its_corners_meet():
    G = l41_pair()
    P = primary_partition(G, range(4))
    SP = secondary_partition(G, P, range(4, 8))
    assert SP.S[(1, 1)] == mask_of([8, 9])
    assert SP.nonempty_S() == [(1, 1)]
    assert SP.Z == 0


def test_s_cell_edge_with_nonadjacent_corners_is_a_diamond():
    G = two_cliques(4, 4, [(8, 9), (0, 8), (0, 9), (4, 8), (4, 9)], more=2)
    P = primary_partition(G, range(4))
    with pytest.raises(TheoryViolation) as info:
        secondary_partition(G, P, range(4, 8))
    assert info.value.property_id == "S-stable"
    assert witness_holds(G, info.value.witness)


def test_secondary_partition_preconditions():
    G = l41_pair()
    P = primary_partition(G, range(4))
    with pytest.raises(InputError):
        secondary_partition(G, P, [4, 5])
    with pytest.raises(InputError):
        secondary_partition(G, P, [0, 1, 2])


def test_two_neighbours_in_B():
    G = two_cliques(4, 4, [(8, 4), (8, 5)], more=1)
    P = primary_partition(G, range(4))
    with pytest.raises(TheoryViolation) as info:
        secondary_partition(G, P, range(4, 8))
    assert info.value.property_id == "N_B"


def test_cell_names():
    G = two_cliques(4, 4, [(8, 1), (9, 5), (11, 2), (11, 6)], more=4)
    A, B = range(4), range(4, 8)
    assert cell_of(G, A, B, 8) == "T_2"
    assert cell_of(G, A, B, 9) == "R_2"
    assert cell_of(G, A, B, 10) == "Z"
    assert cell_of(G, A, B, 11) == "S_3_3"


def test_condition_star(fixture_graph):
    assert check_condition_star(fixture_graph("cd1"), range(5), [5, 6, 7]) == (False, 0)
    assert check_condition_star(fixture_graph("l41"), range(5), range(5, 9)) == (True, None)


def test_anticomplete_clique_search(fixture_graph):
    G = fixture_graph("c2")
    assert find_kk_anticomplete_to_A(G, primary_partition(G, range(5)), 4) == (5, 6, 7, 8)
    G = fixture_graph("l41")
    assert find_kk_anticomplete_to_A(G, primary_partition(G, range(5)), 4) is None


def test_s_properties_report():
    G = l41_pair()
    P = primary_partition(G, range(4))
    SP = secondary_partition(G, P, range(4, 8))
    report = verify_s_properties(G, P, SP)
    assert report.components == [(mask_of([8, 9]), [(1, 1)])]


def test_s_properties_need_large_cliques(fixture_graph):
    G = fixture_graph("l31")
    P = primary_partition(G, range(3))
    SP = secondary_partition(G, P, [3, 4, 5])
    with pytest.raises(InputError):
        verify_s_properties(G, P, SP)


@pytest.mark.parametrize("a, extra, more, pid", [
    (4, [(9, 5), (8, 9)], 2, "P1"),                                   # Z vertex 8 meets R_2 vertex 9
    (5, [(9, 0), (9, 5), (10, 1), (10, 6), (9, 10)], 2, "P7"),        # S_1^1 meets S_2^2 with w = 5
    (4, [(8, 0), (8, 4), (9, 1), (9, 5), (10, 0), (10, 6), (8, 9), (9, 10)], 3, "P6"),
])
def test_s_property_violations(a, extra, more, pid):
    G = two_cliques(a, 4, extra, more)
    P = primary_partition(G, range(a))
    SP = secondary_partition(G, P, range(a, a + 4))
    with pytest.raises(TheoryViolation) as info:
        verify_s_properties(G, P, SP)
    assert info.value.property_id == pid


def test_snapshot_and_relabel():
    G = l41_pair()
    P = primary_partition(G, range(4))
    SP = secondary_partition(G, P, range(4, 8))
    cells = snapshot(P, SP)
    assert cells == {"A": [0, 1, 2, 3], "B": [4, 5, 6, 7], "C_0": [5, 6, 7], "C_1": [4, 8, 9], "S_1_1": [8, 9],
                     "Cb_1": [8, 9]}
    P2, SP2 = relabel(G, P, SP, [2, 1, 3, 4], [1, 2, 3, 4])
    assert P2.A == (1, 0, 2, 3)
    assert sorted(iter_bits(SP2.S[(2, 1)])) == [8, 9]
