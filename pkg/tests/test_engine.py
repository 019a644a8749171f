from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chibound import engine
from chibound.decomposition import primary_partition
from chibound.errors import InputError, OutOfClassError
from chibound.generators import STRATEGY_FIXTURES, grotzsch, h_n, random_in_class, schlafli_complement
from chibound.graph import complete_graph, empty_graph, from_edges
from chibound.graph_io import parse_certificate, write_certificate
from chibound.oracle import chromatic_number_exact, verify_colouring
from chibound.recognition import WitnessKind

from conftest import diamond
from strategies import seeds

EXPECTED_COLOURS = {
    "lp2p4": 3, "ld21": 3, "ld2": 4, "cd1": 5, "cd1_k4": 4, "c2": 5, "c2_triple": 4, "c2_triangles": 3,
    "l31": 3, "l32": 4, "l33": 5, "l41": 5, "l41_pair": 4, "l41_double": 6,
}


def assert_sound(G, outcome):
    used = outcome.colouring.colours_used
    assert sorted(outcome.colouring.assignment) == list(range(G.n))
    assert verify_colouring(G, outcome.colouring)[0]
    assert outcome.colouring.is_compact()
    assert used <= engine.theorem_bound(outcome.omega) == outcome.bound
    if outcome.omega >= 4:
        assert used == outcome.omega


@pytest.mark.parametrize("omega, bound", [(0, 0), (1, 1), (2, 4), (3, 6), (4, 4), (9, 9)])
def test_theorem_bound(omega, bound):
    assert engine.theorem_bound(omega) == bound


@pytest.mark.parametrize("name", sorted(STRATEGY_FIXTURES))
def test_fixture_lands_on_its_strategy(name, fixture_graph):
    G = fixture_graph(name)
    assert G == STRATEGY_FIXTURES[name][0]()
    outcome = engine.colour(G)
    assert outcome.strategy == STRATEGY_FIXTURES[name][1]
    assert outcome.trail == [outcome.strategy]
    assert outcome.colouring.colours_used == EXPECTED_COLOURS[name]
    assert_sound(G, outcome)


def test_cd1_puts_the_hub_first(fixture_graph):
    outcome = engine.colour(fixture_graph("cd1"))
    assert outcome.relabeling == {"A": [0, 1, 2, 3, 4], "B": [5, 6, 7]}
    # b_i takes colour i + 1, so B avoids the hub's colour
    hub = outcome.colouring.assignment[0]
    assert all(outcome.colouring.assignment[b] != hub for b in (5, 6, 7))


def test_c2_pendant_avoids_its_anchor():
    edges = list(combinations(range(4), 2)) + list(combinations(range(4, 7), 2)) + [(4, 7)]
    G = from_edges(8, edges)
    outcome = engine.colour(G)
    assert outcome.strategy == engine.C2
    assert outcome.colouring.colours_used == 4
    assert outcome.colouring.assignment[7] != outcome.colouring.assignment[4]


def test_l41_matched_cell_with_an_edge(fixture_graph):
    G = fixture_graph("l41_pair")
    outcome = engine.colour(G)
    assert "S_1_1" in outcome.partition
    colours = outcome.colouring.assignment
    assert len({colours[0], colours[4], colours[8], colours[9]}) == 4


def test_triangle_in_union_search_redispatches(fixture_graph):
    G = fixture_graph("c2_triangles")
    outcome = engine.colour_l31(G, primary_partition(G, range(3)))
    assert outcome.strategy == engine.C2
    assert outcome.trail == [engine.L31, engine.C2]
    assert_sound(G, outcome)


def test_trivial_cases():
    outcome = engine.colour(empty_graph(0))
    assert (outcome.strategy, outcome.colouring.colours_used) == (engine.TRIVIAL, 0)
    outcome = engine.colour(empty_graph(3))
    assert outcome.colouring.as_list(3) == [1, 1, 1]
    outcome = engine.colour(complete_graph(5))
    assert (outcome.strategy, outcome.colouring.colours_used) == (engine.TRIVIAL, 5)


def test_out_of_class_is_rejected():
    with pytest.raises(OutOfClassError) as info:
        engine.colour(diamond())
    assert info.value.witness.kind is WitnessKind.DIAMOND


def test_strategy_preconditions(fixture_graph):
    G = fixture_graph("l31")
    P = primary_partition(G, range(3))
    with pytest.raises(InputError):
        engine.colour_ld2(G, P)
    with pytest.raises(InputError):
        engine.colour_omega2(G, P)
    with pytest.raises(InputError):
        engine.colour_l32(G, P)


def test_grotzsch_uses_at_most_four():
    outcome = engine.colour(grotzsch())
    assert outcome.strategy == engine.LP2P4
    assert outcome.omega == 2
    assert outcome.colouring.colours_used <= 4


def test_schlafli_complement_uses_at_most_six():
    G = schlafli_complement()
    outcome = engine.colour(G)
    assert outcome.omega == 3
    assert outcome.colouring.colours_used <= 6
    assert_sound(G, outcome)


@pytest.mark.parametrize("n", range(4, 10))
def test_h_n_uses_exactly_n(n):
    outcome = engine.colour(h_n(n))
    assert outcome.omega == n
    assert outcome.colouring.colours_used == n


def test_ld2_respects_its_cap(fixture_graph):
    outcome = engine.colour(fixture_graph("ld2"))
    assert outcome.colouring.colours_used <= max(2 * outcome.k, outcome.omega)


def test_certificate_for_round_trips(fixture_graph):
    outcome = engine.colour(fixture_graph("l41_double"))
    doc = parse_certificate(write_certificate(engine.certificate_for(outcome)))
    assert doc.colouring == outcome.colouring.as_list(10)
    assert doc.class_check == {"in_class": True, "witness": None}


def test_bipartite_match_and_hall_violator():
    result = engine.bipartite_match([{1, 2}, {1}], range(1, 3))
    assert result.found
    assert result.matching == {0: 2, 1: 1}
    result = engine.bipartite_match([{1}, {1}, {2}], range(1, 3))
    assert not result.found
    assert result.violator == frozenset({0, 1})


@settings(deadline=None, max_examples=60)
@given(st.integers(min_value=4, max_value=12), st.floats(min_value=0.05, max_value=0.95), seeds)
def test_random_members_are_coloured_within_bound(n, p, seed):
    G = random_in_class(n, p, seed)
    outcome = engine.colour(G)
    assert_sound(G, outcome)
    assert outcome.colouring.colours_used >= chromatic_number_exact(G)
