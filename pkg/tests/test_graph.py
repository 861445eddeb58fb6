import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chidelta.graph import (
    Graph,
    GraphError,
    complement,
    cycle_power,
    decode_graph6,
    encode_graph6,
    graph_from_edges,
    induced_subgraph,
    is_connected,
    max_degree,
    min_degree,
)

from conftest import c7_complement, k_n, naive_graph6_encode, to_nx


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    if pairs:
        edges = draw(st.lists(st.sampled_from(pairs), unique=True))
    else:
        edges = []
    return graph_from_edges(n, edges)


# --- graph_from_edges -------------------------------------------------------


def test_one_vertex_graph():
    g = graph_from_edges(1, [])
    assert g.n == 1 and g.edge_count() == 0


def test_k4_from_edges():
    g = k_n(4)
    assert all(g.degree(v) == 3 for v in range(4))
    assert g.edge_count() == 6


def test_distance_23_pairs_give_c7_complement():
    pairs = [
        (i, j)
        for i in range(7)
        for j in range(i + 1, 7)
        if min(j - i, 7 - (j - i)) in (2, 3)
    ]
    g = graph_from_edges(7, pairs)
    assert g == c7_complement()
    assert max_degree(g) == min_degree(g) == 4


def test_from_edges_rejects_bad_input():
    with pytest.raises(GraphError):
        graph_from_edges(3, [(0, 3)])
    with pytest.raises(GraphError):
        graph_from_edges(3, [(1, 1)])


def test_duplicate_edges_collapse():
    g = graph_from_edges(3, [(0, 1), (1, 0), (0, 1)])
    assert g.edge_count() == 1


def test_constructor_rejects_asymmetry_and_loops():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0b00))
    with pytest.raises(GraphError):
        Graph(1, (0b1,))


# --- graph6 codec ------------------------------------------------------------


def test_decode_single_vertex():
    g = decode_graph6("@")
    assert g.n == 1 and g.edge_count() == 0


def test_decode_k4():
    assert decode_graph6("C~") == k_n(4)


def test_decode_five_cycle():
    g = decode_graph6("Dhc")
    assert sorted(g.edges()) == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]


def test_decode_accepts_header():
    assert decode_graph6(">>graph6<<C~") == k_n(4)


@pytest.mark.parametrize(
    "line",
    [
        "",  # empty
        "C~~",  # trailing garbage
        "C",  # truncated body
        "~??",  # extended length encoding
        "C!",  # body character below the graph6 range
        "B~",  # nonzero padding: n=3 has 3 bits, '~'=111111 pads with 1s
    ],
)
def test_decode_rejects_malformed(line):
    with pytest.raises(GraphError):
        decode_graph6(line)


def test_encode_examples():
    assert encode_graph6(graph_from_edges(1, [])) == "@"
    assert encode_graph6(k_n(4)) == "C~"


def test_encode_rejects_large_order():
    with pytest.raises(GraphError):
        encode_graph6(graph_from_edges(63, []))


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=14))
def test_codec_round_trip(g):
    line = encode_graph6(g)
    assert decode_graph6(line) == g
    assert encode_graph6(decode_graph6(line)) == line


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=12))
def test_codec_matches_reference_and_networkx(g):
    line = encode_graph6(g)
    assert line == naive_graph6_encode(g)
    assert line == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    back = nx.from_graph6_bytes(line.encode())
    assert sorted(map(tuple, map(sorted, back.edges()))) == sorted(g.edges())


# --- queries ------------------------------------------------------------------


def test_is_connected_examples():
    assert is_connected(k_n(4))
    assert not is_connected(graph_from_edges(4, [(0, 1), (2, 3)]))
    assert is_connected(cycle_power(10, 2))
    assert is_connected(graph_from_edges(1, []))


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=10))
def test_is_connected_matches_networkx(g):
    assert is_connected(g) == nx.is_connected(to_nx(g))


def test_degree_examples():
    assert (max_degree(k_n(4)), min_degree(k_n(4))) == (3, 3)
    c7c = c7_complement()
    assert (max_degree(c7c), min_degree(c7c)) == (4, 4)
    star = graph_from_edges(5, [(0, i) for i in range(1, 5)])
    assert (max_degree(star), min_degree(star)) == (4, 1)
    with pytest.raises(GraphError):
        max_degree(graph_from_edges(0, []))


def test_induced_subgraph_examples():
    sub, mapping = induced_subgraph(k_n(4), {0, 1, 2})
    assert sub == k_n(3) and mapping == {0: 0, 1: 1, 2: 2}
    c5 = cycle_power(5, 1)
    sub, _ = induced_subgraph(c5, {0, 1, 2})
    assert sorted(sub.edges()) == [(0, 1), (1, 2)]
    with pytest.raises(GraphError):
        induced_subgraph(c5, {0, 9})


def test_induced_subgraphs_of_c7_complement_have_no_k4():
    g = c7_complement()
    for kept in itertools.combinations(range(7), 6):
        sub, _ = induced_subgraph(g, kept)
        for four in itertools.combinations(range(6), 4):
            assert not all(
                sub.has_edge(u, w) for u, w in itertools.combinations(four, 2)
            )


def test_induced_subgraph_preserves_adjacency():
    g = cycle_power(9, 2)
    kept = [1, 3, 4, 7, 8]
    sub, mapping = induced_subgraph(g, kept)
    for u in kept:
        for w in kept:
            if u < w:
                assert sub.has_edge(mapping[u], mapping[w]) == g.has_edge(u, w)


def test_complement_examples():
    assert complement(k_n(4)).edge_count() == 0
    c7c = complement(cycle_power(7, 1))
    assert all(c7c.degree(v) == 4 for v in range(7))


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=10))
def test_complement_involution(g):
    assert complement(complement(g)) == g


def test_cycle_power_examples():
    assert cycle_power(5, 1) == graph_from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
    g16 = cycle_power(16, 2)
    assert g16.n == 16 and g16.edge_count() == 32
    assert max_degree(g16) == min_degree(g16) == 4
    with pytest.raises(GraphError):
        cycle_power(2, 1)
    with pytest.raises(GraphError):
        cycle_power(5, 0)


def test_cycle_power_7_2_isomorphic_to_c7_complement():
    # the map x -> 2x mod 7 carries cyclic distances {1, 2} to {2, 4 -> 3}
    g = cycle_power(7, 2)
    target = c7_complement()
    for u in range(7):
        for w in range(u + 1, 7):
            assert g.has_edge(u, w) == target.has_edge(2 * u % 7, 2 * w % 7)


@pytest.mark.parametrize("n", range(5, 20))
def test_cycle_power_two_is_four_regular(n):
    g = cycle_power(n, 2)
    assert max_degree(g) == min_degree(g) == 4


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=10))
def test_adjacency_symmetric_and_irreflexive(g):
    for v in range(g.n):
        assert not g.has_edge(v, v)
        for u in g.neighbors(v):
            assert g.has_edge(u, v) and g.has_edge(v, u)
