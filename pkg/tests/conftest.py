"""Shared builders and independent oracles for the test suite.

The oracles here are deliberately separate implementations: a string-based
graph6 reference codec, chromatic number by honest enumeration of all
assignments, and networkx for isomorphism and codec cross-checks.
"""

from __future__ import annotations

import itertools

import networkx as nx
import pytest

from chidelta.graph import Graph, complement, cycle_power, graph_from_edges


def k_n(n: int) -> Graph:
    return graph_from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def path_n(n: int) -> Graph:
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def petersen() -> Graph:
    edges = (
        [(i, (i + 1) % 5) for i in range(5)]
        + [(i, i + 5) for i in range(5)]
        + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    )
    return graph_from_edges(10, edges)


def grotzsch() -> Graph:
    edges = (
        [(i, (i + 1) % 5) for i in range(5)]
        + [(5 + i, (i + 1) % 5) for i in range(5)]
        + [(5 + i, (i - 1) % 5) for i in range(5)]
        + [(10, 5 + i) for i in range(5)]
    )
    return graph_from_edges(11, edges)


def c7_complement() -> Graph:
    return complement(cycle_power(7, 1))


def to_nx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def brute_chromatic(g: Graph) -> int:
    """Minimum over enumeration of all colour assignments."""
    if g.n == 0:
        raise ValueError
    edges = list(g.edges())
    if not edges:
        return 1
    for k in range(2, g.n + 1):
        for assign in itertools.product(range(k), repeat=g.n):
            if all(assign[u] != assign[v] for u, v in edges):
                return k
    raise AssertionError("unreachable")


def naive_graph6_encode(g: Graph) -> str:
    """String-built graph6 reference, independent of the production bit math."""
    bits = "".join(
        "1" if g.has_edge(i, j) else "0" for j in range(g.n) for i in range(j)
    )
    bits += "0" * (-len(bits) % 6)
    return chr(g.n + 63) + "".join(
        chr(int(bits[i : i + 6], 2) + 63) for i in range(0, len(bits), 6)
    )


def random_graph(rng, n: int, p: float = 0.5) -> Graph:
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    ]
    return graph_from_edges(n, edges)


@pytest.fixture
def named_instances():
    return {
        "k4": k_n(4),
        "k5": k_n(5),
        "petersen": petersen(),
        "grotzsch": grotzsch(),
        "c7c": c7_complement(),
    }
