"""Bitset-backed simple undirected graphs and the graph6 line codec."""

from __future__ import annotations

from typing import Iterable, Iterator

GRAPH6_HEADER = ">>graph6<<"
GRAPH6_MAX_ORDER = 62


class GraphError(ValueError):
    """Malformed graph construction or graph6 input."""


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    Adjacency is stored as one int bitmask per vertex, so neighbourhood
    intersection, membership and popcounts are word-parallel operations.
    Neighbour tuples are precomputed for cheap Python-level iteration.
    """

    __slots__ = ("n", "_adj", "_nbrs")

    def __init__(self, n: int, adj: Iterable[int]):
        adj = tuple(adj)
        if n < 0 or len(adj) != n:
            raise GraphError(f"adjacency length {len(adj)} does not match order {n}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside [0, {n})")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
        for v, row in enumerate(adj):
            for u in _bits(row):
                if not adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
        self.n = n
        self._adj = adj
        self._nbrs = tuple(tuple(_bits(row)) for row in adj)

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Neighbours of v in ascending order."""
        return self._nbrs[v]

    def adjacency_mask(self, v: int) -> int:
        """Neighbour set of v as a bitmask (bit u set iff u ~ v)."""
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            for u in self._nbrs[v]:
                if u > v:
                    yield (v, u)

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self._adj) // 2

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on n vertices from unordered pairs; duplicates collapse."""
    if n < 0:
        raise GraphError("negative order")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge endpoint out of range: ({u}, {v})")
        if u == v:
            raise GraphError(f"loop edge at {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)


def is_connected(g: Graph) -> bool:
    """True iff every vertex is reachable from vertex 0 (vacuous for n <= 1)."""
    if g.n <= 1:
        return True
    seen = 1
    frontier = 1
    while frontier:
        grown = seen
        for v in _bits(frontier):
            grown |= g.adjacency_mask(v)
        frontier = grown & ~seen
        seen = grown
    return seen == (1 << g.n) - 1


def max_degree(g: Graph) -> int:
    if g.n == 0:
        raise GraphError("max_degree of the empty graph")
    return max(g.degree(v) for v in range(g.n))


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise GraphError("min_degree of the empty graph")
    return min(g.degree(v) for v in range(g.n))


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on `keep` plus the order-preserving old->new vertex map."""
    kept = sorted(set(keep))
    if kept and not (0 <= kept[0] and kept[-1] < g.n):
        raise GraphError("kept vertex out of range")
    old_to_new = {old: new for new, old in enumerate(kept)}
    adj = [0] * len(kept)
    for new, old in enumerate(kept):
        for u in g.neighbors(old):
            if u in old_to_new:
                adj[new] |= 1 << old_to_new[u]
    return Graph(len(kept), adj), old_to_new


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g._adj)))


def cycle_power(n: int, d: int) -> Graph:
    """Graph on a cycle's vertices with i ~ j iff cyclic distance is in [1, d]."""
    if n < 3 or d < 1:
        raise GraphError(f"cycle_power parameters out of range: n={n}, d={d}")
    adj = [0] * n
    for i in range(n):
        for step in range(1, d + 1):
            adj[i] |= 1 << ((i + step) % n)
            adj[i] |= 1 << ((i - step) % n)
        adj[i] &= ~(1 << i)
    return Graph(n, adj)


def decode_graph6(text: str) -> Graph:
    """Decode one graph6 line (an optional '>>graph6<<' header is allowed).

    Layout: length byte 63+n for n <= 62, then the upper-triangle bit vector
    in column-major pair order (0,1),(0,2),(1,2),(0,3),... packed into 6-bit
    groups offset by 63, zero-padded at the end.
    """
    line = text.strip()
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER):]
    if not line:
        raise GraphError("empty graph6 line")
    head = ord(line[0])
    if head == 126:
        raise GraphError("extended graph6 length encoding (n > 62) is not supported")
    if not 63 <= head <= 126:
        raise GraphError(f"malformed length byte {line[0]!r}")
    n = head - 63
    nbits = n * (n - 1) // 2
    body = line[1:]
    expected = (nbits + 5) // 6
    if len(body) != expected:
        raise GraphError(
            f"graph6 body has {len(body)} characters, expected {expected} for n={n}"
        )
    stream = 0
    for ch in body:
        o = ord(ch)
        if not 63 <= o <= 126:
            raise GraphError(f"character {ch!r} outside graph6 range")
        stream = stream << 6 | (o - 63)
    pad = 6 * expected - nbits
    if pad and stream & ((1 << pad) - 1):
        raise GraphError("nonzero padding bits")
    stream >>= pad
    adj = [0] * n
    idx = nbits
    for j in range(1, n):
        for i in range(j):
            idx -= 1
            if stream >> idx & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(n, adj)


def encode_graph6(g: Graph) -> str:
    """Encode a graph as a canonical graph6 line (no header)."""
    if g.n > GRAPH6_MAX_ORDER:
        raise GraphError(f"order {g.n} exceeds graph6 single-byte range")
    out = [chr(63 + g.n)]
    value = 0
    count = 0
    for j in range(1, g.n):
        for i in range(j):
            value = value << 1 | (1 if g.has_edge(i, j) else 0)
            count += 1
            if count == 6:
                out.append(chr(63 + value))
                value = 0
                count = 0
    if count:
        out.append(chr(63 + (value << (6 - count))))
    return "".join(out)
